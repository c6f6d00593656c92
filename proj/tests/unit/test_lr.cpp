#include <map>

#include "doctest.h"
#include "kronstab/characters.hpp"
#include "kronstab/littlewood_richardson.hpp"
#include "../oracles.hpp"

using namespace kronstab;
using oracle::P;

TEST_CASE("fixed values") {
  CHECK(lr_coeff(P({2, 1}), P({1}), P({2, 2})) == 1);
  CHECK(lr_coeff(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
  CHECK(lr_coeff(P({2, 1}), P({2, 1}), P({3, 2})) == 0);
  CHECK(lr_coeff(P({1}), P({1}), P({3})) == 0);
  CHECK(lr_coeff(Partition{}, Partition{}, Partition{}) == 1);
  CHECK(pieri_coeff(P({2, 1}), 1, P({3, 1})) == 1);
  CHECK(pieri_coeff(P({2, 1}), 2, P({2, 1, 1, 1})) == 0);
  CHECK(lr_coeff3(P({1}), P({1}), P({1}), P({2, 1})) == 2);
}

TEST_CASE("tableau count equals brute-force fillings") {
  for (int n = 0; n <= 5; ++n)
    for (auto& nu : enumerate_partitions(n))
      for (int l = 0; l <= n; ++l)
        for (auto& lam : enumerate_partitions(l))
          for (auto& mu : enumerate_partitions(n - l))
            CHECK(lr_coeff(lam, mu, nu) ==
                  oracle::lr_by_fillings(oracle::parts_of(lam), oracle::parts_of(mu), oracle::parts_of(nu)));
}

TEST_CASE("tableau count equals character inner product") {
  for (int n = 0; n <= 6; ++n)
    for (auto& nu : enumerate_partitions(n))
      for (int l = 0; l <= n; ++l)
        for (auto& lam : enumerate_partitions(l))
          for (auto& mu : enumerate_partitions(n - l))
            CHECK(lr_coeff(lam, mu, nu) ==
                  oracle::lr_by_characters(oracle::parts_of(lam), oracle::parts_of(mu), oracle::parts_of(nu)));
}

TEST_CASE("induced dimension identity") {
  for (int n = 0; n <= 8; ++n)
    for (int l = 0; l <= n; ++l)
      for (auto& lam : enumerate_partitions(l))
        for (auto& mu : enumerate_partitions(n - l)) {
          long long lhs = 0;
          for (auto& nu : enumerate_partitions(n)) lhs += lr_coeff(lam, mu, nu) * hook_length_dimension(nu);
          CHECK(lhs == binomial(n, l) * hook_length_dimension(lam) * hook_length_dimension(mu));
        }
}

TEST_CASE("pieri, lr and horizontal strips agree") {
  for (int n = 0; n <= 10; ++n)
    for (auto& nu : enumerate_partitions(n))
      for (int k = 0; k <= n; ++k)
        for (auto& lam : enumerate_partitions(n - k)) {
          const Integer strip = is_horizontal_strip(nu, lam) ? 1 : 0;
          CHECK(pieri_coeff(lam, k, nu) == strip);
          if (n <= 8) CHECK(lr_coeff(lam, Partition::row(k), nu) == strip);
        }
}

TEST_CASE("symmetry and conjugation") {
  for (int n = 0; n <= 7; ++n)
    for (auto& nu : enumerate_partitions(n))
      for (int l = 0; l <= n; ++l)
        for (auto& lam : enumerate_partitions(l))
          for (auto& mu : enumerate_partitions(n - l)) {
            const auto c = lr_coeff(lam, mu, nu);
            CHECK(c == lr_coeff(mu, lam, nu));
            CHECK(c == lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu)));
          }
}

TEST_CASE("three-factor coefficients") {
  for (int n = 0; n <= 6; ++n)
    for (auto& nu : enumerate_partitions(n))
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
          for (auto& al : enumerate_partitions(a))
            for (auto& be : enumerate_partitions(b))
              for (auto& ga : enumerate_partitions(n - a - b)) {
                const auto c = lr_coeff3(al, be, ga, nu);
                CHECK(c == lr_coeff3(be, ga, al, nu));
                CHECK(c == lr_coeff3(ga, al, be, nu));
                // (α·β)·γ bracketing
                Integer other = 0;
                for (auto& eta : enumerate_partitions(a + b)) other += lr_coeff(al, be, eta) * lr_coeff(eta, ga, nu);
                CHECK(c == other);
              }
}

TEST_CASE("skew expansion matches fixed-content values") {
  for (int n = 0; n <= 7; ++n)
    for (auto& outer : enumerate_partitions(n))
      for (int s = 0; s <= n; ++s)
        for (auto& inner : sub_partitions(outer, s)) {
          std::map<Partition, Integer> got;
          for (auto& [mu, c] : skew_expansion(outer, inner)) {
            CHECK(c > 0);
            got[mu] = c;
          }
          for (auto& mu : enumerate_partitions(n - s)) {
            const auto c = lr_coeff(inner, mu, outer);
            CHECK((got.count(mu) ? got[mu] : 0) == c);
          }
        }
}

TEST_CASE("triple expansion lists every nonzero three-factor coefficient") {
  for (int n = 0; n <= 6; ++n)
    for (auto& nu : enumerate_partitions(n))
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
          const std::array<int, 3> sizes{a, b, n - a - b};
          std::map<std::array<Partition, 3>, Integer> got;
          for (auto& t : lr_triple_expansion(nu, sizes)) {
            CHECK(t.coeff > 0);
            CHECK(got.emplace(t.factors, t.coeff).second);
          }
          for (auto& x : enumerate_partitions(a))
            for (auto& y : enumerate_partitions(b))
              for (auto& z : enumerate_partitions(n - a - b)) {
                std::array<Partition, 3> key{x, y, z};
                CHECK((got.count(key) ? got[key] : 0) == lr_coeff3(x, y, z, nu));
              }
        }
}
