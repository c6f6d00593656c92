#include <algorithm>
#include <set>

#include "doctest.h"
#include "kronstab/error.hpp"
#include "kronstab/partition.hpp"
#include "../oracles.hpp"

using namespace kronstab;
using oracle::P;
using oracle::Parts;

TEST_CASE("from_parts strips zeros and rejects bad input") {
  auto p = Partition::from_parts({2, 1, 0});
  CHECK(p == P({2, 1}));
  CHECK(p.size() == 3);
  CHECK(Partition::from_parts({}).size() == 0);
  CHECK(Partition::from_parts({}).empty());
  CHECK_THROWS_AS(Partition::from_parts({1, 2}), InvalidPartition);
  CHECK_THROWS_AS(Partition::from_parts({2, -1}), InvalidPartition);
  CHECK_THROWS_AS(Partition::from_parts({2, 0, 1}), InvalidPartition);
}

TEST_CASE("bracket text round trip") {
  CHECK(parse_partition("[3,2,1]") == P({3, 2, 1}));
  CHECK(parse_partition(" [ 3, 2 ,1 ] ") == P({3, 2, 1}));
  CHECK(parse_partition("[]") == Partition{});
  CHECK(P({3, 2, 1}).to_string() == "[3,2,1]");
  CHECK(Partition{}.to_string() == "[]");
  for (auto& parts : oracle::all_partitions_up_to(7)) {
    auto p = P(parts);
    CHECK(parse_partition(p.to_string()) == p);
  }
  CHECK_THROWS_AS(parse_partition("3,2,1"), InvalidPartition);
  CHECK_THROWS_AS(parse_partition("[3,a]"), InvalidPartition);
  CHECK_THROWS_AS(parse_partition("[1,2]"), InvalidPartition);
  CHECK_THROWS_AS(parse_partition("[3,,1]"), InvalidPartition);
}

TEST_CASE("pad") {
  CHECK(pad(P({2, 1}), 5) == P({2, 2, 1}));
  CHECK(pad(P({2, 1}), 6) == P({3, 2, 1}));
  CHECK_THROWS_AS(pad(P({2, 1}), 4), NotPaddable);
  for (int n = 0; n <= 6; ++n) CHECK(pad(Partition{}, n) == Partition::row(n));
  for (auto& core : oracle::all_partitions_up_to(5))
    for (int n = 0; n <= 12; ++n) {
      auto c = P(core);
      const bool ok = n >= c.size() + c.first();
      CHECK(is_paddable(c, n) == ok);
      if (ok) CHECK(pad(c, n) == P(oracle::pad(core, n)));
    }
}

TEST_CASE("enumerate_partitions against p(n) and a composition filter") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(4) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
  CHECK(enumerate_partitions(10).size() == 42);
  for (int n = 0; n <= 14; ++n) {
    auto ps = enumerate_partitions(n);
    CHECK(static_cast<long long>(ps.size()) == oracle::partition_count(n));
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));  // strictly reverse-lex
    CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
    if (n <= 12) {
      std::set<Parts> got;
      for (auto& p : ps) got.insert(oracle::parts_of(p));
      CHECK(got == oracle::partitions_by_compositions(n));
    }
  }
}

TEST_CASE("padded index set is exactly {|λ|+λ₁ ≤ m}") {
  CHECK(enumerate_padded_index_set(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_padded_index_set(2) == std::vector<Partition>{Partition{}, P({1})});
  CHECK(enumerate_padded_index_set(4) == std::vector<Partition>{Partition{}, P({1}), P({2}), P({1, 1}), P({1, 1, 1})});
  for (int m = 0; m <= 12; ++m) {
    std::set<Parts> want;
    for (auto& p : oracle::all_partitions_up_to(m)) {
      const int sz = std::accumulate(p.begin(), p.end(), 0);
      if (sz + (p.empty() ? 0 : p[0]) <= m) want.insert(p);
    }
    std::set<Parts> got;
    for (auto& p : enumerate_padded_index_set(m)) got.insert(oracle::parts_of(p));
    CHECK(got == want);
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(Partition{}) == Partition{});
  for (auto& parts : oracle::all_partitions_up_to(9)) {
    auto p = P(parts);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).size() == p.size());
    CHECK(conjugate(p).first() == p.length());
  }
}

TEST_CASE("horizontal strip removals") {
  auto got = horizontal_strip_removals(P({2, 1}), 1);
  CHECK(std::set<Partition>(got.begin(), got.end()) == std::set<Partition>{P({1, 1}), P({2})});
  CHECK(horizontal_strip_removals(P({3, 2}), 0) == std::vector<Partition>{P({3, 2})});
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) CHECK(horizontal_strip_removals(Partition::row(n), k) == std::vector{Partition::row(n - k)});

  // Set equality with a brute-force filter: sub-diagrams whose complement has
  // at most one cell per column.
  for (auto& outer : oracle::all_partitions_up_to(8)) {
    const int n = std::accumulate(outer.begin(), outer.end(), 0);
    for (int k = 0; k <= n; ++k) {
      std::set<Parts> want;
      for (auto& inner : oracle::partitions_by_compositions(n - k)) {
        if (!oracle::contains(outer, inner)) continue;
        auto diff = oracle::cells(outer);
        for (auto c : oracle::cells(inner)) diff.erase(c);
        std::set<int> cols;
        bool strip = true;
        for (auto [r, c] : diff) strip = strip && cols.insert(c).second;
        if (strip) want.insert(inner);
      }
      std::set<Parts> have;
      for (auto& p : horizontal_strip_removals(P(outer), k)) {
        have.insert(oracle::parts_of(p));
        CHECK(is_horizontal_strip(P(outer), p));
      }
      CHECK(have == want);
    }
  }
}

TEST_CASE("sub_partitions and intersect") {
  for (auto& outer : oracle::all_partitions_up_to(7)) {
    const int n = std::accumulate(outer.begin(), outer.end(), 0);
    for (int s = 0; s <= n; ++s) {
      std::set<Parts> want;
      for (auto& p : oracle::partitions_by_compositions(s))
        if (oracle::contains(outer, p)) want.insert(p);
      std::set<Parts> have;
      for (auto& p : sub_partitions(P(outer), s)) have.insert(oracle::parts_of(p));
      CHECK(have == want);
    }
  }
  CHECK(intersect(P({3, 1}), P({2, 2, 1})) == P({2, 1}));
  CHECK(intersect(P({3}), Partition{}) == Partition{});
}

TEST_CASE("cycle types") {
  CycleType c(P({3, 1, 1}));
  CHECK(c.degree() == 5);
  CHECK(c.count() == 3);
  CHECK(c.multiplicity(1) == 2);
  CHECK(c.centralizer_order() == 6);
  CHECK(c.sign() == 1);
  CHECK(CycleType(P({2})).sign() == -1);
  for (auto& rho : oracle::all_partitions_up_to(10))
    CHECK(CycleType(P(rho)).centralizer_order() == oracle::centralizer(rho));
}
