#include "kronstab/kronecker.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

#include "kronstab/characters.hpp"
#include "kronstab/error.hpp"
#include "kronstab/littlewood_richardson.hpp"
#include "kronstab/memo.hpp"
#include "kronstab/op_counter.hpp"

namespace kronstab {

namespace {

using Triple = std::tuple<Partition, Partition, Partition>;

ConcurrentMemo<Triple, Integer, TupleHash> g_kronecker_memo;
ConcurrentMemo<Triple, Integer, TupleHash> g_reduced_memo;

Triple sorted_triple(const Partition& a, const Partition& b, const Partition& c) {
  std::array<Partition, 3> xs{a, b, c};
  std::sort(xs.begin(), xs.end());
  return {xs[0], xs[1], xs[2]};
}

std::string describe(const Partition& a, const Partition& b, const Partition& c) {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

using Wide = __int128;

Wide wide_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("overflow in Kronecker character sum");
  return out;
}

Wide wide_add(Wide a, Wide b) {
  Wide out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("overflow in Kronecker character sum");
  return out;
}

Integer reduced_kronecker_lr_sum(const Partition& lam, const Partition& mu, const Partition& nu) {
  const int L = lam.size(), M = mu.size(), N = nu.size();
  Integer total = 0;
  for (int p = 0; p <= std::min({L, M, N}); ++p) {
    const int twice_a = L + M - N - p;
    const int twice_b = L + N - M - p;
    const int twice_c = M + N - L - p;
    if (twice_a < 0 || twice_b < 0 || twice_c < 0 || twice_a % 2 != 0) continue;
    const int a = twice_a / 2, b = twice_b / 2, c = twice_c / 2;

    const auto& from_lam = lr_triple_expansion(lam, {a, b, p});  // (α, β, π)
    if (from_lam.empty()) continue;
    const auto& from_mu = lr_triple_expansion(mu, {a, c, p});    // (α, γ, ρ)
    if (from_mu.empty()) continue;
    const auto& from_nu = lr_triple_expansion(nu, {b, c, p});    // (β, γ, σ)
    if (from_nu.empty()) continue;

    std::unordered_map<Partition, std::vector<const LrTriple*>> mu_by_alpha;
    for (const auto& t : from_mu) mu_by_alpha[t.factors[0]].push_back(&t);
    std::map<std::pair<Partition, Partition>, std::vector<const LrTriple*>> nu_by_beta_gamma;
    for (const auto& t : from_nu) nu_by_beta_gamma[{t.factors[0], t.factors[1]}].push_back(&t);

    for (const auto& tl : from_lam) {
      const auto& [alpha, beta, pi] = tl.factors;
      auto mu_it = mu_by_alpha.find(alpha);
      if (mu_it == mu_by_alpha.end()) continue;
      for (const LrTriple* tm : mu_it->second) {
        const auto& gamma = tm->factors[1];
        const auto& rho = tm->factors[2];
        auto nu_it = nu_by_beta_gamma.find({beta, gamma});
        if (nu_it == nu_by_beta_gamma.end()) continue;
        const Integer lr_part = checked_mul(tl.coeff, tm->coeff);
        for (const LrTriple* tn : nu_it->second) {
          const Integer g = kronecker_coeff(pi, rho, tn->factors[2]);
          if (g == 0) continue;
          total = checked_add(total, checked_mul(checked_mul(lr_part, tn->coeff), g));
        }
      }
    }
  }
  return total;
}

}  // namespace

Integer kronecker_character_sum(const Partition& lam, const Partition& mu, const Partition& nu) {
  const int n = lam.size();
  if (mu.size() != n || nu.size() != n)
    throw SizeMismatch("Kronecker coefficient needs equal sizes, got " + describe(lam, mu, nu));
  require_within_cap(n, "kronecker_coeff");
  const Integer order = factorial(n);
  Wide sum = 0;
  for (auto& cycles : enumerate_partitions(n)) {
    const CycleType rho(std::move(cycles));
    const Integer a = character_value(lam, rho);
    if (a == 0) continue;
    const Integer b = character_value(mu, rho);
    if (b == 0) continue;
    const Integer c = character_value(nu, rho);
    const Integer class_size = order / rho.centralizer_order();
    sum = wide_add(sum, wide_mul(wide_mul(class_size, a), wide_mul(b, c)));
  }
  if (sum > Wide(std::numeric_limits<Integer>::max()) || sum < Wide(std::numeric_limits<Integer>::min()))
    throw OverflowError("Kronecker character sum exceeds 64 bits for " + describe(lam, mu, nu));
  return static_cast<Integer>(sum);
}

Integer kronecker_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
  ops::hit(ops::Op::kronecker_coeff);
  if (mu.size() != lam.size() || nu.size() != lam.size())
    throw SizeMismatch("Kronecker coefficient needs equal sizes, got " + describe(lam, mu, nu));
  require_within_cap(lam.size(), "kronecker_coeff");
  return g_kronecker_memo.get_or_compute(sorted_triple(lam, mu, nu), [&] {
    const Integer sum = kronecker_character_sum(lam, mu, nu);
    const Integer order = factorial(lam.size());
    if (sum % order != 0 || sum < 0)
      throw std::logic_error("character sum " + std::to_string(sum) + " is not a non-negative multiple of " +
                             std::to_string(order) + " for " + describe(lam, mu, nu));
    return sum / order;
  });
}

int limit_probe_degree(const Partition& lam, const Partition& mu, const Partition& nu) {
  return lam.size() + mu.size() + nu.size() + std::max({lam.first(), mu.first(), nu.first(), 1});
}

Integer reduced_kronecker_limit(const Partition& lam, const Partition& mu, const Partition& nu) {
  ops::hit(ops::Op::reduced_kronecker_limit);
  const int n0 = limit_probe_degree(lam, mu, nu);
  require_within_cap(n0 + 1, "reduced_kronecker_limit");
  const Integer at_n0 = kronecker_coeff(pad(lam, n0), pad(mu, n0), pad(nu, n0));
  const Integer at_n1 = kronecker_coeff(pad(lam, n0 + 1), pad(mu, n0 + 1), pad(nu, n0 + 1));
  if (at_n0 != at_n1)
    throw NotStabilized("g" + describe(lam, mu, nu) + "[n] is " + std::to_string(at_n0) + " at n=" +
                        std::to_string(n0) + " but " + std::to_string(at_n1) + " at n=" + std::to_string(n0 + 1));
  return at_n0;
}

Integer reduced_kronecker(const Partition& lam, const Partition& mu, const Partition& nu) {
  ops::hit(ops::Op::reduced_kronecker);
  return g_reduced_memo.get_or_compute(sorted_triple(lam, mu, nu),
                                       [&] { return reduced_kronecker_lr_sum(lam, mu, nu); });
}

Integer reduced_kronecker_onerow(const Partition& lam, const Partition& mu, int k) {
  ops::hit(ops::Op::reduced_kronecker_onerow);
  if (k < 0) return 0;
  const int L = lam.size(), M = mu.size();
  const Partition common = intersect(lam, mu);
  Integer total = 0;
  for (int p = 0; p <= std::min(L, M); ++p) {
    // k = |λ| + |μ| − |π| − 2|α|
    const int twice_a = L + M - k - p;
    if (twice_a < 0 || twice_a % 2 != 0) continue;
    const int a = twice_a / 2;
    const int k1 = L - p - a, k2 = M - p - a;
    if (k1 < 0 || k2 < 0) continue;
    const Partition row1 = Partition::row(k1), row2 = Partition::row(k2);
    for (const auto& pi : sub_partitions(common, p)) {
      for (const auto& alpha : sub_partitions(common, a)) {
        const Integer left = lr_coeff3(pi, alpha, row1, lam);
        if (left == 0) continue;
        total = checked_add(total, checked_mul(left, lr_coeff3(pi, alpha, row2, mu)));
      }
    }
  }
  return total;
}

}  // namespace kronstab
