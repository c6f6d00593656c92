#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kronstab/checked_int.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

// Strip convention. c^ν_{λ,(k)} counts horizontal strips: it is 1 iff ν/λ
// has k boxes, no two in one column, and 0 otherwise. Every consumer of a
// one-row LR coefficient (pieri_coeff, the one-row reduced Kronecker sum,
// the stability checks) reads it this way.

/// c^ν_{λ,μ}: number of LR tableaux of shape ν/λ and content μ. Zero when
/// |λ| + |μ| ≠ |ν| or either factor is not contained in ν. Memoized on the
/// unordered pair {λ, μ}.
Integer lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

/// c^ν_{λ,(k)} by the interlacing test; always 0 or 1.
Integer pieri_coeff(const Partition& lam, int k, const Partition& nu);

/// c^ν_{α,β,γ} = Σ_ξ c^ν_{α,ξ} c^ξ_{β,γ}.
Integer lr_coeff3(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& nu);

/// Schur expansion of the skew shape outer/inner: every ξ with
/// c^outer_{inner,ξ} ≠ 0 paired with that coefficient, sorted by ξ.
/// Enumerates LR fillings of arbitrary content, so it shares no code path
/// with lr_coeff's fixed-content count.
const std::vector<std::pair<Partition, Integer>>& skew_expansion(const Partition& outer, const Partition& inner);

struct LrTriple {
  std::array<Partition, 3> factors;
  Integer coeff = 0;
};

/// Every (x₀, x₁, x₂) with |x_i| = sizes[i] and c^outer_{x₀,x₁,x₂} ≠ 0.
/// Built from skew_expansion with the two smallest factors enumerated as
/// sub-partitions of outer.
const std::vector<LrTriple>& lr_triple_expansion(const Partition& outer, const std::array<int, 3>& sizes);

namespace testing {
/// Makes lr_coeff return the negated value for this one (unordered) key.
/// Exists to prove the verification harness catches a wrong LR value.
void inject_lr_fault(const Partition& lam, const Partition& mu, const Partition& nu);
void clear_lr_fault();
}  // namespace testing

}  // namespace kronstab
