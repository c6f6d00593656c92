#pragma once

#include "kronstab/checked_int.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

/// Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ), which must equal n!·g_{λ,μ,ν}.
/// Throws SizeMismatch / DegreeTooLarge like kronecker_coeff.
Integer kronecker_character_sum(const Partition& lam, const Partition& mu, const Partition& nu);

/// g_{λ,μ,ν} = [S(λ)⊗S(μ), S(ν)] as a normalized character sum. Asserts the
/// sum is divisible by n! and non-negative (std::logic_error otherwise).
/// Memoized on the sorted triple.
Integer kronecker_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

/// First probe degree of reduced_kronecker_limit:
/// |λ| + |μ| + |ν| + max(λ₁, μ₁, ν₁, 1).
int limit_probe_degree(const Partition& lam, const Partition& mu, const Partition& nu);

/// ḡ as the Murnaghan limit, probed at n₀ = limit_probe_degree and n₀ + 1.
/// Throws NotStabilized if the probes differ, DegreeTooLarge if n₀ + 1 is
/// above the degree cap. An oracle: it needs characters of degree n₀ + 1.
Integer reduced_kronecker_limit(const Partition& lam, const Partition& mu, const Partition& nu);

/// ḡ_{λ,μ,ν} = Σ c^λ_{α,β,π} c^μ_{α,γ,ρ} c^ν_{β,γ,σ} g_{π,ρ,σ}.
///
/// The sizes of the six inner partitions are fixed by p = |π| = |ρ| = |σ|:
///   |α| = (|λ|+|μ|−|ν|−p)/2, |β| = (|λ|+|ν|−|μ|−p)/2, |γ| = (|μ|+|ν|−|λ|−p)/2,
/// so the sum runs over p and, for each p, over the non-zero three-factor LR
/// expansions of λ, μ and ν. Only Kronecker coefficients of degree
/// p ≤ min(|λ|,|μ|,|ν|) are needed. Memoized on the sorted triple.
Integer reduced_kronecker(const Partition& lam, const Partition& mu, const Partition& nu);

/// ḡ_{λ,μ,(k)} = Σ_{α,π; k₁+k₂+|π| = k} c^λ_{π,α,(k₁)} c^μ_{π,α,(k₂)}.
Integer reduced_kronecker_onerow(const Partition& lam, const Partition& mu, int k);

}  // namespace kronstab
