#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kronstab/checked_int.hpp"
#include "kronstab/evaluator.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

struct Counterexample {
  std::string instance;  // the parameter tuple, e.g. "(c) lam=[1] xi=[2] n=4"
  std::string detail;    // what was observed

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string statement;
  std::map<std::string, int> search_box;
  std::uint64_t checked = 0;
  std::vector<Counterexample> failures;  // sorted
  double wall_time = 0.0;                // seconds

  bool passed() const { return failures.empty(); }
  /// One JSON object on a single line:
  /// {"statement","search_box","checked","failures","status","wall_time"}.
  std::string to_json_line() const;
};

struct SweepOptions {
  const Evaluator* evaluator = nullptr;  // nullptr: a store-less Evaluator
  int jobs = 1;
};

/// [τ_{n,m} P_n(μ[n−i]), P_m(λ)] for the partition algebras.
struct TauMultiplicityQuery {
  Partition mu;
  int i = 0;
  int n = 0;
  int m = 0;
  Partition lam;
};

/// ḡ_{λ,(n−m),μ[n−i]}. Requires m ≤ n and n − i ≥ |μ| + μ₁ (NotPaddable).
Integer tau_multiplicity(const TauMultiplicityQuery& q, const Evaluator& eval = Evaluator{});

/// [Ind P_m(μ)⊗ℂ, P_n(λ[n−i])] = ḡ_{μ,(n−m),λ[n−i]}. Requires |μ| ≤ m ≤ n
/// and λ[n−i] defined.
Integer induced_multiplicity(const Partition& mu, int m, int n, const Partition& lam, int i,
                             const Evaluator& eval = Evaluator{});

/// Pieri flip between c^{λ[n]}_{ξ,(n−|ξ|)} and c^ξ_{λ,(|ξ|−|λ|)}, parts (a)-(c),
/// for |λ| ≤ max_core, |ξ| ≤ max_xi, |ξ| ≤ n ≤ |λ| + ξ₁ + 3.
VerificationReport check_lrflip(int max_core, int max_xi, const SweepOptions& opts = {});

/// ḡ_{λ[n],μ,(n−k)} constant for n in [s, s + margin], where
/// s = max(|λ|+|μ|, |λ|+λ₁, k) is the first degree at or past |λ|+|μ| where
/// every operand exists.
VerificationReport check_kroneckerstab(int max_lam, int max_mu, int max_k, int margin, const SweepOptions& opts = {});

/// ḡ_{λ[n],μ,(n−k)} = 0 whenever |λ| > |μ|, for n ≤ max_n.
VerificationReport check_size_vanishing(int max_lam, int max_mu, int max_k, int max_n,
                                        const SweepOptions& opts = {});

/// ḡ_{λ,μ,ν} = 0 when |λ| + |μ| < |ν|, all sizes ≤ max_size.
VerificationReport check_triangle(int max_size, const SweepOptions& opts = {});

/// ḡ_{λ,μ,ν} = c^ν_{λ,μ} when |λ| + |μ| = |ν| ≤ max_size.
VerificationReport check_k_eq_lr(int max_size, const SweepOptions& opts = {});

/// reduced_kronecker_onerow(λ, μ, k) = reduced_kronecker(λ, μ, (k)).
VerificationReport check_onerow_formula(int max_lam, int max_mu, int max_k, const SweepOptions& opts = {});

/// reduced_kronecker = reduced_kronecker_limit on all sizes ≤ max_size, with
/// the degree cap set to probe_cap for the duration of the sweep.
VerificationReport check_oracle_equiv(int max_size, int probe_cap, const SweepOptions& opts = {});

/// Parts (a)-(d) of the τ-multiplicity statement over |μ| ≤ max_mu,
/// |λ| ≤ max_lam, i ≤ max_i, n ≤ max_n and every m with |λ|, |μ| ≤ m ≤ n.
/// Part (d) compares every degree from max(|λ|+|μ|+i, first valid n) to max_n.
VerificationReport check_prop48(int max_mu, int max_lam, int max_i, int max_n, const SweepOptions& opts = {});

/// induced_multiplicity vanishes when i > 2m or |λ| > m, for m ≤ max_m,
/// n ≤ max_n, |μ| ≤ m and every λ in the padded index set of n − i.
VerificationReport check_prop412(int max_m, int max_n, const SweepOptions& opts = {});

/// Statement names accepted by run_verification, in "all" order.
const std::vector<std::string>& statement_names();

/// Default search box of a statement. Throws ArgumentError for unknown names.
std::map<std::string, int> default_box(std::string_view statement);

/// Runs one statement (or "all") with `overrides` applied to the default
/// boxes. Keys a statement does not use are ignored.
std::vector<VerificationReport> run_verification(std::string_view statement,
                                                 const std::map<std::string, int>& overrides,
                                                 const SweepOptions& opts = {});

}  // namespace kronstab
