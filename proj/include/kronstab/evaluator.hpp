#pragma once

#include "kronstab/checked_int.hpp"
#include "kronstab/coefficient_store.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

/// Entry point for coefficient values used by the CLI and the sweeps.
/// With a store attached, each top-level value goes through
/// CoefficientStore::get_or_compute; without one it calls the library
/// directly. Results are identical either way.
class Evaluator {
 public:
  Evaluator() = default;
  explicit Evaluator(CoefficientStore* store) : store_(store) {}

  Integer character(const Partition& lam, const Partition& cycle_type) const;
  Integer lr(const Partition& lam, const Partition& mu, const Partition& nu) const;
  Integer lr3(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& nu) const;
  Integer kron(const Partition& lam, const Partition& mu, const Partition& nu) const;
  Integer rkron(const Partition& lam, const Partition& mu, const Partition& nu) const;
  Integer rkron1row(const Partition& lam, const Partition& mu, int k) const;

  CoefficientStore* store() const { return store_; }

 private:
  CoefficientStore* store_ = nullptr;
};

/// Recomputes a record from scratch (no store involved). Serves as the
/// store's verifier.
Integer recompute(const CoefficientRecord& record);

}  // namespace kronstab
