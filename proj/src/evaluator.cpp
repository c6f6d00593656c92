#include "kronstab/evaluator.hpp"

#include <limits>

#include "kronstab/characters.hpp"
#include "kronstab/error.hpp"
#include "kronstab/kronecker.hpp"
#include "kronstab/littlewood_richardson.hpp"

namespace kronstab {

namespace {

template <class F>
Integer through_store(CoefficientStore* store, CoefficientKind kind, std::vector<Operand> operands, F&& compute) {
  if (!store) return compute();
  return store->get_or_compute(kind, std::move(operands), compute);
}

const Partition& P(const Operand& op) { return std::get<Partition>(op); }

}  // namespace

Integer Evaluator::character(const Partition& lam, const Partition& cycle_type) const {
  return through_store(store_, CoefficientKind::character, {lam, cycle_type},
                       [&] { return character_value(lam, CycleType(cycle_type)); });
}

Integer Evaluator::lr(const Partition& lam, const Partition& mu, const Partition& nu) const {
  return through_store(store_, CoefficientKind::lr, {lam, mu, nu}, [&] { return lr_coeff(lam, mu, nu); });
}

Integer Evaluator::lr3(const Partition& alpha, const Partition& beta, const Partition& gamma,
                       const Partition& nu) const {
  return through_store(store_, CoefficientKind::lr3, {alpha, beta, gamma, nu},
                       [&] { return lr_coeff3(alpha, beta, gamma, nu); });
}

Integer Evaluator::kron(const Partition& lam, const Partition& mu, const Partition& nu) const {
  return through_store(store_, CoefficientKind::kron, {lam, mu, nu}, [&] { return kronecker_coeff(lam, mu, nu); });
}

Integer Evaluator::rkron(const Partition& lam, const Partition& mu, const Partition& nu) const {
  return through_store(store_, CoefficientKind::rkron, {lam, mu, nu},
                       [&] { return reduced_kronecker(lam, mu, nu); });
}

Integer Evaluator::rkron1row(const Partition& lam, const Partition& mu, int k) const {
  return through_store(store_, CoefficientKind::rkron1row, {lam, mu, Integer{k}},
                       [&] { return reduced_kronecker_onerow(lam, mu, k); });
}

Integer recompute(const CoefficientRecord& record) {
  const auto& ops = record.operands;
  switch (record.kind) {
    case CoefficientKind::character: return character_value(P(ops[0]), CycleType(P(ops[1])));
    case CoefficientKind::lr: return lr_coeff(P(ops[0]), P(ops[1]), P(ops[2]));
    case CoefficientKind::lr3: return lr_coeff3(P(ops[0]), P(ops[1]), P(ops[2]), P(ops[3]));
    case CoefficientKind::kron: return kronecker_coeff(P(ops[0]), P(ops[1]), P(ops[2]));
    case CoefficientKind::rkron: return reduced_kronecker(P(ops[0]), P(ops[1]), P(ops[2]));
    case CoefficientKind::rkron1row: {
      const Integer k = std::get<Integer>(ops[2]);
      if (k < 0 || k > std::numeric_limits<int>::max()) throw ArgumentError("k out of range in " + record.key());
      return reduced_kronecker_onerow(P(ops[0]), P(ops[1]), static_cast<int>(k));
    }
  }
  throw ArgumentError("unknown record kind");
}

}  // namespace kronstab
