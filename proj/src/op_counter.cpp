#include "kronstab/op_counter.hpp"

#include <atomic>

namespace kronstab::ops {

namespace {
std::array<std::atomic<std::uint64_t>, kOpCount> g_counts{};
}

std::string_view name(Op op) {
  switch (op) {
    case Op::pad: return "pad";
    case Op::padded_index_set: return "enumerate_padded_index_set";
    case Op::horizontal_strip_removals: return "horizontal_strip_removals";
    case Op::lr_coeff: return "lr_coeff";
    case Op::pieri_coeff: return "pieri_coeff";
    case Op::lr_coeff3: return "lr_coeff3";
    case Op::kronecker_coeff: return "kronecker_coeff";
    case Op::reduced_kronecker: return "reduced_kronecker";
    case Op::reduced_kronecker_limit: return "reduced_kronecker_limit";
    case Op::reduced_kronecker_onerow: return "reduced_kronecker_onerow";
    case Op::tau_multiplicity: return "tau_multiplicity";
    case Op::induced_multiplicity: return "induced_multiplicity";
  }
  return "?";
}

void hit(Op op) { g_counts[static_cast<int>(op)].fetch_add(1, std::memory_order_relaxed); }

std::uint64_t count(Op op) { return g_counts[static_cast<int>(op)].load(std::memory_order_relaxed); }

void reset() {
  for (auto& c : g_counts) c.store(0, std::memory_order_relaxed);
}

}  // namespace kronstab::ops
