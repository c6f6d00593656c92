#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace kronstab::ops {

/// Operations that realize a statement of the stability theory. Each one
/// bumps a process-wide counter, so test suites can assert that a
/// verification run touched all of them.
enum class Op : int {
  pad,
  padded_index_set,
  horizontal_strip_removals,
  lr_coeff,
  pieri_coeff,
  lr_coeff3,
  kronecker_coeff,
  reduced_kronecker,
  reduced_kronecker_limit,
  reduced_kronecker_onerow,
  tau_multiplicity,
  induced_multiplicity,
};

inline constexpr int kOpCount = 12;

std::string_view name(Op op);
void hit(Op op);
std::uint64_t count(Op op);
void reset();

inline constexpr std::array<Op, kOpCount> all() {
  std::array<Op, kOpCount> out{};
  for (int i = 0; i < kOpCount; ++i) out[i] = static_cast<Op>(i);
  return out;
}

}  // namespace kronstab::ops
