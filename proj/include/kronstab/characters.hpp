#pragma once

#include <vector>

#include "kronstab/checked_int.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

/// Process-wide degree cap for character tables and Kronecker coefficients.
/// Default 12.
int degree_cap();
void set_degree_cap(int cap);

/// Raises or lowers the cap for the lifetime of the object.
class ScopedDegreeCap {
 public:
  explicit ScopedDegreeCap(int cap) : previous_(degree_cap()) { set_degree_cap(cap); }
  ~ScopedDegreeCap() { set_degree_cap(previous_); }
  ScopedDegreeCap(const ScopedDegreeCap&) = delete;
  ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

 private:
  int previous_;
};

/// Throws DegreeTooLarge when n exceeds the current cap.
void require_within_cap(int n, const char* what);

/// χ^λ(ρ) by the Murnaghan–Nakayama rule, memoized on
/// (remaining shape, remaining cycles). Throws SizeMismatch if |λ| ≠ |ρ|.
Integer character_value(const Partition& lam, const CycleType& rho);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> irreducibles;  // rows, reverse-lex
  std::vector<CycleType> classes;       // columns, reverse-lex
  std::vector<std::vector<Integer>> values;
  std::vector<Integer> class_sizes;     // n! / z_ρ

  Integer value(std::size_t row, std::size_t col) const { return values[row][col]; }
  std::size_t row_of(const Partition& lam) const;
  std::size_t column_of(const CycleType& rho) const;

  /// Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) = n! δ_{λμ} for every pair of rows.
  bool rows_orthogonal() const;
};

/// Full table of S_n. Throws DegreeTooLarge above the cap.
CharacterTable character_table(int n);

}  // namespace kronstab
