#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kronstab {

/// A weakly decreasing sequence of positive integers. Parts and sizes are
/// plain `int`; desk-scale degrees stay far below 2^31.
///
/// Values are immutable once built. The default-constructed value is the
/// empty partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Validating constructor: strips trailing zeros, rejects negative parts
  /// and increasing sequences with InvalidPartition.
  static Partition from_parts(std::vector<int> parts);

  /// Single row (k); (0) is the empty partition.
  static Partition row(int k);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part (0-based), or 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return part(0); }

  /// Young-diagram containment: this ⊆ other.
  bool contained_in(const Partition& other) const;

  std::string to_string() const;

  /// Lexicographic on parts. Not the enumeration order (see
  /// enumerate_partitions), but a total order usable as a map key.
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  explicit Partition(std::vector<int> parts);

  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Alias of Partition::from_parts.
Partition make_partition(std::vector<int> parts);

/// Parses the bracket text form, e.g. "[3,2,1]" or "[]".
Partition parse_partition(std::string_view text);

/// λ[n] = (n − |λ|, λ₁, λ₂, …). Throws NotPaddable when n < |λ| + λ₁.
Partition pad(const Partition& core, int total);

/// Whether λ[n] is a partition.
bool is_paddable(const Partition& core, int total);

/// All partitions of n, reverse-lexicographic: (n), (n−1,1), …, (1ⁿ).
std::vector<Partition> enumerate_partitions(int n);

/// All partitions of size 0..max_size, by size, each size reverse-lex.
std::vector<Partition> enumerate_partitions_up_to(int max_size);

/// The padded index set {λ : |λ| + λ₁ ≤ m}, ordered by size then reverse-lex.
std::vector<Partition> enumerate_padded_index_set(int m);

/// Partitions ν ⊆ outer with |ν| = size, reverse-lex.
std::vector<Partition> sub_partitions(const Partition& outer, int size);

/// Componentwise minimum, the largest partition contained in both.
Partition intersect(const Partition& a, const Partition& b);

Partition conjugate(const Partition& p);

/// All μ ⊆ p with |μ| = |p| − k such that p/μ is a horizontal strip
/// (no two removed boxes in one column), reverse-lex.
std::vector<Partition> horizontal_strip_removals(const Partition& p, int k);

/// Whether outer/inner is a horizontal strip (inner ⊆ outer and interlacing).
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// Number of standard Young tableaux of shape p, by the hook-length formula.
long long hook_length_dimension(const Partition& p);

/// A partition read as the cycle lengths of a permutation of n.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

  const Partition& cycles() const { return cycles_; }
  int degree() const { return cycles_.size(); }
  int count() const { return cycles_.length(); }

  /// m_j: number of cycles of length j.
  int multiplicity(int j) const;

  /// z_ρ = ∏_j j^{m_j} m_j!, the centralizer order.
  long long centralizer_order() const;

  /// (−1)^{n − #cycles}.
  int sign() const { return (degree() - count()) % 2 == 0 ? 1 : -1; }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.cycles_ <=> b.cycles_; }

 private:
  Partition cycles_;
};

}  // namespace kronstab

template <>
struct std::hash<kronstab::Partition> {
  std::size_t operator()(const kronstab::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};
