#include "kronstab/characters.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <tuple>

#include "kronstab/error.hpp"
#include "kronstab/memo.hpp"

namespace kronstab {

namespace {

std::atomic<int> g_degree_cap{12};

using ShapeCycles = std::tuple<Partition, Partition>;
ConcurrentMemo<ShapeCycles, Integer, TupleHash> g_mn_memo;

// Removes every border strip of length r from `shape` via its beta-set
// (first-column hook lengths): a strip of length r is a bead b moved to the
// free position b − r, with height = beads strictly between the two.
template <class F>
void for_each_border_strip(const Partition& shape, int r, F&& visit) {
  const int len = shape.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = shape.part(i) + (len - 1 - i);
  // beta is strictly decreasing
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::binary_search(beta.begin(), beta.end(), target, std::greater<>())) continue;
    int height = 0;
    for (int j = i + 1; j < len && beta[j] > target; ++j) ++height;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(len);
    for (int j = 0; j < len; ++j) parts[j] = moved[j] - (len - 1 - j);
    visit(Partition::from_parts(std::move(parts)), height % 2 == 0 ? 1 : -1);
  }
}

// cycles sorted descending; the largest cycle is stripped first
Integer murnaghan_nakayama(const Partition& shape, const Partition& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  ShapeCycles key{shape, cycles};
  if (auto hit = g_mn_memo.find(key)) return *hit;

  const int r = cycles.first();
  std::vector<int> rest(cycles.parts().begin() + 1, cycles.parts().end());
  const Partition remaining = Partition::from_parts(std::move(rest));
  Integer total = 0;
  for_each_border_strip(shape, r, [&](const Partition& smaller, int sign) {
    total = checked_add(total, sign * murnaghan_nakayama(smaller, remaining));
  });
  return g_mn_memo.insert(key, total);
}

}  // namespace

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) { g_degree_cap.store(cap); }

void require_within_cap(int n, const char* what) {
  if (n > degree_cap())
    throw DegreeTooLarge(std::string(what) + ": degree " + std::to_string(n) + " exceeds cap " +
                         std::to_string(degree_cap()));
}

Integer character_value(const Partition& lam, const CycleType& rho) {
  if (lam.size() != rho.degree())
    throw SizeMismatch("character of " + lam.to_string() + " on cycle type " + rho.cycles().to_string());
  return murnaghan_nakayama(lam, rho.cycles());
}

std::size_t CharacterTable::row_of(const Partition& lam) const {
  auto it = std::find(irreducibles.begin(), irreducibles.end(), lam);
  if (it == irreducibles.end()) throw SizeMismatch(lam.to_string() + " is not a partition of " + std::to_string(n));
  return static_cast<std::size_t>(it - irreducibles.begin());
}

std::size_t CharacterTable::column_of(const CycleType& rho) const {
  auto it = std::find(classes.begin(), classes.end(), rho);
  if (it == classes.end())
    throw SizeMismatch(rho.cycles().to_string() + " is not a cycle type of " + std::to_string(n));
  return static_cast<std::size_t>(it - classes.begin());
}

bool CharacterTable::rows_orthogonal() const {
  const Integer order = factorial(n);
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a; b < values.size(); ++b) {
      Integer sum = 0;
      for (std::size_t c = 0; c < classes.size(); ++c)
        sum = checked_add(sum, checked_mul(class_sizes[c], checked_mul(values[a][c], values[b][c])));
      if (sum != (a == b ? order : 0)) return false;
    }
  }
  return true;
}

CharacterTable character_table(int n) {
  require_within_cap(n, "character_table");
  CharacterTable table;
  table.n = n;
  table.irreducibles = enumerate_partitions(n);
  const Integer order = factorial(n);
  for (auto& p : enumerate_partitions(n)) {
    CycleType rho(std::move(p));
    table.class_sizes.push_back(order / rho.centralizer_order());
    table.classes.push_back(std::move(rho));
  }
  table.values.reserve(table.irreducibles.size());
  for (const auto& lam : table.irreducibles) {
    std::vector<Integer> row;
    row.reserve(table.classes.size());
    for (const auto& rho : table.classes) row.push_back(character_value(lam, rho));
    table.values.push_back(std::move(row));
  }
  return table;
}

}  // namespace kronstab
