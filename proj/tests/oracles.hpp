#pragma once
// Test-only reference implementations. Deliberately naive and written
// without the library's algorithms: explicit diagrams, brute-force fillings,
// permutations. Only Partition (as a value type) is shared.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "kronstab/partition.hpp"

namespace oracle {

using kronstab::Partition;
using Parts = std::vector<int>;

inline Partition P(Parts p) { return kronstab::make_partition(std::move(p)); }

inline Parts parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

// p(n) by Euler's pentagonal recurrence.
inline long long partition_count(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sgn = (k % 2) ? 1 : -1;
      p[m] += sgn * p[m - g1];
      if (g2 <= m) p[m] += sgn * p[m - g2];
    }
  }
  return p[n];
}

// Partitions of n as the weakly decreasing compositions of n.
inline std::set<Parts> partitions_by_compositions(int n) {
  std::set<Parts> out;
  if (n == 0) return {Parts{}};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Parts c{1};
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) c.push_back(1);
      else ++c.back();
    }
    if (std::is_sorted(c.rbegin(), c.rend())) out.insert(c);
  }
  return out;
}

inline std::vector<Parts> all_partitions_up_to(int max_n) {
  std::vector<Parts> out;
  for (int n = 0; n <= max_n; ++n)
    for (auto& p : partitions_by_compositions(n)) out.push_back(p);
  return out;
}

// Cells (row, col) of a diagram.
inline std::set<std::pair<int, int>> cells(const Parts& p) {
  std::set<std::pair<int, int>> s;
  for (int r = 0; r < static_cast<int>(p.size()); ++r)
    for (int c = 0; c < p[r]; ++c) s.insert({r, c});
  return s;
}

inline bool contains(const Parts& outer, const Parts& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

// Border strip test on explicit cells: connected, no 2x2 block.
inline bool is_border_strip(const std::set<std::pair<int, int>>& s) {
  if (s.empty()) return false;
  for (auto [r, c] : s)
    if (s.count({r + 1, c}) && s.count({r, c + 1}) && s.count({r + 1, c + 1})) return false;
  std::set<std::pair<int, int>> seen{*s.begin()};
  std::vector<std::pair<int, int>> stack{*s.begin()};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}})
      if (s.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == s.size();
}

// χ^λ(ρ) by removing border strips cell-by-cell, ρ consumed front to back.
inline long long character(const Parts& lam, Parts rho) {
  const int n = std::accumulate(lam.begin(), lam.end(), 0);
  if (rho.empty()) return n == 0 ? 1 : 0;
  const int r = rho.front();
  rho.erase(rho.begin());
  long long total = 0;
  const auto lam_cells = cells(lam);
  for (auto& inner : partitions_by_compositions(n - r)) {
    if (!contains(lam, inner)) continue;
    auto diff = lam_cells;
    for (auto c : cells(inner)) diff.erase(c);
    if (!is_border_strip(diff)) continue;
    std::set<int> rows;
    for (auto [row, col] : diff) rows.insert(row);
    const long long sign = (rows.size() - 1) % 2 ? -1 : 1;
    total += sign * character(inner, rho);
  }
  return total;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// |centralizer| = Π j^{m_j} m_j!
inline long long centralizer(const Parts& rho) {
  std::map<int, int> mult;
  for (int x : rho) ++mult[x];
  long long z = 1;
  for (auto [j, m] : mult) {
    for (int i = 0; i < m; ++i) z *= j;
    z *= factorial(m);
  }
  return z;
}

// Cycle type of a permutation of {0..n-1}, sorted decreasing.
inline Parts cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  Parts out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// g_{λμν} = (1/n!) Σ_ρ (n!/z_ρ) χ^λ χ^μ χ^ν.
inline long long kronecker(const Parts& a, const Parts& b, const Parts& c) {
  const int n = std::accumulate(a.begin(), a.end(), 0);
  long long num = 0;
  const long long nf = factorial(n);
  for (auto& rho : partitions_by_compositions(n))
    num += (nf / centralizer(rho)) * character(a, rho) * character(b, rho) * character(c, rho);
  return num / nf;
}

// c^ν_{λμ} from characters: ⟨Res χ^ν, χ^λ × χ^μ⟩ over S_l × S_m.
inline long long lr_by_characters(const Parts& lam, const Parts& mu, const Parts& nu) {
  const int l = std::accumulate(lam.begin(), lam.end(), 0);
  const int m = std::accumulate(mu.begin(), mu.end(), 0);
  const int n = std::accumulate(nu.begin(), nu.end(), 0);
  if (l + m != n) return 0;
  long long num = 0;
  for (auto& r1 : partitions_by_compositions(l))
    for (auto& r2 : partitions_by_compositions(m)) {
      Parts r = r1;
      r.insert(r.end(), r2.begin(), r2.end());
      std::sort(r.rbegin(), r.rend());
      num += (factorial(l) / centralizer(r1)) * (factorial(m) / centralizer(r2)) * character(lam, r1) *
             character(mu, r2) * character(nu, r);
    }
  return num / (factorial(l) * factorial(m));
}

// c^ν_{λμ} by trying every filling of ν/λ with labels 1..ℓ(μ).
inline long long lr_by_fillings(const Parts& lam, const Parts& mu, const Parts& nu) {
  if (!contains(nu, lam)) return 0;
  std::vector<std::pair<int, int>> skew;  // reading order: rows top-down, right to left
  for (int r = 0; r < static_cast<int>(nu.size()); ++r) {
    const int start = r < static_cast<int>(lam.size()) ? lam[r] : 0;
    for (int c = nu[r] - 1; c >= start; --c) skew.push_back({r, c});
  }
  const int sz = std::accumulate(mu.begin(), mu.end(), 0);
  if (static_cast<int>(skew.size()) != sz) return 0;
  if (sz == 0) return 1;
  const int labels = static_cast<int>(mu.size());
  std::vector<int> fill(skew.size(), 1);
  long long count = 0;
  while (true) {
    std::map<std::pair<int, int>, int> at;
    for (std::size_t i = 0; i < skew.size(); ++i) at[skew[i]] = fill[i];
    bool ok = true;
    std::vector<int> content(labels + 1, 0);
    for (std::size_t i = 0; i < skew.size() && ok; ++i) {
      auto [r, c] = skew[i];
      const int v = fill[i];
      if (auto it = at.find({r, c + 1}); it != at.end() && it->second < v) ok = false;
      if (auto it = at.find({r + 1, c}); it != at.end() && it->second <= v) ok = false;
      ++content[v];
      if (v > 1 && content[v] > content[v - 1]) ok = false;  // lattice word
    }
    for (int v = 1; v <= labels && ok; ++v)
      if (content[v] != mu[v - 1]) ok = false;
    if (ok) ++count;
    std::size_t i = 0;
    while (i < fill.size() && fill[i] == labels) fill[i++] = 1;
    if (i == fill.size()) break;
    ++fill[i];
  }
  return count;
}

inline Parts pad(const Parts& core, int n) {
  Parts out{n - std::accumulate(core.begin(), core.end(), 0)};
  out.insert(out.end(), core.begin(), core.end());
  return out;
}

}  // namespace oracle
