#include "kronstab/littlewood_richardson.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "kronstab/memo.hpp"
#include "kronstab/op_counter.hpp"

namespace kronstab {

namespace {

// Backtracking over LR fillings of outer/inner. Cells are visited in the
// reverse reading order (rows top to bottom, each row right to left), so the
// lattice condition can be enforced on the prefix as it grows.
class LrFiller {
 public:
  LrFiller(const Partition& outer, const Partition& inner, const Partition* content)
      : outer_(outer), inner_(inner), content_(content), grid_(outer.length()) {
    for (int r = 0; r < outer.length(); ++r) {
      grid_[r].assign(outer.part(r), 0);
      for (int c = outer.part(r) - 1; c >= inner.part(r); --c) cells_.push_back({r, c});
    }
    counts_.assign(outer.length() + 2, 0);
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    fill(0, leaf);
  }

  Partition current_content() const {
    std::vector<int> parts;
    for (std::size_t v = 1; v < counts_.size() && counts_[v] > 0; ++v) parts.push_back(counts_[v]);
    return Partition::from_parts(std::move(parts));
  }

 private:
  struct Cell {
    int row;
    int col;
  };

  template <class Leaf>
  void fill(std::size_t idx, Leaf& leaf) {
    if (idx == cells_.size()) {
      leaf();
      return;
    }
    const auto [r, c] = cells_[idx];
    int hi = r + 1;
    if (content_) hi = std::min(hi, content_->length());
    if (c + 1 < outer_.part(r)) hi = std::min(hi, grid_[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= inner_.part(r - 1)) lo = grid_[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && counts_[v] >= counts_[v - 1]) continue;
      if (content_ && counts_[v] >= content_->part(v - 1)) continue;
      grid_[r][c] = v;
      ++counts_[v];
      fill(idx + 1, leaf);
      --counts_[v];
    }
    grid_[r][c] = 0;
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition* content_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> cells_;
  std::vector<int> counts_;
};

Integer count_lr_tableaux(const Partition& outer, const Partition& inner, const Partition& content) {
  Integer count = 0;
  LrFiller filler(outer, inner, &content);
  filler.run([&] { count = checked_add(count, 1); });
  return count;
}

using Triple = std::tuple<Partition, Partition, Partition>;
using SizedOuter = std::tuple<Partition, int, int, int>;

ConcurrentMemo<Triple, Integer, TupleHash> g_lr_memo;
ConcurrentMemo<std::tuple<Partition, Partition>, std::vector<std::pair<Partition, Integer>>, TupleHash>
    g_skew_memo;
ConcurrentMemo<SizedOuter, std::vector<LrTriple>, TupleHash> g_triple_memo;

// {λ, μ} in a fixed order: the larger one goes inside, which leaves fewer
// cells to fill.
std::pair<const Partition*, const Partition*> canonical_pair(const Partition& a, const Partition& b) {
  if (std::make_tuple(a.size(), a) >= std::make_tuple(b.size(), b)) return {&a, &b};
  return {&b, &a};
}

std::atomic<bool> g_fault_active{false};
std::mutex g_fault_mutex;
std::optional<Triple> g_fault_key;

Integer apply_fault(const Partition& inner, const Partition& content, const Partition& nu, Integer value) {
  if (!g_fault_active.load(std::memory_order_relaxed)) return value;
  std::lock_guard lock(g_fault_mutex);
  if (g_fault_key && *g_fault_key == Triple{inner, content, nu}) return -value;
  return value;
}

}  // namespace

Integer lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
  ops::hit(ops::Op::lr_coeff);
  if (lam.size() + mu.size() != nu.size()) return 0;
  if (!lam.contained_in(nu) || !mu.contained_in(nu)) return 0;
  auto [inner, content] = canonical_pair(lam, mu);
  const Integer value = g_lr_memo.get_or_compute(Triple{*inner, *content, nu},
                                                 [&] { return count_lr_tableaux(nu, *inner, *content); });
  return apply_fault(*inner, *content, nu, value);
}

Integer pieri_coeff(const Partition& lam, int k, const Partition& nu) {
  ops::hit(ops::Op::pieri_coeff);
  if (k < 0 || lam.size() + k != nu.size()) return 0;
  return is_horizontal_strip(nu, lam) ? 1 : 0;
}

Integer lr_coeff3(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& nu) {
  ops::hit(ops::Op::lr_coeff3);
  const int inner_size = beta.size() + gamma.size();
  if (alpha.size() + inner_size != nu.size()) return 0;
  if (!alpha.contained_in(nu)) return 0;
  Integer total = 0;
  for (const auto& xi : sub_partitions(nu, inner_size)) {
    if (!beta.contained_in(xi) || !gamma.contained_in(xi)) continue;
    const Integer outer = lr_coeff(alpha, xi, nu);
    if (outer == 0) continue;
    total = checked_add(total, checked_mul(outer, lr_coeff(beta, gamma, xi)));
  }
  return total;
}

const std::vector<std::pair<Partition, Integer>>& skew_expansion(const Partition& outer, const Partition& inner) {
  return g_skew_memo.get_or_compute_ref({outer, inner}, [&] {
    std::vector<std::pair<Partition, Integer>> out;
    if (!inner.contained_in(outer)) return out;
    std::map<Partition, Integer> terms;
    LrFiller filler(outer, inner, nullptr);
    filler.run([&] {
      auto& slot = terms[filler.current_content()];
      slot = checked_add(slot, 1);
    });
    out.assign(terms.begin(), terms.end());
    return out;
  });
}

const std::vector<LrTriple>& lr_triple_expansion(const Partition& outer, const std::array<int, 3>& sizes) {
  return g_triple_memo.get_or_compute_ref({outer, sizes[0], sizes[1], sizes[2]}, [&] {
    std::vector<LrTriple> out;
    if (sizes[0] < 0 || sizes[1] < 0 || sizes[2] < 0) return out;
    if (sizes[0] + sizes[1] + sizes[2] != outer.size()) return out;

    // c^outer_{x,y,z} is symmetric in x, y, z: peel the smallest factor off
    // outer, then the middle one off each intermediate ξ.
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] < sizes[b]; });
    const int first = order[0], second = order[1], third = order[2];

    std::map<std::array<Partition, 3>, Integer> terms;
    for (const auto& x : sub_partitions(outer, sizes[first])) {
      for (const auto& [xi, c_outer] : skew_expansion(outer, x)) {
        for (const auto& y : sub_partitions(xi, sizes[second])) {
          for (const auto& [z, c_inner] : skew_expansion(xi, y)) {
            std::array<Partition, 3> key;
            key[first] = x;
            key[second] = y;
            key[third] = z;
            auto& slot = terms[key];
            slot = checked_add(slot, checked_mul(c_outer, c_inner));
          }
        }
      }
    }
    out.reserve(terms.size());
    for (auto& [factors, coeff] : terms) out.push_back({factors, coeff});
    return out;
  });
}

namespace testing {

void inject_lr_fault(const Partition& lam, const Partition& mu, const Partition& nu) {
  auto [inner, content] = canonical_pair(lam, mu);
  std::lock_guard lock(g_fault_mutex);
  g_fault_key = Triple{*inner, *content, nu};
  g_fault_active.store(true);
}

void clear_lr_fault() {
  std::lock_guard lock(g_fault_mutex);
  g_fault_key.reset();
  g_fault_active.store(false);
}

}  // namespace testing

}  // namespace kronstab
