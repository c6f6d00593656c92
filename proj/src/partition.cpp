#include "kronstab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

#include "kronstab/checked_int.hpp"
#include "kronstab/error.hpp"
#include "kronstab/op_counter.hpp"

namespace kronstab {

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts)), size_(std::accumulate(parts_.begin(), parts_.end(), 0)) {}

Partition Partition::from_parts(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidPartition("negative part " + std::to_string(parts[i]));
    if (parts[i] == 0) throw InvalidPartition("zero part before a positive one");
    if (i > 0 && parts[i] > parts[i - 1]) throw InvalidPartition("parts increase at position " + std::to_string(i));
  }
  return Partition(std::move(parts));
}

Partition Partition::row(int k) {
  if (k < 0) throw InvalidPartition("negative row length");
  return k == 0 ? Partition{} : Partition(std::vector<int>{k});
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] > other.parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition make_partition(std::vector<int> parts) { return Partition::from_parts(std::move(parts)); }

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw InvalidPartition("expected bracketed partition like [3,2,1], got '" + std::string(text) + "'");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<int> parts;
  if (s.empty()) return Partition{};
  while (true) {
    auto comma = s.find(',');
    std::string_view field = trim(s.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw InvalidPartition("bad part '" + std::string(field) + "' in '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return Partition::from_parts(std::move(parts));
}

bool is_paddable(const Partition& core, int total) { return total - core.size() >= core.first(); }

Partition pad(const Partition& core, int total) {
  ops::hit(ops::Op::pad);
  if (!is_paddable(core, total))
    throw NotPaddable(core.to_string() + "[" + std::to_string(total) + "] needs n >= " +
                      std::to_string(core.size() + core.first()));
  std::vector<int> parts;
  parts.reserve(core.length() + 1);
  parts.push_back(total - core.size());
  parts.insert(parts.end(), core.parts().begin(), core.parts().end());
  return Partition::from_parts(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(current));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

// Largest size reachable from row i onward with every part ≤ cap.
int capacity(std::span<const int> outer, std::size_t i, int cap) {
  int total = 0;
  for (; i < outer.size(); ++i) total += std::min(outer[i], cap);
  return total;
}

void sub_rec(std::span<const int> outer, std::size_t row, int remaining, int cap, std::vector<int>& current,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(current));
    return;
  }
  if (row >= outer.size()) return;
  for (int v = std::min({outer[row], cap, remaining}); v >= 1; --v) {
    if (v + capacity(outer, row + 1, v) < remaining) break;
    current.push_back(v);
    sub_rec(outer, row + 1, remaining - v, v, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = enumerate_partitions(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> enumerate_padded_index_set(int m) {
  ops::hit(ops::Op::padded_index_set);
  std::vector<Partition> out;
  for (int size = 0; size <= m; ++size) {
    for (auto& p : enumerate_partitions(size))
      if (size + p.first() <= m) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Partition> sub_partitions(const Partition& outer, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > outer.size()) return out;
  std::vector<int> current;
  sub_rec(outer.parts(), 0, size, outer.first(), current, out);
  return out;
}

Partition intersect(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  for (int i = 0; i < std::min(a.length(), b.length()); ++i) parts.push_back(std::min(a.part(i), b.part(i)));
  return Partition::from_parts(std::move(parts));
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts(p.first(), 0);
  for (int x : p.parts())
    for (int j = 0; j < x; ++j) ++parts[j];
  return Partition::from_parts(std::move(parts));
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!inner.contained_in(outer)) return false;
  // interlacing: outer_{i+1} ≤ inner_i for every row
  for (int i = 0; i + 1 < outer.length(); ++i)
    if (outer.part(i + 1) > inner.part(i)) return false;
  return true;
}

std::vector<Partition> horizontal_strip_removals(const Partition& p, int k) {
  ops::hit(ops::Op::horizontal_strip_removals);
  std::vector<Partition> out;
  const int target = p.size() - k;
  if (k < 0 || target < 0) return out;
  const int len = p.length();
  // row i of the result ranges over [p_{i+1}, p_i]
  std::vector<int> lo(len), hi(len), lo_suffix(len + 1, 0), hi_suffix(len + 1, 0);
  for (int i = len - 1; i >= 0; --i) {
    lo[i] = p.part(i + 1);
    hi[i] = p.part(i);
    lo_suffix[i] = lo_suffix[i + 1] + lo[i];
    hi_suffix[i] = hi_suffix[i + 1] + hi[i];
  }
  std::vector<int> current(len, 0);
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == len) {
      if (remaining == 0) out.push_back(Partition::from_parts(current));
      return;
    }
    for (int v = hi[row]; v >= lo[row]; --v) {
      int rest = remaining - v;
      if (rest < lo_suffix[row + 1] || rest > hi_suffix[row + 1]) continue;
      current[row] = v;
      self(self, row + 1, rest);
    }
  };
  rec(rec, 0, target);
  return out;
}

long long hook_length_dimension(const Partition& p) {
  const Partition conj = conjugate(p);
  Integer hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(i); ++j) hooks = checked_mul(hooks, (p.part(i) - j - 1) + (conj.part(j) - i - 1) + 1);
  return factorial(p.size()) / hooks;
}

int CycleType::multiplicity(int j) const {
  return static_cast<int>(std::count(cycles_.parts().begin(), cycles_.parts().end(), j));
}

long long CycleType::centralizer_order() const {
  Integer z = 1;
  auto parts = cycles_.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t k = i;
    while (k < parts.size() && parts[k] == parts[i]) ++k;
    const int m = static_cast<int>(k - i);
    for (int r = 0; r < m; ++r) z = checked_mul(z, parts[i]);
    z = checked_mul(z, factorial(m));
    i = k;
  }
  return z;
}

}  // namespace kronstab
