#include "kronstab/coefficient_store.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>

#include "kronstab/error.hpp"

namespace kronstab {

namespace {

struct KindInfo {
  CoefficientKind kind;
  std::string_view name;
  // operand layout: 'p' partition, 'k' scalar; `symmetric` leading operands commute
  std::string_view layout;
  std::size_t symmetric;
};

constexpr KindInfo kKinds[] = {
    {CoefficientKind::character, "character", "pp", 0},
    {CoefficientKind::lr, "lr", "ppp", 2},
    {CoefficientKind::lr3, "lr3", "pppp", 3},
    {CoefficientKind::kron, "kron", "ppp", 3},
    {CoefficientKind::rkron, "rkron", "ppp", 3},
    {CoefficientKind::rkron1row, "rkron1row", "ppk", 2},
};

const KindInfo& info(CoefficientKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw ArgumentError("unknown coefficient kind");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::optional<Integer> parse_integer(std::string_view text) {
  Integer value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::string_view kind_name(CoefficientKind kind) { return info(kind).name; }

CoefficientKind parse_kind(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.name == name) return k.kind;
  throw ArgumentError("unknown coefficient kind '" + std::string(name) + "'");
}

const std::vector<CoefficientKind>& all_kinds() {
  static const std::vector<CoefficientKind> kinds = [] {
    std::vector<CoefficientKind> out;
    for (const auto& k : kKinds) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

std::string operand_text(const Operand& op) {
  if (const auto* p = std::get_if<Partition>(&op)) return p->to_string();
  return std::to_string(std::get<Integer>(op));
}

std::vector<Operand> canonical_operands(CoefficientKind kind, std::vector<Operand> operands) {
  const auto& k = info(kind);
  if (operands.size() != k.layout.size())
    throw ArgumentError(std::string(k.name) + " takes " + std::to_string(k.layout.size()) + " operands, got " +
                        std::to_string(operands.size()));
  for (std::size_t i = 0; i < operands.size(); ++i) {
    const bool want_partition = k.layout[i] == 'p';
    if (want_partition != std::holds_alternative<Partition>(operands[i]))
      throw ArgumentError(std::string(k.name) + " operand " + std::to_string(i + 1) + " must be a " +
                          (want_partition ? "partition" : "scalar"));
  }
  std::sort(operands.begin(), operands.begin() + static_cast<std::ptrdiff_t>(k.symmetric));
  return operands;
}

std::string CoefficientRecord::key() const {
  std::string out(kind_name(kind));
  for (const auto& op : operands) {
    out += '|';
    out += operand_text(op);
  }
  return out;
}

std::string CoefficientRecord::to_line() const { return key() + "|" + std::to_string(value); }

CoefficientRecord parse_record_line(std::string_view line) {
  auto fields = split(line, '|');
  if (fields.size() < 2) throw StoreCorrupt("expected kind|operands…|value, got '" + std::string(line) + "'");
  CoefficientRecord record;
  try {
    record.kind = parse_kind(fields.front());
  } catch (const ArgumentError& e) {
    throw StoreCorrupt(e.what());
  }
  const auto value = parse_integer(fields.back());
  if (!value) throw StoreCorrupt("bad value '" + std::string(fields.back()) + "'");
  record.value = *value;
  std::vector<Operand> operands;
  for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
    const auto field = fields[i];
    if (!field.empty() && field.front() == '[') {
      try {
        operands.emplace_back(parse_partition(field));
      } catch (const InvalidPartition& e) {
        throw StoreCorrupt(e.what());
      }
    } else if (auto scalar = parse_integer(field)) {
      operands.emplace_back(*scalar);
    } else {
      throw StoreCorrupt("bad operand '" + std::string(field) + "'");
    }
  }
  try {
    record.operands = canonical_operands(record.kind, std::move(operands));
  } catch (const ArgumentError& e) {
    throw StoreCorrupt(e.what());
  }
  return record;
}

CoefficientStore::CoefficientStore(std::filesystem::path path, Verifier verifier)
    : path_(std::move(path)), verifier_(std::move(verifier)) {
  if (std::filesystem::exists(*path_)) {
    std::ifstream in(*path_);
    if (!in) throw IoError("cannot read store " + path_->string());
    std::string line;
    std::size_t line_no = 0, loaded = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      CoefficientRecord record;
      try {
        record = parse_record_line(line);
      } catch (const StoreCorrupt& e) {
        throw StoreCorrupt(path_->string() + ":" + std::to_string(line_no) + ": " + e.what());
      }
      // fixed-stride 1% sample, recomputed from scratch
      if (verifier_ && loaded % 100 == 0) {
        const Integer fresh = verifier_(record);
        if (fresh != record.value)
          throw StoreCorrupt(path_->string() + ":" + std::to_string(line_no) + ": stored " +
                             std::to_string(record.value) + " but recomputed " + std::to_string(fresh));
      }
      ++loaded;
      auto [it, inserted] = records_.try_emplace(record.key(), record);
      if (!inserted && it->second.value != record.value)
        throw StoreCorrupt(path_->string() + ":" + std::to_string(line_no) + ": conflicting duplicate of " +
                           record.key());
    }
  }
  append_.open(*path_, std::ios::app);
  if (!append_) throw IoError("cannot open store " + path_->string() + " for writing");
}

CoefficientStore::~CoefficientStore() {
  try {
    close();
  } catch (...) {
    // the append log is already complete on disk
  }
}

void CoefficientStore::insert_locked(CoefficientRecord record, bool persist) {
  auto [it, inserted] = records_.try_emplace(record.key(), record);
  if (!inserted) {
    if (it->second.value != record.value)
      throw StoreCorrupt("divergent values for " + record.key() + ": " + std::to_string(it->second.value) + " vs " +
                         std::to_string(record.value));
    return;
  }
  if (persist && append_.is_open()) {
    append_ << record.to_line() << '\n';
    append_.flush();
    if (!append_) throw IoError("write failed on store " + path_->string());
  }
}

Integer CoefficientStore::get_or_compute(CoefficientKind kind, std::vector<Operand> operands,
                                         const std::function<Integer()>& compute) {
  CoefficientRecord record{kind, canonical_operands(kind, std::move(operands)), 0};
  const std::string key = record.key();
  {
    std::shared_lock lock(mutex_);
    auto it = records_.find(key);
    if (it != records_.end()) return it->second.value;
  }
  record.value = compute();
  std::unique_lock lock(mutex_);
  insert_locked(record, true);
  return record.value;
}

std::optional<Integer> CoefficientStore::lookup(CoefficientKind kind, std::vector<Operand> operands) const {
  CoefficientRecord probe{kind, canonical_operands(kind, std::move(operands)), 0};
  std::shared_lock lock(mutex_);
  auto it = records_.find(probe.key());
  if (it == records_.end()) return std::nullopt;
  return it->second.value;
}

std::size_t CoefficientStore::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

std::vector<CoefficientRecord> CoefficientStore::records(std::optional<CoefficientKind> kind) const {
  std::shared_lock lock(mutex_);
  std::vector<CoefficientRecord> out;
  for (const auto& [key, record] : records_)
    if (!kind || record.kind == *kind) out.push_back(record);
  return out;
}

std::size_t CoefficientStore::export_table(std::optional<CoefficientKind> kind,
                                           const std::function<bool(const CoefficientRecord&)>& filter,
                                           const std::filesystem::path& destination) const {
  std::ofstream out(destination, std::ios::trunc);
  if (!out) throw IoError("cannot write " + destination.string());
  std::size_t count = 0;
  for (const auto& record : records(kind)) {
    if (filter && !filter(record)) continue;
    out << record.to_line() << '\n';
    ++count;
  }
  out.flush();
  if (!out) throw IoError("write failed on " + destination.string());
  return count;
}

std::size_t CoefficientStore::import_table(const std::filesystem::path& source) {
  std::ifstream in(source);
  if (!in) throw IoError("cannot read " + source.string());
  std::vector<CoefficientRecord> incoming;
  std::map<std::string, Integer> seen;
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] { return source.string() + ":" + std::to_string(line_no) + ": "; };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    CoefficientRecord record;
    try {
      record = parse_record_line(line);
    } catch (const StoreCorrupt& e) {
      throw StoreCorrupt(where() + e.what());
    }
    if (verifier_) {
      const Integer fresh = verifier_(record);
      if (fresh != record.value)
        throw StoreCorrupt(where() + record.key() + " claims " + std::to_string(record.value) + " but recomputes to " +
                           std::to_string(fresh));
    }
    if (auto existing = lookup(record.kind, record.operands); existing && *existing != record.value)
      throw StoreCorrupt(where() + record.key() + " conflicts with stored value " + std::to_string(*existing));
    if (auto [it, fresh] = seen.try_emplace(record.key(), record.value); !fresh && it->second != record.value)
      throw StoreCorrupt(where() + record.key() + " appears earlier in the file with value " +
                         std::to_string(it->second));
    incoming.push_back(std::move(record));
  }
  std::unique_lock lock(mutex_);
  for (auto& record : incoming) insert_locked(std::move(record), true);
  return incoming.size();
}

void CoefficientStore::compact() {
  std::unique_lock lock(mutex_);
  if (!path_ || !append_.is_open()) return;
  append_.close();
  const auto tmp = std::filesystem::path(path_->string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    for (const auto& [key, record] : records_) out << record.to_line() << '\n';
    out.flush();
    if (!out) throw IoError("write failed on " + tmp.string());
  }
  std::filesystem::rename(tmp, *path_);
  append_.open(*path_, std::ios::app);
  if (!append_) throw IoError("cannot reopen store " + path_->string());
}

void CoefficientStore::close() {
  compact();
  std::unique_lock lock(mutex_);
  if (append_.is_open()) append_.close();
}

}  // namespace kronstab
