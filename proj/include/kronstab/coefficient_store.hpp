#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kronstab/checked_int.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

enum class CoefficientKind { character, lr, lr3, kron, rkron, rkron1row };

std::string_view kind_name(CoefficientKind kind);
/// Throws ArgumentError on an unknown name.
CoefficientKind parse_kind(std::string_view name);
const std::vector<CoefficientKind>& all_kinds();

/// A partition, or a scalar for the k of rkron1row.
using Operand = std::variant<Partition, Integer>;

std::string operand_text(const Operand& op);

/// Checks arity and operand types for the kind and puts symmetric operands
/// in sorted order:
///   character  λ | ρ
///   lr         λ | μ | ν      ({λ, μ} sorted)
///   lr3        α | β | γ | ν  ({α, β, γ} sorted)
///   kron       λ | μ | ν      (all sorted)
///   rkron      λ | μ | ν      (all sorted)
///   rkron1row  λ | μ | k      ({λ, μ} sorted)
/// Throws ArgumentError on a shape mismatch.
std::vector<Operand> canonical_operands(CoefficientKind kind, std::vector<Operand> operands);

struct CoefficientRecord {
  CoefficientKind kind = CoefficientKind::lr;
  std::vector<Operand> operands;
  Integer value = 0;

  /// "kind|op1|op2|…", the identity of the record.
  std::string key() const;
  /// "kind|op1|op2|…|value"
  std::string to_line() const;

  friend bool operator==(const CoefficientRecord&, const CoefficientRecord&) = default;
};

/// Parses one store line. Throws StoreCorrupt describing the defect.
CoefficientRecord parse_record_line(std::string_view line);

/// Memoized coefficient store, optionally backed by an append-only file.
///
/// File format: one record per line, `kind|operand|…|value`, partitions in
/// bracket form, integers in decimal. New records are appended as they are
/// computed; close() (and the destructor) rewrite the file sorted by key.
///
/// Thread-safe. Concurrent get_or_compute calls on one key may both compute,
/// but the store never holds two different values for a key.
class CoefficientStore {
 public:
  /// Recomputes a record's value from scratch; used to validate loads and
  /// imports.
  using Verifier = std::function<Integer(const CoefficientRecord&)>;

  /// In-memory only.
  CoefficientStore() = default;
  /// Loads `path` if it exists (validating every line's format and
  /// recomputing a 1% stride sample when a verifier is given), then appends
  /// to it.
  explicit CoefficientStore(std::filesystem::path path, Verifier verifier = {});
  ~CoefficientStore();

  CoefficientStore(const CoefficientStore&) = delete;
  CoefficientStore& operator=(const CoefficientStore&) = delete;

  Integer get_or_compute(CoefficientKind kind, std::vector<Operand> operands, const std::function<Integer()>& compute);
  std::optional<Integer> lookup(CoefficientKind kind, std::vector<Operand> operands) const;

  std::size_t size() const;
  /// Records sorted by key, optionally of one kind.
  std::vector<CoefficientRecord> records(std::optional<CoefficientKind> kind = std::nullopt) const;

  /// Writes matching records in store format, sorted by key. Returns the count.
  std::size_t export_table(std::optional<CoefficientKind> kind,
                           const std::function<bool(const CoefficientRecord&)>& filter,
                           const std::filesystem::path& destination) const;
  /// Reads a store-format file. Every record is validated (format, agreement
  /// with existing records, and with the verifier if set) before any is
  /// added; on failure nothing is imported. Returns the number of records read.
  std::size_t import_table(const std::filesystem::path& source);

  /// Rewrites the backing file sorted by key. No-op for in-memory stores.
  void compact();
  /// Compacts and stops persisting.
  void close();

  const std::optional<std::filesystem::path>& path() const { return path_; }

 private:
  void insert_locked(CoefficientRecord record, bool persist);

  mutable std::shared_mutex mutex_;
  std::map<std::string, CoefficientRecord> records_;
  std::optional<std::filesystem::path> path_;
  std::ofstream append_;
  Verifier verifier_;
};

}  // namespace kronstab
