#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rbl2/linalg.hpp"

namespace rbl2 {

/// One failed identity instance. Indices are 0-based internally and
/// rendered 1-based.
struct Violation {
  std::string condition;
  std::vector<std::size_t> indices;
  Vector residual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string condition, std::vector<std::size_t> indices, Vector residual);
  /// Appends other's violations with `prefix` prepended to their ids.
  void merge(const VerificationReport& other, const std::string& prefix = "");
  /// Stable sort by (condition, indices).
  void sort();

  /// Distinct condition families. The family of "2term.a:2" is "2term.a".
  std::set<std::string> families() const;
  std::set<std::string> conditions() const;
  /// Index tuples flagged under `condition` (exact id match).
  std::set<std::vector<std::size_t>> tuples(const std::string& condition) const;
  bool has(const std::string& condition) const;

  /// One "VIOLATION <id> (i,j,...) [r1,r2,...]" line per entry.
  std::string render() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

std::string condition_family(const std::string& id);
std::string render(const Violation& v);

/// Execution options shared by the verifiers.
struct Exec {
  unsigned workers = 1;
};

/// Evaluates `check(t, out)` for t in [0, count) split over exec.workers
/// threads and returns the sorted union of the emitted violations.
VerificationReport check_range(std::size_t count, const Exec& exec,
                               const std::function<void(std::size_t, VerificationReport&)>& check);

/// Index tuples over {0..n-1}^arity: all ordered tuples, or strictly
/// increasing ones when `increasing` is set.
std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t arity, bool increasing);

/// Mixed-range tuples: every combination with indices[i] < dims[i].
std::vector<std::vector<std::size_t>> product(const std::vector<std::size_t>& dims);

}  // namespace rbl2
