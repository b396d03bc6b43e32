#ifndef HGALG_VERIFY_HPP
#define HGALG_VERIFY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hgalg/betti.hpp"
#include "hgalg/field.hpp"
#include "hgalg/ideal.hpp"
#include "hgalg/json_io.hpp"

namespace hgalg {

/// Parameter grid: comma-separated `key=value` pairs where a value is an
/// integer, an inclusive range `a..b`, or a `/`-separated list. A bare word
/// names a preset (for instance `small-world`).
class Grid {
 public:
  static Grid parse(const std::string& text);

  const std::string& text() const { return text_; }
  const std::string& preset() const { return preset_; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  /// Values for `key`, or `fallback` when the grid does not mention it.
  std::vector<int> values(const std::string& key, std::vector<int> fallback) const;
  int value(const std::string& key, int fallback) const;
  /// Throws InvalidArgument if the grid mentions a key outside `allowed`.
  void restrict_keys(const std::vector<std::string>& allowed) const;

 private:
  std::string text_;
  std::string preset_;
  std::map<std::string, std::vector<int>> values_;
};

enum class InstanceStatus { match, mismatch, skipped };

std::string to_string(InstanceStatus s);

struct InstanceResult {
  Json params;
  InstanceStatus status = InstanceStatus::match;
  /// For a mismatch: expected and actual values plus the serialized input.
  /// For a skip: the reason.
  Json details;
};

struct VerificationReport {
  std::string theorem;
  std::string grid;
  std::string field;
  std::vector<InstanceResult> instances;

  std::size_t count(InstanceStatus s) const;
  bool ok() const { return count(InstanceStatus::mismatch) == 0; }
  /// Instances other than matches are always listed; matches only when
  /// `include_matches` is set.
  Json to_json(bool include_matches = false) const;
};

struct VerifyOptions {
  FieldSpec field = FieldSpec::rationals();
  HochsterOptions hochster{24, 0, std::int64_t{1} << 22};
};

/// Theorem identifiers accepted by run_verification, in a fixed order.
const std::vector<std::string>& theorem_ids();

/// One-line description of a theorem identifier's check.
std::string theorem_description(const std::string& id);

/// Runs the check for `id` over the grid. Unknown ids and grid keys throw
/// InvalidArgument.
VerificationReport run_verification(const std::string& id, const Grid& grid, const VerifyOptions& options = {});

}  // namespace hgalg

#endif  // HGALG_VERIFY_HPP
