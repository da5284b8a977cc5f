#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hfib/rational.hpp"

namespace hfib {

/// One point of a parameter grid, in the identity's declared order.
class ParamPoint {
 public:
  void set(std::string name, std::int64_t value);
  std::int64_t operator[](std::string_view name) const;
  const std::vector<std::pair<std::string, std::int64_t>>& values() const { return values_; }
  std::string str() const;  // "n=3, m=1"

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  std::vector<std::pair<std::string, std::int64_t>> values_;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

enum class Scale { Small, Default, Large };

std::optional<Scale> parse_scale(std::string_view text);
std::string_view to_string(Scale scale);

/// Largest index n swept at each scale.
std::int64_t scale_index_limit(Scale scale);

/// Cap applied to auxiliary parameters (m, r, s, i, j) at every scale.
inline constexpr std::int64_t kAuxCap = 6;

/// Declared domain of one parameter. Params are swept in declaration order;
/// the bounds of a later parameter may depend on earlier ones.
struct ParamSpec {
  enum class Kind { Index, Aux };

  std::string name;
  Kind kind = Kind::Index;
  std::int64_t min_value = 0;  // hard precondition: value >= min_value
  /// Optional coupled upper bound computed from earlier params, e.g. i <= n.
  std::function<std::int64_t(const ParamPoint&)> coupled_max;
  std::string coupled_rule;  // human-readable form of coupled_max
};

using Evaluator = std::function<Rational(const ParamPoint&)>;

struct Identity {
  std::string id;
  std::string description;
  std::string anchor;  // the statement as a formula
  std::vector<ParamSpec> params;
  Evaluator lhs;
  Evaluator rhs;
};

struct Failure {
  ParamPoint params;
  Rational lhs;
  Rational rhs;
};

struct VerificationReport {
  std::string id;
  std::size_t grid_size = 0;
  std::vector<Failure> failures;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Thrown for unknown identity ids and precondition-violating overrides.
class VerificationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RangeOverrides = std::map<std::string, IntRange, std::less<>>;

/// Every identity, sorted by id.
const std::vector<Identity>& registry();

/// Throws VerificationError for unknown ids.
const Identity& find_identity(std::string_view id);

/// Expands the grid for `identity`: defaults from `scale`, replaced by any
/// override, then clipped by coupled bounds. Lexicographic in param order.
std::vector<ParamPoint> build_grid(const Identity& identity, Scale scale,
                                   const RangeOverrides& overrides = {});

/// Exact comparison of both sides at every grid point.
VerificationReport verify(const Identity& identity, Scale scale = Scale::Default,
                          const RangeOverrides& overrides = {});
VerificationReport verify(std::string_view id, const RangeOverrides& overrides = {},
                          Scale scale = Scale::Default);

/// Runs the whole registry. Identities may be verified on worker threads;
/// the result order always matches registry().
std::vector<VerificationReport> verify_all(Scale scale);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace hfib
