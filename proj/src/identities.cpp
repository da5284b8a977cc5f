#include "hfib/identities.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace hfib {

void ParamPoint::set(std::string name, std::int64_t value) {
  for (auto& [key, v] : values_) {
    if (key == name) {
      v = value;
      return;
    }
  }
  values_.emplace_back(std::move(name), value);
}

std::int64_t ParamPoint::operator[](std::string_view name) const {
  for (const auto& [key, v] : values_) {
    if (key == name) return v;
  }
  throw std::out_of_range("no parameter named " + std::string(name));
}

std::string ParamPoint::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ", ";
    os << values_[i].first << '=' << values_[i].second;
  }
  return os.str();
}

std::optional<Scale> parse_scale(std::string_view text) {
  if (text == "small") return Scale::Small;
  if (text == "default") return Scale::Default;
  if (text == "large") return Scale::Large;
  return std::nullopt;
}

std::string_view to_string(Scale scale) {
  switch (scale) {
    case Scale::Small:
      return "small";
    case Scale::Default:
      return "default";
    case Scale::Large:
      return "large";
  }
  return "default";
}

std::int64_t scale_index_limit(Scale scale) {
  switch (scale) {
    case Scale::Small:
      return 20;
    case Scale::Default:
      return 100;
    case Scale::Large:
      return 300;
  }
  return 100;
}

const Identity& find_identity(std::string_view id) {
  const auto& all = registry();
  auto it = std::find_if(all.begin(), all.end(), [&](const Identity& x) { return x.id == id; });
  if (it == all.end()) throw VerificationError("unknown identity: " + std::string(id));
  return *it;
}

namespace {

void check_overrides(const Identity& identity, const RangeOverrides& overrides) {
  for (const auto& [name, range] : overrides) {
    auto spec = std::find_if(identity.params.begin(), identity.params.end(),
                             [&](const ParamSpec& p) { return p.name == name; });
    if (spec == identity.params.end()) {
      throw VerificationError(identity.id + " has no parameter '" + name + "'");
    }
    if (range.lo > range.hi) {
      throw VerificationError(identity.id + ": empty range for '" + name + "'");
    }
    if (range.lo < spec->min_value) {
      throw VerificationError(identity.id + ": override " + name + " in " +
                              std::to_string(range.lo) + ".." + std::to_string(range.hi) +
                              " violates " + name + " >= " + std::to_string(spec->min_value));
    }
  }
}

void expand(const Identity& identity, Scale scale, const RangeOverrides& overrides,
            std::size_t depth, ParamPoint& point, std::vector<ParamPoint>& out) {
  if (depth == identity.params.size()) {
    out.push_back(point);
    return;
  }
  const ParamSpec& spec = identity.params[depth];
  std::int64_t lo = spec.min_value;
  std::int64_t hi = spec.kind == ParamSpec::Kind::Index ? scale_index_limit(scale) : kAuxCap;
  if (auto it = overrides.find(spec.name); it != overrides.end()) {
    lo = it->second.lo;
    hi = it->second.hi;
  }
  if (spec.coupled_max) hi = std::min(hi, spec.coupled_max(point));
  for (std::int64_t v = lo; v <= hi; ++v) {
    point.set(spec.name, v);
    expand(identity, scale, overrides, depth + 1, point, out);
  }
}

}  // namespace

std::vector<ParamPoint> build_grid(const Identity& identity, Scale scale,
                                   const RangeOverrides& overrides) {
  check_overrides(identity, overrides);
  std::vector<ParamPoint> grid;
  ParamPoint point;
  expand(identity, scale, overrides, 0, point, grid);
  return grid;
}

VerificationReport verify(const Identity& identity, Scale scale, const RangeOverrides& overrides) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = identity.id;
  const std::vector<ParamPoint> grid = build_grid(identity, scale, overrides);
  report.grid_size = grid.size();
  for (const ParamPoint& point : grid) {
    Rational lhs = identity.lhs(point);
    Rational rhs = identity.rhs(point);
    if (lhs != rhs) report.failures.push_back({point, std::move(lhs), std::move(rhs)});
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport verify(std::string_view id, const RangeOverrides& overrides, Scale scale) {
  return verify(find_identity(id), scale, overrides);
}

std::vector<VerificationReport> verify_all(Scale scale) {
  const auto& all = registry();
  std::vector<VerificationReport> reports(all.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) reports[i] = verify(all[i], scale);
  };
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  if (threads == 1) {
    worker();
    return reports;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  return reports;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : report.failures) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : f.params.values()) params[name] = value;
    failures.push_back({{"params", params}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}});
  }
  return {{"id", report.id},
          {"grid_size", report.grid_size},
          {"failures", failures},
          {"elapsed_ms", report.elapsed.count()}};
}

}  // namespace hfib
