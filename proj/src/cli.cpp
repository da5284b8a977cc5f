#include "hfib/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfib/circulant.hpp"
#include "hfib/fib_harmonic.hpp"
#include "hfib/identities.hpp"
#include "hfib/sequences.hpp"

namespace hfib::cli {

namespace {

constexpr const char* kZetaReferenceDigits = "3598856662";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plain-text table with left-aligned, space-padded columns.
void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

// ---- seq -------------------------------------------------------------------

struct SeqArgs {
  std::string name;
  std::int64_t n = 0;
  std::optional<std::int64_t> r;
};

int cmd_seq(const SeqArgs& args, OutputFormat format, std::ostream& out) {
  static const std::map<std::string, bool> kNeedsOrder = {
      {"fib", false},         {"lucas", false},           {"harmonic", false},
      {"hyperharmonic", true}, {"fibharmonic", false},    {"hyperfibharmonic", true},
      {"hyperfib", true}};
  auto it = kNeedsOrder.find(args.name);
  if (it == kNeedsOrder.end()) throw UsageError("unknown sequence '" + args.name + "'");
  if (it->second && !args.r) throw UsageError("sequence '" + args.name + "' requires --r");
  if (args.n < 0) throw UsageError("n must be non-negative");
  if (args.r && *args.r < 0) throw UsageError("r must be non-negative");
  const std::int64_t r = args.r.value_or(0);

  auto value = [&](std::int64_t k) -> std::string {
    const std::string& name = args.name;
    if (name == "fib") return fibonacci(k).get_str();
    if (name == "lucas") return lucas(k).get_str();
    if (name == "harmonic") return harmonic(k).str();
    if (name == "hyperharmonic") return hyperharmonic(k, r).str();
    if (name == "fibharmonic") return fib_harmonic(k).str();
    if (name == "hyperfibharmonic") return hyper_fib_harmonic(k, r).str();
    return hyperfibonacci(k, r).get_str();
  };

  if (format == OutputFormat::Json) {
    nlohmann::json j;
    j["sequence"] = args.name;
    if (it->second) j["r"] = r;
    j["values"] = nlohmann::json::array();
    for (std::int64_t k = 0; k <= args.n; ++k) j["values"].push_back({{"n", k}, {"value", value(k)}});
    out << j.dump(2) << '\n';
  } else if (format == OutputFormat::Csv) {
    out << "n,value\n";
    for (std::int64_t k = 0; k <= args.n; ++k) out << k << ',' << value(k) << '\n';
  } else {
    for (std::int64_t k = 0; k <= args.n; ++k) out << k << ": " << value(k) << '\n';
  }
  return kExitOk;
}

// ---- table -----------------------------------------------------------------

int cmd_table(OutputFormat format, std::ostream& out) {
  constexpr std::int64_t kMaxN = 5;
  constexpr std::int64_t kMaxR = 4;
  if (format == OutputFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t r = 1; r <= kMaxR; ++r) {
      nlohmann::json values = nlohmann::json::array();
      for (std::int64_t n = 1; n <= kMaxN; ++n) values.push_back(hyper_fib_harmonic(n, r).str());
      rows.push_back({{"r", r}, {"values", values}});
    }
    out << nlohmann::json{{"n", {1, 2, 3, 4, 5}}, {"rows", rows}}.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{format == OutputFormat::Csv ? "r" : "r\\n"};
  for (std::int64_t n = 1; n <= kMaxN; ++n) header.push_back(std::to_string(n));
  grid.push_back(header);
  for (std::int64_t r = 1; r <= kMaxR; ++r) {
    std::vector<std::string> row{std::to_string(r)};
    for (std::int64_t n = 1; n <= kMaxN; ++n) row.push_back(hyper_fib_harmonic(n, r).str());
    grid.push_back(row);
  }
  if (format == OutputFormat::Csv) print_csv(out, grid);
  else print_aligned(out, grid);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

RangeOverrides parse_ranges(const std::vector<std::string>& specs) {
  RangeOverrides overrides;
  for (const std::string& spec : specs) {
    // name=lo..hi
    const auto eq = spec.find('=');
    const auto dots = spec.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
      throw UsageError("malformed --range '" + spec + "', expected name=lo..hi");
    }
    try {
      std::size_t used = 0;
      const std::string lo_text = spec.substr(eq + 1, dots - eq - 1);
      const std::string hi_text = spec.substr(dots + 2);
      IntRange range{std::stoll(lo_text, &used), 0};
      if (used != lo_text.size()) throw std::invalid_argument(lo_text);
      range.hi = std::stoll(hi_text, &used);
      if (used != hi_text.size()) throw std::invalid_argument(hi_text);
      overrides[spec.substr(0, eq)] = range;
    } catch (const std::logic_error&) {
      throw UsageError("malformed --range '" + spec + "', expected name=lo..hi");
    }
  }
  return overrides;
}

int cmd_verify(const std::optional<std::string>& id, Scale scale,
               const std::vector<std::string>& range_specs, OutputFormat format,
               std::ostream& out) {
  const RangeOverrides overrides = parse_ranges(range_specs);
  if (!overrides.empty() && !id) throw UsageError("--range requires --id");
  std::vector<VerificationReport> reports;
  try {
    if (id) reports.push_back(verify(*id, overrides, scale));
    else reports = verify_all(scale);
  } catch (const VerificationError& e) {
    throw UsageError(e.what());
  }
  const bool all_passed =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  if (format == OutputFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& report : reports) j.push_back(to_json(report));
    out << j.dump(2) << '\n';
  } else if (format == OutputFormat::Csv) {
    out << "id,grid_size,failures,elapsed_ms\n";
    for (const auto& report : reports) {
      out << report.id << ',' << report.grid_size << ',' << report.failures.size() << ','
          << std::fixed << std::setprecision(3) << report.elapsed.count() << '\n';
    }
  } else {
    std::vector<std::vector<std::string>> rows{{"id", "status", "grid", "failures", "ms"}};
    for (const auto& report : reports) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(1) << report.elapsed.count();
      rows.push_back({report.id, report.passed() ? "PASS" : "FAIL", std::to_string(report.grid_size),
                      std::to_string(report.failures.size()), ms.str()});
    }
    print_aligned(out, rows);
    for (const auto& report : reports) {
      for (const auto& f : report.failures) {
        out << report.id << " failed at " << f.params.str() << ": lhs=" << f.lhs.str()
            << " rhs=" << f.rhs.str() << '\n';
      }
    }
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

// ---- norm ------------------------------------------------------------------

int cmd_norm(const std::string& kind, std::optional<std::int64_t> n, std::optional<std::int64_t> r,
             OutputFormat format, std::ostream& out) {
  if (!n) throw UsageError("norm requires --n");
  if (*n < 1) throw UsageError("--n must be >= 1");
  Circulant c;
  if (kind == "c1") {
    c = build_c1(*n);
  } else if (kind == "c2") {
    if (!r || *r < 1) throw UsageError("norm c2 requires --r >= 1");
    c = build_c2(*n, *r);
  } else {
    throw UsageError("unknown circulant kind '" + kind + "', expected c1 or c2");
  }
  const NormResult result = norm_report(c);
  const nlohmann::json j = to_json(result);

  if (format == OutputFormat::Json) {
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, value] : j.items()) {
      rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
    }
    if (format == OutputFormat::Csv) {
      std::vector<std::string> header;
      std::vector<std::string> values;
      for (auto& row : rows) {
        header.push_back(row[0]);
        values.push_back(row[1]);
      }
      print_csv(out, {header, values});
    } else {
      for (auto& row : rows) row[0] += ':';
      print_aligned(out, rows);
    }
  }
  return result.ok() ? kExitOk : kExitCheckFailed;
}

// ---- zeta ------------------------------------------------------------------

int cmd_zeta(std::int64_t n_max, int digits, OutputFormat format, std::ostream& out,
             std::ostream& err) {
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  if (digits < 1 || digits > 50) throw UsageError("--digits must be in 1..50");

  std::vector<std::vector<std::string>> rows{{"n", "exact", "decimal"}};
  Rational last;
  for (std::int64_t n : zeta_schedule(n_max)) {
    last = zeta_f1_partial(n);
    rows.push_back({std::to_string(n), last.str(), last.to_decimal(static_cast<unsigned>(digits))});
  }
  const std::string reference = last.to_decimal(10);
  const bool matches = reference == std::string("3.") + kZetaReferenceDigits;

  if (format == OutputFormat::Json) {
    nlohmann::json j;
    j["digits"] = digits;
    j["rows"] = nlohmann::json::array();
    for (std::size_t i = 1; i < rows.size(); ++i) {
      j["rows"].push_back({{"n", std::stoll(rows[i][0])}, {"exact", rows[i][1]}, {"decimal", rows[i][2]}});
    }
    j["first_10_decimals"] = reference.substr(reference.find('.') + 1);
    j["matches_reference"] = matches;
    out << j.dump(2) << '\n';
  } else if (format == OutputFormat::Csv) {
    print_csv(out, rows);
    err << "first 10 decimals " << (matches ? "match " : "do not match ") << kZetaReferenceDigits
        << '\n';
  } else {
    print_aligned(out, rows);
    out << "first 10 decimals " << reference.substr(reference.find('.') + 1)
        << (matches ? " match " : " do not match ") << kZetaReferenceDigits << '\n';
  }
  return kExitOk;
}

}  // namespace

std::vector<std::int64_t> zeta_schedule(std::int64_t n_max) {
  std::vector<std::int64_t> points;
  for (std::int64_t decade = 1; decade <= n_max; decade *= 10) {
    for (std::int64_t step : {1, 2, 5}) {
      if (decade * step < n_max) points.push_back(decade * step);
    }
    if (decade > n_max / 10) break;
  }
  points.push_back(n_max);
  return points;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact harmonic and hyperharmonic Fibonacci numbers", "hfib"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "Print a sequence for indices 0..n");
  seq->add_option("name", seq_args.name,
                  "fib | lucas | harmonic | hyperharmonic | fibharmonic | hyperfibharmonic | hyperfib")
      ->required();
  seq->add_option("n", seq_args.n, "Largest index")->required();
  seq->add_option("--r", seq_args.r, "Order (hyper* sequences)");

  auto* table = app.add_subcommand("table", "Hyperharmonic Fibonacci numbers, n = 1..5, r = 1..4");

  std::optional<std::string> verify_id;
  std::string scale_name = "default";
  std::vector<std::string> ranges;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities exactly over parameter grids");
  verify_cmd->add_option("--id", verify_id, "Identity key; all identities when omitted");
  verify_cmd->add_option("--scale", scale_name, "small | default | large")
      ->check(CLI::IsMember({"small", "default", "large"}));
  verify_cmd->add_option("--range", ranges, "Override a parameter range, e.g. n=1..40");

  std::string norm_kind;
  std::optional<std::int64_t> norm_n;
  std::optional<std::int64_t> norm_r;
  auto* norm = app.add_subcommand("norm", "Exact and numeric norms of the circulants C1, C2");
  norm->add_option("kind", norm_kind, "c1 | c2")->required();
  norm->add_option("--n", norm_n, "Matrix size");
  norm->add_option("--r", norm_r, "Order for c2");

  std::int64_t n_max = 100;
  int digits = 10;
  auto* zeta = app.add_subcommand("zeta", "Partial sums of reciprocal Fibonacci numbers");
  zeta->add_option("--n-max", n_max, "Largest n");
  zeta->add_option("--digits", digits, "Decimal places (truncated)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  const OutputFormat format = format_name == "json"  ? OutputFormat::Json
                              : format_name == "csv" ? OutputFormat::Csv
                                                     : OutputFormat::Plain;
  try {
    if (*seq) return cmd_seq(seq_args, format, out);
    if (*table) return cmd_table(format, out);
    if (*verify_cmd) return cmd_verify(verify_id, *parse_scale(scale_name), ranges, format, out);
    if (*norm) return cmd_norm(norm_kind, norm_n, norm_r, format, out);
    if (*zeta) return cmd_zeta(n_max, digits, format, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hfib::cli
