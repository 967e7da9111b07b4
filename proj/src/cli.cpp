#include "flc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <ostream>

#include "flc/errors.hpp"
#include "flc/gf.hpp"
#include "flc/lattice.hpp"
#include "flc/poset.hpp"
#include "flc/verify.hpp"

namespace flc {

namespace {

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long kDotMaxN = 14;
constexpr std::size_t kDotVertexBound = 1u << 12;
constexpr long kGfMaxTerms = 64;

const std::map<std::string, Family> kFamilies = {
    {"rank", Family::Rank},         {"cube", Family::Cube},         {"maxcube", Family::MaxCube},
    {"degree", Family::Degree},     {"indegree", Family::Indegree}, {"outdegree", Family::Outdegree},
};

const std::map<std::string, Method> kMethods = {
    {"census", Method::Census},
    {"recurrence", Method::Recurrence},
    {"closed", Method::Closed},
    {"gf", Method::Gf},
};

std::vector<std::string> keys(const auto& m) {
  std::vector<std::string> v;
  for (const auto& [k, _] : m) v.push_back(k);
  return v;
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open poset file: " + path);
  return read_poset(in);
}

struct TableArgs {
  std::string family;
  long from = 0;
  long to = 0;
  std::string method;
  std::string format;
  std::string poset_file;
};

void emit(std::ostream& out, const std::string& format, const std::vector<std::pair<long, IntPoly>>& rows) {
  if (format == "csv") {
    out << "n,k,coefficient\n";
    for (const auto& [n, p] : rows) {
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << n << ',' << k << ',' << p.coeffs()[k] << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& [n, p] : rows) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) {
      if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min()) {
        throw CapacityError("coefficient does not fit a JSON integer: " + c.str());
      }
      coeffs.push_back(static_cast<std::int64_t>(c));
    }
    nlohmann::ordered_json row;
    row["n"] = n;
    row["coeffs"] = std::move(coeffs);
    doc.push_back(std::move(row));
  }
  out << doc.dump() << '\n';
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Family family = kFamilies.at(a.family);
  const Method method = kMethods.at(a.method);
  if (a.from < 0 || a.from > a.to) throw UsageError("need 0 <= from <= to");
  if (family == Family::Outdegree && method != Method::Census) {
    throw UsageError("outdegree has no recurrence, closed form or generating function; use census");
  }
  std::vector<std::pair<long, IntPoly>> rows;
  if (!a.poset_file.empty()) {
    // A user poset is a single diagram; the range is checked but not iterated.
    if (method != Method::Census) throw UsageError("--poset-file supports the census method only");
    const Poset p = load_poset(a.poset_file);
    const auto census = take_census(filter_lattice(p, kCensusVertexBound));
    rows.emplace_back(static_cast<long>(p.size()), census_family(census, family));
  } else {
    for (long n = a.from; n <= a.to; ++n) {
      if (!method_covers(family, method, n)) {
        throw UsageError(std::string(method_name(method)) + " does not cover " + a.family + " at n = " +
                         std::to_string(n));
      }
    }
    std::vector<std::future<IntPoly>> jobs;
    for (long n = a.from; n <= a.to; ++n) {
      jobs.push_back(std::async(std::launch::async, [=] { return family_polynomial(family, method, n); }));
    }
    long n = a.from;
    for (auto& j : jobs) rows.emplace_back(n++, j.get());
  }
  emit(out, a.format, rows);
  return kExitOk;
}

int cmd_verify(long max_n, std::ostream& out) {
  if (max_n < 0) throw UsageError("max_n must be non-negative");
  const auto report = run_verification(static_cast<std::size_t>(max_n));
  report.print(out);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_dot(long n, const std::string& poset_file, std::ostream& out) {
  if (!poset_file.empty()) {
    write_dot(out, filter_lattice(load_poset(poset_file), kDotVertexBound), "filters");
    return kExitOk;
  }
  if (n < 0) throw UsageError("n must be non-negative");
  if (n > kDotMaxN) throw CapacityError("dot is limited to n <= " + std::to_string(kDotMaxN));
  write_dot(out, fibonacci_like_cube(static_cast<std::size_t>(n)), "phi" + std::to_string(n));
  return kExitOk;
}

int cmd_gf(const std::string& family, long terms, std::ostream& out) {
  static const std::map<std::string, RationalSeries (*)()> series = {
      {"rank", gf_R},      {"rank-even", gf_A}, {"rank-odd", gf_B},     {"cube", gf_Q},
      {"maxcube", gf_H},   {"degree", gf_D},    {"indegree", gf_Dm},
  };
  if (terms < 0) throw UsageError("terms must be non-negative");
  if (terms > kGfMaxTerms) throw CapacityError("gf is limited to " + std::to_string(kGfMaxTerms) + " terms");
  const auto coeffs = expand(series.at(family)(), static_cast<std::size_t>(terms));
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out << n << ':';
    if (coeffs[n].is_zero()) out << " 0";
    for (const auto& c : coeffs[n].coeffs()) out << ' ' << c;
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci-like cube polynomials: tables, verification, diagrams and series"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Coefficient table of one family over a range of n");
  table_cmd->add_option("family", table.family)->required()->check(CLI::IsMember(keys(kFamilies)));
  table_cmd->add_option("from", table.from)->required();
  table_cmd->add_option("to", table.to)->required();
  table_cmd->add_option("method", table.method)->required()->check(CLI::IsMember(keys(kMethods)));
  table_cmd->add_option("format", table.format)->required()->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--poset-file", table.poset_file, "Use the filter lattice of this poset instead");

  long max_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every method and identity");
  verify_cmd->add_option("max_n", max_n)->required();

  long dot_n = 0;
  std::string dot_poset;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export of the Hasse diagram");
  dot_cmd->add_option("n", dot_n)->required();
  dot_cmd->add_option("--poset-file", dot_poset, "Use the filter lattice of this poset instead");

  std::string gf_family;
  long gf_terms = 0;
  auto* gf_cmd = app.add_subcommand("gf", "Expand a generating function");
  gf_cmd->add_option("family", gf_family)
      ->required()
      ->check(CLI::IsMember({"rank", "rank-even", "rank-odd", "cube", "maxcube", "degree", "indegree"}));
  gf_cmd->add_option("terms", gf_terms)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*verify_cmd) return cmd_verify(max_n, out);
    if (*dot_cmd) return cmd_dot(dot_n, dot_poset, out);
    if (*gf_cmd) return cmd_gf(gf_family, gf_terms, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace flc
