// zagreb: command-line front end for the Zagreb indices workbench.
//
// Exit codes: 0 = result matches the theoretical prediction (or there is no
// prediction to check), 1 = usage or I/O error, 2 = surprise.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zagreb/enumeration.hpp"
#include "zagreb/families.hpp"
#include "zagreb/intervals.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/io.hpp"

namespace {

using namespace zagreb;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kSurprise = 2;

std::vector<std::uint64_t> parse_csv(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t used = 0;
    unsigned long long value = std::stoull(item, &used);
    if (used != item.size() || item[0] == '-') throw std::invalid_argument("bad entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_quad(const DegreeQuad& q) {
  return std::to_string(q.x) + " " + std::to_string(q.y) + " " + std::to_string(q.u) + " " + std::to_string(q.v);
}

void emit(const Report& report) { std::cout << to_text(report); }

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  std::string file;
  std::string format;
};

int run_compute(const ComputeArgs& args) {
  GraphFormat format = args.format.empty() ? format_for_path(args.file) : parse_format(args.format);
  auto graphs = parse_graphs(read_file(args.file), format);
  Report report;
  for (const Graph& g : graphs) report.sections.push_back(describe_graph(g));
  emit(report);
  return kOk;
}

// -------------------------------------------------------------- construct

struct ConstructArgs {
  std::uint64_t x = 0, y = 0, z = 0, w = 0;
  bool solve = false;
  std::string out;
  std::string format = "edgelist";
};

int run_construct(const ConstructArgs& args) {
  Report report;
  FamilyParams params;
  if (args.solve) {
    if (args.y == 0 || args.z == 0) throw CLI::ValidationError("--solve needs --y and --z");
    try {
      params = solve_params(args.y, args.z);
    } catch (const std::logic_error& e) {
      std::cerr << "surprise: " << e.what() << "\n";
      return kSurprise;
    }
    auto& sol = report.add_section("solution");
    sol.add("x", std::to_string(params.x));
    sol.add("w", std::to_string(params.w));
    emit(report);
    report.sections.clear();
  } else {
    if (args.x == 0 || args.y == 0 || args.z == 0 || args.w == 0) {
      throw CLI::ValidationError("construct needs --x, --y, --z, --w (or --solve --y --z)");
    }
    params = {args.x, args.y, args.z, args.w};
  }
  validate(params);

  Graph g = build_gxyzw(params);
  auto& fam = report.add_section("family");
  fam.add("x", std::to_string(params.x));
  fam.add("y", std::to_string(params.y));
  fam.add("z", std::to_string(params.z));
  fam.add("w", std::to_string(params.w));
  fam.add("degree_collision", yes_no(degree_collision(params)));
  fam.add("defect_polynomial", to_string(family_defect_polynomial(params)));
  report.sections.push_back(describe_graph(g));
  if (!args.out.empty()) {
    write_file(args.out, write_graph(g, parse_format(args.format)));
    fam.add("written", args.out);
  }
  emit(report);
  if (args.solve && report.sections.back().value("verdict") != "Equal") return kSurprise;
  return kOk;
}

// ------------------------------------------------------------------- scan

struct ScanArgs {
  std::optional<std::uint64_t> a, p;
  std::string kind;
  std::string set;
};

int run_scan(const ScanArgs& args) {
  Report report;
  auto& s = report.add_section("scan");
  s.add("kind", args.kind);

  if (args.kind == "fsign") {
    std::vector<std::uint64_t> degrees;
    if (!args.set.empty()) {
      degrees = parse_csv(args.set);
    } else {
      if (!args.a || !args.p) throw CLI::ValidationError("fsign needs --set or both --a and --p");
      for (std::uint64_t d = *args.a; d <= *args.a + *args.p; ++d) degrees.push_back(d);
    }
    std::string listed;
    for (auto d : degrees) listed += (listed.empty() ? "" : ",") + std::to_string(d);
    s.add("set", listed);
    auto witness = scan_f_sign(degrees);
    s.add("negative_found", yes_no(witness.has_value()));
    if (witness) {
      s.add("witness", join_quad(witness->quad));
      s.add("f", to_string(witness->value));
    }
    emit(report);
    return witness ? kSurprise : kOk;
  }

  if (!args.a || !args.p) throw CLI::ValidationError(args.kind + " scan needs --a and --p");
  std::uint64_t a = *args.a;
  std::uint64_t p = *args.p;
  if (a == 0) throw CLI::ValidationError("--a must be >= 1");
  s.add("a", std::to_string(a));
  s.add("p", std::to_string(p));
  s.add("good", yes_no(is_good_interval(a, p)));

  CollisionReport found;
  std::optional<std::vector<DegreeQuad>> predicted;
  bool above_threshold = IntervalSpec{a, p}.meets_threshold();
  if (args.kind == "product") {
    found = find_product_collisions(a, p);
    if (above_threshold) predicted = std::vector<DegreeQuad>{};
    if (a == 1 && p == 3) predicted = std::vector<DegreeQuad>{{1, 4, 2, 2}};
  } else if (args.kind == "harmonic") {
    found = find_harmonic_collisions(a, p);
    if (above_threshold) predicted = predicted_harmonic_collisions(a, p);
  } else {
    throw CLI::ValidationError("--kind must be product, harmonic or fsign");
  }

  s.add("count", std::to_string(found.tuples.size()));
  for (const auto& q : found.tuples) s.add("tuple", join_quad(q));
  if (!predicted) {
    s.add("prediction", "none");
    emit(report);
    return kOk;
  }
  bool matches = *predicted == found.tuples;
  s.add("prediction", predicted->empty() ? "empty" : "singleton");
  s.add("matches_prediction", yes_no(matches));
  emit(report);
  return matches ? kOk : kSurprise;
}

// -------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::size_t n = 0;
  std::optional<std::size_t> min_deg, max_deg;
  bool connected = false;
  bool dedup = false;
  std::string survey_interval;
  bool counts_only = false;
};

int run_enumerate(const EnumerateArgs& args) {
  EnumerationSpec spec;
  spec.n = args.n;
  spec.connected_only = args.connected;
  spec.dedup = args.dedup ? Dedup::CanonicalForm : Dedup::None;
  std::optional<IntervalSpec> interval;
  if (!args.survey_interval.empty()) {
    auto ap = parse_csv(args.survey_interval);
    if (ap.size() != 2) throw CLI::ValidationError("--survey-interval takes a,p");
    interval = IntervalSpec{ap[0], ap[1]};
  }
  std::size_t top = args.n == 0 ? 0 : args.n - 1;
  spec.min_degree = args.min_deg.value_or(interval ? interval->a : 0);
  spec.max_degree = args.max_deg.value_or(interval ? std::min<std::size_t>(interval->upper(), top) : top);
  spec.validate();

  Report report;
  auto& head = report.add_section("enumeration");
  head.add("n", std::to_string(spec.n));
  head.add("min_degree", std::to_string(spec.min_degree));
  head.add("max_degree", std::to_string(spec.max_degree));
  head.add("connected", yes_no(spec.connected_only));
  head.add("dedup", yes_no(spec.dedup == Dedup::CanonicalForm));

  if (!interval && spec.min_degree == 0) {
    auto masks = enumerate_masks(spec);
    head.add("count", std::to_string(masks.size()));
    if (!args.counts_only) {
      for (auto mask : masks) head.add("graph", encode_graph6(graph_from_mask(spec.n, mask)));
    }
    emit(report);
    return kOk;
  }

  if (interval) head.add("survey_interval", std::to_string(interval->a) + " " + std::to_string(interval->upper()));
  auto rows = survey_equality(spec, interval);
  std::size_t equal = 0;
  std::size_t disagreements = 0;
  for (const auto& row : rows) {
    equal += row.verdict == Verdict::Equal;
    disagreements += !row.agreement;
  }
  head.add("count", std::to_string(rows.size()));
  head.add("equality_holders", std::to_string(equal));
  head.add("disagreements", std::to_string(disagreements));
  if (!args.counts_only) {
    for (const auto& row : rows) {
      head.add("row", encode_graph6(row.graph()) + " " + to_string(row.verdict) + " " +
                          (row.structure ? to_string(*row.structure) : "none") + " " + yes_no(row.agreement));
    }
  }
  emit(report);
  return disagreements == 0 ? kOk : kSurprise;
}

// ---------------------------------------------------------------- catalog

struct CatalogArgs {
  std::string family;
  std::string params;
  std::string out;
  std::string format = "edgelist";
};

int run_catalog(const CatalogArgs& args) {
  CatalogEntry entry = catalog_entry(args.family, parse_csv(args.params));
  Graph g = catalog_generate(entry);
  Report report;
  auto& cat = report.add_section("catalog");
  cat.add("family", entry.name);
  cat.add("params", args.params);
  cat.add("expected_verdict", to_string(entry.expected_verdict));
  ReportSection graph = describe_graph(g);
  bool matches = graph.value("verdict") == to_string(entry.expected_verdict);
  cat.add("matches_expected", yes_no(matches));
  if (!args.out.empty()) {
    write_file(args.out, write_graph(g, parse_format(args.format)));
    cat.add("written", args.out);
  }
  report.sections.push_back(std::move(graph));
  emit(report);
  return matches ? kOk : kSurprise;
}

// -------------------------------------------------------- counterexamples

int run_counterexamples(std::size_t n_max) {
  auto found = counterexample_search(n_max);
  Report report;
  auto& s = report.add_section("counterexamples");
  s.add("n_max", std::to_string(n_max));
  s.add("count", std::to_string(found.size()));
  bool expected_shape = true;
  for (const Graph& g : found) {
    ZagrebReport z = compare(g);
    auto degrees = degree_set(g);
    expected_shape = expected_shape && degrees.back() >= 5 && degrees.size() >= 3;
    s.add("graph", encode_graph6(g) + " " + to_string(z.first_ratio()) + " " + to_string(z.second_ratio()));
  }
  if (n_max <= 5) expected_shape = expected_shape && found.empty();
  s.add("matches_prediction", yes_no(expected_shape));
  emit(report);
  return expected_shape ? kOk : kSurprise;
}

// ------------------------------------------------------------------ probe

struct ProbeArgs {
  std::uint64_t a = 0, p = 0;
  std::size_t n_max = 7;
};

int run_probe(const ProbeArgs& args) {
  if (args.a == 0) throw CLI::ValidationError("--a must be >= 1");
  if (args.n_max > kMaxEnumerationOrder) throw CLI::ValidationError("--n-max is capped at 8");
  Report report;
  auto& s = report.add_section("probe");
  s.add("interval", std::to_string(args.a) + " " + std::to_string(args.a + args.p));
  s.add("good", yes_no(is_good_interval(args.a, args.p)));
  std::size_t found = 0;
  for (std::size_t n = 2; n <= args.n_max; ++n) {
    if (args.a > n - 1) continue;
    EnumerationSpec spec{n, args.a, std::min<std::size_t>(args.a + args.p, n - 1), true, Dedup::CanonicalForm};
    for_each_graph(spec, [&](const Graph& g) {
      if (compare(g).verdict != Verdict::Equal) return;
      auto rc = classify_regularity(g);
      if (rc.kind == RegularityClass::Kind::Regular || rc.kind == RegularityClass::Kind::BiregularClass1) return;
      ++found;
      s.add("graph", encode_graph6(g) + " " + to_string(rc));
    });
  }
  s.add("count", std::to_string(found));
  emit(report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Zagreb indices workbench"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Report Zagreb data for graphs in a file");
  compute->add_option("file", compute_args.file, "edge list or graph6 file")->required();
  compute->add_option("--format", compute_args.format, "edgelist|graph6 (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build G(x,y,z,w)");
  construct->add_option("--x", construct_args.x)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  construct->add_option("--y", construct_args.y)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  construct->add_option("--z", construct_args.z)->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000000}));
  construct->add_option("--w", construct_args.w)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  construct->add_flag("--solve", construct_args.solve, "solve for x and w from y and z");
  construct->add_option("--out", construct_args.out, "write the graph to this file");
  construct->add_option("--format", construct_args.format)->check(CLI::IsMember({"edgelist", "graph6"}));

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Exhaustive collision / sign scans over [a, a+p]");
  scan->add_option("--a", scan_args.a);
  scan->add_option("--p", scan_args.p);
  scan->add_option("--kind", scan_args.kind)->required()->check(CLI::IsMember({"product", "harmonic", "fsign"}));
  scan->add_option("--set", scan_args.set, "comma-separated degree set (fsign)");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate small graphs, optionally surveying equality");
  enumerate->add_option("--n", enum_args.n)->required();
  enumerate->add_option("--min-deg", enum_args.min_deg);
  enumerate->add_option("--max-deg", enum_args.max_deg);
  enumerate->add_flag("--connected", enum_args.connected);
  enumerate->add_flag("--dedup", enum_args.dedup, "one graph per isomorphism class");
  enumerate->add_option("--survey-interval", enum_args.survey_interval, "a,p");
  enumerate->add_flag("--counts-only", enum_args.counts_only);

  CatalogArgs catalog_args;
  auto* catalog = app.add_subcommand("catalog", "Generate a known equality/violation family");
  catalog->add_option("--family", catalog_args.family)->required()->check(CLI::IsMember(catalog_families()));
  catalog->add_option("--params", catalog_args.params)->required();
  catalog->add_option("--out", catalog_args.out);
  catalog->add_option("--format", catalog_args.format)->check(CLI::IsMember({"edgelist", "graph6"}));

  std::size_t n_max = 0;
  auto* counter = app.add_subcommand("counterexamples", "Connected graphs with M1/n > M2/m");
  counter->add_option("--n-max", n_max)->required();

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "List small equality holders that are neither regular nor class-1 biregular");
  probe->add_option("--a", probe_args.a)->required();
  probe->add_option("--p", probe_args.p)->required();
  probe->add_option("--n-max", probe_args.n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return run_compute(compute_args);
    if (*construct) return run_construct(construct_args);
    if (*scan) return run_scan(scan_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*catalog) return run_catalog(catalog_args);
    if (*counter) return run_counterexamples(n_max);
    if (*probe) return run_probe(probe_args);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    // Broken postconditions in construction or solving.
    std::cerr << "surprise: " << e.what() << "\n";
    return kSurprise;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
