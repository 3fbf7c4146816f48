// wfact: series, oracle verification, Phi roots and fixture checks for G(m,p,n).
// JSON and CSV go to stdout or --out files; diagnostics go to stderr.
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 capability cap.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wfact/wfact.hpp"

namespace {

using namespace wfact;

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;
constexpr int exit_capability = 3;

struct ElementArgs {
  int m = 1, p = 1, n = 1;
  std::string cycles;
  std::string element;

  void add_to(CLI::App* cmd, bool element_required) {
    cmd->add_option("--m", m, "m in G(m,p,n)")->required();
    cmd->add_option("--p", p, "p in G(m,p,n), dividing m")->required();
    cmd->add_option("--n", n, "rank n")->required();
    auto* c = cmd->add_option("--cycles", cycles, "cycle form (len,color),...");
    auto* e = cmd->add_option("--element", element, "perm=[...];colors=[...] or cycles=[...]");
    c->excludes(e);
    if (element_required) cmd->callback([c, e] {
        if (c->count() == 0 && e->count() == 0) throw CLI::RequiredError("--cycles or --element");
      });
  }

  GroupParams params() const { return GroupParams(m, p, n); }
  bool has_element() const { return !cycles.empty() || !element.empty(); }

  Element parse(const GroupParams& g) const {
    if (!cycles.empty()) return parse_element("cycles=" + cycles, g);
    return parse_element(element, g);
  }
};

json phi_array(const LaurentPoly& phi) {
  json out = json::array();
  for (int k = 0; k <= phi.max_deg(); ++k) out.push_back(to_string(phi.coeff(k)));
  return out;
}

/// Reported, never asserted: sign pattern, unimodality, palindromicity, top degree.
json phi_observations(const LaurentPoly& phi, const GroupParams& g, unsigned ell) {
  bool positive = true;
  for (const auto& c : phi.coeffs()) positive = positive && c > 0;
  bool unimodal = true;
  bool descending = false;
  for (std::size_t i = 1; i < phi.coeffs().size(); ++i) {
    const auto& prev = phi.coeffs()[i - 1];
    const auto& cur = phi.coeffs()[i];
    if (cur < prev) descending = true;
    else if (cur > prev && descending) unimodal = false;
  }
  const auto expected = g.reflection_count() + g.hyperplane_count() - static_cast<std::int64_t>(ell);
  return {{"positive", positive},
          {"unimodal", unimodal},
          {"palindromic", phi.is_palindromic()},
          {"monic", phi.is_monic()},
          {"degree", phi.max_deg()},
          {"degree_expected", expected},
          {"degree_matches", phi.max_deg() == expected}};
}

int cmd_series(const ElementArgs& args, int egf_len) {
  const auto g = args.params();
  const auto elem = args.parse(g);
  const auto series = series_full(g, elem);
  const auto lowest = lowest_order(series);
  const auto ell = full_length(g, elem);
  const auto lead = lead_coeff(g, elem);
  const auto decomposition = extract_phi(series, g.order(), static_cast<unsigned>(g.hyperplane_count()));
  const int len = egf_len >= 0 ? egf_len : static_cast<int>(g.reflection_count() + g.hyperplane_count());
  json out = {{"group", g.label()},
              {"element", element_to_json(elem, g)},
              {"class", class_label(elem, g)},
              {"laurent", laurent_to_json(series)},
              {"laurent_text", to_string(series)},
              {"ell_full", ell},
              {"lead_coeff", to_string(lead)},
              {"series_lowest", {{"length", lowest.s}, {"coeff", to_string(lowest.c)}}},
              {"closed_forms_agree", lowest.s == ell && lowest.c == lead},
              {"phi", phi_array(decomposition.phi)},
              {"egf_prefix", egf_to_json(egf_prefix(series, static_cast<std::size_t>(len)))},
              {"window", {-g.hyperplane_count(), g.reflection_count()}},
              {"observations", phi_observations(decomposition.phi, g, decomposition.ell)}};
  std::cout << out.dump(2) << "\n";
  return exit_ok;
}

int cmd_oracle_verify(const ElementArgs& args, int max_len, bool corrupt) {
  const auto g = args.params();
  const auto tables = build_tables(g);
  const int len = max_len >= 0 ? max_len : oracle_length(g, CountMode::full);
  const auto counts = count_all_targets(tables, len);

  std::vector<int> targets;
  if (args.has_element()) {
    targets.push_back(tables.elements.index_of(args.parse(g)));
  } else {
    for (std::size_t x = 0; x < tables.elements.size(); ++x) targets.push_back(static_cast<int>(x));
  }
  // Deterministic order: by class label, then element.
  std::map<std::string, std::vector<int>> by_class;
  for (int x : targets) by_class[class_label(tables.elements.elements[static_cast<std::size_t>(x)], g)].push_back(x);

  json classes = json::array();
  json mismatch = nullptr;
  for (const auto& [label, members] : by_class) {
    auto series = series_full(g, tables.elements.elements[static_cast<std::size_t>(members.front())]);
    if (corrupt) series += LaurentPoly(1);
    const auto expected = egf_prefix(series, static_cast<std::size_t>(len));
    bool ok = true;
    for (int x : members) {
      const auto got = counts.prefix(x, CountMode::full);
      for (int N = 0; N <= len; ++N) {
        if (got[static_cast<std::size_t>(N)] == expected[static_cast<std::size_t>(N)]) continue;
        ok = false;
        if (mismatch.is_null())
          mismatch = {{"element", to_string(tables.elements.elements[static_cast<std::size_t>(x)])},
                      {"class", label},
                      {"length", N},
                      {"expected", to_string(expected[static_cast<std::size_t>(N)])},
                      {"got", to_string(got[static_cast<std::size_t>(N)])}};
      }
    }
    classes.push_back({{"class", label}, {"elements", members.size()}, {"agree", ok}});
  }
  json out = {{"group", g.label()},
              {"max_len", len},
              {"subgroups", tables.subgroups.subgroups.size()},
              {"elements_checked", targets.size()},
              {"classes", classes},
              {"agree", mismatch.is_null()}};
  if (!mismatch.is_null()) {
    out["first_mismatch"] = mismatch;
    std::cerr << "mismatch: element " << mismatch["element"].get<std::string>() << " length "
              << mismatch["length"].get<int>() << " expected " << mismatch["expected"].get<std::string>() << " got "
              << mismatch["got"].get<std::string>() << "\n";
  }
  std::cout << out.dump(2) << "\n";
  return mismatch.is_null() ? exit_ok : exit_verify;
}

struct RootSet {
  std::string label;
  LaurentPoly phi;
  RootResult roots;
};

double reciprocal_defect(const std::vector<std::complex<double>>& roots) {
  // For every root r, distance from 1/r to the nearest root.
  double worst = 0;
  for (const auto& r : roots) {
    if (std::abs(r) == 0) continue;
    auto inv = 1.0 / r;
    double best = INFINITY;
    for (const auto& s : roots) best = std::min(best, std::abs(s - inv) / std::max(1.0, std::abs(inv)));
    worst = std::max(worst, best);
  }
  return worst;
}

void write_svg(std::ostream& os, const std::vector<RootSet>& sets) {
  double extent = 1.2;
  for (const auto& s : sets)
    for (const auto& r : s.roots.roots) extent = std::max(extent, 1.1 * std::abs(r));
  const double scale = 380.0 / extent;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#ccc\"/>"
     << "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#ccc\"/>\n";
  os << "<circle cx=\"400\" cy=\"400\" r=\"" << scale << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 4\"/>\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    os << "<g fill=\"" << palette[i % std::size(palette)] << "\"><title>" << sets[i].label << "</title>\n";
    for (const auto& r : sets[i].roots.roots)
      os << "<circle cx=\"" << 400 + scale * r.real() << "\" cy=\"" << 400 - scale * r.imag() << "\" r=\"3\"/>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
}

int cmd_roots(const std::string& fixture_name, const std::string& phi_coeffs, const ElementArgs& args,
              bool group_given, int sn_sweep, const std::string& fixtures_path, const std::string& out_path) {
  std::vector<RootSet> sets;
  auto add = [&](std::string label, LaurentPoly phi) {
    RootSet rs{std::move(label), std::move(phi), {}};
    if (rs.phi.max_deg() >= 1) rs.roots = find_roots(rs.phi);
    sets.push_back(std::move(rs));
  };
  int sources = !fixture_name.empty() + !phi_coeffs.empty() + group_given + (sn_sweep > 0);
  if (sources != 1) throw argument_error("roots: give exactly one of --fixture, --phi-coeffs, a group element, --sn-sweep");

  if (!fixture_name.empty()) {
    add(fixture_name, fixture(load_fixtures(fixtures_path), fixture_name));
  } else if (!phi_coeffs.empty()) {
    std::vector<Rational> coeffs;
    std::stringstream ss(phi_coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(trim(item)));
    add("phi", LaurentPoly(0, std::move(coeffs)));
  } else if (group_given) {
    const auto g = args.params();
    const auto elem = args.parse(g);
    auto d = extract_phi(series_full(g, elem), g.order(), static_cast<unsigned>(g.hyperplane_count()));
    add(g.label() + " " + class_label(elem, g), d.phi);
  } else {
    // Phi of S_{2k} at the identity for 2k <= sn_sweep, through the recursion for the identity.
    for (int k = 1; 2 * k <= sn_sweep; ++k) {
      const int n = 2 * k;
      auto d = extract_phi(dyz_identity_series(n), factorial(static_cast<unsigned>(n)),
                           static_cast<unsigned>(n * (n - 1) / 2));
      add("S" + std::to_string(n), d.phi);
    }
  }

  std::ostringstream csv;
  csv << "label,re,im\n";
  csv.precision(17);
  for (const auto& s : sets)
    for (const auto& r : s.roots.roots) csv << s.label << "," << r.real() << "," << r.imag() << "\n";

  json summary = json::array();
  for (const auto& s : sets) {
    summary.push_back({{"label", s.label},
                       {"degree", s.phi.max_deg()},
                       {"roots", s.roots.roots.size()},
                       {"iterations", s.roots.iterations},
                       {"worst_backward_error", s.roots.worst_residual},
                       {"palindromic", s.phi.is_palindromic()},
                       {"reciprocal_defect", reciprocal_defect(s.roots.roots)}});
  }

  if (out_path.empty()) {
    std::cout << csv.str();
    std::cerr << summary.dump() << "\n";
    return exit_ok;
  }
  std::ofstream file(out_path);
  if (!file) throw argument_error("cannot write '" + out_path + "'");
  const bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
  if (svg) write_svg(file, sets);
  else file << csv.str();
  std::cout << json{{"out", out_path}, {"format", svg ? "svg" : "csv"}, {"sets", summary}}.dump(2) << "\n";
  return exit_ok;
}

int cmd_fixtures_check(const std::string& fixtures_path) {
  const auto set = load_fixtures(fixtures_path);
  const auto checks = run_fixture_checks(set);
  json list = json::array();
  std::map<char, bool> groups;
  bool all = true;
  for (const auto& c : checks) {
    list.push_back({{"group", std::string(1, c.group)}, {"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
    groups[c.group] = groups.count(c.group) ? groups[c.group] && c.passed : c.passed;
    all = all && c.passed;
    if (!c.passed) std::cerr << "fixture check failed: " << c.id << " (" << c.detail << ")\n";
  }
  json group_summary = json::object();
  for (auto [g, ok] : groups) group_summary[std::string(1, g)] = ok;
  std::cout << json{{"fixtures", fixtures_path}, {"checks", list}, {"groups", group_summary}, {"passed", all}}.dump(2)
            << "\n";
  return all ? exit_ok : exit_verify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full reflection factorization series for G(m,p,n)"};
  app.require_subcommand(1);
  std::string fixtures_path = default_fixture_path;
  app.add_option("--fixtures", fixtures_path, "fixture file")->capture_default_str();

  ElementArgs series_args;
  int egf_len = -1;
  auto* series = app.add_subcommand("series", "series, full length, lead coefficient and Phi of one element");
  series_args.add_to(series, true);
  series->add_option("--egf-len", egf_len, "last EGF index to print (default #R + #A)");

  ElementArgs verify_args;
  int max_len = -1;
  bool corrupt = false;
  auto* verify = app.add_subcommand("oracle-verify", "compare the closed-form series with exhaustive counts");
  verify_args.add_to(verify, false);
  verify->add_option("--max-len", max_len, "longest length compared (default #R + #A + 2)");
  verify->add_flag("--corrupt", corrupt, "test hook: perturb the closed-form series before comparing");

  ElementArgs root_args;
  std::string fixture_name, phi_coeffs, out_path;
  int sn_sweep = 0;
  auto* roots = app.add_subcommand("roots", "complex roots of a Phi polynomial as CSV or SVG");
  roots->add_option("--fixture", fixture_name, "fixture name, e.g. G2 or H3");
  roots->add_option("--phi-coeffs", phi_coeffs, "ascending coefficients c0,c1,...");
  roots->add_option("--m", root_args.m);
  roots->add_option("--p", root_args.p);
  auto* roots_n = roots->add_option("--n", root_args.n);
  roots->add_option("--cycles", root_args.cycles);
  roots->add_option("--element", root_args.element);
  roots->add_option("--sn-sweep", sn_sweep, "symmetric groups S_2, S_4, ... up to this size");
  roots->add_option("--out", out_path, "output .csv or .svg (default: CSV on stdout)");

  auto* fixtures = app.add_subcommand("fixtures-check", "verify bundled Phi fixtures against computed series");
  for (auto* cmd : {series, verify, roots, fixtures})
    cmd->add_option("--fixtures", fixtures_path, "fixture file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*series) return cmd_series(series_args, egf_len);
    if (*verify) return cmd_oracle_verify(verify_args, max_len, corrupt);
    if (*roots)
      return cmd_roots(fixture_name, phi_coeffs, root_args, roots_n->count() > 0, sn_sweep, fixtures_path, out_path);
    if (*fixtures) return cmd_fixtures_check(fixtures_path);
  } catch (const argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const capability_error& e) {
    std::cerr << "capability limit: " << e.what() << "\n";
    return exit_capability;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return exit_verify;
  }
  return exit_usage;
}
