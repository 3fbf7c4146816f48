#pragma once

// Bundled Phi polynomials. One record per line:
//   name=G2; lowest=0; coeffs=1,4,10,16,10,16,10,4,1
// coefficients ascending from X^lowest; '#' starts a comment line.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wfact/assembly.hpp"
#include "wfact/laurent.hpp"
#include "wfact/symmetric_series.hpp"

namespace wfact {

#ifdef WFACT_DEFAULT_FIXTURES
inline constexpr const char* default_fixture_path = WFACT_DEFAULT_FIXTURES;
#else
inline constexpr const char* default_fixture_path = "data/phi_fixtures.txt";
#endif

using FixtureSet = std::map<std::string, LaurentPoly>;

/// Group data needed to turn a Phi fixture back into a series.
struct FixtureGroup {
  const char* name;
  long order;
  unsigned ell;          ///< full reflection length of the identity
  unsigned hyperplanes;  ///< #A
};

inline constexpr FixtureGroup fixture_groups[] = {
    {"A1", 2, 2, 1},          {"A1^2", 4, 4, 2},       {"A2", 6, 4, 3},
    {"I2(5)", 10, 4, 5},      {"A1^3", 8, 6, 3},       {"G2", 12, 4, 6},
    {"H3", 120, 6, 15},       {"H4", 14400, 8, 60},    {"F4", 1152, 8, 24},
    {"E6", 51840, 12, 36},    {"E7", 2903040, 14, 63}, {"E8", 696729600, 16, 120},
};

inline std::optional<FixtureGroup> fixture_group(const std::string& name) {
  for (const auto& g : fixture_groups)
    if (name == g.name) return g;
  return std::nullopt;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline FixtureSet parse_fixtures(std::istream& in, const std::string& source = "<stream>") {
  FixtureSet out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto where = source + ":" + std::to_string(lineno);
    std::map<std::string, std::string> fields;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, ';')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw argument_error(where + ": expected key=value, got '" + trim(part) + "'");
      fields[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
    }
    if (!fields.count("name") || !fields.count("lowest") || !fields.count("coeffs"))
      throw argument_error(where + ": record needs name, lowest and coeffs");
    std::vector<Rational> coeffs;
    std::stringstream cs(fields["coeffs"]);
    std::string item;
    while (std::getline(cs, item, ',')) coeffs.push_back(parse_rational(trim(item)));
    int lowest = 0;
    try {
      lowest = std::stoi(fields["lowest"]);
    } catch (const std::exception&) {
      throw argument_error(where + ": bad lowest '" + fields["lowest"] + "'");
    }
    if (!out.emplace(fields["name"], LaurentPoly(lowest, std::move(coeffs))).second)
      throw argument_error(where + ": duplicate fixture '" + fields["name"] + "'");
  }
  return out;
}

inline FixtureSet load_fixtures(const std::string& path = default_fixture_path) {
  std::ifstream in(path);
  if (!in) throw argument_error("cannot open fixture file '" + path + "'");
  return parse_fixtures(in, path);
}

inline const LaurentPoly& fixture(const FixtureSet& set, const std::string& name) {
  auto it = set.find(name);
  if (it == set.end()) throw argument_error("unknown fixture '" + name + "'");
  return it->second;
}

/// The full series of the identity encoded by a fixture.
inline LaurentPoly fixture_series(const FixtureSet& set, const std::string& name) {
  auto g = fixture_group(name);
  if (!g) throw argument_error("no group data for fixture '" + name + "'");
  return assemble_from_phi(fixture(set, name), BigInt(g->order), g->ell, g->hyperplanes);
}

struct FixtureCheck {
  char group;  ///< 'a'..'e'
  std::string id;
  bool passed;
  std::string detail;
};

/// The bundled cross-checks between fixtures and computed series.
inline std::vector<FixtureCheck> run_fixture_checks(const FixtureSet& set) {
  std::vector<FixtureCheck> out;
  auto check = [&](char group, std::string id, auto&& body) {
    try {
      auto [ok, detail] = body();
      out.push_back({group, std::move(id), ok, std::move(detail)});
    } catch (const std::exception& e) {
      out.push_back({group, std::move(id), false, e.what()});
    }
  };
  auto id2 = identity_element(2);
  check('a', "G2-phi", [&] {
    GroupParams g(6, 6, 2);
    auto phi = extract_phi(series_full(g, id2), g.order(), static_cast<unsigned>(g.hyperplane_count())).phi;
    return std::pair{phi == fixture(set, "G2"), "computed " + to_string(phi)};
  });
  check('b', "table-A1", [&] {
    auto s = full_series_sn_by_type(IntegerPartition({1, 1}));
    return std::pair{s == fixture_series(set, "A1"), "computed " + to_string(s)};
  });
  check('b', "table-A2", [&] {
    auto s = full_series_sn_by_type(IntegerPartition({1, 1, 1}));
    return std::pair{s == fixture_series(set, "A2"), "computed " + to_string(s)};
  });
  check('b', "table-I2(5)", [&] {
    auto s = series_full(GroupParams(5, 5, 2), id2);
    return std::pair{s == fixture_series(set, "I2(5)"), "computed " + to_string(s)};
  });
  check('c', "table-A1^2", [&] {
    auto a1 = fixture_series(set, "A1");
    return std::pair{pow(a1, 2) == fixture_series(set, "A1^2"), std::string("square of A1 row")};
  });
  check('c', "table-A1^3", [&] {
    auto a1 = fixture_series(set, "A1");
    return std::pair{pow(a1, 3) == fixture_series(set, "A1^3"), std::string("cube of A1 row")};
  });
  check('d', "H3-lead", [&] {
    auto v = lead_from_phi(fixture(set, "H3"), BigInt(120), 6);
    return std::pair{v == 172800, "lead_from_phi = " + to_string(v)};
  });
  check('e', "H3-phi-at-1", [&] {
    auto v = fixture(set, "H3").at_one();
    return std::pair{v == 28800, "Phi(1) = " + to_string(v)};
  });
  return out;
}

}  // namespace wfact
