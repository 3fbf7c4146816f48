#pragma once

// Exhaustive ground truth for small G(m,p,n). A dynamic program over states
// (product so far, subgroup generated so far) counts reflection sequences of
// every length with every product at once; sequences whose generated subgroup
// is the whole group are the full factorizations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "wfact/group.hpp"
#include "wfact/laurent.hpp"

namespace wfact {

inline constexpr std::size_t default_cap_w = 5000;
inline constexpr std::size_t max_subgroups = 20000;

/// The #W cap, overridable through WFACT_CAP_W.
inline std::size_t oracle_cap_w() {
  if (const char* env = std::getenv("WFACT_CAP_W")) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw argument_error(std::string("WFACT_CAP_W must be a positive integer, got '") + env + "'");
  }
  return default_cap_w;
}

struct ElementTable {
  GroupParams params;
  std::vector<Element> elements;            ///< sorted; index 0 is the identity
  std::vector<Reflection> reflections;      ///< in the order used by the DP
  std::vector<int> refl_indices;            ///< element index of each reflection
  std::vector<std::vector<int>> right_mult; ///< right_mult[t][x] = index of x * t

  std::size_t size() const { return elements.size(); }

  int index_of(const Element& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || !(*it == g)) throw argument_error("element " + to_string(g) + " not in " + params.label());
    return static_cast<int>(it - elements.begin());
  }
};

/// A set of element indices with O(1) rank queries.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool contains(int x) const { return (words_[word(x)] >> bit(x)) & 1u; }
  void insert(int x) { words_[word(x)] |= std::uint64_t{1} << bit(x); }

  /// Must be called after the last insert and before rank().
  void seal() {
    prefix_.assign(words_.size() + 1, 0);
    for (std::size_t w = 0; w < words_.size(); ++w)
      prefix_[w + 1] = prefix_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
  }

  std::size_t count() const { return prefix_.back(); }

  /// Number of members smaller than x.
  std::size_t rank(int x) const {
    auto mask = (std::uint64_t{1} << bit(x)) - 1;
    return prefix_[word(x)] + static_cast<std::size_t>(std::popcount(words_[word(x)] & mask));
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static std::size_t word(int x) { return static_cast<std::size_t>(x) / 64; }
  static unsigned bit(int x) { return static_cast<unsigned>(x) % 64; }

  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> prefix_;
};

struct SubgroupTable {
  std::vector<IndexSet> subgroups;      ///< index 0 is the trivial subgroup
  std::vector<std::vector<int>> join;   ///< join[s][t] = <s, reflection t>
  std::vector<bool> full;               ///< subgroup is the whole group
  int full_index = -1;
};

struct OracleTables {
  ElementTable elements;
  SubgroupTable subgroups;
};

namespace detail {

inline void enumerate_elements(const GroupParams& params, std::vector<Element>& out) {
  std::vector<int> perm(static_cast<std::size_t>(params.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> colors(static_cast<std::size_t>(params.n), 0);
  do {
    std::fill(colors.begin(), colors.end(), 0);
    while (true) {
      Element e{perm, colors};
      if (is_member(e, params)) out.push_back(std::move(e));
      // Odometer increment, last position fastest, to keep the output sorted.
      int pos = params.n - 1;
      while (pos >= 0 && ++colors[static_cast<std::size_t>(pos)] == params.m) colors[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Closure of `seed` (a subgroup or {identity}) under right multiplication by
/// the given reflections.
inline IndexSet close_under(const ElementTable& table, const std::vector<int>& seed, const std::vector<int>& gens) {
  IndexSet set(table.size());
  std::vector<int> stack;
  for (int x : seed)
    if (!set.contains(x)) {
      set.insert(x);
      stack.push_back(x);
    }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int t : gens) {
      int y = table.right_mult[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)];
      if (!set.contains(y)) {
        set.insert(y);
        stack.push_back(y);
      }
    }
  }
  set.seal();
  return set;
}

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : w) h = (h ^ std::hash<std::uint64_t>{}(v)) * 1099511628211ull;
    return h;
  }
};

}  // namespace detail

/// Element list and reflection right-multiplication tables. `order` fixes the
/// reflection enumeration; it defaults to reflections(params).
inline ElementTable build_element_table(const GroupParams& params, std::vector<Reflection> order = {}) {
  params.validate();
  const auto cap = oracle_cap_w();
  if (params.order() > BigInt(static_cast<unsigned long>(cap)))
    throw capability_error("oracle: #W = " + params.order().get_str() + " for " + params.label() +
                           " exceeds the cap #W <= " + std::to_string(cap) + " (set WFACT_CAP_W to change it)");
  ElementTable table;
  table.params = params;
  detail::enumerate_elements(params, table.elements);
  table.reflections = order.empty() ? reflections(params) : std::move(order);
  for (const auto& t : table.reflections) {
    Element te = to_element(t, params);
    table.refl_indices.push_back(table.index_of(te));
    std::vector<int> row(table.size());
    for (std::size_t x = 0; x < table.size(); ++x) row[x] = table.index_of(multiply(table.elements[x], te, params));
    table.right_mult.push_back(std::move(row));
  }
  return table;
}

/// Size of the subgroup generated by the given reflections (indices into
/// table.reflections).
inline std::size_t generated_order(const ElementTable& table, const std::vector<int>& refls) {
  return detail::close_under(table, {0}, refls).count();
}

/// All reflection subgroups, discovered breadth-first from the trivial one.
inline SubgroupTable build_subgroup_table(const ElementTable& table) {
  SubgroupTable st;
  std::unordered_map<std::vector<std::uint64_t>, int, detail::WordsHash> interned;
  // Reflections contained in each subgroup generate it.
  std::vector<std::vector<int>> gens;
  auto intern = [&](IndexSet set) {
    auto [it, fresh] = interned.emplace(set.words(), static_cast<int>(st.subgroups.size()));
    if (fresh) {
      if (st.subgroups.size() >= max_subgroups)
        throw capability_error("oracle: more than " + std::to_string(max_subgroups) + " reflection subgroups in " +
                               table.params.label());
      std::vector<int> inside;
      for (std::size_t t = 0; t < table.reflections.size(); ++t)
        if (set.contains(table.refl_indices[t])) inside.push_back(static_cast<int>(t));
      gens.push_back(std::move(inside));
      st.subgroups.push_back(std::move(set));
    }
    return it->second;
  };
  intern(detail::close_under(table, {0}, {}));
  const auto R = table.reflections.size();
  for (std::size_t s = 0; s < st.subgroups.size(); ++s) {
    std::vector<int> row(R);
    for (std::size_t t = 0; t < R; ++t) {
      if (st.subgroups[s].contains(table.refl_indices[t])) {
        row[t] = static_cast<int>(s);
        continue;
      }
      std::vector<int> seed;
      st.subgroups[s].for_each([&](int x) { seed.push_back(x); });
      std::vector<int> g = gens[s];
      g.push_back(static_cast<int>(t));
      row[t] = intern(detail::close_under(table, seed, g));
    }
    st.join.push_back(std::move(row));
  }
  for (std::size_t s = 0; s < st.subgroups.size(); ++s) {
    bool is_full = st.subgroups[s].count() == table.size();
    st.full.push_back(is_full);
    if (is_full) st.full_index = static_cast<int>(s);
  }
  return st;
}

inline OracleTables build_tables(const GroupParams& params, std::vector<Reflection> order = {}) {
  OracleTables t;
  t.elements = build_element_table(params, std::move(order));
  t.subgroups = build_subgroup_table(t.elements);
  return t;
}

enum class CountMode { all, full };

/// counts[N][x] for every length N <= n_max and every element index x.
struct FactorizationCounts {
  std::vector<std::vector<BigInt>> full;
  std::vector<std::vector<BigInt>> all;

  EgfPrefix prefix(int x, CountMode mode) const {
    const auto& src = mode == CountMode::full ? full : all;
    EgfPrefix out;
    out.reserve(src.size());
    for (const auto& row : src) out.emplace_back(row[static_cast<std::size_t>(x)]);
    return out;
  }
};

/// One sweep of the (element, subgroup) DP, recording full and all counts for
/// every target simultaneously.
inline FactorizationCounts count_all_targets(const OracleTables& tables, int n_max) {
  if (n_max < 0) throw argument_error("count_all_targets: n_max must be >= 0");
  const auto& et = tables.elements;
  const auto& st = tables.subgroups;
  const auto S = st.subgroups.size();
  const auto R = et.reflections.size();

  auto blank = [&] {
    std::vector<std::vector<BigInt>> v(S);
    for (std::size_t s = 0; s < S; ++s) v[s].assign(st.subgroups[s].count(), 0);
    return v;
  };
  auto state = blank();
  state[0][0] = 1;  // empty product, trivial subgroup

  FactorizationCounts out;
  auto record = [&] {
    std::vector<BigInt> full(et.size(), 0), all(et.size(), 0);
    for (std::size_t s = 0; s < S; ++s) {
      std::size_t local = 0;
      st.subgroups[s].for_each([&](int x) {
        const auto& c = state[s][local++];
        if (c == 0) return;
        all[static_cast<std::size_t>(x)] += c;
        if (st.full[s]) full[static_cast<std::size_t>(x)] += c;
      });
    }
    out.full.push_back(std::move(full));
    out.all.push_back(std::move(all));
  };
  record();

  for (int len = 1; len <= n_max; ++len) {
    auto next = blank();
    for (std::size_t s = 0; s < S; ++s) {
      std::size_t local = 0;
      st.subgroups[s].for_each([&](int x) {
        const auto& c = state[s][local++];
        if (c == 0) return;
        for (std::size_t t = 0; t < R; ++t) {
          auto target = static_cast<std::size_t>(st.join[s][t]);
          int y = et.right_mult[t][static_cast<std::size_t>(x)];
          next[target][st.subgroups[target].rank(y)] += c;
        }
      });
    }
    state = std::move(next);
    record();
  }
  return out;
}

/// Counts of all factorizations by a plain element DP, ignoring subgroups.
inline std::vector<std::vector<BigInt>> count_all_direct(const ElementTable& et, int n_max) {
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> cur(et.size(), 0);
  cur[0] = 1;
  out.push_back(cur);
  for (int len = 1; len <= n_max; ++len) {
    std::vector<BigInt> next(et.size(), 0);
    for (std::size_t x = 0; x < et.size(); ++x) {
      if (cur[x] == 0) continue;
      for (const auto& row : et.right_mult) next[static_cast<std::size_t>(row[x])] += cur[x];
    }
    cur = std::move(next);
    out.push_back(cur);
  }
  return out;
}

inline EgfPrefix count_factorizations(const GroupParams& params, const Element& g, int n_max, CountMode mode) {
  require_member(g, params);
  const auto tables = build_tables(params);
  const auto counts = count_all_targets(tables, n_max);
  return counts.prefix(tables.elements.index_of(g), mode);
}

/// Degree window used for reconstruction: [-#A, #R] for full series and
/// [-#R, #R] for the all series.
inline std::pair<int, int> oracle_window(const GroupParams& params, CountMode mode) {
  const auto R = static_cast<int>(params.reflection_count());
  const auto A = static_cast<int>(params.hyperplane_count());
  return {mode == CountMode::full ? -A : -R, R};
}

/// Length needed to fill the window plus two surplus checks.
inline int oracle_length(const GroupParams& params, CountMode mode) {
  auto [lo, hi] = oracle_window(params, mode);
  return hi - lo + 2;
}

inline LaurentPoly oracle_series_from(const FactorizationCounts& counts, const GroupParams& params, int x,
                                      CountMode mode) {
  auto [lo, hi] = oracle_window(params, mode);
  return laurent_from_egf(counts.prefix(x, mode), lo, hi);
}

inline LaurentPoly oracle_series(const GroupParams& params, const Element& g, CountMode mode) {
  require_member(g, params);
  const auto tables = build_tables(params);
  const auto counts = count_all_targets(tables, oracle_length(params, mode));
  return oracle_series_from(counts, params, tables.elements.index_of(g), mode);
}

/// Orbit of the colored basis vectors zeta^c e_j under <set>; [u; a] sends
/// (c, j) to (c + a_j, u(j)). Only meaningful for p = m.
inline bool acts_transitively_on_Em(const std::vector<Reflection>& set, const GroupParams& params) {
  params.validate();
  if (params.p != params.m) throw argument_error("acts_transitively_on_Em: requires p = m, got " + params.label());
  if (params.n == 1) return params.m == 1;
  const int m = params.m;
  const int total = m * params.n;
  std::vector<Element> gens;
  for (const auto& t : set) gens.push_back(to_element(t, params));
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int sym = stack.back();
    stack.pop_back();
    int c = sym / params.n;
    int j = sym % params.n;
    for (const auto& g : gens) {
      int c2 = (c + g.colors[static_cast<std::size_t>(j)]) % m;
      int j2 = g.perm[static_cast<std::size_t>(j)];
      int img = c2 * params.n + j2;
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = true;
        ++reached;
        stack.push_back(img);
      }
    }
  }
  return reached == total;
}

}  // namespace wfact
