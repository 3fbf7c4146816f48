#pragma once

// Combinatorial model of G(m,p,n): an element of G(m,1,n) is a pair [u; a] of
// a permutation u (stored as an image table) and colors a_k in Z/mZ, and
// G(m,p,n) is the subgroup of elements whose color sum is divisible by p.
// Indices are 0-based internally and 1-based in every textual form.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wfact/errors.hpp"
#include "wfact/laurent.hpp"
#include "wfact/numtheory.hpp"

namespace wfact {

struct GroupParams {
  int m = 1;
  int p = 1;
  int n = 1;

  GroupParams() = default;
  GroupParams(int m_, int p_, int n_) : m(m_), p(p_), n(n_) { validate(); }

  void validate() const {
    if (m < 1 || p < 1 || n < 1) throw argument_error("G(m,p,n) needs m, p, n >= 1");
    if (m % p != 0) throw argument_error("G(m,p,n) needs p | m, got m=" + std::to_string(m) + " p=" + std::to_string(p));
  }

  bool has_diagonal() const { return p < m; }

  /// #W = m^n n! / p.
  BigInt order() const {
    BigInt w = power(BigInt(m), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
    return w / p;
  }

  /// #R = m n(n-1)/2 + n (m/p - 1).
  std::int64_t reflection_count() const {
    return static_cast<std::int64_t>(m) * n * (n - 1) / 2 + static_cast<std::int64_t>(n) * (m / p - 1);
  }

  /// #A = m n(n-1)/2 + (n if p < m).
  std::int64_t hyperplane_count() const {
    return static_cast<std::int64_t>(m) * n * (n - 1) / 2 + (has_diagonal() ? n : 0);
  }

  std::string label() const {
    return "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

struct Element {
  std::vector<int> perm;    ///< perm[k] = u(k), 0-based
  std::vector<int> colors;  ///< a_k in [0, m)

  int size() const { return static_cast<int>(perm.size()); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline Element identity_element(int n) {
  Element e;
  e.perm.resize(static_cast<std::size_t>(n));
  std::iota(e.perm.begin(), e.perm.end(), 0);
  e.colors.assign(static_cast<std::size_t>(n), 0);
  return e;
}

inline int mod(std::int64_t x, int m) {
  auto r = static_cast<int>(x % m);
  return r < 0 ? r + m : r;
}

/// Checks the shape (a permutation of {0..n-1}, colors in [0, m)).
inline void check_shape(const Element& g, int m, int n) {
  if (g.size() != n || static_cast<int>(g.colors.size()) != n)
    throw argument_error("element has size " + std::to_string(g.size()) + ", expected n=" + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : g.perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw argument_error("perm is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int c : g.colors)
    if (c < 0 || c >= m) throw argument_error("color " + std::to_string(c) + " outside [0, " + std::to_string(m) + ")");
}

/// wt([u; a]) = a_1 + ... + a_n, reduced to [0, m).
inline int weight(const Element& g, int m) {
  std::int64_t s = 0;
  for (int c : g.colors) s += c;
  return mod(s, m);
}

inline bool is_member(const Element& g, const GroupParams& params) {
  return weight(g, params.m) % params.p == 0;
}

inline void require_member(const Element& g, const GroupParams& params) {
  check_shape(g, params.m, params.n);
  if (!is_member(g, params))
    throw argument_error("element has color " + std::to_string(weight(g, params.m)) + ", not a multiple of p=" +
                         std::to_string(params.p) + "; not in " + params.label());
}

/// [u; a] * [v; b] = [uv; v(a) + b] with v(a)_k = a_{v(k)}.
inline Element multiply(const Element& x, const Element& y, const GroupParams& params) {
  check_shape(x, params.m, params.n);
  check_shape(y, params.m, params.n);
  Element out;
  out.perm.resize(x.perm.size());
  out.colors.resize(x.perm.size());
  for (std::size_t k = 0; k < x.perm.size(); ++k) {
    auto vk = static_cast<std::size_t>(y.perm[k]);
    out.perm[k] = x.perm[vk];
    out.colors[k] = (x.colors[vk] + y.colors[k]) % params.m;
  }
  return out;
}

inline Element inverse(const Element& x, const GroupParams& params) {
  check_shape(x, params.m, params.n);
  Element out;
  out.perm.resize(x.perm.size());
  out.colors.resize(x.perm.size());
  for (std::size_t k = 0; k < x.perm.size(); ++k) out.perm[static_cast<std::size_t>(x.perm[k])] = static_cast<int>(k);
  for (std::size_t k = 0; k < x.perm.size(); ++k)
    out.colors[k] = mod(-x.colors[static_cast<std::size_t>(out.perm[k])], params.m);
  return out;
}

/// pi_{m/r}: G(m,1,n) -> G(r,1,n). With zeta_r = zeta_m^{m/r}, the image has
/// the same permutation and colors a_k mod r; r = 1 leaves the bare permutation.
inline Element project(const Element& g, const GroupParams& params, int r) {
  check_shape(g, params.m, params.n);
  if (r < 1 || params.m % r != 0)
    throw argument_error("project: r=" + std::to_string(r) + " does not divide m=" + std::to_string(params.m));
  Element out = g;
  for (auto& c : out.colors) c %= r;
  return out;
}

// --- reflections ------------------------------------------------------------

struct Reflection {
  enum class Kind { transposition_like, diagonal };
  Kind kind = Kind::transposition_like;
  int i = 0;  ///< 0-based; for transposition-like i < j
  int j = 0;
  int k = 0;  ///< twist in [0, m) or diagonal step in [1, m/p)

  static Reflection transposition(int i, int j, int twist) {
    if (i > j) std::swap(i, j);
    return {Kind::transposition_like, i, j, twist};
  }
  static Reflection diagonal_at(int i, int step) { return {Kind::diagonal, i, i, step}; }

  bool is_diagonal() const { return kind == Kind::diagonal; }

  /// Color sum: 0 for transposition-like, p*k for diagonal.
  int weight(const GroupParams& params) const { return is_diagonal() ? (params.p * k) % params.m : 0; }

  friend bool operator==(const Reflection&, const Reflection&) = default;
};

/// Transposition-like (i j; k) is the matrix with zeta^{-k} in row i, column j
/// and zeta^{k} in row j, column i, i.e. colors a_i = k, a_j = -k.
inline Element to_element(const Reflection& t, const GroupParams& params) {
  Element e = identity_element(params.n);
  auto i = static_cast<std::size_t>(t.i);
  auto j = static_cast<std::size_t>(t.j);
  if (t.is_diagonal()) {
    e.colors[i] = (params.p * t.k) % params.m;
  } else {
    e.perm[i] = t.j;
    e.perm[j] = t.i;
    e.colors[i] = mod(t.k, params.m);
    e.colors[j] = mod(-t.k, params.m);
  }
  return e;
}

/// Transposition-like reflections first (by i, j, twist), then diagonal ones.
inline std::vector<Reflection> reflections(const GroupParams& params) {
  std::vector<Reflection> out;
  out.reserve(static_cast<std::size_t>(params.reflection_count()));
  for (int i = 0; i < params.n; ++i)
    for (int j = i + 1; j < params.n; ++j)
      for (int k = 0; k < params.m; ++k) out.push_back(Reflection::transposition(i, j, k));
  for (int i = 0; i < params.n; ++i)
    for (int k = 1; k < params.m / params.p; ++k) out.push_back(Reflection::diagonal_at(i, k));
  return out;
}

inline std::string to_string(const Reflection& t) {
  if (t.is_diagonal()) return "d(" + std::to_string(t.i + 1) + ";" + std::to_string(t.k) + ")";
  return "t(" + std::to_string(t.i + 1) + "," + std::to_string(t.j + 1) + ";" + std::to_string(t.k) + ")";
}

// --- cycle data -------------------------------------------------------------

struct CycleData {
  std::vector<int> lengths;       ///< weakly decreasing
  std::vector<int> cycle_colors;  ///< aligned with lengths, in [0, m)
  int k = 0;                      ///< number of cycles
  int d = 1;                      ///< gcd(cycle colors, p)
  int a = 1;                      ///< gcd(col(g), m) / p
  int col = 0;                    ///< color of g in [0, m)
};

/// Raw cycles of the underlying permutation with support-summed colors, in
/// order of their smallest point.
inline std::vector<std::pair<int, int>> raw_cycles(const Element& g, int m) {
  std::vector<std::pair<int, int>> out;
  std::vector<bool> seen(g.perm.size(), false);
  for (std::size_t s = 0; s < g.perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    std::int64_t color = 0;
    for (auto c = s; !seen[c]; c = static_cast<std::size_t>(g.perm[c])) {
      seen[c] = true;
      ++len;
      color += g.colors[c];
    }
    out.emplace_back(len, mod(color, m));
  }
  return out;
}

inline CycleData cycle_data(const Element& g, const GroupParams& params) {
  require_member(g, params);
  auto cycles = raw_cycles(g, params.m);
  std::sort(cycles.begin(), cycles.end(), [](auto x, auto y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  CycleData cd;
  std::vector<std::uint64_t> colors;
  for (auto [len, color] : cycles) {
    cd.lengths.push_back(len);
    cd.cycle_colors.push_back(color);
    colors.push_back(static_cast<std::uint64_t>(color));
  }
  cd.k = static_cast<int>(cycles.size());
  cd.d = static_cast<int>(nt::gcd_with(colors, static_cast<std::uint64_t>(params.p)));
  cd.col = weight(g, params.m);
  cd.a = std::gcd(cd.col, params.m) / params.p;
  return cd;
}

/// Canonical representative from (length, color) cycles: consecutive supports,
/// each cycle's color placed on its last position.
inline Element element_from_cycles(const std::vector<std::pair<int, int>>& cycles, const GroupParams& params) {
  int total = 0;
  for (auto [len, color] : cycles) {
    if (len < 1) throw argument_error("cycle length must be >= 1");
    total += len;
  }
  if (total != params.n)
    throw argument_error("cycle lengths sum to " + std::to_string(total) + ", expected n=" + std::to_string(params.n));
  Element e = identity_element(params.n);
  int start = 0;
  for (auto [len, color] : cycles) {
    for (int t = 0; t < len; ++t) e.perm[static_cast<std::size_t>(start + t)] = start + (t + 1) % len;
    e.colors[static_cast<std::size_t>(start + len - 1)] = mod(color, params.m);
    start += len;
  }
  return e;
}

/// Representatives of the G(m,1,n)-conjugacy classes lying in G(m,p,n): all
/// multisets of (length, color) pairs with total length n and color sum
/// divisible by p. Series of full factorizations are constant on these classes.
inline std::vector<Element> class_representatives(const GroupParams& params) {
  std::vector<std::vector<std::pair<int, int>>> found;
  std::vector<std::pair<int, int>> current;
  // Pairs are emitted in non-increasing (length, color) order to get each multiset once.
  auto rec = [&](auto& self, int remaining, std::pair<int, int> bound) -> void {
    if (remaining == 0) {
      std::int64_t s = 0;
      for (auto [l, c] : current) s += c;
      if (mod(s, params.m) % params.p == 0) found.push_back(current);
      return;
    }
    for (int len = std::min(remaining, bound.first); len >= 1; --len) {
      int max_color = (len == bound.first) ? bound.second : params.m - 1;
      for (int color = max_color; color >= 0; --color) {
        current.emplace_back(len, color);
        self(self, remaining - len, std::pair{len, color});
        current.pop_back();
      }
    }
  };
  rec(rec, params.n, {params.n, params.m - 1});
  std::vector<Element> out;
  out.reserve(found.size());
  for (const auto& cyc : found) out.push_back(element_from_cycles(cyc, params));
  return out;
}

/// "[(len,color),...]" of the canonical cycle listing.
inline std::string class_label(const Element& g, const GroupParams& params) {
  auto cd = cycle_data(g, params);
  std::string s = "[";
  for (int i = 0; i < cd.k; ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(cd.lengths[static_cast<std::size_t>(i)]) + "," +
         std::to_string(cd.cycle_colors[static_cast<std::size_t>(i)]) + ")";
  }
  return s + "]";
}

// --- generating sets --------------------------------------------------------

/// Does the projection of the transposition-like part of `set` generate
/// G(p,p,n)? Edges (i,j) carry twists mod p; after fixing potentials along a
/// spanning forest, each non-tree edge leaves a defect (twist minus potential
/// difference). G(p,p,n) is generated iff the graph is connected and the
/// defects together with p have gcd 1.
inline bool generates_ppn(const std::vector<Reflection>& set, int p, int n) {
  if (n == 1) return true;
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (const auto& t : set) {
    if (t.is_diagonal()) continue;
    int twist = mod(t.k, p);
    adj[static_cast<std::size_t>(t.i)].emplace_back(t.j, twist);
    adj[static_cast<std::size_t>(t.j)].emplace_back(t.i, mod(-twist, p));
  }
  // Potential phi with twist(i->j) = phi_j - phi_i on tree edges.
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  phi[0] = 0;
  std::vector<int> stack{0};
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, twist] : adj[static_cast<std::size_t>(v)]) {
      if (phi[static_cast<std::size_t>(w)] >= 0) continue;
      phi[static_cast<std::size_t>(w)] = mod(phi[static_cast<std::size_t>(v)] + twist, p);
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != n) return false;
  int g = p;
  for (const auto& t : set) {
    if (t.is_diagonal()) continue;
    int defect = mod(t.k - (phi[static_cast<std::size_t>(t.j)] - phi[static_cast<std::size_t>(t.i)]), p);
    g = std::gcd(g, defect);
  }
  return g == 1;
}

/// <set> = G(m,p,n) iff wt(set) generates pZ/mZ and pi_{m/p}(set) generates G(p,p,n).
inline bool is_full_set(const std::vector<Reflection>& set, const GroupParams& params) {
  int g = params.m;
  for (const auto& t : set) g = std::gcd(g, t.weight(params));
  if (g != params.p) return false;
  return generates_ppn(set, params.p, params.n);
}

// --- element grammar --------------------------------------------------------

inline constexpr std::string_view element_grammar =
    "perm=[u(1),...,u(n)];colors=[a_1,...,a_n]  (1-based images, colors mod m)  or  "
    "cycles=[(len,color),...]";

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw argument_error(std::string(what) + " must be a bracketed list; expected grammar: " + std::string(element_grammar));
  s = s.substr(1, s.size() - 2);
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw argument_error("bad integer '" + item + "' in " + std::string(what) +
                           "; expected grammar: " + std::string(element_grammar));
    }
  }
  return out;
}

}  // namespace detail

/// Parses "(len,color),(len,color)" with optional surrounding brackets.
inline std::vector<std::pair<int, int>> parse_cycles(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<std::pair<int, int>> out;
  std::size_t pos = 0;
  auto fail = [&] {
    throw argument_error("malformed cycle list '" + std::string(text) + "'; expected grammar: " +
                         std::string(element_grammar));
  };
  while (pos < s.size()) {
    if (s[pos] != '(') fail();
    auto close = s.find(')', pos);
    if (close == std::string::npos) fail();
    auto inner = s.substr(pos + 1, close - pos - 1);
    auto comma = inner.find(',');
    if (comma == std::string::npos) fail();
    try {
      std::size_t u1 = 0, u2 = 0;
      int len = std::stoi(inner.substr(0, comma), &u1);
      int color = std::stoi(inner.substr(comma + 1), &u2);
      if (u1 != comma || u2 != inner.size() - comma - 1) fail();
      out.emplace_back(len, color);
    } catch (const argument_error&) {
      throw;
    } catch (const std::exception&) {
      fail();
    }
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ',') fail();
      ++pos;
    }
  }
  if (out.empty()) fail();
  return out;
}

/// Element from either grammar form; membership in G(m,p,n) is enforced.
inline Element parse_element(std::string_view text, const GroupParams& params) {
  std::string s(text);
  Element g;
  if (s.rfind("cycles=", 0) == 0) {
    g = element_from_cycles(parse_cycles(std::string_view(s).substr(7)), params);
  } else if (s.rfind("perm=", 0) == 0) {
    auto semi = s.find(';');
    if (semi == std::string::npos || s.compare(semi + 1, 7, "colors=") != 0)
      throw argument_error("missing ';colors=' part; expected grammar: " + std::string(element_grammar));
    auto perm = detail::parse_int_list(std::string_view(s).substr(5, semi - 5), "perm");
    auto colors = detail::parse_int_list(std::string_view(s).substr(semi + 8), "colors");
    for (auto& v : perm) --v;
    for (auto& c : colors) c = mod(c, params.m);
    g.perm = std::move(perm);
    g.colors = std::move(colors);
  } else {
    throw argument_error("unrecognized element '" + s + "'; expected grammar: " + std::string(element_grammar));
  }
  require_member(g, params);
  return g;
}

inline std::string to_string(const Element& g) {
  std::string s = "perm=[";
  for (std::size_t k = 0; k < g.perm.size(); ++k) s += (k ? "," : "") + std::to_string(g.perm[k] + 1);
  s += "];colors=[";
  for (std::size_t k = 0; k < g.colors.size(); ++k) s += (k ? "," : "") + std::to_string(g.colors[k]);
  return s + "]";
}

}  // namespace wfact
