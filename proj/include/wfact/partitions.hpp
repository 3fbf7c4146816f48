#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wfact/errors.hpp"
#include "wfact/laurent.hpp"

namespace wfact {

// --- integer partitions -----------------------------------------------------

struct IntegerPartition {
  std::vector<int> parts;  ///< weakly decreasing, positive

  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (!parts.empty() && parts.back() <= 0) throw argument_error("partition parts must be positive");
  }

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;
};

inline std::string to_string(const IntegerPartition& lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) s += (i ? "," : "") + std::to_string(lambda.parts[i]);
  return s + ")";
}

/// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<IntegerPartition> integer_partitions(int n) {
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      IntegerPartition p;
      p.parts = cur;
      out.push_back(std::move(p));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// f_lambda = n! / prod of hook lengths.
inline BigInt hook_dimension(const IntegerPartition& lambda) {
  const auto& rows = lambda.parts;
  BigInt hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int arm = rows[i] - j - 1;
      int leg = 0;
      for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

/// Sum of contents (column - row) over the cells of lambda. This is the
/// normalized class-sum value chi(transpositions)/chi(1).
inline std::int64_t content_sum(const IntegerPartition& lambda) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) s += j - static_cast<std::int64_t>(i);
  return s;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a border strip of length r is
// moving a bead from position x to an empty x - r; the sign is (-1)^(beads
// strictly between), which equals (-1)^(height of the strip).
inline std::int64_t mn_beads(std::vector<int>& beads, const std::vector<int>& mu, std::size_t next,
                             std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (next == mu.size()) return 1;
  auto key = std::make_pair(beads, next);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu[next];
  std::int64_t total = 0;
  for (std::size_t b = 0; b < beads.size(); ++b) {
    int from = beads[b];
    int to = from - r;
    if (to < 0 || std::binary_search(beads.begin(), beads.end(), to)) continue;
    int between = 0;
    for (int x : beads)
      if (x > to && x < from) ++between;
    std::vector<int> moved = beads;
    moved[b] = to;
    std::sort(moved.begin(), moved.end());
    std::int64_t sub = mn_beads(moved, mu, next + 1, memo);
    total += (between % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// chi_lambda evaluated on the class of cycle type mu.
inline std::int64_t mn_character(const IntegerPartition& lambda, const IntegerPartition& mu) {
  if (lambda.size() != mu.size())
    throw argument_error("mn_character: |lambda|=" + std::to_string(lambda.size()) +
                         " but |mu|=" + std::to_string(mu.size()));
  static std::mutex mutex;
  static std::map<std::pair<IntegerPartition, IntegerPartition>, std::int64_t> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(lambda, mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const auto len = lambda.parts.size();
  std::vector<int> beads(len);
  for (std::size_t i = 0; i < len; ++i) beads[i] = lambda.parts[i] + static_cast<int>(len - 1 - i);
  std::sort(beads.begin(), beads.end());
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  auto value = detail::mn_beads(beads, mu.parts, 0, memo);
  cache.emplace(std::move(key), value);
  return value;
}

// --- set partitions ---------------------------------------------------------

inline constexpr int max_set_partition_size = 10;

struct SetPartition {
  std::vector<std::vector<int>> blocks;  ///< 0-based points; blocks sorted, ordered by minimum

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All set partitions of {0..n-1}; Bell(n) of them.
inline std::vector<SetPartition> set_partitions(int n) {
  if (n < 0) throw argument_error("set_partitions: n must be >= 0");
  if (n > max_set_partition_size)
    throw capability_error("set_partitions: n=" + std::to_string(n) + " exceeds the Bell guard n <= " +
                           std::to_string(max_set_partition_size));
  std::vector<SetPartition> out;
  std::vector<int> block_of(static_cast<std::size_t>(n));
  // Restricted growth strings.
  auto rec = [&](auto& self, int pos, int used) -> void {
    if (pos == n) {
      SetPartition sp;
      sp.blocks.resize(static_cast<std::size_t>(used));
      for (int x = 0; x < n; ++x) sp.blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(x)])].push_back(x);
      out.push_back(std::move(sp));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block_of[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Is every block of `finer` contained in a block of `coarser`?
inline bool refines(const SetPartition& finer, const SetPartition& coarser) {
  int n = 0;
  for (const auto& b : coarser.blocks) n += static_cast<int>(b.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < coarser.blocks.size(); ++i)
    for (int x : coarser.blocks[i]) owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
  for (const auto& b : finer.blocks) {
    if (b.empty()) continue;
    int o = owner.at(static_cast<std::size_t>(b.front()));
    for (int x : b)
      if (owner.at(static_cast<std::size_t>(x)) != o) return false;
  }
  return true;
}

/// The orbit partition of a permutation (image table).
inline SetPartition orbit_partition(const std::vector<int>& perm) {
  SetPartition sp;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> block;
    for (auto c = s; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
      seen[c] = true;
      block.push_back(static_cast<int>(c));
    }
    sp.blocks.push_back(std::move(block));
  }
  sp.canonicalize();
  return sp;
}

/// Restriction of perm to a stabilized block, relabelled to {0..|block|-1}
/// in increasing order of the block's points.
inline std::vector<int> restrict_perm(const std::vector<int>& perm, std::vector<int> block) {
  std::sort(block.begin(), block.end());
  std::vector<int> out(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    int image = perm.at(static_cast<std::size_t>(block[i]));
    auto it = std::lower_bound(block.begin(), block.end(), image);
    if (it == block.end() || *it != image) throw argument_error("restrict_perm: block is not stabilized by the permutation");
    out[i] = static_cast<int>(it - block.begin());
  }
  return out;
}

inline IntegerPartition cycle_type(const std::vector<int>& perm) {
  std::vector<int> lens;
  for (const auto& b : orbit_partition(perm).blocks) lens.push_back(static_cast<int>(b.size()));
  return IntegerPartition(std::move(lens));
}

}  // namespace wfact
