#pragma once

// Test-only helpers: fixtures, random generators and brute-force oracles
// that share no code with the enumeration or process paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "difflat/io.hpp"
#include "difflat/poset.hpp"

namespace difflat::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(DIFFLAT_FIXTURE_DIR) + "/" + name;
}

inline Poset y2_fixture() { return read_poset_file(fixture_path("y2_h3.poset")); }

inline PointSet ids_of(const Poset& poset, std::initializer_list<const char*> names) {
  PointSet out;
  for (const char* n : names) out.push_back(poset.at(n));
  normalize(out);
  return out;
}

inline Ideal ideal_of(const Poset& poset, std::initializer_list<const char*> names) {
  return poset.ideal(ids_of(poset, names));
}

/// Star: P with `orphans` upper covers that cover only P.
inline Poset star(Weight p_weight, int orphans) {
  Poset poset;
  const PointId p = poset.add_point(p_weight, {}, std::nullopt, "P");
  for (int i = 1; i <= orphans; ++i) {
    poset.add_point(1, {p}, std::nullopt, "A" + std::to_string(i));
  }
  return poset;
}

/// Random poset: each new point covers a random antichain of earlier points.
inline Poset random_poset(std::mt19937& rng, int n, Weight max_weight = 3) {
  Poset poset;
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  for (int k = 0; k < n; ++k) {
    PointSet picks;
    if (k > 0) {
      std::uniform_int_distribution<int> count(0, std::min(3, k));
      std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(k - 1));
      const int c = count(rng);
      for (int i = 0; i < c; ++i) picks.push_back(PointId{any(rng)});
      normalize(picks);
    }
    PointSet antichain;
    for (PointId a : picks) {
      const bool dominated = std::any_of(picks.begin(), picks.end(), [&](PointId b) {
        return a != b && poset.leq(a, b);
      });
      if (!dominated) antichain.push_back(a);
    }
    poset.add_point(weight(rng), antichain);
  }
  return poset;
}

/// Copy of `poset` with points re-added in a random linear extension and
/// given fresh names.
inline Poset relabel(const Poset& poset, std::mt19937& rng) {
  std::vector<PointId> order;
  std::vector<bool> placed(poset.size(), false);
  while (order.size() < poset.size()) {
    PointSet ready;
    for (PointId p : poset.ids()) {
      if (placed[p.value]) continue;
      const auto covers = poset.lower_covers(p);
      if (std::all_of(covers.begin(), covers.end(),
                      [&](PointId c) { return placed[c.value]; })) {
        ready.push_back(p);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const PointId chosen = ready[pick(rng)];
    placed[chosen.value] = true;
    order.push_back(chosen);
  }
  std::map<PointId, PointId> image;
  Poset out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    PointSet covers;
    for (PointId c : poset.lower_covers(order[k])) covers.push_back(image.at(c));
    image[order[k]] = out.add_point(poset.weight(order[k]), covers, std::nullopt,
                                    "x" + std::to_string(k));
  }
  return out;
}

/// Isomorphism of weighted posets by trying every bijection.
inline bool brute_force_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  auto covers = [](const Poset& p, std::uint32_t x, std::uint32_t y) {
    const auto lc = p.lower_covers(PointId{y});
    return std::find(lc.begin(), lc.end(), PointId{x}) != lc.end();
  };
  do {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      if (a.weight(PointId{x}) != b.weight(PointId{perm[x]})) ok = false;
      for (std::uint32_t y = 0; y < n && ok; ++y) {
        if (covers(a, x, y) != covers(b, perm[x], perm[y])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// All down-closed subsets of size <= k, found by scanning subsets.
inline std::vector<PointSet> brute_force_ideals(const Poset& poset, std::size_t k) {
  std::vector<PointSet> out;
  const std::size_t n = poset.size();
  PointSet current;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t next) {
    bool closed = true;
    for (PointId p : current) {
      for (PointId c : poset.lower_covers(p)) {
        if (std::find(current.begin(), current.end(), c) == current.end()) closed = false;
      }
    }
    if (closed) out.push_back(current);
    if (current.size() == k) return;
    for (std::uint32_t q = next; q < n; ++q) {
      current.push_back(PointId{q});
      extend(q + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

struct BruteViolation {
  PointSet ideal;
  Weight lhs;
  Weight rhs;
};

/// Checks the differential condition by scanning all points for each ideal.
inline std::vector<BruteViolation> brute_force_violations(const Poset& poset, Weight degree,
                                                          std::size_t k) {
  std::vector<BruteViolation> out;
  for (const PointSet& s : brute_force_ideals(poset, k)) {
    auto in = [&](PointId p) { return std::find(s.begin(), s.end(), p) != s.end(); };
    Weight lhs = 0;
    Weight del = 0;
    for (PointId q : poset.ids()) {
      const auto lc = poset.lower_covers(q);
      if (!in(q) && std::all_of(lc.begin(), lc.end(), in)) lhs += poset.weight(q);
      if (in(q)) {
        bool maximal = true;
        for (PointId r : s) {
          const auto rc = poset.lower_covers(r);
          if (std::find(rc.begin(), rc.end(), q) != rc.end()) maximal = false;
        }
        if (maximal) del += poset.weight(q);
      }
    }
    if (lhs != del + degree) out.push_back({s, lhs, del + degree});
  }
  std::sort(out.begin(), out.end(), [](const BruteViolation& a, const BruteViolation& b) {
    return Ideal(a.ideal) < Ideal(b.ideal);
  });
  return out;
}

/// Number of partitions of n, by generating every partition explicitly.
inline std::uint64_t count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part) {
    total += count_partitions(n - part, part);
  }
  return total;
}

/// Number of d-tuples of partitions with total size n.
inline std::uint64_t count_partition_tuples(int d, int n) {
  if (d == 1) return count_partitions(n, n);
  std::uint64_t total = 0;
  for (int first = 0; first <= n; ++first) {
    total += count_partitions(first, first) * count_partition_tuples(d - 1, n - first);
  }
  return total;
}

}  // namespace difflat::testing
