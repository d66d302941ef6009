#include "difflat/enumeration.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace difflat {

std::vector<Ideal> next_level(const Poset& poset, const std::vector<Ideal>& level) {
  std::vector<Ideal> out;
  for (const Ideal& ideal : level) {
    const PointSet candidates = insertion_points(poset, ideal);
    for (PointId q : candidates) {
      if (ideal.empty() || q > ideal.max()) {
        out.push_back(ideal.with(q));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> enumerate_ideals(const Poset& poset, std::size_t max_size) {
  std::vector<Ideal> out;
  std::vector<Ideal> level{Ideal{}};
  for (std::size_t n = 0; n <= max_size && !level.empty(); ++n) {
    out.insert(out.end(), level.begin(), level.end());
    if (n < max_size) {
      level = next_level(poset, level);
    }
  }
  return out;
}

RankProfile rank_profile(const Poset& poset, std::size_t max_n) {
  RankProfile profile;
  profile.counts.assign(max_n + 1, 0);
  for (const Ideal& ideal : enumerate_ideals(poset, max_n)) {
    ++profile.counts[ideal.size()];
  }
  return profile;
}

std::vector<std::uint64_t> partition_convolution_oracle(unsigned d, std::size_t max_n) {
  std::vector<std::uint64_t> partitions(max_n + 1, 0);
  partitions[0] = 1;
  for (std::size_t part = 1; part <= max_n; ++part) {
    for (std::size_t m = part; m <= max_n; ++m) {
      partitions[m] += partitions[m - part];
    }
  }
  std::vector<std::uint64_t> power(max_n + 1, 0);
  power[0] = 1;
  for (unsigned k = 0; k < d; ++k) {
    std::vector<std::uint64_t> next(max_n + 1, 0);
    for (std::size_t i = 0; i <= max_n; ++i) {
      for (std::size_t j = 0; i + j <= max_n; ++j) {
        next[i + j] += power[i] * partitions[j];
      }
    }
    power = std::move(next);
  }
  return power;
}

std::vector<PointSet> connected_components(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<int> component(n, -1);
  std::vector<PointSet> out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (component[start] >= 0) {
      continue;
    }
    const int index = static_cast<int>(out.size());
    PointSet members;
    PointSet stack{PointId{start}};
    component[start] = index;
    while (!stack.empty()) {
      PointId p = stack.back();
      stack.pop_back();
      members.push_back(p);
      auto visit = [&](PointId q) {
        if (component[q.value] < 0) {
          component[q.value] = index;
          stack.push_back(q);
        }
      };
      for (PointId q : poset.lower_covers(p)) visit(q);
      for (PointId q : poset.upper_covers(p)) visit(q);
    }
    normalize(members);
    out.push_back(std::move(members));
  }
  return out;
}

bool quadrant_check(const Poset& poset, const PointSet& component) {
  using Coord = std::pair<long, long>;
  if (component.empty()) {
    return false;
  }
  PointSet sorted = component;
  normalize(sorted);

  std::map<PointId, Coord> coord;
  std::map<Coord, PointId> occupant;
  auto place = [&](PointId p, Coord c) {
    if (occupant.contains(c)) {
      return false;
    }
    coord.emplace(p, c);
    occupant.emplace(c, p);
    return true;
  };

  for (PointId p : sorted) {
    const auto covers = poset.lower_covers(p);
    for (PointId c : covers) {
      if (!coord.contains(c)) {
        return false;  // cover outside the component
      }
    }
    if (covers.empty()) {
      if (!occupant.empty() || !place(p, {0, 0})) {
        return false;
      }
    } else if (covers.size() == 1) {
      const auto [i, j] = coord.at(covers[0]);
      if (i == 0 && j == 0) {
        if (!place(p, {1, 0}) && !place(p, {0, 1})) {
          return false;
        }
      } else if (i == 0) {
        if (!place(p, {0, j + 1})) return false;
      } else if (j == 0) {
        if (!place(p, {i + 1, 0})) return false;
      } else {
        return false;
      }
    } else if (covers.size() == 2) {
      auto a = coord.at(covers[0]);
      auto b = coord.at(covers[1]);
      if (a.first < b.first) {
        std::swap(a, b);
      }
      // a = (x+1, y), b = (x, y+1)
      if (a.first != b.first + 1 || b.second != a.second + 1) {
        return false;
      }
      if (!place(p, {a.first, b.second})) {
        return false;
      }
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace difflat
