#include "difflat/poset.hpp"

#include <algorithm>
#include <sstream>

namespace difflat {

void normalize(PointSet& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

bool contains(const PointSet& set, PointId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

Ideal::Ideal(PointSet members) : members_(std::move(members)) {
  normalize(members_);
}

bool Ideal::contains(PointId id) const {
  return difflat::contains(members_, id);
}

Ideal Ideal::with(PointId id) const {
  Ideal out;
  out.members_.reserve(members_.size() + 1);
  auto pos = std::lower_bound(members_.begin(), members_.end(), id);
  out.members_.assign(members_.begin(), pos);
  out.members_.push_back(id);
  out.members_.insert(out.members_.end(), pos, members_.end());
  return out;
}

Ideal Ideal::with(const PointSet& ids) const {
  PointSet merged = members_;
  merged.insert(merged.end(), ids.begin(), ids.end());
  return Ideal(std::move(merged));
}

Ideal Ideal::without(PointId id) const {
  Ideal out = *this;
  auto pos = std::lower_bound(out.members_.begin(), out.members_.end(), id);
  if (pos != out.members_.end() && *pos == id) {
    out.members_.erase(pos);
  }
  return out;
}

std::strong_ordering Ideal::operator<=>(const Ideal& other) const {
  if (auto c = members_.size() <=> other.members_.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      members_.begin(), members_.end(), other.members_.begin(),
      other.members_.end());
}

std::string default_name(std::uint32_t index) {
  std::string out;
  std::uint64_t n = std::uint64_t{index} + 1;
  while (n > 0) {
    --n;
    out.push_back(static_cast<char>('A' + n % 26));
    n /= 26;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void Poset::require(PointId id) const {
  if (!contains(id)) {
    throw PosetError("unknown point id " + std::to_string(id.value));
  }
}

PointId Poset::add_point(Weight weight, PointSet covers,
                         std::optional<Ideal> provenance, std::string name) {
  if (weight < 1) {
    throw PosetError("point weight must be positive, got " +
                     std::to_string(weight));
  }
  for (PointId c : covers) {
    require(c);
  }
  std::sort(covers.begin(), covers.end());
  if (std::adjacent_find(covers.begin(), covers.end()) != covers.end()) {
    throw PosetError("duplicate lower cover");
  }
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      if (leq(covers[i], covers[j])) {
        throw PosetError("lower covers " + points_[covers[i].value].name +
                         " and " + points_[covers[j].value].name +
                         " are comparable");
      }
    }
  }

  const PointId id{static_cast<std::uint32_t>(points_.size())};
  if (name.empty()) {
    for (std::uint32_t k = id.value; name.empty() || by_name_.contains(name); ++k) {
      name = default_name(k);
    }
  }
  if (by_name_.contains(name)) {
    throw PosetError("duplicate point name " + name);
  }

  std::vector<bool> down(points_.size() + 1, false);
  for (PointId c : covers) {
    const auto& below = down_[c.value];
    for (std::size_t k = 0; k < below.size(); ++k) {
      if (below[k]) {
        down[k] = true;
      }
    }
    upper_[c.value].push_back(id);
  }
  down[id.value] = true;

  if (covers.empty()) {
    minimal_.push_back(id);
  }
  by_name_.emplace(name, id);
  points_.push_back(Point{id, weight, std::move(covers), std::move(provenance),
                          std::move(name)});
  upper_.emplace_back();
  down_.push_back(std::move(down));
  return id;
}

const Point& Poset::point(PointId id) const {
  require(id);
  return points_[id.value];
}

std::span<const PointId> Poset::lower_covers(PointId id) const {
  return point(id).lower_covers;
}

std::span<const PointId> Poset::upper_covers(PointId id) const {
  require(id);
  return upper_[id.value];
}

std::optional<PointId> Poset::find(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) {
    return it->second;
  }
  return std::nullopt;
}

PointId Poset::at(std::string_view name) const {
  if (auto id = find(name)) {
    return *id;
  }
  throw PosetError("unknown point name " + std::string(name));
}

bool Poset::leq(PointId a, PointId b) const {
  require(a);
  require(b);
  const auto& below = down_[b.value];
  return a.value < below.size() && below[a.value];
}

PointSet Poset::ids() const {
  PointSet out(points_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = PointId{static_cast<std::uint32_t>(i)};
  }
  return out;
}

bool Poset::is_ideal(const PointSet& members) const {
  for (PointId p : members) {
    require(p);
  }
  for (PointId p : members) {
    for (PointId c : points_[p.value].lower_covers) {
      if (!std::binary_search(members.begin(), members.end(), c)) {
        return false;
      }
    }
  }
  return true;
}

Ideal Poset::ideal(PointSet members) const {
  Ideal out(std::move(members));
  if (!is_ideal(out.members())) {
    throw PosetError("not an ideal: " + format_set(*this, out.members()));
  }
  return out;
}

bool Poset::operator==(const Poset& other) const {
  if (points_.size() != other.points_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& a = points_[i];
    const Point& b = other.points_[i];
    if (a.weight != b.weight || a.lower_covers != b.lower_covers ||
        a.name != b.name) {
      return false;
    }
  }
  return true;
}

bool is_ideal(const Poset& poset, const PointSet& s) {
  PointSet sorted = s;
  normalize(sorted);
  return poset.is_ideal(sorted);
}

PointSet deletion_points(const Poset& poset, const Ideal& ideal) {
  PointSet out;
  for (PointId p : ideal.members()) {
    bool maximal = true;
    for (PointId up : poset.upper_covers(p)) {
      if (ideal.contains(up)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(p);
    }
  }
  return out;
}

PointSet insertion_points(const Poset& poset, const Ideal& ideal) {
  PointSet candidates;
  for (PointId m : poset.minimal_points()) {
    if (!ideal.contains(m)) {
      candidates.push_back(m);
    }
  }
  for (PointId p : ideal.members()) {
    for (PointId up : poset.upper_covers(p)) {
      if (ideal.contains(up)) {
        continue;
      }
      const auto covers = poset.lower_covers(up);
      const bool ready = std::all_of(covers.begin(), covers.end(),
                                     [&](PointId c) { return ideal.contains(c); });
      if (ready) {
        candidates.push_back(up);
      }
    }
  }
  normalize(candidates);
  return candidates;
}

Ideal generated_ideal(const Poset& poset, const PointSet& generators) {
  std::vector<bool> member(poset.size(), false);
  PointSet stack;
  for (PointId g : generators) {
    poset.point(g);
    stack.push_back(g);
  }
  PointSet out;
  while (!stack.empty()) {
    PointId p = stack.back();
    stack.pop_back();
    if (member[p.value]) {
      continue;
    }
    member[p.value] = true;
    out.push_back(p);
    for (PointId c : poset.lower_covers(p)) {
      stack.push_back(c);
    }
  }
  return Ideal(std::move(out));
}

Ideal strict_down_set(const Poset& poset, PointId id) {
  return generated_ideal(poset, PointSet{id}).without(id);
}

Weight weight_sum(const Poset& poset, std::span<const PointId> ids) {
  Weight total = 0;
  for (PointId p : ids) {
    total += poset.weight(p);
  }
  return total;
}

std::string format_set(const Poset& poset, std::span<const PointId> ids) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << poset.name(ids[i]);
  }
  os << '}';
  return os.str();
}

}  // namespace difflat
