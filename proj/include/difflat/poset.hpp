#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace difflat {

using Weight = std::int64_t;

/// Sequentially allocated point identifier. The order on ids extends
/// creation order, so every lower cover of a point has a smaller id.
struct PointId {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const PointId&) const = default;
};

/// A sorted, duplicate-free list of point ids.
using PointSet = std::vector<PointId>;

/// Sorts and deduplicates `ids` in place.
void normalize(PointSet& ids);

bool contains(const PointSet& set, PointId id);

/// A finite order ideal, stored as its canonically sorted member list.
///
/// Down-closure is relative to a poset and is checked by `Poset::ideal`;
/// the value type itself only guarantees sorted distinct members.
/// Ordering is by cardinality first, then lexicographic on the members.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(PointSet members);

  const PointSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(PointId id) const;
  PointId max() const { return members_.back(); }

  /// Copy of this ideal with `id` added (id must not be a member).
  Ideal with(PointId id) const;
  /// Copy of this ideal with every id of `ids` added.
  Ideal with(const PointSet& ids) const;
  /// Copy of this ideal with `id` removed.
  Ideal without(PointId id) const;

  bool operator==(const Ideal&) const = default;
  std::strong_ordering operator<=>(const Ideal& other) const;

 private:
  PointSet members_;
};

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  PointId id;
  Weight weight = 1;
  PointSet lower_covers;
  std::optional<Ideal> provenance;
  std::string name;
};

/// Grow-only poset of weighted points given by its cover relation.
///
/// Points are immutable once added. Every point stores its full down-set
/// as a bitmap, filled at creation, so order queries on a frozen poset are
/// read-only and safe to share between threads.
class Poset {
 public:
  /// Adds a point above exactly `covers`. The covers must exist and form
  /// an antichain. An empty `name` assigns the spreadsheet-style label of
  /// the new id (A, B, ..., Z, AA, ...).
  PointId add_point(Weight weight, PointSet covers,
                    std::optional<Ideal> provenance = std::nullopt,
                    std::string name = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(PointId id) const { return id.value < points_.size(); }

  const Point& point(PointId id) const;
  Weight weight(PointId id) const { return point(id).weight; }
  const std::string& name(PointId id) const { return point(id).name; }
  std::span<const PointId> lower_covers(PointId id) const;
  std::span<const PointId> upper_covers(PointId id) const;
  std::span<const PointId> minimal_points() const { return minimal_; }

  std::optional<PointId> find(std::string_view name) const;
  PointId at(std::string_view name) const;

  /// a <= b in the poset order.
  bool leq(PointId a, PointId b) const;

  /// All point ids in creation order.
  PointSet ids() const;

  /// Validates `members` as an ideal of this poset.
  Ideal ideal(PointSet members) const;
  bool is_ideal(const PointSet& members) const;

  bool operator==(const Poset& other) const;

 private:
  void require(PointId id) const;

  std::vector<Point> points_;
  std::vector<PointSet> upper_;
  std::vector<std::vector<bool>> down_;
  PointSet minimal_;
  std::map<std::string, PointId, std::less<>> by_name_;
};

/// Spreadsheet-style label for a zero-based index: A..Z, AA..AZ, BA, ...
std::string default_name(std::uint32_t index);

bool is_ideal(const Poset& poset, const PointSet& s);

/// Maximal members: the points whose removal leaves an ideal.
PointSet deletion_points(const Poset& poset, const Ideal& ideal);

/// Minimal non-members: the points whose addition gives an ideal.
PointSet insertion_points(const Poset& poset, const Ideal& ideal);

/// Smallest ideal containing `generators`.
Ideal generated_ideal(const Poset& poset, const PointSet& generators);

/// Members of the ideal strictly below `id`, i.e. [id] minus id.
Ideal strict_down_set(const Poset& poset, PointId id);

Weight weight_sum(const Poset& poset, std::span<const PointId> ids);

/// "{A,B,C}" using point names.
std::string format_set(const Poset& poset, std::span<const PointId> ids);

}  // namespace difflat
