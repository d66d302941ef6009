#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "difflat/poset.hpp"
#include "difflat/process.hpp"

namespace difflat {

struct Violation {
  Ideal ideal;
  /// Total insertion weight.
  Weight lhs = 0;
  /// Deletion weight plus degree.
  Weight rhs = 0;
};

struct VerificationReport {
  std::size_t checked_horizon = 0;
  std::size_t ideal_count = 0;
  /// Sorted by ideal cardinality, then canonical order.
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks insertion weight == deletion weight + degree at every ideal of
/// cardinality <= max_ideal_size.
VerificationReport verify_differential(const Poset& poset, const DegreeFunction& degree,
                                       std::size_t max_ideal_size);

/// Largest h <= cap such that every ideal of size <= h satisfies the
/// differential condition, or nullopt if the empty ideal already fails.
std::optional<std::size_t> verified_horizon(const Poset& poset,
                                            const DegreeFunction& degree,
                                            std::size_t cap);

struct OrphanReport {
  /// Points with exactly one lower cover.
  PointSet orphans;
  /// Points covered by at least three orphans, with the orphan count.
  std::vector<std::pair<PointId, std::size_t>> multi_orphan_parents;
};

OrphanReport orphan_report(const Poset& poset);

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { balance, orphan_split, pair_cover };

std::string to_string(Relation relation);

struct RelationCheck {
  Relation relation = Relation::balance;
  /// Orphans the check is about: none, A_i, or the pair A_i, A_j.
  PointSet subjects;
  Weight lhs = 0;
  Weight rhs = 0;

  bool holds() const { return lhs == rhs; }
};

/// Identities around a point P of a constant-degree lattice:
///   balance:       P + d     = sum(I) + sum(A)
///   orphan_split:  2 A_i - P = sum(B_i)   for each orphan A_i over P
///   pair_cover:    P         = sum(C_ij)  for each pair of orphans
/// where A are the upper covers of P covering only P, I the other insertion
/// points of [P], B_i the insertion points of [A_i] covering only A_i, and
/// C_ij the insertion points of [A_i, A_j] covering exactly {A_i, A_j}.
struct DerivedRelationsReport {
  PointId point;
  Weight degree = 0;
  PointSet i_set;
  PointSet a_set;
  std::vector<PointSet> b_sets;
  /// One entry per pair (i < j) of a_set, in lexicographic pair order.
  std::vector<std::pair<std::pair<PointId, PointId>, PointSet>> c_sets;
  std::vector<RelationCheck> checks;

  bool all_hold() const;
};

/// Requires the differential condition up to |[P]| + 2; throws
/// PreconditionError otherwise.
DerivedRelationsReport derived_relations(const Poset& poset, Weight degree, PointId p);

/// Reports for every P with |[P]| + 2 <= horizon after a single check of
/// the differential condition up to `horizon`.
std::vector<DerivedRelationsReport> derived_relations_all(const Poset& poset,
                                                          Weight degree,
                                                          std::size_t horizon);

/// Points covered by three or more orphans, regardless of verification.
PointSet find_triple_orphans(const Poset& poset);

/// Points P with |[P]| + 3 <= horizon that are covered by three or more
/// orphans. Requires the differential condition up to `horizon`; throws
/// PreconditionError otherwise. Empty for every constant-degree
/// weighted-differential lattice.
PointSet triple_orphan_check(const Poset& poset, Weight degree, std::size_t horizon);

}  // namespace difflat
