#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "difflat/poset.hpp"

namespace difflat {

/// Differential degree of each lattice element: a constant, or a table
/// indexed by ideal cardinality.
class DegreeFunction {
 public:
  static DegreeFunction constant(Weight d);
  static DegreeFunction by_size(std::vector<Weight> table);

  /// Throws std::out_of_range when a size table does not cover the ideal.
  Weight operator()(const Ideal& ideal) const;
  Weight operator()(std::size_t cardinality) const;

  bool is_constant() const { return table_.empty(); }
  Weight constant_value() const { return constant_; }

 private:
  Weight constant_ = 1;
  std::vector<Weight> table_;
};

struct WeightPolicy {
  enum class Kind { unit, search };

  Kind kind = Kind::unit;
  Weight max_weight = 1;
  std::size_t max_new_points = 0;

  static WeightPolicy unit() { return {}; }
  static WeightPolicy search(Weight max_weight, std::size_t max_new_points);
};

/// Result of examining one ideal.
///
/// `old_insertion_points` are the existing insertion points that were seen
/// at smaller ideals. `given_new_points` are existing points that cover
/// exactly the deletion set; they only occur when the process completes a
/// supplied seed poset, never for points the process created itself.
struct StepOutcome {
  Ideal ideal;
  PointSet deletion_set;
  Weight deletion_weight = 0;
  Weight degree = 0;
  Weight total_insertion_weight = 0;
  PointSet old_insertion_points;
  Weight old_insertion_weight = 0;
  Weight new_weight_budget = 0;
  PointSet given_new_points;
  Weight given_new_weight = 0;

  /// Weight still to be created at this ideal.
  Weight remaining_budget() const { return new_weight_budget - given_new_weight; }
};

struct TraceRecord {
  StepOutcome outcome;
  std::vector<std::pair<PointId, Weight>> created;
};

struct ProcessTrace {
  std::vector<TraceRecord> records;

  const TraceRecord* find(const Ideal& ideal) const;
};

struct FailureWitness {
  Ideal ideal;
  Weight new_weight_budget = 0;
  Poset snapshot;
  ProcessTrace trace;
};

class ConstructionFailure : public std::runtime_error {
 public:
  explicit ConstructionFailure(FailureWitness witness);
  const FailureWitness& witness() const { return witness_; }

 private:
  FailureWitness witness_;
};

/// Linear extension used to visit ideals. `cardinality` walks ideals by
/// size, ties in canonical order. `agenda` keeps a FIFO of discovered
/// ideals: after each step, every known ideal containing the current one is
/// extended by every non-empty subset of the step's new points.
enum class IterationOrder { cardinality, agenda };

struct Construction {
  Poset poset;
  ProcessTrace trace;
  /// Ideals up to this cardinality were processed.
  std::size_t horizon = 0;
};

StepOutcome step(const Poset& poset, const Ideal& ideal, const DegreeFunction& degree);

/// Creates one point per weight, each covering the outcome's deletion set.
/// The weights must sum to the outcome's remaining budget.
std::vector<PointId> apply_new_points(Poset& poset, const StepOutcome& outcome,
                                      std::span<const Weight> weights);

/// Deterministic unit-weight process over all ideals of size <= max_ideal_size.
/// A non-empty `seed` is completed rather than built from scratch. Throws
/// ConstructionFailure when some ideal needs a negative weight of new points.
Construction construct(const DegreeFunction& degree, const WeightPolicy& policy,
                       std::size_t max_ideal_size,
                       IterationOrder order = IterationOrder::cardinality,
                       Poset seed = {});

/// Multisets of positive weights <= max_weight summing to `budget`, with at
/// most `max_parts` parts, each listed in non-increasing order. The
/// multisets come in descending lexicographic order.
std::vector<std::vector<Weight>> weight_multisets(Weight budget, Weight max_weight,
                                                  std::size_t max_parts);

struct SearchResult {
  /// Pairwise non-isomorphic completed lattices.
  std::vector<Construction> lattices;
  /// Branches abandoned because an ideal needed negative new weight.
  std::uint64_t pruned_negative = 0;
  /// Branches abandoned because the budget had no admissible multiset.
  std::uint64_t pruned_unsplittable = 0;
  /// Completed branches that were isomorphic to an earlier result.
  std::uint64_t duplicates = 0;
  std::uint64_t branches_explored = 0;
  /// Number of weight choices at the empty ideal.
  std::size_t root_branches = 0;
  /// Set when branch_limit stopped the search early.
  bool partial = false;

  std::uint64_t pruned() const { return pruned_negative + pruned_unsplittable; }
};

/// Depth-first exploration of every weight choice in cardinality order.
SearchResult search(const DegreeFunction& degree, const WeightPolicy& policy,
                    std::size_t max_ideal_size, std::uint64_t branch_limit);

}  // namespace difflat
