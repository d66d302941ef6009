#include "difflat/process.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "difflat/enumeration.hpp"

namespace difflat {

DegreeFunction DegreeFunction::constant(Weight d) {
  if (d < 1) {
    throw std::invalid_argument("differential degree must be positive");
  }
  DegreeFunction f;
  f.constant_ = d;
  return f;
}

DegreeFunction DegreeFunction::by_size(std::vector<Weight> table) {
  if (table.empty()) {
    throw std::invalid_argument("degree table is empty");
  }
  for (Weight d : table) {
    if (d < 1) {
      throw std::invalid_argument("differential degree must be positive");
    }
  }
  DegreeFunction f;
  f.table_ = std::move(table);
  return f;
}

Weight DegreeFunction::operator()(std::size_t cardinality) const {
  if (table_.empty()) {
    return constant_;
  }
  if (cardinality >= table_.size()) {
    throw std::out_of_range("degree table has no entry for ideal size " +
                            std::to_string(cardinality));
  }
  return table_[cardinality];
}

Weight DegreeFunction::operator()(const Ideal& ideal) const {
  return (*this)(ideal.size());
}

WeightPolicy WeightPolicy::search(Weight max_weight, std::size_t max_new_points) {
  if (max_weight < 1 || max_new_points < 1) {
    throw std::invalid_argument("search policy bounds must be positive");
  }
  return WeightPolicy{Kind::search, max_weight, max_new_points};
}

const TraceRecord* ProcessTrace::find(const Ideal& ideal) const {
  for (const auto& record : records) {
    if (record.outcome.ideal == ideal) {
      return &record;
    }
  }
  return nullptr;
}

ConstructionFailure::ConstructionFailure(FailureWitness witness)
    : std::runtime_error("construction failed at ideal " +
                         format_set(witness.snapshot, witness.ideal.members()) +
                         ": new weight budget " +
                         std::to_string(witness.new_weight_budget)),
      witness_(std::move(witness)) {}

StepOutcome step(const Poset& poset, const Ideal& ideal, const DegreeFunction& degree) {
  StepOutcome out;
  out.ideal = ideal;
  out.deletion_set = deletion_points(poset, ideal);
  out.deletion_weight = weight_sum(poset, out.deletion_set);
  out.degree = degree(ideal);
  out.total_insertion_weight = out.deletion_weight + out.degree;

  for (PointId q : insertion_points(poset, ideal)) {
    const auto covers = poset.lower_covers(q);
    const bool covers_deletion_set =
        std::equal(covers.begin(), covers.end(), out.deletion_set.begin(),
                   out.deletion_set.end());
    if (!covers_deletion_set) {
      out.old_insertion_points.push_back(q);
      continue;
    }
    // q lies above exactly the members of this ideal. Only a seed point may
    // do so before the ideal is processed.
    if (const auto& origin = poset.point(q).provenance) {
      throw std::logic_error(
          "point " + poset.name(q) + " was created at ideal " +
          format_set(poset, origin->members()) + " and lies above exactly " +
          format_set(poset, ideal.members()) +
          "; this ideal was already processed");
    }
    out.given_new_points.push_back(q);
  }
  out.old_insertion_weight = weight_sum(poset, out.old_insertion_points);
  out.given_new_weight = weight_sum(poset, out.given_new_points);
  out.new_weight_budget = out.total_insertion_weight - out.old_insertion_weight;
  return out;
}

std::vector<PointId> apply_new_points(Poset& poset, const StepOutcome& outcome,
                                      std::span<const Weight> weights) {
  if (outcome.remaining_budget() < 0) {
    throw std::invalid_argument("negative new-point budget " +
                                std::to_string(outcome.remaining_budget()));
  }
  const Weight total = std::accumulate(weights.begin(), weights.end(), Weight{0});
  if (total != outcome.remaining_budget()) {
    throw std::invalid_argument("new-point weights sum to " + std::to_string(total) +
                                ", budget is " +
                                std::to_string(outcome.remaining_budget()));
  }
  std::vector<PointId> created;
  created.reserve(weights.size());
  for (Weight w : weights) {
    created.push_back(poset.add_point(w, outcome.deletion_set, outcome.ideal));
  }
  return created;
}

std::vector<std::vector<Weight>> weight_multisets(Weight budget, Weight max_weight,
                                                  std::size_t max_parts) {
  std::vector<std::vector<Weight>> out;
  if (budget < 0) {
    return out;
  }
  std::vector<Weight> parts;
  std::function<void(Weight, Weight)> extend = [&](Weight rest, Weight cap) {
    if (rest == 0) {
      out.push_back(parts);
      return;
    }
    if (parts.size() == max_parts) {
      return;
    }
    for (Weight w = std::min(rest, cap); w >= 1; --w) {
      parts.push_back(w);
      extend(rest - w, w);
      parts.pop_back();
    }
  };
  extend(budget, max_weight);
  return out;
}

namespace {

// Applies `weights` and records the step in the trace.
void record_step(Poset& poset, ProcessTrace& trace, StepOutcome outcome,
                 std::span<const Weight> weights) {
  TraceRecord record;
  const auto ids = apply_new_points(poset, outcome, weights);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    record.created.emplace_back(ids[i], weights[i]);
  }
  record.outcome = std::move(outcome);
  trace.records.push_back(std::move(record));
}

[[noreturn]] void fail(const Poset& poset, const ProcessTrace& trace,
                       const StepOutcome& outcome) {
  throw ConstructionFailure(
      FailureWitness{outcome.ideal, outcome.remaining_budget(), poset, trace});
}

std::vector<Weight> unit_weights(Weight budget) {
  return std::vector<Weight>(static_cast<std::size_t>(budget), Weight{1});
}

Construction construct_by_cardinality(const DegreeFunction& degree,
                                      std::size_t max_ideal_size, Poset poset) {
  Construction out;
  std::vector<Ideal> level{Ideal{}};
  for (std::size_t n = 0; n <= max_ideal_size && !level.empty(); ++n) {
    for (const Ideal& ideal : level) {
      StepOutcome outcome = step(poset, ideal, degree);
      if (outcome.remaining_budget() < 0) {
        fail(poset, out.trace, outcome);
      }
      const auto weights = unit_weights(outcome.remaining_budget());
      record_step(poset, out.trace, std::move(outcome), weights);
    }
    if (n < max_ideal_size) {
      level = next_level(poset, level);
    }
  }
  out.poset = std::move(poset);
  out.horizon = max_ideal_size;
  return out;
}

Construction construct_by_agenda(const DegreeFunction& degree,
                                 std::size_t max_ideal_size, Poset poset) {
  Construction out;
  std::vector<Ideal> agenda{Ideal{}};
  std::set<Ideal> known{Ideal{}};
  std::set<Ideal> processed;

  for (std::size_t index = 0; index < agenda.size(); ++index) {
    const Ideal ideal = agenda[index];
    for (PointId d : deletion_points(poset, ideal)) {
      if (!processed.contains(ideal.without(d))) {
        throw std::logic_error("agenda order reached " +
                               format_set(poset, ideal.members()) +
                               " before its sub-ideal without " + poset.name(d));
      }
    }

    StepOutcome outcome = step(poset, ideal, degree);
    if (outcome.remaining_budget() < 0) {
      fail(poset, out.trace, outcome);
    }
    PointSet fresh = outcome.given_new_points;
    const auto weights = unit_weights(outcome.remaining_budget());
    record_step(poset, out.trace, std::move(outcome), weights);
    for (const auto& [id, weight] : out.trace.records.back().created) {
      fresh.push_back(id);
    }
    processed.insert(ideal);

    if (fresh.empty()) {
      continue;
    }
    if (fresh.size() > 20) {
      throw std::length_error("too many new points at one ideal for agenda order");
    }
    const std::size_t known_before = agenda.size();
    for (std::size_t j = 0; j < known_before; ++j) {
      const Ideal base = agenda[j];
      if (!std::includes(base.members().begin(), base.members().end(),
                         ideal.members().begin(), ideal.members().end())) {
        continue;
      }
      for (std::uint32_t mask = 1; mask < (1u << fresh.size()); ++mask) {
        PointSet subset;
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          if (mask & (1u << b)) subset.push_back(fresh[b]);
        }
        if (base.size() + subset.size() > max_ideal_size) {
          continue;
        }
        Ideal larger = base.with(subset);
        if (known.insert(larger).second) {
          agenda.push_back(std::move(larger));
        }
      }
    }
  }

  if (processed.size() != enumerate_ideals(poset, max_ideal_size).size()) {
    throw std::logic_error("agenda order missed some ideals");
  }
  out.poset = std::move(poset);
  out.horizon = max_ideal_size;
  return out;
}

struct Branch {
  Poset poset;
  ProcessTrace trace;
  std::vector<Ideal> level{Ideal{}};
  std::size_t index = 0;
  std::size_t cardinality = 0;
};

class Searcher {
 public:
  Searcher(const DegreeFunction& degree, const WeightPolicy& policy,
           std::size_t horizon, std::uint64_t branch_limit)
      : degree_(degree), policy_(policy), horizon_(horizon), limit_(branch_limit) {}

  void explore(Branch branch) {
    while (true) {
      if (branch.index == branch.level.size()) {
        if (branch.cardinality == horizon_) {
          emit(std::move(branch));
          return;
        }
        branch.level = next_level(branch.poset, branch.level);
        branch.index = 0;
        ++branch.cardinality;
        continue;
      }

      StepOutcome outcome = step(branch.poset, branch.level[branch.index], degree_);
      const Weight remaining = outcome.remaining_budget();
      if (remaining < 0) {
        ++result.pruned_negative;
        return;
      }
      auto options = weight_multisets(remaining, policy_.max_weight,
                                      policy_.max_new_points);
      if (options.empty()) {
        ++result.pruned_unsplittable;
        return;
      }
      if (outcome.ideal.empty()) {
        result.root_branches = options.size();
      }
      if (options.size() == 1) {
        record_step(branch.poset, branch.trace, std::move(outcome), options.front());
        ++branch.index;
        continue;
      }
      for (const auto& weights : options) {
        if (result.branches_explored >= limit_) {
          result.partial = true;
          return;
        }
        ++result.branches_explored;
        Branch child = branch;
        record_step(child.poset, child.trace, outcome, weights);
        ++child.index;
        explore(std::move(child));
      }
      return;
    }
  }

  SearchResult result;

 private:
  void emit(Branch branch) {
    if (!seen_.insert(canonical_form(branch.poset)).second) {
      ++result.duplicates;
      return;
    }
    result.lattices.push_back(
        Construction{std::move(branch.poset), std::move(branch.trace), horizon_});
  }

  const DegreeFunction& degree_;
  const WeightPolicy& policy_;
  std::size_t horizon_;
  std::uint64_t limit_;
  std::set<CanonicalForm> seen_;
};

}  // namespace

Construction construct(const DegreeFunction& degree, const WeightPolicy& policy,
                       std::size_t max_ideal_size, IterationOrder order, Poset seed) {
  if (policy.kind != WeightPolicy::Kind::unit) {
    throw std::invalid_argument("construct takes the unit weight policy; use search");
  }
  if (order == IterationOrder::agenda) {
    return construct_by_agenda(degree, max_ideal_size, std::move(seed));
  }
  return construct_by_cardinality(degree, max_ideal_size, std::move(seed));
}

SearchResult search(const DegreeFunction& degree, const WeightPolicy& policy,
                    std::size_t max_ideal_size, std::uint64_t branch_limit) {
  if (policy.kind != WeightPolicy::Kind::search) {
    throw std::invalid_argument("search takes a search weight policy");
  }
  Searcher searcher(degree, policy, max_ideal_size, branch_limit);
  searcher.explore(Branch{});
  return std::move(searcher.result);
}

}  // namespace difflat
