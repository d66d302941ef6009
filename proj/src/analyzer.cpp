#include "difflat/analyzer.hpp"

#include <algorithm>

#include "difflat/enumeration.hpp"

namespace difflat {
namespace {

std::optional<Violation> check_ideal(const Poset& poset, const DegreeFunction& degree,
                                     const Ideal& ideal) {
  const Weight lhs = weight_sum(poset, insertion_points(poset, ideal));
  const Weight rhs = weight_sum(poset, deletion_points(poset, ideal)) + degree(ideal);
  if (lhs == rhs) {
    return std::nullopt;
  }
  return Violation{ideal, lhs, rhs};
}

std::size_t principal_size(const Poset& poset, PointId p) {
  return generated_ideal(poset, PointSet{p}).size();
}

// Upper covers of p whose only lower cover is p.
PointSet orphans_over(const Poset& poset, PointId p) {
  PointSet out;
  for (PointId up : poset.upper_covers(p)) {
    if (poset.lower_covers(up).size() == 1) {
      out.push_back(up);
    }
  }
  normalize(out);
  return out;
}

void require_verified(const Poset& poset, Weight degree, std::size_t horizon,
                      const std::string& what) {
  const auto report = verify_differential(poset, DegreeFunction::constant(degree), horizon);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    throw PreconditionError(
        what + " requires the differential condition up to ideal size " +
        std::to_string(horizon) + "; it fails at " +
        format_set(poset, first.ideal.members()) + " (" + std::to_string(first.lhs) +
        " != " + std::to_string(first.rhs) + ")");
  }
}

DerivedRelationsReport relations_unchecked(const Poset& poset, Weight degree, PointId p) {
  DerivedRelationsReport report;
  report.point = p;
  report.degree = degree;
  const Weight wp = poset.weight(p);

  const Ideal principal = generated_ideal(poset, PointSet{p});
  report.a_set = orphans_over(poset, p);
  for (PointId q : insertion_points(poset, principal)) {
    const auto covers = poset.lower_covers(q);
    if (std::find(covers.begin(), covers.end(), p) == covers.end()) {
      report.i_set.push_back(q);
    }
  }

  report.checks.push_back(
      {Relation::balance, {}, wp + degree,
       weight_sum(poset, report.i_set) + weight_sum(poset, report.a_set)});

  for (PointId a : report.a_set) {
    const Ideal above = principal.with(a);
    PointSet b;
    for (PointId q : insertion_points(poset, above)) {
      const auto covers = poset.lower_covers(q);
      if (covers.size() == 1 && covers[0] == a) {
        b.push_back(q);
      }
    }
    report.checks.push_back(
        {Relation::orphan_split, {a}, 2 * poset.weight(a) - wp, weight_sum(poset, b)});
    report.b_sets.push_back(std::move(b));
  }

  for (std::size_t i = 0; i < report.a_set.size(); ++i) {
    for (std::size_t j = i + 1; j < report.a_set.size(); ++j) {
      const PointId ai = report.a_set[i];
      const PointId aj = report.a_set[j];
      const Ideal pair = principal.with(ai).with(aj);
      const PointSet expected{ai, aj};
      PointSet c;
      for (PointId q : insertion_points(poset, pair)) {
        const auto covers = poset.lower_covers(q);
        if (std::equal(covers.begin(), covers.end(), expected.begin(), expected.end())) {
          c.push_back(q);
        }
      }
      report.checks.push_back({Relation::pair_cover, expected, wp, weight_sum(poset, c)});
      report.c_sets.emplace_back(std::make_pair(ai, aj), std::move(c));
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_differential(const Poset& poset, const DegreeFunction& degree,
                                       std::size_t max_ideal_size) {
  VerificationReport report;
  report.checked_horizon = max_ideal_size;
  for (const Ideal& ideal : enumerate_ideals(poset, max_ideal_size)) {
    ++report.ideal_count;
    if (auto violation = check_ideal(poset, degree, ideal)) {
      report.violations.push_back(std::move(*violation));
    }
  }
  return report;
}

std::optional<std::size_t> verified_horizon(const Poset& poset,
                                            const DegreeFunction& degree,
                                            std::size_t cap) {
  std::optional<std::size_t> horizon;
  std::vector<Ideal> level{Ideal{}};
  for (std::size_t n = 0; n <= cap && !level.empty(); ++n) {
    for (const Ideal& ideal : level) {
      if (check_ideal(poset, degree, ideal)) {
        return horizon;
      }
    }
    horizon = n;
    if (n < cap) {
      level = next_level(poset, level);
    }
  }
  // Past the largest ideal every level is empty and vacuously verified.
  return cap;
}

OrphanReport orphan_report(const Poset& poset) {
  OrphanReport report;
  for (PointId p : poset.ids()) {
    if (poset.lower_covers(p).size() == 1) {
      report.orphans.push_back(p);
    }
  }
  for (PointId p : poset.ids()) {
    const std::size_t count = orphans_over(poset, p).size();
    if (count >= 3) {
      report.multi_orphan_parents.emplace_back(p, count);
    }
  }
  return report;
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::balance:
      return "balance";
    case Relation::orphan_split:
      return "orphan_split";
    case Relation::pair_cover:
      return "pair_cover";
  }
  return "?";
}

bool DerivedRelationsReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.holds(); });
}

DerivedRelationsReport derived_relations(const Poset& poset, Weight degree, PointId p) {
  require_verified(poset, degree, principal_size(poset, p) + 2,
                   "derived relations at " + poset.name(p));
  return relations_unchecked(poset, degree, p);
}

std::vector<DerivedRelationsReport> derived_relations_all(const Poset& poset,
                                                          Weight degree,
                                                          std::size_t horizon) {
  require_verified(poset, degree, horizon, "derived relations");
  std::vector<DerivedRelationsReport> out;
  for (PointId p : poset.ids()) {
    if (principal_size(poset, p) + 2 <= horizon) {
      out.push_back(relations_unchecked(poset, degree, p));
    }
  }
  return out;
}

PointSet find_triple_orphans(const Poset& poset) {
  PointSet out;
  for (const auto& [p, count] : orphan_report(poset).multi_orphan_parents) {
    out.push_back(p);
  }
  return out;
}

PointSet triple_orphan_check(const Poset& poset, Weight degree, std::size_t horizon) {
  require_verified(poset, degree, horizon, "triple orphan check");
  PointSet out;
  for (PointId p : find_triple_orphans(poset)) {
    if (principal_size(poset, p) + 3 <= horizon) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace difflat
