#include <doctest.h>

#include "difflat/analyzer.hpp"
#include "difflat/enumeration.hpp"
#include "support.hpp"

using namespace difflat;
using difflat::testing::ideal_of;
using difflat::testing::ids_of;

namespace {

const DegreeFunction kTwo = DegreeFunction::constant(2);

const RelationCheck* find_check(const DerivedRelationsReport& r, Relation rel,
                                const PointSet& subjects) {
  for (const auto& c : r.checks) {
    if (c.relation == rel && c.subjects == subjects) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("analyzer") {

TEST_CASE("verify_differential examples") {
  const Poset fixture = difflat::testing::y2_fixture();
  const auto clean = verify_differential(fixture, kTwo, 3);
  CHECK(clean.ok());
  CHECK(clean.checked_horizon == 3);
  CHECK(clean.ideal_count == 1 + 2 + 5 + 10);

  const auto empty = verify_differential(Poset{}, DegreeFunction::constant(1), 0);
  REQUIRE(empty.violations.size() == 1);
  CHECK(empty.violations[0].ideal == Ideal{});
  CHECK(empty.violations[0].lhs == 0);
  CHECK(empty.violations[0].rhs == 1);
}

TEST_CASE("removing the cover G -> C") {
  // G becomes minimal, so it is an insertion point of {} as well. By hand:
  // {}: A, B, G give 3 against 0 + 2. {A,C}: B, D, G give 3 against 1 + 2,
  // which balances.
  const Poset mutated =
      read_poset_file(difflat::testing::fixture_path("y2_h3_mutated.poset"));
  const auto report = verify_differential(mutated, kTwo, 3);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].ideal == Ideal{});
  CHECK(report.violations[0].lhs == 3);
  CHECK(report.violations[0].rhs == 2);
  for (const auto& v : report.violations) {
    CHECK(v.ideal != ideal_of(mutated, {"A", "C"}));
  }

  const auto brute = difflat::testing::brute_force_violations(mutated, 2, 3);
  REQUIRE(brute.size() == report.violations.size());
  for (std::size_t k = 0; k < brute.size(); ++k) {
    CHECK(Ideal(brute[k].ideal) == report.violations[k].ideal);
    CHECK(brute[k].lhs == report.violations[k].lhs);
    CHECK(brute[k].rhs == report.violations[k].rhs);
  }
}

TEST_CASE("verify_differential agrees with the brute-force checker") {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    const Poset poset = difflat::testing::random_poset(rng, 3 + round % 8);
    const Weight d = 1 + round % 3;
    const std::size_t k = round % 4;
    const auto report = verify_differential(poset, DegreeFunction::constant(d), k);
    const auto brute = difflat::testing::brute_force_violations(poset, d, k);
    REQUIRE(report.violations.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(report.violations[i].ideal == Ideal(brute[i].ideal));
      CHECK(report.violations[i].lhs == brute[i].lhs);
    }
  }
}

TEST_CASE("violations persist when the horizon grows") {
  std::mt19937 rng(8);
  for (int round = 0; round < 30; ++round) {
    const Poset poset = difflat::testing::random_poset(rng, 4 + round % 6);
    const auto low = verify_differential(poset, kTwo, 2);
    const auto high = verify_differential(poset, kTwo, 4);
    for (const auto& v : low.violations) {
      const bool present = std::any_of(high.violations.begin(), high.violations.end(),
                                       [&](const Violation& w) {
                                         return w.ideal == v.ideal && w.lhs == v.lhs &&
                                                w.rhs == v.rhs;
                                       });
      CHECK(present);
    }
  }
}

TEST_CASE("verified horizon") {
  const Poset fixture = difflat::testing::y2_fixture();
  CHECK(verified_horizon(fixture, kTwo, 20) == 3u);
  CHECK(verified_horizon(fixture, kTwo, 2) == 2u);
  CHECK_FALSE(verified_horizon(Poset{}, kTwo, 5).has_value());
  CHECK_FALSE(verified_horizon(fixture, DegreeFunction::constant(1), 5).has_value());
}

TEST_CASE("orphan report examples") {
  const Poset fixture = difflat::testing::y2_fixture();
  const OrphanReport report = orphan_report(fixture);
  for (const char* name : {"C", "D", "E", "F", "G", "H", "J", "K", "M", "N", "O", "P"}) {
    CHECK(contains(report.orphans, fixture.at(name)));
  }
  for (const char* name : {"A", "B", "I", "L"}) {
    CHECK_FALSE(contains(report.orphans, fixture.at(name)));
  }
  CHECK(report.multi_orphan_parents.empty());
  for (PointId p : fixture.ids()) {
    CHECK(contains(report.orphans, p) == (fixture.lower_covers(p).size() == 1));
  }

  const Poset s = difflat::testing::star(1, 3);
  const OrphanReport star_report = orphan_report(s);
  REQUIRE(star_report.multi_orphan_parents.size() == 1);
  CHECK(star_report.multi_orphan_parents[0].first == s.at("P"));
  CHECK(star_report.multi_orphan_parents[0].second == 3);

  Poset single;
  single.add_point(1, {});
  CHECK(orphan_report(single).orphans.empty());
  CHECK(orphan_report(single).multi_orphan_parents.empty());
}

TEST_CASE("derived relations on the fixture") {
  const Poset fixture = difflat::testing::y2_fixture();
  const auto at_a = derived_relations(fixture, 2, fixture.at("A"));
  CHECK(at_a.a_set == ids_of(fixture, {"C", "D"}));
  CHECK(at_a.i_set == ids_of(fixture, {"B"}));
  REQUIRE(at_a.b_sets.size() == 2);
  CHECK(at_a.b_sets[0] == ids_of(fixture, {"G"}));
  CHECK(at_a.b_sets[1] == ids_of(fixture, {"H"}));
  REQUIRE(at_a.c_sets.size() == 1);
  CHECK(at_a.c_sets[0].second == ids_of(fixture, {"I"}));

  const auto* balance = find_check(at_a, Relation::balance, {});
  REQUIRE(balance != nullptr);
  CHECK(balance->lhs == 3);
  CHECK(balance->rhs == 3);
  const auto* orphan_split = find_check(at_a, Relation::orphan_split, ids_of(fixture, {"C"}));
  REQUIRE(orphan_split != nullptr);
  CHECK(orphan_split->lhs == 1);
  CHECK(orphan_split->rhs == 1);
  const auto* pair_cover = find_check(at_a, Relation::pair_cover, ids_of(fixture, {"C", "D"}));
  REQUIRE(pair_cover != nullptr);
  CHECK(pair_cover->lhs == 1);
  CHECK(pair_cover->rhs == 1);
  CHECK(at_a.all_hold());

  const auto at_b = derived_relations(fixture, 2, fixture.at("B"));
  CHECK(at_b.a_set == ids_of(fixture, {"E", "F"}));
  CHECK(at_b.i_set == ids_of(fixture, {"A"}));
  CHECK(at_b.b_sets[0] == ids_of(fixture, {"J"}));
  CHECK(at_b.b_sets[1] == ids_of(fixture, {"K"}));
  CHECK(at_b.c_sets[0].second == ids_of(fixture, {"L"}));
  CHECK(at_b.all_hold());

  // [C] = {A, C} needs verification up to size 4, beyond the fixture.
  CHECK_THROWS_AS(derived_relations(fixture, 2, fixture.at("C")), PreconditionError);
  CHECK(derived_relations_all(fixture, 2, 3).size() == 2);
}

TEST_CASE("derived relations hold on constructed lattices") {
  for (Weight d = 1; d <= 3; ++d) {
    const auto run = construct(DegreeFunction::constant(d), WeightPolicy::unit(), 6);
    const auto reports = derived_relations_all(run.poset, d, 6);
    CHECK(!reports.empty());
    for (const auto& r : reports) {
      CHECK(r.all_hold());
      for (const auto& b : r.b_sets) {
        for (PointId q : b) CHECK(run.poset.lower_covers(q).size() == 1);
      }
      for (const auto& [pair, c] : r.c_sets) {
        for (PointId q : c) CHECK(run.poset.lower_covers(q).size() == 2);
      }
      for (PointId a : r.a_set) CHECK_FALSE(contains(r.i_set, a));
    }
    CHECK(triple_orphan_check(run.poset, d, 6).empty());
  }
}

TEST_CASE("the three-orphan star") {
  const Poset s = difflat::testing::star(1, 3);
  CHECK(find_triple_orphans(s) == ids_of(s, {"P"}));
  const std::size_t principal = generated_ideal(s, ids_of(s, {"P"})).size();
  CHECK_FALSE(verify_differential(s, kTwo, principal + 3).ok());
  CHECK_THROWS_AS(triple_orphan_check(s, 2, principal + 3), PreconditionError);
  CHECK_THROWS_AS(derived_relations(s, 2, s.at("P")), PreconditionError);
}

}  // TEST_SUITE
