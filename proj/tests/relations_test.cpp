#include <doctest.h>

#include "convkit/harness.hpp"
#include "convkit/relations.hpp"
#include "support.hpp"

using namespace convkit;
using convkit::test::set;

namespace {

Relation map_of(const FiniteSpace& xi, const FiniteSpace& tau, std::vector<int> t) {
  return Relation::from_map(xi.ground(), tau.ground(), t);
}

const FilterClass f1 = FilterClass::F1();
const FilterClass cl = FilterClass::ClF1();

}  // namespace

TEST_CASE("the identity has every property") {
  for (const FiniteSpace& s : enumerate_spaces(3)) {
    Relation id = Relation::identity(s.ground());
    for (const FilterClass& d : {f1, cl, FilterClass::F()}) {
      CHECK(relation_compact(id, s, s, d).holds);
      CHECK(is_D_perfect(id, d, s, s).holds);
      CHECK(is_D_quotient(id, d, s, s).holds);
    }
    CHECK(is_adherent(id, s, s).holds);
    CHECK(is_closed_map(id, s, s).holds);
    for (const NotionVerdict& v : classify(id, s, s).verdicts)
      if (v.value) CHECK_MESSAGE(*v.value, v.notion);
  }
}

TEST_CASE("continuity and compact relations") {
  FiniteSpace s = test::s3(), y = test::two();
  // a, b ↦ 0 and c ↦ 1 lands in the final structure of S3, so it is
  // continuous.
  Relation f = map_of(s, y, {0, 0, 1});
  CHECK(is_continuous(f, s, y));
  CHECK(relation_compact(f, s, y, FilterClass::F()).holds);

  // a ↦ 1 and b, c ↦ 0 is not: {b}↑ → a in S3 but {0}↑ does not converge to 1.
  Relation g = map_of(s, y, {1, 0, 0});
  CHECK_FALSE(is_continuous(g, s, y));
  Verdict v = relation_compact(g, s, y, FilterClass::F());
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.witness.empty());

  for (const FiniteSpace& xi : enumerate_spaces(3))
    for (const FiniteSpace& tau : enumerate_spaces(2))
      for_each_map(xi.ground(), tau.ground(), [&](const Relation& h) {
        CHECK(is_continuous(h, xi, tau) == relation_compact(h, xi, tau, FilterClass::F()).holds);
      });
}

TEST_CASE("D-compact relations are decided at points") {
  for (const FiniteSpace& xi : enumerate_spaces(2))
    for (const FiniteSpace& tau : enumerate_spaces(3)) {
      CompactTable tx(xi, f1), tt(tau, f1);
      for_each_relation(xi.ground(), tau.ground(), [&](const Relation& r) {
        CHECK(relation_compact(r, tx, tt) == relation_compact_pointwise(r, xi, tt));
        CHECK(relation_compact(r, tx, tt) == relation_compact(r, xi, tau, f1).holds);
      });
    }
}

TEST_CASE("constant maps are closed") {
  for (const FiniteSpace& xi : enumerate_spaces(3))
    for (const FiniteSpace& tau : enumerate_spaces(2))
      for (int y = 0; y < 2; ++y) {
        Relation c = map_of(xi, tau, {y, y, y});
        // The image of a nonempty closed set is {y}.
        CHECK(is_closed_map(c, xi, tau).holds == tau.is_closed(Subset::singleton(y)));
        // Adherent: y' ∈ adh {y} forces y' = y, since fibers of other
        // points are empty.
        CHECK(is_adherent(c, xi, tau).holds == (tau.adh(Subset::singleton(y)) == Subset::singleton(y)));
      }
}

TEST_CASE("adherent maps") {
  for (const FiniteSpace& xi : enumerate_spaces(3))
    for (const FiniteSpace& tau : enumerate_spaces(2)) {
      CompactTable tx(xi, f1), tt(tau, f1);
      for_each_map(xi.ground(), tau.ground(), [&](const Relation& f) {
        bool adherent = is_adherent(f, xi, tau).holds;
        CHECK(adherent == relation_compact(f.inverse(), tt, tx));
        if (adherent) CHECK(is_closed_map(f, xi, tau).holds);
        if (adherences_closed(xi) && is_closed_map(f, xi, tau).holds) CHECK(adherent);
      });
    }
}

TEST_CASE("a quotient that is not hereditarily quotient") {
  GroundSet g = test::letters("abc");
  FiniteSpace xi(g, {set(g, "ac"), set(g, "ab"), set(g, "c")});
  FiniteSpace tau(g, {set(g, "abc"), set(g, "bc"), set(g, "c")});
  Relation f = map_of(xi, tau, {1, 0, 2});
  CHECK(is_continuous(f, xi, tau));
  CHECK(is_D_quotient(f, cl, xi, tau).holds);
  Verdict q = is_D_quotient(f, f1, xi, tau);
  CHECK_FALSE(q.holds);
  CHECK(q.witness.find("H={a}") != std::string::npos);
}

TEST_CASE("quotient characterizations agree") {
  for (const FiniteSpace& xi : enumerate_spaces(3))
    for (const FiniteSpace& tau : enumerate_spaces(2))
      for_each_surjection(xi.ground(), tau.ground(), [&](const Relation& f) {
        QuotientCharacterizations q = quotient_characterizations(f, f1, xi, tau);
        CHECK(q.definitional == q.via_reflector);
        CHECK(q.via_reflector == q.via_relation);
      });
}

TEST_CASE("non-surjective maps") {
  FiniteSpace s = test::s3();
  FiniteSpace four(indexed_ground(4), {Subset{1}, Subset{2}, Subset{4}, Subset{8}});
  Relation into = map_of(s, four, {0, 1, 2});
  CHECK_THROWS(is_D_quotient(into, f1, s, four));
  MapClassification c = classify(into, s, four);
  bool saw_quotient = false;
  for (const NotionVerdict& v : c.verdicts)
    if (v.notion.rfind("quotient", 0) == 0) {
      saw_quotient = true;
      CHECK_FALSE(v.value.has_value());
      CHECK(v.note == "not surjective");
    }
  CHECK(saw_quotient);
}

TEST_CASE("upper semicontinuity between topologies") {
  for (const FiniteSpace& xi : enumerate_spaces(2))
    for (const FiniteSpace& tau : enumerate_spaces(3)) {
      if (!xi.is_topology() || !tau.is_topology()) continue;
      for_each_relation(xi.ground(), tau.ground(), [&](const Relation& r) {
        CHECK(is_usc(r, xi, tau) == relation_compact(r, xi, tau, f1).holds);
      });
    }
}

TEST_CASE("theorem reports gate on their hypotheses") {
  FiniteSpace s = test::s3();
  Relation id = Relation::identity(s.ground());
  TheoremReport r = theorem_mquot_range(id, s, s, f1, f1, f1);
  CHECK(r.outcome == Outcome::holds);
  CHECK(r.lhs);
  CHECK(r.rhs);

  // The range is not Adh_clF1-fixed.
  TheoremReport g = theorem_mquot_range(id, s, s, cl, f1, f1);
  CHECK(g.outcome == Outcome::not_applicable);
  CHECK_FALSE(g.hypothesis_failure.empty());
}

TEST_CASE("class inclusion") {
  for (const FiniteSpace& s : enumerate_spaces(3)) {
    CHECK(class_included(cl, f1, s));
    CHECK(class_included(f1, cl, s) == (s == FiniteSpace::discrete(s.ground())));
  }
}
