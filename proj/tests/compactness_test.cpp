#include <doctest.h>

#include "convkit/compactness.hpp"
#include "convkit/harness.hpp"
#include "convkit/oracle.hpp"
#include "support.hpp"

using namespace convkit;
using convkit::test::set;

TEST_CASE("compactness at a family in S3") {
  FiniteSpace s = test::s3();
  const GroundSet& g = s.ground();
  const FilterClass f1 = FilterClass::F1();
  CHECK(is_compact_at(s, set(g, "c"), set(g, "b"), f1));
  CompactVerdict v = compact_at(s, Family::principal(g, set(g, "c")), Family::principal(g, set(g, "a")), f1);
  CHECK_FALSE(v.holds);
  REQUIRE(v.refuter.has_value());
  CHECK_FALSE(s.adh(*v.refuter).meets(set(g, "a")));
  for_each_subset(g.full(), [&](Subset f) { CHECK(is_compact_at(s, f, g.full(), f1)); });
}

TEST_CASE("compactness against the definition") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n)) {
      oracle::Convergence c = oracle::bare(s);
      for (const char* name : {"F1", "clF1"}) {
        FilterClass d = FilterClass::parse(name);
        CompactTable table(s, d);
        for_each_subset(s.full(), [&](Subset f) {
          for_each_subset(s.full(), [&](Subset a) {
            bool expect = oracle::compact_at(c, name, Filter::principal(s.ground(), f), a);
            CHECK(is_compact_at(s, f, a, d) == expect);
            CHECK(table.at(f, a) == expect);
          });
        });
      }
    }
}

TEST_CASE("points are compact at themselves") {
  for (const FiniteSpace& s : enumerate_spaces(3))
    for (int x = 0; x < 3; ++x) CHECK(is_compact_set(s, Subset::singleton(x), FilterClass::F1()));
}

TEST_CASE("(D/F1)-compactness implies D-compactness") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n))
      for (const FilterClass& d : {FilterClass::F1(), FilterClass::ClF1()})
        for_each_subset(s.full(), [&](Subset f) {
          for_each_subset(s.full(), [&](Subset b) {
            if (is_dj_compact_at(s, f, b, d, FilterClass::F1())) CHECK(is_compact_at(s, f, b, d));
          });
        });
}

TEST_CASE("(D/D)-compactness implies D-compactness but not conversely") {
  // K # F gives adh_D K # F, so (D/D) quantifies over more filters.
  FiniteSpace s = test::s3();
  bool strict = false;
  for (const FilterClass& d : {FilterClass::F1(), FilterClass::ClF1()})
    for_each_subset(s.full(), [&](Subset f) {
      for_each_subset(s.full(), [&](Subset b) {
        bool dd = is_dj_compact_at(s, f, b, d, d), c = is_compact_at(s, f, b, d);
        if (dd) CHECK(c);
        strict = strict || (c && !dd);
      });
    });
  CHECK(strict);
}

TEST_CASE("covers") {
  FiniteSpace s = test::s3();
  const GroundSet& g = s.ground();
  for_each_subset(g.full(), [&](Subset k) { CHECK(is_cover(s, Family::principal(g, g.full()), k)); });
  FiniteSpace one = enumerate_spaces(1).front();
  CHECK(cover_compactness(one, one.full()).by_covers);
  // Every finite convergence is a pretopology, so compact and cover-compact
  // coincide.
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& sp : enumerate_spaces(n))
      for_each_subset(sp.full(), [&](Subset k) {
        if (k.empty()) return;
        CoverCompactness c = cover_compactness(sp, k);
        CHECK(c.by_covers == c.by_filters);
        CHECK(c.by_covers == c.compact);
      });
}

TEST_CASE("the P-diagonal bridge") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n)) {
      PdiagReport r = pdiag_bridge(s, FilterClass::F1());
      if (s.is_topology()) CHECK(r.forward == Outcome::holds);
      CHECK(r.forward != Outcome::fails);
      CHECK(r.converse != Outcome::fails);
    }
}

TEST_CASE("outcome names") {
  CHECK(std::string(to_string(Outcome::not_applicable)) == "not-applicable");
  CHECK(std::string(to_string(Outcome::vacuous)) == "vacuous");
}
