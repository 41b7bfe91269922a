#include <doctest.h>

#include "convkit/cascade.hpp"
#include "convkit/filter_class.hpp"
#include "convkit/harness.hpp"
#include "convkit/oracle.hpp"
#include "support.hpp"

using namespace convkit;
using convkit::test::set;

TEST_CASE("class members") {
  FiniteSpace s = test::s3();
  const GroundSet& g = s.ground();
  std::vector<Subset> closed{Subset{}, set(g, "a"), set(g, "ab"), set(g, "abc")};
  CHECK(FilterClass::ClF1().members(s) == closed);
  CHECK(FilterClass::F1().members(enumerate_spaces(2).front()).size() == 4);
  for (const char* tag : {"F1", "Fw", "F", "Fdw", "E"}) {
    FilterClass c = FilterClass::parse(tag);
    CHECK(c.collapses_to_principal());
    CHECK(c.members(s).size() == 8);
  }
  CHECK(FilterClass::degenerate_only().members(s) == std::vector<Subset>{Subset{}});
}

TEST_CASE("class tags round-trip") {
  for (const char* tag : {"F1", "Fw", "F", "Fdw", "clF1", "E", "deg", "int(F1)", "mr(F1,clF1)", "mr(Fw,Fw)"})
    CHECK(FilterClass::parse(tag).name() == tag);
  CHECK_THROWS(FilterClass::parse("F2"));
  CHECK_THROWS(FilterClass::parse("mr(F1"));
}

TEST_CASE("contours of principal multifilters are principal") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n))
      CHECK(int_class(FilterClass::F1()).members(s) == FilterClass::F1().members(s));
  FiniteSpace s = test::s3();
  CHECK(int_class(FilterClass::degenerate_only()).members(s) == std::vector<Subset>{Subset{}});
}

TEST_CASE("the adherence reflector") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n)) CHECK(adh_reflector(s, FilterClass::F1()) == s);
  FiniteSpace s = test::s3();
  FiniteSpace a = adh_reflector(s, FilterClass::ClF1());
  CHECK(a.pointlim(2) == s.full());
  // Against the definition.
  oracle::Convergence c = oracle::bare(s);
  for_each_subset(s.full(), [&](Subset k) {
    CHECK(a.lim(k) == oracle::adh_reflector_lim(c, "clF1", Filter::principal(s.ground(), k)));
  });
  FiniteSpace d = adh_reflector(s, FilterClass::degenerate_only());
  for (int x = 0; x < 3; ++x) CHECK(d.pointlim(x) == s.full());
}

TEST_CASE("the reflector is idempotent and coarsens") {
  for (const FiniteSpace& s : enumerate_spaces(3))
    for (const FilterClass& d : {FilterClass::F1(), FilterClass::ClF1()}) {
      FiniteSpace a = adh_reflector(s, d);
      CHECK(s.finer_than(a));
      CHECK(adh_reflector(a, d, &s) == adh_reflector(adh_reflector(a, d, &s), d, &s));
    }
}

TEST_CASE("the base coreflector") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n)) {
      CHECK(base_coreflector(s, FilterClass::F1()) == s);
      CHECK(base_coreflector(s, FilterClass::Seq()) == s);
      // Only the degenerate filter: nothing but the forced limits remain.
      FiniteSpace d = base_coreflector(s, FilterClass::degenerate_only());
      for (int x = 0; x < n; ++x) CHECK(d.pointlim(x) == Subset::singleton(x));
      oracle::Convergence c = oracle::bare(s);
      for_each_subset(s.full(), [&](Subset k) {
        CHECK(base_lim(s, FilterClass::ClF1(), k) == oracle::base_lim(c, "clF1", Filter::principal(s.ground(), k)));
      });
    }
}

TEST_CASE("accessibility") {
  const FilterClass f1 = FilterClass::F1(), cl = FilterClass::ClF1();
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n)) {
      for (const FilterClass& j : {f1, cl}) CHECK(is_accessible(s, j, f1));
      AccessibilityResult r = accessibility(s, f1, cl);
      CHECK(r.definitional == r.via_reflectors);
    }
  FiniteSpace one = enumerate_spaces(1).front();
  for (const FilterClass& j : {f1, cl})
    for (const FilterClass& d : {f1, cl}) CHECK(is_accessible(one, j, d));

  // (F1/clF1) on S3 from the definition: adh J ⊆ adh_{Base ξ} J.
  FiniteSpace s = test::s3();
  std::vector<Subset> base = base_limits(s, cl);
  bool definitional = true;
  for_each_subset(s.full(), [&](Subset j) {
    Subset adh_base;
    for (int x = 0; x < 3; ++x)
      if (base[static_cast<std::size_t>(x)].meets(j)) adh_base |= Subset::singleton(x);
    definitional = definitional && s.adh(j).subset_of(adh_base);
  });
  CHECK(accessibility(s, f1, cl).definitional == definitional);
}

TEST_CASE("meshable-refinable filters") {
  for (const FiniteSpace& s : enumerate_spaces(3))
    for_each_subset(s.full(), [&](Subset f) {
      CHECK(is_mesh_refinable(f, FilterClass::F1(), FilterClass::F(), s));
      if (f.size() == 1) CHECK(is_mesh_refinable(f, FilterClass::F1(), FilterClass::F1(), s));
    });
}

TEST_CASE("neighborhood filters name the accessible topologies") {
  const FilterClass fw = FilterClass::Fomega();
  for (const FiniteSpace& s : enumerate_spaces(3)) {
    if (!s.is_topology()) continue;
    for (const FilterClass& j : {FilterClass::F(), fw, FilterClass::F1(), FilterClass::FwedgeOmega()}) {
      bool all = true;
      for (int x = 0; x < 3; ++x) all = all && is_mesh_refinable(s.nbhd(x), j, fw, s);
      CHECK(is_accessible(s, j, fw) == all);
    }
  }
}

TEST_CASE("composability") {
  CHECK(is_composable(FilterClass::F1(), FilterClass::F1()).holds);
  for (const FilterClass& c : {FilterClass::F1(), FilterClass::Fomega(), FilterClass::F(), FilterClass::FwedgeOmega(),
                               FilterClass::Seq(), FilterClass::degenerate_only()})
    CHECK(is_f1_composable(c));
  // The closed-set class is not: the image of a closed set under a relation
  // need not be closed.
  ComposabilityResult r = is_composable(FilterClass::ClF1(), FilterClass::F1());
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("adh-stability") {
  for (const FiniteSpace& s : enumerate_spaces(3)) {
    CHECK(adh_stable(FilterClass::F1(), s));
    CHECK(adh_stable(FilterClass::ClF1(), s));
  }
}
