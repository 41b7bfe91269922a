#include <doctest.h>

#include "convkit/harness.hpp"
#include "convkit/oracle.hpp"
#include "convkit/space.hpp"
#include "support.hpp"

using namespace convkit;
using convkit::test::set;

TEST_CASE("limits and adherences in S3") {
  FiniteSpace s = test::s3();
  const GroundSet& g = s.ground();
  for (int x = 0; x < 3; ++x) CHECK(s.lim(Subset::singleton(x)) == s.pointlim(x));
  CHECK(s.lim(set(g, "bc")) == set(g, "b"));
  CHECK(s.adh(set(g, "c")) == set(g, "bc"));
  CHECK(adh_filter(s, Filter::degenerate(g)).empty());
  CHECK(lim(s, Filter::degenerate(g)) == g.full());
  for_each_subset(g.full(), [&](Subset a) { CHECK(a.subset_of(adh_set(s, a))); });
}

TEST_CASE("limits of meets are intersections of limits") {
  for (const FiniteSpace& s : enumerate_spaces(3))
    for_each_subset(s.full(), [&](Subset f) {
      for_each_subset(s.full(), [&](Subset h) {
        CHECK(lim(s, meet(Filter::principal(s.ground(), f), Filter::principal(s.ground(), h))) ==
              (s.lim(f) & s.lim(h)));
      });
    });
}

TEST_CASE("closure, closed sets and the topological modification in S3") {
  FiniteSpace s = test::s3();
  const GroundSet& g = s.ground();
  std::vector<Subset> expected{Subset{}, set(g, "a"), set(g, "ab"), set(g, "abc")};
  CHECK(s.closed_sets() == expected);
  CHECK(s.closure(set(g, "c")) == g.full());
  CHECK_FALSE(s.is_topology());
  FiniteSpace t = topologize(s);
  CHECK(t.is_topology());
  CHECK(topologize(t) == t);
  CHECK(s.finer_than(t));
}

TEST_CASE("vicinities") {
  FiniteSpace s = test::s3();
  const GroundSet& g = s.ground();
  CHECK(s.vicinity(1) == set(g, "bc"));
  for (int x = 0; x < 3; ++x) CHECK(vicinity_of_filter(s, Filter::point(g, x)).kernel() == s.vicinity(x));
  // Every finite convergence is a pretopology.
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& sp : enumerate_spaces(n))
      for (int x = 0; x < n; ++x) CHECK(sp.lim(sp.vicinity(x)).contains(x));
}

TEST_CASE("P-diagonality") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : enumerate_spaces(n))
      if (s.is_topology()) CHECK(s.is_P_diagonal());
  CHECK(enumerate_spaces(1).front().is_P_diagonal());
  // Direct check over the eight kernels: lim F ⊆ lim V(F), with V(F)
  // generated by the sets {z : L(z) meets F}.
  FiniteSpace s = test::s3();
  bool direct = true;
  for_each_subset(s.full(), [&](Subset f) {
    Subset v;
    for (int z = 0; z < 3; ++z)
      if (s.pointlim(z).meets(f)) v |= Subset::singleton(z);
    direct = direct && s.lim(f).subset_of(s.lim(v));
  });
  CHECK(s.is_P_diagonal() == direct);
}

TEST_CASE("initial and final structures") {
  FiniteSpace s = test::s3();
  Relation id = Relation::identity(s.ground());
  CHECK(initial(s, id) == s);
  CHECK(final_space(s, id) == s);

  FiniteSpace y = test::two();
  const int t[] = {0, 0, 1};
  Relation f = Relation::from_map(s.ground(), y.ground(), t);
  FiniteSpace fs = final_space(s, f);
  CHECK(fs.pointlim(0) == set(y.ground(), "0"));
  CHECK(fs.pointlim(1) == set(y.ground(), "01"));
  oracle::Convergence c = oracle::bare(s);
  for_each_subset(y.full(), [&](Subset k) {
    CHECK(oracle::final_lim(c, f, Filter::principal(y.ground(), k)) == fs.lim(k));
  });
  CHECK(is_continuous(f, s, fs));
  CHECK(final_adh_identity_check(s, f));
}

TEST_CASE("the adherence identity for final structures") {
  for (int nx = 1; nx <= 3; ++nx)
    for (int ny = 1; ny <= nx; ++ny)
      for (const FiniteSpace& xi : enumerate_spaces(nx))
        for_each_surjection(xi.ground(), indexed_ground(ny),
                            [&](const Relation& f) { CHECK(final_adh_identity_check(xi, f)); });
}

TEST_CASE("products") {
  FiniteSpace p = product(test::s3(), test::two());
  CHECK(p.size() == 6);
  // L(b,1) = L(b) × L(1).
  CHECK(p.pointlim(pair_index(1, 1, 2)).size() == 4);
}

TEST_CASE("space enumeration counts") {
  CHECK(enumerate_spaces(1).size() == 1);
  CHECK(enumerate_spaces(2).size() == 4);
  CHECK(enumerate_spaces(3).size() == 64);
  CHECK(space_count(4) == 4096);
  std::vector<FiniteSpace> all = enumerate_spaces(3);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
}

TEST_CASE("spaces must be centered") {
  GroundSet g = test::letters("ab");
  CHECK_THROWS(FiniteSpace(g, {set(g, "b"), set(g, "b")}));
}
