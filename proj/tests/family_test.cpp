#include <doctest.h>

#include "convkit/family.hpp"
#include "support.hpp"

using namespace convkit;
using convkit::test::letters;
using convkit::test::set;

TEST_CASE("up_close keeps the minimal members") {
  GroundSet g = letters("abc");
  Family f = up_close(g, {set(g, "ab"), set(g, "a")});
  REQUIRE(f.minimals().size() == 1);
  CHECK(f.minimals()[0] == set(g, "a"));

  CHECK(up_close(g, std::vector<Subset>{}).is_empty_family());

  Family two = up_close(g, {set(g, "a"), set(g, "b")});
  CHECK(two.minimals().size() == 2);
  CHECK(two.contains(set(g, "bc")));
  CHECK_FALSE(two.contains(set(g, "c")));

  CHECK_THROWS_AS(up_close(g, {Subset{8}}), typing_error);
}

TEST_CASE("mesh of families and filters") {
  GroundSet g = letters("abc");
  CHECK(mesh(Filter::principal(g, set(g, "ab")), Filter::principal(g, set(g, "bc"))));
  CHECK_FALSE(mesh(Filter::principal(g, set(g, "a")), Filter::principal(g, set(g, "b"))));
  Filter deg = Filter::degenerate(g);
  for_each_subset(g.full(), [&](Subset k) {
    CHECK_FALSE(mesh(deg, Filter::principal(g, k)));
    CHECK_FALSE(mesh(deg.family(), Family::principal(g, k)));
  });
}

TEST_CASE("grill") {
  GroundSet g = letters("abc");
  Family ga = grill(Family::principal(g, set(g, "a")));
  for_each_subset(g.full(), [&](Subset s) { CHECK(ga.contains(s) == s.contains(0)); });

  // Brute force over all eight subsets.
  Family a = up_close(g, {set(g, "ab"), set(g, "bc")});
  Family expected = up_close(g, {set(g, "b"), set(g, "ac")});
  CHECK(grill(a) == expected);
  for_each_subset(g.full(), [&](Subset s) {
    bool meets_all = true;
    for (Subset m : a.members()) meets_all = meets_all && s.meets(m);
    CHECK(grill(a).contains(s) == meets_all);
  });
}

TEST_CASE("grill is an involution on isotone families") {
  for (int n = 1; n <= 3; ++n) {
    const GroundSet& g = indexed_ground(n);
    const std::uint32_t sets = 1u << n;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << sets); ++fam) {
      std::vector<Subset> gens;
      for (std::uint32_t s = 0; s < sets; ++s)
        if ((fam >> s) & 1u) gens.push_back(Subset{s});
      Family f = up_close(g, gens);
      CHECK(grill(grill(f)) == f);
    }
  }
}

TEST_CASE("order, meet and join of filters") {
  GroundSet g = letters("abc");
  auto p = [&](const char* s) { return Filter::principal(g, set(g, s)); };
  CHECK(finer(p("a"), p("ab")));
  CHECK_FALSE(finer(p("ab"), p("a")));
  CHECK(meet(p("a"), p("b")).kernel() == set(g, "ab"));
  CHECK(join(p("a"), p("b")).is_degenerate());

  // Lattice laws against the member families.
  for_each_subset(g.full(), [&](Subset x) {
    for_each_subset(g.full(), [&](Subset y) {
      Filter f = Filter::principal(g, x), h = Filter::principal(g, y);
      Filter m = meet(f, h), j = join(f, h);
      for_each_subset(g.full(), [&](Subset s) {
        CHECK(m.contains(s) == (f.contains(s) && h.contains(s)));
        // The join is generated by intersections of members.
        bool generated = false;
        for (Subset u : f.family().members())
          for (Subset v : h.family().members()) generated = generated || (u & v).subset_of(s);
        CHECK(j.contains(s) == generated);
      });
      bool coarser_members = true;
      for (Subset s : h.family().members()) coarser_members = coarser_members && f.contains(s);
      CHECK(finer(f, h) == coarser_members);
      CHECK(filter_equiv(f, h) == (x == y));
    });
  });
}

TEST_CASE("images under relations") {
  GroundSet x = letters("abc"), y = letters("01");
  const int t[] = {0, 0, 1};
  Relation f = Relation::from_map(x, y, t);
  CHECK(image(f, Filter::principal(x, set(x, "bc"))).kernel() == set(y, "01"));
  CHECK(image(f, Filter::principal(x, set(x, "ab"))).kernel() == set(y, "0"));
  CHECK(preimage(f, Filter::principal(y, set(y, "1"))).kernel() == set(x, "c"));

  Relation id = Relation::identity(x);
  for_each_subset(x.full(), [&](Subset k) { CHECK(image(id, Filter::principal(x, k)).kernel() == k); });
  CHECK(f.inverse().inverse() == f);
}

TEST_CASE("filters on products act like the relations they are generated by") {
  GroundSet x = letters("ab"), y = letters("01");
  GroundSet xy = product(x, y);
  for_each_subset(xy.full(), [&](Subset h) {
    Relation r = Relation::from_graph(x, y, h);
    for_each_subset(x.full(), [&](Subset k) {
      Filter f = Filter::principal(x, k);
      Filter hf = image(Filter::principal(xy, h), x, y, f);
      CHECK(hf.kernel() == r.image(k));
      // Definition: {H(F) : H ∈ H, F ∈ F}↑.
      std::vector<Subset> gens;
      for (Subset hm : Filter::principal(xy, h).family().members())
        for (Subset fm : f.family().members()) gens.push_back(Relation::from_graph(x, y, hm).image(fm));
      CHECK(up_close(y, gens) == hf.family());
    });
  });
}

TEST_CASE("H # F×G iff HF # G iff H⁻G # F on 2-point grounds") {
  GroundSet x = letters("ab"), y = letters("01");
  GroundSet xy = product(x, y);
  std::size_t checked = 0;
  for_each_subset(xy.full(), [&](Subset hk) {
    Filter h = Filter::principal(xy, hk);
    for_each_subset(x.full(), [&](Subset fk) {
      for_each_subset(y.full(), [&](Subset gk) {
        Filter f = Filter::principal(x, fk), g = Filter::principal(y, gk);
        bool a = mesh(h.family(), product_filter(f, g).family());
        bool b = mesh(image(h, x, y, f), g);
        bool c = mesh(preimage(h, x, y, g), f);
        CHECK(a == b);
        CHECK(b == c);
        ++checked;
      });
    });
  });
  CHECK(checked == 16 * 4 * 4);
}

TEST_CASE("operator images of families") {
  GroundSet g = letters("abc");
  Family a = up_close(g, {set(g, "c")});
  CHECK(family_op_image([](Subset s) { return s; }, a) == a);
  CHECK(family_op_image([](Subset) { return Subset{}; }, a).is_degenerate());
  // Closure in the space L(a)={a}, L(b)={a,b}, L(c)={b,c}: cl{c} = X, and
  // one adherence step gives {b,c}.
  FiniteSpace s = test::s3();
  CHECK(family_op_image([&](Subset k) { return s.adh(k); }, a) == up_close(g, {set(g, "bc")}));
}

TEST_CASE("ground sets") {
  GroundSet g = letters("abc");
  CHECK(g.index_of("b") == 1);
  CHECK(g.index_of("z") == -1);
  CHECK(g.format(set(g, "ac")) == "{a,c}");
  CHECK(product(g, letters("01")).size() == 6);
  CHECK_THROWS(GroundSet(std::vector<std::string>(17, "p")));
}
