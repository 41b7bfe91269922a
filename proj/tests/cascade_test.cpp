#include <doctest.h>

#include "convkit/cascade.hpp"
#include "convkit/oracle.hpp"
#include "convkit/spacedoc.hpp"
#include "support.hpp"

using namespace convkit;
using convkit::test::set;

TEST_CASE("contours along a filter") {
  GroundSet x = test::letters("ab"), t = test::letters("pqr");
  auto on_t = [&](const char* s) { return Filter::principal(t, set(t, s)); };
  std::vector<Filter> g{on_t("p"), on_t("q")};
  Filter f = Filter::principal(x, x.full());
  CHECK(contour_along(f, g).kernel() == set(t, "pq"));
  CHECK(oracle::contour_along(f, g).kernel() == set(t, "pq"));

  CHECK(contour_along(Filter::point(x, 1), g).kernel() == set(t, "q"));

  std::vector<Filter> constant{on_t("qr"), on_t("qr")};
  for (const char* k : {"a", "b", "ab"}) CHECK(contour_along(Filter::principal(x, set(x, k)), constant) == on_t("qr"));
}

TEST_CASE("contour_along against the definition") {
  const GroundSet& x = indexed_ground(3);
  const GroundSet& t = indexed_ground(3);
  for_each_subset(x.full(), [&](Subset f) {
    for (std::uint32_t code = 0; code < 512; code += 7) {
      std::vector<Filter> g;
      for (int i = 0; i < 3; ++i) g.push_back(Filter::principal(t, Subset{(code >> (3 * i)) & 7u}));
      Filter ff = Filter::principal(x, f);
      CHECK(contour_along(ff, g) == oracle::contour_along(ff, g));
    }
  });
}

TEST_CASE("cascades") {
  Cascade chain({{{1}, Subset{1}}, {{2}, Subset{1}}, {{}, Subset{}}});
  CHECK(chain.rank() == 2);
  CHECK(chain.is_maximal(2));
  CHECK_THROWS(Cascade({{{1}, Subset{1}}, {{0}, Subset{1}}}));
  CHECK_THROWS(Cascade({{{1, 1}, Subset{1}}, {{}, Subset{}}}));
}

TEST_CASE("contours of multifilters") {
  GroundSet x = test::letters("xyz");
  // Rank 1: the image of the estuary filter under the labels.
  Cascade flat({{{1, 2, 3}, Subset{0b011}}, {}, {}, {}});
  Multifilter phi(flat, x, {0, 2, 1, 0});
  CHECK(contour(phi).filter.kernel() == set(x, "yz"));

  // Two levels by hand: the estuary keeps child 0 only; child 0 keeps its
  // second child, labeled y.
  Cascade two({{{1, 4}, Subset{0b01}}, {{2, 3}, Subset{0b10}}, {}, {}, {}});
  Multifilter psi(two, x, {0, 0, 0, 1, 2});
  ContourResult r = contour(psi);
  CHECK(r.filter.kernel() == set(x, "y"));
  CHECK(contour_kernel(psi) == set(x, "y"));
  CHECK(oracle::contour(psi).kernel() == set(x, "y"));
  REQUIRE(r.trace.children.size() == 1);
  CHECK(r.trace.children[0].node == 1);
}

TEST_CASE("cascade documents") {
  Multifilter phi = load_cascade_doc(CONVKIT_TEST_DATA "/cascade.json");
  CHECK(contour(phi).filter.kernel() == set(phi.ground(), "yz"));
  Multifilter again = parse_cascade_doc(dump_cascade_doc(phi));
  CHECK(contour_kernel(again) == contour_kernel(phi));
  CHECK_THROWS_AS(parse_cascade_doc(R"({"points":["x"],"cascade":{"filter":[0],"children":[{}]}})"), doc_error);
  CHECK_THROWS_AS(parse_cascade_doc(R"({"points":["x"],"cascade":{"filter":[3],"children":[{"label":"x"}]}})"),
                  doc_error);
}

TEST_CASE("contour kernels agree with the definition on small cascades") {
  for (int n = 1; n <= 3; ++n) {
    std::size_t count = 0;
    for_each_multifilter(indexed_ground(n), 5, true, [&](const Multifilter& phi) {
      CHECK(contour_kernel(phi) == oracle::contour(phi).kernel());
      ++count;
    });
    CHECK(count > 0);
  }
}

TEST_CASE("composing with a filter on a product") {
  GroundSet x = test::letters("xyz");
  Cascade two({{{1, 4}, Subset{0b11}}, {{2, 3}, Subset{0b10}}, {}, {}, {}});
  Multifilter phi(two, x, {0, 0, 0, 1, 2});
  GroundSet xx = product(x, x);

  // The diagonal relation leaves the contour unchanged.
  Subset diagonal;
  for (int i = 0; i < 3; ++i) diagonal |= Subset::singleton(pair_index(i, i, 3));
  Multifilter same = contour_compose(Filter::principal(xx, diagonal), x, phi);
  CHECK(contour_kernel(same) == contour_kernel(phi));

  // Rank 1 reduces to the image of the estuary image.
  Cascade flat({{{1, 2}, Subset{0b11}}, {}, {}});
  Multifilter rank1(flat, x, {0, 0, 2});
  GroundSet y = test::letters("01");
  GroundSet xy = product(x, y);
  for_each_subset(xy.full(), [&](Subset h) {
    Multifilter c = contour_compose(Filter::principal(xy, h), y, rank1);
    CHECK(contour_kernel(c) == Relation::from_graph(x, y, h).image(contour_kernel(rank1)));
  });
}

TEST_CASE("tree shapes") {
  std::vector<int> per_size(8, 0);
  for_each_tree_shape(7, [&](const Cascade& c) { ++per_size[static_cast<std::size_t>(c.size())]; });
  // Unordered rooted trees: 1, 2, 4, 9, 20, 48 on 2..7 nodes.
  CHECK(per_size[2] == 1);
  CHECK(per_size[3] == 2);
  CHECK(per_size[4] == 4);
  CHECK(per_size[5] == 9);
  CHECK(per_size[6] == 20);
  CHECK(per_size[7] == 48);
}
