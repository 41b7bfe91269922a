#include <doctest.h>

#include <random>

#include "convkit/symbolic.hpp"

using namespace convkit::sym;

namespace {

const SymFilter fan_all = SymFilter::fan(FanSupport::all_columns);
const SymFilter fan_cof = SymFilter::fan(FanSupport::cofinitely_many_columns);

// Literals stay below 40, so membership on [0, 100) decides equality.
constexpr Int probe = 100;

IntervalSet random_set(std::mt19937_64& rng) {
  std::vector<Interval> parts;
  int k = static_cast<int>(rng() % 4);
  for (int i = 0; i < k; ++i) {
    Int lo = static_cast<Int>(rng() % 40);
    Int hi = lo + static_cast<Int>(rng() % 6);
    parts.push_back({lo, hi});
  }
  if (rng() % 2) parts.push_back({static_cast<Int>(rng() % 40), inf});
  return IntervalSet::of(parts);
}

}  // namespace

TEST_CASE("interval sets") {
  IntervalSet s = IntervalSet::of({{7, inf}, {0, 3}, {2, 5}});
  CHECK(s.str() == "[0,5] u [7,inf)");
  CHECK(s.complement().str() == "6");
  CHECK(s.cofinite());
  CHECK(IntervalSet::range(3, 9).finite());
  CHECK(IntervalSet().str() == "empty");
  CHECK(parse_interval_set("[0,5] u [7,inf)") == s);
  CHECK_THROWS_AS(parse_interval_set("[0,5"), convkit::error);
  CHECK_THROWS_AS(parse_interval_set("[0,2000000000]"), convkit::error);
}

TEST_CASE("interval set algebra against point sets") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    IntervalSet a = random_set(rng), b = random_set(rng);
    bool subset = true;
    for (Int x = 0; x < probe; ++x) {
      CHECK((a | b).contains(x) == (a.contains(x) || b.contains(x)));
      CHECK((a & b).contains(x) == (a.contains(x) && b.contains(x)));
      CHECK((a - b).contains(x) == (a.contains(x) && !b.contains(x)));
      CHECK(a.complement().contains(x) == !a.contains(x));
      subset = subset && (!a.contains(x) || b.contains(x));
    }
    CHECK(a.subset_of(b) == subset);
    CHECK(a.complement().complement() == a);
    CHECK(parse_interval_set(a.str()) == a);
  }
}

TEST_CASE("grid sets") {
  GridSet g = parse_grid_set("grid([5,inf); 0:empty; 1:[0,3])");
  CHECK(g.column_set(0).empty());
  CHECK(g.column_set(1) == IntervalSet::range(0, 3));
  CHECK(g.column_set(9) == IntervalSet::tail(5));
  CHECK(g.first_infinite_column() == 2);
  CHECK(g.complement().complement() == g);
  CHECK(parse_grid_set(g.str()) == g);
  CHECK(GridSet(IntervalSet::all(), {{3, IntervalSet::all()}}).exceptions().empty());
}

TEST_CASE("membership, mesh and order in the fan") {
  GridSet c5 = GridSet::column(5);
  CHECK(sym_mesh(SymFilter::principal(c5), fan_all));
  CHECK_FALSE(sym_mesh(SymFilter::principal(c5), fan_cof));
  CHECK(sym_finer(fan_all, SymFilter::column_tail(5)));
  CHECK_FALSE(sym_finer(fan_cof, SymFilter::column_tail(5)));
  CHECK(sym_finer(SymFilter::block_tail(), fan_cof));
  CHECK(sym_finer(fan_all, fan_cof));
  CHECK_FALSE(sym_finer(fan_cof, fan_all));

  CHECK(sym_member(GridSet::all(), fan_all));
  CHECK_FALSE(sym_member(parse_grid_set("grid([0,inf); 4:empty)"), fan_all));
  CHECK(sym_member(parse_grid_set("grid([0,inf); 4:empty)"), fan_cof));
  CHECK(sym_member(IntervalSet::tail(3), SymFilter::cofinite_n()));
  CHECK_FALSE(sym_member(IntervalSet::range(0, 3), SymFilter::cofinite_n()));

  SymFilter t = parse_term("transversal(a=1,b=0,from=0)");
  CHECK(sym_member(parse_grid_set("grid([0,inf))"), t));
  CHECK_FALSE(sym_mesh(t, SymFilter::column_tail(2)));
  CHECK(sym_mesh(t, t));
}

TEST_CASE("Fréchet witnesses") {
  CHECK(frechet_witness(GridSet::all()).str() == SymFilter::column_tail(0).str());
  SeqTerm w = frechet_witness(GridSet::column(3));
  CHECK(w.kind == SymFilter::Kind::column_tail);
  CHECK(w.column == 3);
  CHECK_THROWS(frechet_witness(parse_grid_set("grid([0,4])")));
  CHECK_THROWS(frechet_witness(GridSet::all(), fan_cof));
}

TEST_CASE("strong Fréchet refuters") {
  RefuterCertificate c = strong_frechet_refuter(SymFilter::block_tail(), parse_term("transversal(a=1,b=0,from=0)"));
  CHECK(c.verified_member);
  CHECK(c.verified_disjoint);
  CHECK(c.member.slope == 1);
  CHECK(c.member.offset == 1);
  CHECK(c.member.exceptions.empty());

  SeqTerm patched = parse_term("transversal(a=1,b=0,from=0,patch=2:[0,3])");
  RefuterCertificate p = strong_frechet_refuter(SymFilter::block_tail(), patched);
  CHECK(p.verified_disjoint);
  REQUIRE(p.member.exceptions.count(2) == 1);
  CHECK_FALSE(p.member.exceptions.at(2).contains(3));

  CHECK_THROWS(strong_frechet_refuter(SymFilter::block_tail(), SymFilter::column_tail(3)));
}

TEST_CASE("the cofinite fan as a contour") {
  CHECK(contour_definition_member(GridSet::all()));
  CHECK(contour_definition_member(parse_grid_set("grid([0,inf); 0:empty; 1:empty; 2:empty; 3:empty; 4:empty)")));
  // Even columns full and odd columns empty is outside the grammar; its
  // bounded analogue keeps the qualifying columns finite.
  CHECK_FALSE(contour_definition_member(parse_grid_set("grid(empty; 0:[0,inf); 2:[0,inf); 4:[0,inf))")));
}

TEST_CASE("diagonal escape") {
  std::vector<GridSet> members{GridSet::all(), parse_grid_set("grid([3,inf); 0:[5,inf))")};
  GridSet e = diagonal_escape(members, FanSupport::all_columns);
  CHECK(sym_member(e, fan_all));
  for (const GridSet& m : members) CHECK_FALSE(m.subset_of(e));
  std::vector<GridSet> bad{GridSet::column(2)};
  CHECK_THROWS(diagonal_escape(bad, FanSupport::all_columns));
}

TEST_CASE("term syntax") {
  for (const char* t : {"fan(all)", "fan(cof)", "cofinite", "blocktail", "coltail(3)", "gridtail(1,2)",
                        "transversal(a=2,b=1,from=3)", "principal(grid([0,4]))"}) {
    SymFilter f = parse_term(t);
    CHECK(parse_term(f.str()).str() == f.str());
  }
  CHECK_THROWS_AS(parse_term("fan(some)"), convkit::error);
  CHECK_THROWS_AS(parse_term("transversal(a=1)extra"), convkit::error);
  CHECK_THROWS_AS(sym_finer(parse_term("meet(coltail(1), coltail(2))"), SymFilter::block_tail()), undecided_error);
}

TEST_CASE("the generated battery") {
  Battery b = generate_battery(1, 1000, 1000);
  REQUIRE(b.sets.size() == 1000);
  REQUIRE(b.transversals.size() == 1000);
  for (const GridSet& s : b.sets) {
    if (!sym_mesh(SymFilter::principal(s), fan_all)) {
      CHECK_FALSE(s.first_infinite_column().has_value());
      continue;
    }
    SeqTerm w = frechet_witness(s);
    CHECK(sym_finer(fan_all, w));
    CHECK(sym_member(s, w));
    // Independently: the witness runs up a column that s meets infinitely.
    CHECK(s.column_set(w.column).infinite());
  }
  for (const SymFilter& t : b.transversals) {
    RefuterCertificate c = strong_frechet_refuter(SymFilter::block_tail(), t);
    CHECK(c.verified_member);
    CHECK(c.verified_disjoint);
    // Bounded recheck on the first columns.
    bool ok = true;
    for (Int n = 0; n < 200; ++n)
      ok = ok && c.member.column_set(n).cofinite() && (c.member.column_set(n) & t.transversal_column(n)).empty();
    CHECK(ok);
  }
  ContourDerivation d = fan_as_contour(b.sets);
  CHECK(d.checked == 1000);
  CHECK(d.disagreements.empty());
}
