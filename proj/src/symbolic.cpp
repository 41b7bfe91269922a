#include "convkit/symbolic.hpp"

#include <algorithm>
#include <cctype>

namespace convkit::sym {

// ------------------------------------------------------------ IntervalSet

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.lo > i.hi; });
  for (const Interval& i : parts)
    if (i.lo < 0) throw error("negative natural number in interval");
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  IntervalSet out;
  for (const Interval& i : parts) {
    if (!out.parts_.empty()) {
      Interval& last = out.parts_.back();
      if (last.hi == inf || i.lo <= last.hi + 1) {
        last.hi = std::max(last.hi, i.hi);
        continue;
      }
    }
    out.parts_.push_back(i);
  }
  return out;
}

bool IntervalSet::contains(Int x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.lo <= x && x <= i.hi; });
}

Int IntervalSet::min() const {
  if (empty()) throw error("minimum of the empty set");
  return parts_.front().lo;
}

Int IntervalSet::finite_max() const {
  if (empty() || infinite()) throw error("maximum of an empty or infinite set");
  return parts_.back().hi;
}

std::optional<Int> IntervalSet::tail_start() const {
  if (!infinite()) return std::nullopt;
  return parts_.back().lo;
}

IntervalSet IntervalSet::complement() const {
  std::vector<Interval> out;
  Int next = 0;
  for (const Interval& i : parts_) {
    if (i.lo > next) out.push_back({next, i.lo - 1});
    if (i.hi == inf) return of(std::move(out));
    next = i.hi + 1;
  }
  out.push_back({next, inf});
  return of(std::move(out));
}

IntervalSet IntervalSet::operator|(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return of(std::move(all));
}

IntervalSet IntervalSet::operator&(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const Interval& x : parts_)
    for (const Interval& y : o.parts_) out.push_back({std::max(x.lo, y.lo), std::min(x.hi, y.hi)});
  return of(std::move(out));
}

std::string IntervalSet::str() const {
  if (empty()) return "empty";
  std::string s;
  for (const Interval& i : parts_) {
    if (!s.empty()) s += " u ";
    if (i.hi == inf)
      s += "[" + std::to_string(i.lo) + ",inf)";
    else if (i.lo == i.hi)
      s += std::to_string(i.lo);
    else
      s += "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
  }
  return s;
}

// ------------------------------------------------------------ GridSet

GridSet::GridSet(IntervalSet dflt, std::map<Int, IntervalSet> exceptions)
    : default_(std::move(dflt)), exceptions_(std::move(exceptions)) {
  std::erase_if(exceptions_, [&](const auto& e) {
    if (e.first < 0) throw error("negative column index");
    return e.second == default_;
  });
}

GridSet GridSet::column(Int n, const IntervalSet& w) { return GridSet(IntervalSet{}, {{n, w}}); }

const IntervalSet& GridSet::column_set(Int n) const {
  auto it = exceptions_.find(n);
  return it == exceptions_.end() ? default_ : it->second;
}

IntervalSet GridSet::infinite_columns() const {
  std::vector<Interval> parts;
  if (default_.infinite()) parts.push_back({0, inf});
  IntervalSet out = IntervalSet::of(std::move(parts));
  for (const auto& [n, w] : exceptions_) {
    IntervalSet at = IntervalSet::point(n);
    out = w.infinite() ? (out | at) : (out - at);
  }
  return out;
}

std::optional<Int> GridSet::first_infinite_column() const {
  IntervalSet cols = infinite_columns();
  if (cols.empty()) return std::nullopt;
  return cols.min();
}

bool GridSet::empty() const {
  return default_.empty() && std::all_of(exceptions_.begin(), exceptions_.end(), [](const auto& e) { return e.second.empty(); });
}

template <class Op>
GridSet GridSet::combine(const GridSet& o, Op op) const {
  std::map<Int, IntervalSet> ex;
  for (const auto& e : exceptions_) ex[e.first] = op(e.second, o.column_set(e.first));
  for (const auto& e : o.exceptions_) ex[e.first] = op(column_set(e.first), e.second);
  return GridSet(op(default_, o.default_), std::move(ex));
}

GridSet GridSet::complement() const {
  std::map<Int, IntervalSet> ex;
  for (const auto& [n, w] : exceptions_) ex[n] = w.complement();
  return GridSet(default_.complement(), std::move(ex));
}

GridSet GridSet::operator|(const GridSet& o) const {
  return combine(o, [](const IntervalSet& x, const IntervalSet& y) { return x | y; });
}

GridSet GridSet::operator&(const GridSet& o) const {
  return combine(o, [](const IntervalSet& x, const IntervalSet& y) { return x & y; });
}

std::string GridSet::str() const {
  std::string s = "grid(" + default_.str();
  for (const auto& [n, w] : exceptions_) s += "; " + std::to_string(n) + ":" + w.str();
  return s + ")";
}

// ------------------------------------------------------------ terms

SymFilter SymFilter::principal_n(IntervalSet s) {
  SymFilter f;
  f.kind = Kind::principal_n;
  f.set = std::move(s);
  return f;
}

SymFilter SymFilter::cofinite_n() {
  SymFilter f;
  f.kind = Kind::cofinite_n;
  return f;
}

SymFilter SymFilter::principal(GridSet g) {
  SymFilter f;
  f.kind = Kind::principal;
  f.grid = std::move(g);
  return f;
}

SymFilter SymFilter::grid_tail(Int a, Int b) {
  if (a < 0 || b < 0) throw error("grid tail corner must be in ℕ×ℕ");
  if (a > 100000) throw error("grid tail corner too far out to list its empty columns");
  SymFilter f;
  f.kind = Kind::grid_tail;
  f.a = a;
  f.b = b;
  std::map<Int, IntervalSet> ex;
  for (Int n = 0; n < a; ++n) ex[n] = IntervalSet{};
  f.grid = GridSet(IntervalSet::tail(b), std::move(ex));
  return f;
}

SymFilter SymFilter::column_tail(Int n, IntervalSet within) {
  if (n < 0) throw error("negative column index");
  if (!within.infinite()) throw error("column tail needs an infinite set of rows");
  SymFilter f;
  f.kind = Kind::column_tail;
  f.column = n;
  f.set = std::move(within);
  return f;
}

SymFilter SymFilter::block_tail() {
  SymFilter f;
  f.kind = Kind::block_tail;
  return f;
}

SymFilter SymFilter::fan(FanSupport s) {
  SymFilter f;
  f.kind = Kind::fan;
  f.support = s;
  return f;
}

SymFilter SymFilter::transversal(Int a, Int b, Int from, std::map<Int, IntervalSet> patch) {
  if (a < 0 || b < 0 || from < 0) throw error("transversal parameters must be natural numbers");
  for (const auto& [n, w] : patch) {
    if (n < from) throw error("transversal patch before the start column");
    if (w.empty() || w.infinite()) throw error("transversal patch must be a finite nonempty set");
  }
  SymFilter f;
  f.kind = Kind::transversal;
  f.a = a;
  f.b = b;
  f.from = from;
  f.patch = std::move(patch);
  return f;
}

SymFilter SymFilter::meet(std::vector<SymFilter> parts) {
  if (parts.empty()) throw error("meet of no filters");
  for (const SymFilter& p : parts)
    if (p.on_grid() != parts.front().on_grid()) throw typing_error("meet of filters on different sets");
  SymFilter f;
  f.kind = Kind::meet;
  f.parts = std::move(parts);
  return f;
}

bool SymFilter::on_grid() const {
  switch (kind) {
    case Kind::principal_n:
    case Kind::cofinite_n: return false;
    case Kind::meet: return parts.front().on_grid();
    default: return true;
  }
}

IntervalSet SymFilter::transversal_column(Int n) const {
  if (n < from) return {};
  auto it = patch.find(n);
  if (it != patch.end()) return it->second;
  return IntervalSet::point(a * n + b);
}

std::string SymFilter::str() const {
  switch (kind) {
    case Kind::principal_n: return "nset(" + set.str() + ")";
    case Kind::cofinite_n: return "cofinite";
    case Kind::principal: return "principal(" + grid.str() + ")";
    case Kind::grid_tail: return "gridtail(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::column_tail:
      if (set.is_all()) return "coltail(" + std::to_string(column) + ")";
      return "coltail(" + std::to_string(column) + ", " + set.str() + ")";
    case Kind::block_tail: return "blocktail";
    case Kind::fan: return support == FanSupport::all_columns ? "fan(all)" : "fan(cof)";
    case Kind::transversal: {
      std::string s = "transversal(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",from=" + std::to_string(from);
      if (!patch.empty()) {
        s += ",patch=";
        bool first = true;
        for (const auto& [n, w] : patch) {
          if (!first) s += "|";
          first = false;
          s += std::to_string(n) + ":" + w.str();
        }
      }
      return s + ")";
    }
    case Kind::meet: {
      std::string s = "meet(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i].str();
      return s + ")";
    }
  }
  return "?";
}

// ------------------------------------------------------------ decisions

namespace {

using Kind = SymFilter::Kind;

bool principal_like(const SymFilter& f) {
  return f.kind == Kind::principal || f.kind == Kind::grid_tail || f.kind == Kind::principal_n;
}

void same_universe(const SymFilter& f, const SymFilter& g) {
  if (f.on_grid() != g.on_grid()) throw typing_error("filters on ℕ and on ℕ×ℕ compared");
}

// Largest set contained in every member; free filters have none.
GridSet grid_kernel(const SymFilter& f) {
  switch (f.kind) {
    case Kind::principal:
    case Kind::grid_tail: return f.grid;
    case Kind::meet: {
      GridSet k;
      for (const SymFilter& p : f.parts) k = k | grid_kernel(p);
      return k;
    }
    default: return {};
  }
}

IntervalSet n_kernel(const SymFilter& f) {
  switch (f.kind) {
    case Kind::principal_n: return f.set;
    case Kind::meet: {
      IntervalSet k;
      for (const SymFilter& p : f.parts) k = k | n_kernel(p);
      return k;
    }
    default: return {};
  }
}

// Order between the free grid terms: column_tail, block_tail, fan and
// transversal.
bool free_finer(const SymFilter& f, const SymFilter& g) {
  const bool fa = f.kind == Kind::fan && f.support == FanSupport::all_columns;
  const bool fc = f.kind == Kind::fan && f.support == FanSupport::cofinitely_many_columns;
  switch (g.kind) {
    case Kind::column_tail:
      if (f.kind == Kind::column_tail) return f.column == g.column && (g.set - f.set).finite();
      return fa;
    case Kind::block_tail: return f.kind == Kind::block_tail;
    case Kind::fan:
      if (g.support == FanSupport::all_columns) return fa;
      return fa || fc || f.kind == Kind::block_tail;
    case Kind::transversal:
      if (f.kind == Kind::transversal) return f.a == g.a && f.b == g.b;
      return f.kind == Kind::block_tail;
    default: break;
  }
  throw undecided_error(f.str() + " <= " + g.str());
}

bool free_mesh(const SymFilter& f, const SymFilter& g) {
  auto is = [](const SymFilter& x, Kind k) { return x.kind == k; };
  if (is(f, Kind::column_tail) && is(g, Kind::column_tail))
    return f.column == g.column && (f.set & g.set).infinite();
  if (is(f, Kind::transversal) && is(g, Kind::transversal)) return f.a == g.a && f.b == g.b;
  // A transversal meets each column in finitely many points.
  if (is(f, Kind::column_tail) || is(f, Kind::transversal)) {
    if (is(g, Kind::column_tail) || is(g, Kind::transversal)) return false;
    return free_mesh(g, f);
  }
  if (is(f, Kind::block_tail)) return !is(g, Kind::column_tail);
  if (is(f, Kind::fan)) {
    if (is(g, Kind::column_tail)) return f.support == FanSupport::all_columns;
    return !is(g, Kind::transversal);
  }
  throw undecided_error(f.str() + " # " + g.str());
}

}  // namespace

bool sym_member(const GridSet& s, const SymFilter& f) {
  switch (f.kind) {
    case Kind::principal:
    case Kind::grid_tail: return f.grid.subset_of(s);
    case Kind::column_tail: return (f.set - s.column_set(f.column)).finite();
    case Kind::block_tail: return s.default_column().is_all();
    case Kind::fan:
      if (!s.default_column().infinite()) return false;
      if (f.support == FanSupport::cofinitely_many_columns) return true;
      return std::all_of(s.exceptions().begin(), s.exceptions().end(), [](const auto& e) { return e.second.infinite(); });
    case Kind::transversal:
      // Beyond every patch and exception the sequence runs along a·n+b in
      // the default column.
      if (f.a == 0) return s.default_column().contains(f.b);
      return s.default_column().infinite();
    case Kind::meet:
      return std::all_of(f.parts.begin(), f.parts.end(), [&](const SymFilter& p) { return sym_member(s, p); });
    case Kind::principal_n:
    case Kind::cofinite_n: break;
  }
  throw typing_error("grid set tested against a filter on ℕ");
}

bool sym_member(const IntervalSet& s, const SymFilter& f) {
  switch (f.kind) {
    case Kind::principal_n: return f.set.subset_of(s);
    case Kind::cofinite_n: return s.cofinite();
    case Kind::meet:
      return std::all_of(f.parts.begin(), f.parts.end(), [&](const SymFilter& p) { return sym_member(s, p); });
    default: break;
  }
  throw typing_error("subset of ℕ tested against a filter on ℕ×ℕ");
}

bool sym_finer(const SymFilter& f, const SymFilter& g) {
  same_universe(f, g);
  if (g.kind == Kind::meet)
    return std::all_of(g.parts.begin(), g.parts.end(), [&](const SymFilter& p) { return sym_finer(f, p); });
  if (principal_like(f)) return f.on_grid() ? sym_member(f.grid, g) : sym_member(f.set, g);
  if (principal_like(g)) return g.on_grid() ? g.grid.subset_of(grid_kernel(f)) : g.set.subset_of(n_kernel(f));
  if (f.kind == Kind::meet) {
    if (std::any_of(f.parts.begin(), f.parts.end(), [&](const SymFilter& p) { return sym_finer(p, g); })) return true;
    throw undecided_error(f.str() + " <= " + g.str());
  }
  if (f.kind == Kind::cofinite_n && g.kind == Kind::cofinite_n) return true;
  return free_finer(f, g);
}

bool sym_mesh(const SymFilter& f, const SymFilter& g) {
  same_universe(f, g);
  if (f.kind == Kind::meet)
    return std::any_of(f.parts.begin(), f.parts.end(), [&](const SymFilter& p) { return sym_mesh(p, g); });
  if (g.kind == Kind::meet) return sym_mesh(g, f);
  if (principal_like(f)) return f.on_grid() ? !sym_member(f.grid.complement(), g) : !sym_member(f.set.complement(), g);
  if (principal_like(g)) return sym_mesh(g, f);
  if (f.kind == Kind::cofinite_n && g.kind == Kind::cofinite_n) return true;
  return free_mesh(f, g);
}

// ------------------------------------------------------------ witnesses

SeqTerm frechet_witness(const GridSet& a, const SymFilter& fan) {
  if (fan.kind != Kind::fan || fan.support != FanSupport::all_columns)
    throw error("Fréchet witnesses are built for fan(all) only");
  if (!sym_mesh(SymFilter::principal(a), fan)) throw error("not meshing");
  std::optional<Int> n = a.first_infinite_column();
  if (!n) throw internal_error("meshing set without an infinite column");
  SeqTerm s = SymFilter::column_tail(*n, a.column_set(*n));
  if (!sym_finer(fan, s) || !sym_member(a, s)) throw internal_error("Fréchet witness failed its own check");
  return s;
}

IntervalSet AffineGridSet::column_set(Int n) const {
  auto it = exceptions.find(n);
  if (it != exceptions.end()) return it->second;
  return IntervalSet::tail(slope * n + offset);
}

bool AffineGridSet::in_fan() const {
  return std::all_of(exceptions.begin(), exceptions.end(), [](const auto& e) { return e.second.infinite(); });
}

std::string AffineGridSet::str() const {
  std::string s = "affine(column n = [" + std::to_string(slope) + "n+" + std::to_string(offset) + ",inf)";
  for (const auto& [n, w] : exceptions) s += "; " + std::to_string(n) + ":" + w.str();
  return s + ")";
}

bool disjoint_from_transversal(const AffineGridSet& u, const SeqTerm& sigma) {
  if (sigma.kind != Kind::transversal) throw error("refuter only applies to transversals");
  // Columns listed explicitly on either side are checked point by point.
  std::vector<Int> listed;
  for (const auto& e : u.exceptions) listed.push_back(e.first);
  for (const auto& e : sigma.patch) listed.push_back(e.first);
  for (Int n : listed)
    if (!(u.column_set(n) & sigma.transversal_column(n)).empty()) return false;
  auto is_listed = [&](Int n) { return std::find(listed.begin(), listed.end(), n) != listed.end(); };
  // Elsewhere the sequence sits at a·n+b and u starts at slope·n+offset;
  // the gap (slope−a)·n + (offset−b) must be positive on every remaining
  // column n ≥ from.
  const Int ds = u.slope - sigma.a;
  const Int dc = u.offset - sigma.b;
  if (ds < 0) return false;
  if (ds == 0) return dc > 0;
  for (Int n = sigma.from; ds * n + dc <= 0; ++n)
    if (!is_listed(n)) return false;
  return true;
}

RefuterCertificate strong_frechet_refuter(const SymFilter& blocks, const SeqTerm& sigma) {
  if (blocks.kind != Kind::block_tail) throw error("refuter expects the block tail filter");
  if (sigma.kind != Kind::transversal) throw error("refuter only applies to transversals");
  if (!sym_finer(blocks, sigma)) throw internal_error("transversal leaves the blocks");
  RefuterCertificate c;
  c.member.slope = sigma.a;
  c.member.offset = sigma.b + 1;
  for (const auto& [n, w] : sigma.patch) c.member.exceptions[n] = IntervalSet::tail(w.finite_max() + 1);
  c.verified_member = c.member.in_fan();
  c.verified_disjoint = disjoint_from_transversal(c.member, sigma);
  c.derivation = "column n from " + std::to_string(sigma.a) + "n+" + std::to_string(sigma.b + 1) +
                 " lies above the picked point " + std::to_string(sigma.a) + "n+" + std::to_string(sigma.b);
  if (!sigma.patch.empty()) c.derivation += "; patched columns start above their patch";
  return c;
}

bool contour_definition_member(const GridSet& s) {
  // Cofinite index sets F ⊆ ℕ are tried as tails [k,∞); past the last
  // exception every column equals the default, so k never needs to go
  // beyond it.
  const Int last = s.exceptions().empty() ? 0 : s.exceptions().rbegin()->first + 1;
  for (Int k = 0; k <= last; ++k) {
    bool ok = s.default_column().cofinite();
    for (Int n = k; ok && n <= last; ++n) ok = s.column_set(n).cofinite();
    if (ok) return true;
  }
  return false;
}

ContourDerivation fan_as_contour(std::span<const GridSet> battery) {
  ContourDerivation d;
  d.fan = SymFilter::fan(FanSupport::cofinitely_many_columns);
  for (const GridSet& s : battery) {
    ++d.checked;
    bool closed = sym_member(s, d.fan);
    bool def = contour_definition_member(s);
    if (closed) ++d.members;
    if (closed != def) d.disagreements.push_back(s.str());
  }
  return d;
}

GridSet diagonal_escape(std::span<const GridSet> members, FanSupport support) {
  const SymFilter fan = SymFilter::fan(support);
  std::map<Int, IntervalSet> ex;
  Int column = -1;
  for (const GridSet& c : members) {
    if (!sym_member(c, fan)) throw error("diagonal escape given a non-member: " + c.str());
    Int past = c.exceptions().empty() ? 0 : c.exceptions().rbegin()->first + 1;
    column = std::max(column + 1, support == FanSupport::all_columns ? column + 1 : past);
    // Drop one point of c from a fresh column; the column stays cofinite.
    ex[column] = IntervalSet::all() - IntervalSet::point(c.column_set(column).min());
  }
  GridSet u(IntervalSet::all(), std::move(ex));
  if (!sym_member(u, fan)) throw internal_error("diagonal set left the fan");
  for (const GridSet& c : members)
    if (c.subset_of(u)) throw internal_error("diagonal set contains a given member");
  return u;
}

// ------------------------------------------------------------ battery

namespace {

IntervalSet random_interval_set(std::mt19937_64& rng) {
  auto pick = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  std::vector<Interval> parts;
  const Int pieces = pick(0, 2);
  for (Int i = 0; i < pieces; ++i) {
    Int lo = pick(0, 12);
    parts.push_back({lo, lo + pick(0, 4)});
  }
  if (pick(0, 1)) parts.push_back({pick(0, 15), inf});
  return IntervalSet::of(std::move(parts));
}

}  // namespace

Battery generate_battery(std::uint64_t seed, std::size_t sets, std::size_t transversals) {
  std::mt19937_64 rng(seed);
  auto pick = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  Battery b;
  b.sets.reserve(sets);
  for (std::size_t i = 0; i < sets; ++i) {
    IntervalSet dflt = random_interval_set(rng);
    std::map<Int, IntervalSet> ex;
    const Int count = pick(0, 3);
    for (Int k = 0; k < count; ++k) ex[pick(0, 9)] = random_interval_set(rng);
    b.sets.emplace_back(std::move(dflt), std::move(ex));
  }
  b.transversals.reserve(transversals);
  for (std::size_t i = 0; i < transversals; ++i) {
    Int a = pick(0, 3), c = pick(0, 5), from = pick(0, 4);
    std::map<Int, IntervalSet> patch;
    const Int count = pick(0, 2);
    for (Int k = 0; k < count; ++k) {
      Int lo = pick(0, 20);
      patch[from + pick(0, 5)] = IntervalSet::range(lo, lo + pick(0, 3));
    }
    b.transversals.push_back(SymFilter::transversal(a, c, from, std::move(patch)));
  }
  return b;
}

// ------------------------------------------------------------ text syntax

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : s_(text) {}

  void done() {
    skip();
    if (pos_ != s_.size()) fail("trailing input");
  }

  IntervalSet interval_set() {
    if (word("empty") || lit("∅")) return {};
    if (word("N") || lit("ℕ")) return IntervalSet::all();
    std::vector<Interval> parts{interval()};
    while (lit("u") || lit("∪")) parts.push_back(interval());
    return IntervalSet::of(std::move(parts));
  }

  GridSet grid_set() {
    expect_word("grid");
    expect("(");
    IntervalSet dflt = interval_set();
    std::map<Int, IntervalSet> ex;
    while (lit(";")) {
      Int n = number();
      expect(":");
      ex[n] = interval_set();
    }
    expect(")");
    return GridSet(std::move(dflt), std::move(ex));
  }

  SymFilter term() {
    if (word("fan")) {
      expect("(");
      FanSupport s;
      if (word("all"))
        s = FanSupport::all_columns;
      else if (word("cof"))
        s = FanSupport::cofinitely_many_columns;
      else
        fail("fan support must be all or cof");
      expect(")");
      return SymFilter::fan(s);
    }
    if (word("cofinite")) return SymFilter::cofinite_n();
    if (word("blocktail")) return SymFilter::block_tail();
    if (word("coltail")) {
      expect("(");
      Int n = number();
      IntervalSet w = IntervalSet::all();
      if (lit(",")) w = interval_set();
      expect(")");
      return SymFilter::column_tail(n, std::move(w));
    }
    if (word("gridtail")) {
      expect("(");
      Int a = number();
      expect(",");
      Int b = number();
      expect(")");
      return SymFilter::grid_tail(a, b);
    }
    if (word("column")) {
      expect("(");
      Int n = number();
      expect(")");
      return SymFilter::principal(GridSet::column(n));
    }
    if (word("principal")) {
      expect("(");
      GridSet g = grid_set();
      expect(")");
      return SymFilter::principal(std::move(g));
    }
    if (word("nset")) {
      expect("(");
      IntervalSet w = interval_set();
      expect(")");
      return SymFilter::principal_n(std::move(w));
    }
    if (word("transversal")) return transversal();
    if (word("meet")) {
      expect("(");
      std::vector<SymFilter> parts{term()};
      while (lit(",")) parts.push_back(term());
      expect(")");
      return SymFilter::meet(std::move(parts));
    }
    fail("unknown term");
  }

 private:
  SymFilter transversal() {
    expect("(");
    Int a = 1, b = 0, from = 0;
    std::map<Int, IntervalSet> patch;
    do {
      if (word("a")) {
        expect("=");
        a = number();
      } else if (word("b")) {
        expect("=");
        b = number();
      } else if (word("from")) {
        expect("=");
        from = number();
      } else if (word("patch")) {
        expect("=");
        do {
          Int n = number();
          expect(":");
          patch[n] = interval_set();
        } while (lit("|"));
      } else {
        fail("unknown transversal parameter");
      }
    } while (lit(","));
    expect(")");
    return SymFilter::transversal(a, b, from, std::move(patch));
  }

  Interval interval() {
    skip();
    if (!lit("[")) {
      Int x = number();
      return {x, x};
    }
    Int lo = number();
    expect(",");
    if (word("inf") || lit("∞")) {
      expect(")");
      return {lo, inf};
    }
    Int hi = number();
    expect("]");
    return {lo, hi};
  }

  Int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 10) fail("number too large");
    Int v = std::stoll(s_.substr(start, pos_ - start));
    if (v > max_literal) fail("number too large");
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool lit(const std::string& t) {
    skip();
    if (s_.compare(pos_, t.size(), t) != 0) return false;
    pos_ += t.size();
    return true;
  }

  // A keyword not followed by further identifier characters.
  bool word(const std::string& t) {
    skip();
    if (s_.compare(pos_, t.size(), t) != 0) return false;
    std::size_t end = pos_ + t.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  void expect(const std::string& t) {
    if (!lit(t)) fail("expected '" + t + "'");
  }
  void expect_word(const std::string& t) {
    if (!word(t)) fail("expected '" + t + "'");
  }

  [[noreturn]] void fail(const std::string& why) {
    throw error("cannot parse term at offset " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntervalSet parse_interval_set(const std::string& text) {
  TermParser p(text);
  IntervalSet s = p.interval_set();
  p.done();
  return s;
}

GridSet parse_grid_set(const std::string& text) {
  TermParser p(text);
  GridSet g = p.grid_set();
  p.done();
  return g;
}

SymFilter parse_term(const std::string& text) {
  TermParser p(text);
  SymFilter f = p.term();
  p.done();
  return f;
}

}  // namespace convkit::sym
