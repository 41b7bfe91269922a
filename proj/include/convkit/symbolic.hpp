#pragma once

// Symbolic filters on ℕ and ℕ×ℕ: the sequential fan and the sequences that
// do or do not converge to it.
//
// Sets of ℕ are finite unions of intervals plus at most one tail, so every
// representable set is finite or cofinite. A grid set gives each column such
// a set: one default for all columns but finitely many exceptions. Every
// decision below is exact on this grammar; a question outside it raises
// undecided_error instead of guessing.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "convkit/family.hpp"

namespace convkit::sym {

using Int = std::int64_t;
inline constexpr Int inf = INT64_MAX;
inline constexpr Int max_literal = 1'000'000'000;

class undecided_error : public error {
 public:
  explicit undecided_error(const std::string& what) : error("undecided-by-grammar: " + what) {}
};

struct Interval {
  Int lo = 0;
  Int hi = 0;  // inclusive; inf for a tail
  bool operator==(const Interval&) const = default;
};

class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet of(std::vector<Interval> parts);
  static IntervalSet range(Int lo, Int hi) { return of({{lo, hi}}); }
  static IntervalSet tail(Int from) { return of({{from, inf}}); }
  static IntervalSet point(Int x) { return range(x, x); }
  static IntervalSet all() { return tail(0); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool infinite() const { return !parts_.empty() && parts_.back().hi == inf; }
  bool finite() const { return !infinite(); }
  // Finite unions with at most one tail: infinite and cofinite coincide.
  bool cofinite() const { return infinite(); }
  bool is_all() const { return parts_.size() == 1 && parts_[0] == Interval{0, inf}; }
  bool contains(Int x) const;
  Int min() const;          // throws on the empty set
  Int finite_max() const;   // throws unless finite and nonempty
  std::optional<Int> tail_start() const;

  IntervalSet complement() const;
  IntervalSet operator|(const IntervalSet& o) const;
  IntervalSet operator&(const IntervalSet& o) const;
  IntervalSet operator-(const IntervalSet& o) const { return *this & o.complement(); }
  bool subset_of(const IntervalSet& o) const { return (*this - o).empty(); }
  bool operator==(const IntervalSet&) const = default;

  std::string str() const;

 private:
  std::vector<Interval> parts_;
};

/// A subset of ℕ×ℕ given column by column: column n is exceptions[n] when
/// present, otherwise the default.
class GridSet {
 public:
  GridSet() = default;
  explicit GridSet(IntervalSet dflt, std::map<Int, IntervalSet> exceptions = {});
  static GridSet all() { return GridSet(IntervalSet::all()); }
  static GridSet column(Int n, const IntervalSet& w = IntervalSet::all());

  const IntervalSet& default_column() const { return default_; }
  const std::map<Int, IntervalSet>& exceptions() const { return exceptions_; }
  const IntervalSet& column_set(Int n) const;
  bool contains(Int n, Int j) const { return column_set(n).contains(j); }
  /// Columns whose set is infinite, as a subset of ℕ.
  IntervalSet infinite_columns() const;
  std::optional<Int> first_infinite_column() const;

  bool empty() const;
  GridSet complement() const;
  GridSet operator|(const GridSet& o) const;
  GridSet operator&(const GridSet& o) const;
  GridSet operator-(const GridSet& o) const { return *this & o.complement(); }
  bool subset_of(const GridSet& o) const { return (*this - o).empty(); }
  bool operator==(const GridSet&) const = default;

  std::string str() const;

 private:
  template <class Op>
  GridSet combine(const GridSet& o, Op op) const;
  IntervalSet default_;
  std::map<Int, IntervalSet> exceptions_;
};

enum class FanSupport { all_columns, cofinitely_many_columns };

/// Terms of the filter grammar. Sequence terms are column_tail (a sequence
/// running up one column) and transversal (one point per column, eventually
/// on the line j = a·n + b).
struct SymFilter {
  enum class Kind {
    principal_n,  // {set}↑ on ℕ
    cofinite_n,   // cofinite filter on ℕ
    principal,    // {grid}↑ on ℕ×ℕ
    grid_tail,    // {(n,j) : n ≥ a, j ≥ b}↑
    column_tail,  // tails of W inside column n
    block_tail,   // generated by the blocks T_k of all columns ≥ k
    fan,
    transversal,
    meet,
  };
  Kind kind = Kind::principal;
  IntervalSet set;   // principal_n, or W for column_tail
  GridSet grid;      // principal, grid_tail
  Int column = 0;    // column_tail
  Int a = 0, b = 0;  // grid_tail corner, transversal picker
  Int from = 0;      // transversal start column
  std::map<Int, IntervalSet> patch;  // transversal: finite point sets replacing the picker
  FanSupport support = FanSupport::all_columns;
  std::vector<SymFilter> parts;  // meet

  static SymFilter principal_n(IntervalSet s);
  static SymFilter cofinite_n();
  static SymFilter principal(GridSet g);
  static SymFilter grid_tail(Int a, Int b);
  static SymFilter column_tail(Int n, IntervalSet within = IntervalSet::all());
  static SymFilter block_tail();
  static SymFilter fan(FanSupport s);
  static SymFilter transversal(Int a, Int b, Int from, std::map<Int, IntervalSet> patch = {});
  static SymFilter meet(std::vector<SymFilter> parts);

  bool on_grid() const;
  bool is_sequence() const { return kind == Kind::column_tail || kind == Kind::transversal; }
  /// Points of column n visited by a transversal (empty before `from`).
  IntervalSet transversal_column(Int n) const;

  std::string str() const;
};

using SeqTerm = SymFilter;

bool sym_member(const GridSet& s, const SymFilter& f);
bool sym_member(const IntervalSet& s, const SymFilter& f);
bool sym_mesh(const SymFilter& f, const SymFilter& g);
/// f ≤ g: every member of f is a member of g (g is finer).
bool sym_finer(const SymFilter& f, const SymFilter& g);

/// A sequence in A converging to the fan point: the tail filter of the first
/// infinite column of A. Throws "not meshing" when A has no infinite column.
SeqTerm frechet_witness(const GridSet& a, const SymFilter& fan = SymFilter::fan(FanSupport::all_columns));

/// A grid set whose column n is [slope·n + offset, ∞) unless overridden.
struct AffineGridSet {
  Int slope = 0;
  Int offset = 0;
  std::map<Int, IntervalSet> exceptions;

  IntervalSet column_set(Int n) const;
  bool in_fan() const;  // every column cofinite
  std::string str() const;
};

struct RefuterCertificate {
  AffineGridSet member;  // a member of Fan(AllColumns)
  bool verified_member = false;
  bool verified_disjoint = false;
  std::string derivation;
};

/// A fan member missing the whole transversal, so no transversal picked
/// from the blocks T_k converges to the fan point.
RefuterCertificate strong_frechet_refuter(const SymFilter& blocks, const SeqTerm& sigma);
/// Symbolic disjointness of u from every point the transversal visits.
bool disjoint_from_transversal(const AffineGridSet& u, const SeqTerm& sigma);

struct ContourDerivation {
  SymFilter fan;                 // Fan(CofinitelyManyColumns)
  std::size_t checked = 0;
  std::size_t members = 0;
  std::vector<std::string> disagreements;  // empty when the equivalence held
};

/// Membership in ∫_F G with F cofinite on ℕ and G(n) cofinite in column n,
/// decided from the definition: some cofinite F has every column n ∈ F
/// cofinite in S.
bool contour_definition_member(const GridSet& s);
/// Fan(CofinitelyManyColumns) as the contour, checked against the
/// definition on every set of the battery.
ContourDerivation fan_as_contour(std::span<const GridSet> battery);

/// A fan member containing none of the given fan members. Throws if one of
/// them is not a member.
GridSet diagonal_escape(std::span<const GridSet> members, FanSupport support);

struct Battery {
  std::vector<GridSet> sets;
  std::vector<SymFilter> transversals;
};
/// Seeded random grid sets and transversals with small parameters.
Battery generate_battery(std::uint64_t seed, std::size_t sets, std::size_t transversals);

IntervalSet parse_interval_set(const std::string& text);
GridSet parse_grid_set(const std::string& text);
SymFilter parse_term(const std::string& text);

}  // namespace convkit::sym
