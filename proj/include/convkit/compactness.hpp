#pragma once

// Compactness of filters and families at families, cover-compactness and
// the (D/J) variant.
//
// "F is D-compact at A": every D-filter meshing F has an adherence meshing A.
// A filter is passed as its kernel and a set A as the principal family
// {A}↑, so "adh D # A" reads adh(ker D) ∩ A ≠ ∅.

#include <optional>
#include <string>
#include <vector>

#include "convkit/filter_class.hpp"

namespace convkit {

enum class Outcome { holds, fails, not_applicable, vacuous };
const char* to_string(Outcome o);

struct CompactVerdict {
  bool holds = true;
  bool vacuous = true;            // no D-filter met the subject
  std::optional<Subset> refuter;  // kernel of a D-filter meshing F whose adherence misses A
};

/// General form: subject and target are arbitrary isotone families.
CompactVerdict compact_at(const FiniteSpace& s, const Family& subject, const Family& at, const FilterClass& d);

/// Filter kernel at a set.
bool is_compact_at(const FiniteSpace& s, Subset f, Subset at, const FilterClass& d);

/// K is D-compact: {K}↑ is D-compact at K.
inline bool is_compact_set(const FiniteSpace& s, Subset k, const FilterClass& d) {
  return is_compact_at(s, k, k, d);
}

/// Precomputed "F D-compact at A" for every kernel F and set A of one space.
/// For each F it keeps the adherences of the D-filters meshing F; F is
/// compact at A when A meets all of them.
class CompactTable {
 public:
  CompactTable(const FiniteSpace& s, const FilterClass& d);
  bool at(Subset f, Subset a) const;
  /// Points x with F D-compact at {x}.
  Subset points(Subset f) const { return points_[f.bits]; }

 private:
  std::vector<std::vector<Subset>> adh_of_meshing_;
  std::vector<Subset> points_;
};

/// (D/J)-compactness: D ∈ D with adh J # F for every J ∈ J, J ≤ D, forces
/// adh D # B.
CompactVerdict dj_compact_at(const FiniteSpace& s, const Family& subject, const Family& at, const FilterClass& d,
                             const FilterClass& j);
bool is_dj_compact_at(const FiniteSpace& s, Subset f, Subset at, const FilterClass& d, const FilterClass& j);

/// S covers K: every filter converging to a point of K contains a member of S.
bool is_cover(const FiniteSpace& s, const Family& cover, Subset k);

struct CoverCompactness {
  bool by_covers = false;   // every additive cover of K has a member covering K
  bool by_filters = false;  // filters whose members all adhere to K adhere to K
  bool compact = false;     // every filter meshing K adheres to K
  bool countable_ignored = false;  // every cover is finite here
};

/// Exhaustive over additive covers, so limited to grounds of at most 4 points.
CoverCompactness cover_compactness(const FiniteSpace& s, Subset k, bool countable = false);

struct PdiagReport {
  bool adh_stable = false;
  bool p_diagonal = false;
  bool adh_fixed = false;  // ξ = Adh_D ξ
  Outcome forward = Outcome::not_applicable;  // (D/F1)-compact ⟺ D-compact
  Outcome converse = Outcome::not_applicable;  // ξ = Adh_D ξ and the implication ⟹ P-diagonal
  bool equivalence_anyway = false;  // the equivalence held even where the hypotheses failed
  std::string witness;
};

/// The P-diagonality bridge on one space, quantifying subjects over all
/// kernels and targets over all sets.
PdiagReport pdiag_bridge(const FiniteSpace& s, const FilterClass& d);

}  // namespace convkit
