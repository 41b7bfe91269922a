#pragma once

// Compact relations and the maps they characterize: adherent, closed,
// D-perfect and D-quotient maps, and M-compactly (J/D)-meshable filters and
// relations.
//
// Classes on the codomain of a map are evaluated in the space the formula
// names. For D-quotient maps that is fξ, the space Adh_D is applied to in
// τ ≥ Adh_D fξ; evaluating clF1 in τ instead would make every surjection
// clF1-quotient.

#include <optional>
#include <string>
#include <vector>

#include "convkit/compactness.hpp"

namespace convkit {

struct Verdict {
  bool holds = true;
  std::string witness;  // refuting instance when !holds
};

/// Definitional: for every A ⊆ X and every F D-compact at A in ξ, RF is
/// D-compact at RA in τ.
Verdict relation_compact(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau, const FilterClass& d);
/// Same predicate from precomputed tables for ξ and τ.
bool relation_compact(const Relation& r, const CompactTable& xi, const CompactTable& tau);

/// The point criterion: RF is D-compact at Rx whenever x ∈ lim_ξ F.
Verdict relation_compact_pointwise(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau,
                                   const FilterClass& d);
bool relation_compact_pointwise(const Relation& r, const FiniteSpace& xi, const CompactTable& tau);

/// y ∈ adh_τ f(H) ⟹ adh_ξ H ∩ f⁻y ≠ ∅.
Verdict is_adherent(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau);
/// Images of ξ-closed sets are τ-closed.
Verdict is_closed_map(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau);
/// adh_ξ A is closed for every A.
bool adherences_closed(const FiniteSpace& xi);

/// Adherent with D-compact fibers. Throws on non-surjective maps.
Verdict is_D_perfect(const Relation& f, const FilterClass& d, const FiniteSpace& xi, const FiniteSpace& tau);

/// y ∈ adh_τ H ⟹ f⁻y ∩ adh_ξ f⁻H ≠ ∅ for every H ∈ D(fξ). Throws on
/// non-surjective maps.
Verdict is_D_quotient(const Relation& f, const FilterClass& d, const FiniteSpace& xi, const FiniteSpace& tau);

struct QuotientCharacterizations {
  bool definitional = false;  // the adherence condition
  bool via_reflector = false;  // τ ≥ Adh_D fξ
  bool via_relation = false;   // f: (X, f⁻τ) → (Y, fξ) is D-compact
  std::string witness;
};
QuotientCharacterizations quotient_characterizations(const Relation& f, const FilterClass& d, const FiniteSpace& xi,
                                                     const FiniteSpace& tau);

/// F is an M-compactly (J/D)#-filter at A: every J-filter meshing F meshes a
/// D-filter that is M-compact at A. All classes are evaluated in s.
bool is_mcm_filter(const FiniteSpace& s, Subset f, Subset a, const FilterClass& m, const FilterClass& j,
                   const FilterClass& d);

/// F →ξ x ⟹ RF is an M-compactly (J/D)#-filter at Rx in τ.
Verdict is_mcm_relation(const Relation& r, const FilterClass& m, const FilterClass& j, const FilterClass& d,
                        const FiniteSpace& xi, const FiniteSpace& tau);

/// Classical upper semicontinuity between topological spaces: for every x
/// and every open U ⊇ Rx, {x' : Rx' ⊆ U} is a neighborhood of x.
bool is_usc(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau);

struct TheoremReport {
  Outcome outcome = Outcome::not_applicable;
  std::string hypothesis_failure;  // first failed hypothesis, if any
  bool lhs = false;
  bool rhs = false;
  std::string witness;
};

/// f M-quotient with (J/D)-accessible range ⟺ f: (X, f⁻τ) → (Y, fξ) is
/// M-compactly (J/D)-meshable. Hypotheses: M ⊆ J, τ = Adh_M τ, f a
/// continuous surjection. Both sides are evaluated even when a hypothesis
/// fails, so that reports can tell whether the conclusion held anyway.
TheoremReport theorem_mquot_range(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau,
                                  const FilterClass& m, const FilterClass& j, const FilterClass& d);

/// f M-perfect with (J/D)-accessible range ⟺ f⁻: (Y, τ) ⇉ (X, ξ) is
/// M-compactly (J/D)-meshable. Adds: J and D F1-composable, ξ P-diagonal,
/// adh♮ M(ξ) ⊆ M(ξ).
TheoremReport theorem_mperfect_range(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau,
                                     const FilterClass& m, const FilterClass& j, const FilterClass& d);

/// M(s) ⊆ J(s).
bool class_included(const FilterClass& m, const FilterClass& j, const FiniteSpace& s);

struct NotionVerdict {
  std::string notion;
  std::optional<bool> value;  // empty when not applicable
  std::string note;           // witness, refuter or the reason it does not apply
};

struct MapClassification {
  std::string subject;
  std::vector<NotionVerdict> verdicts;
};

/// Every notion for one relation, over the classes F1 and clF1.
MapClassification classify(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau);

}  // namespace convkit
