#pragma once

// Definitional re-implementations used only to cross-check the closed forms.
//
// Nothing here calls the space's point formulas or the class member caches:
// limits come from the vicinity filters as families, adherences from
// enumerating every meshing filter, closed sets from the convergence of all
// filters containing them. Only family_core primitives are shared.

#include <span>
#include <vector>

#include "convkit/cascade.hpp"
#include "convkit/space.hpp"

namespace convkit::oracle {

/// A finite convergence as a bare table of point limits, without the
/// closed forms of FiniteSpace.
struct Convergence {
  GroundSet ground;
  std::vector<Subset> pointlim;
};
Convergence bare(const FiniteSpace& s);

/// F → x iff F contains every member of the vicinity filter of x.
bool converges(const Convergence& c, const Filter& f, int x);
Subset lim(const Convergence& c, const Filter& f);
/// ⋃ lim G over all G meshing F.
Subset adh(const Convergence& c, const Filter& f);
/// Every filter containing A has its limits in A.
bool is_closed(const Convergence& c, Subset a);

/// Class members from definitions; `class_name` is "F1" or "clF1".
std::vector<Subset> class_members(const Convergence& c, const std::string& class_name);

/// lim_{Adh_D} F = ⋂ {adh D : D ∈ D, D # F}.
Subset adh_reflector_lim(const Convergence& c, const std::string& class_name, const Filter& f);
/// lim_{Base_D} F = ⋃ {lim D : D ∈ D, F ≥ D}.
Subset base_lim(const Convergence& c, const std::string& class_name, const Filter& f);
/// Limits in the topology whose open sets are the complements of closed sets.
Subset topological_lim(const Convergence& c, const Filter& f);

/// G → y in fξ iff G is finer than a finite meet of images f(F) with
/// F → x and f(x) = y.
Subset final_lim(const Convergence& xi, const Relation& f, const Filter& g);
/// F → x in f⁻τ iff f(F) → f(x) in τ.
Subset initial_lim(const Convergence& tau, const Relation& f, const Filter& g);

/// F D-compact at A: every D-filter meshing F has an adherence meeting A.
bool compact_at(const Convergence& c, const std::string& class_name, const Filter& f, Subset a);

/// ⋁_{F∈F} ⋀_{x∈F} G(x), by joins and meets over every member of F.
Filter contour_along(const Filter& f, std::span<const Filter> g);
/// The recursive contour of a multifilter through contour_along.
Filter contour(const Multifilter& phi);

}  // namespace convkit::oracle
