#pragma once

// Space-parameterized classes of filters, the reflector Adh_D and the
// coreflector Base_D.
//
// At finite scale every filter is principal, so the classes of principal,
// countably based, countably deep, sequential and all filters coincide: each
// contains every kernel. They are kept as distinct tags so that reports name
// the class a statement is about; collapses_to_principal() marks them. The
// class of principal filters of closed sets is the one finite-scale class
// that depends on the space and genuinely differs from F1.
//
// Every class contains the degenerate filter (kernel ∅).

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convkit/space.hpp"

namespace convkit {

class FilterClass {
 public:
  enum class Kind {
    principal,         // F1
    countably_based,   // Fw
    all,               // F
    countably_deep,    // Fdw
    closed_principal,  // clF1
    sequential,        // E
    degenerate_only,   // deg
    mesh_refine,       // mr(J,D): the (J/D)#≥ filters
    contour,           // int(D): contours of D-multifilters
  };

  static constexpr int default_contour_nodes = 5;

  static FilterClass F1() { return FilterClass(Kind::principal); }
  static FilterClass Fomega() { return FilterClass(Kind::countably_based); }
  static FilterClass F() { return FilterClass(Kind::all); }
  static FilterClass FwedgeOmega() { return FilterClass(Kind::countably_deep); }
  static FilterClass ClF1() { return FilterClass(Kind::closed_principal); }
  static FilterClass Seq() { return FilterClass(Kind::sequential); }
  static FilterClass degenerate_only() { return FilterClass(Kind::degenerate_only); }
  static FilterClass mesh_refine(const FilterClass& j, const FilterClass& d);
  static FilterClass contour(const FilterClass& d, int max_nodes = default_contour_nodes);

  /// CLI syntax: F1, Fw, F, Fdw, clF1, E, deg, int(D), int(D;N), mr(J,D).
  static FilterClass parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::string name() const;
  const FilterClass& first() const { return *first_; }
  const FilterClass& second() const { return *second_; }
  int max_nodes() const { return max_nodes_; }

  bool space_dependent() const;
  /// True for the tags that contain every kernel on a finite ground.
  bool collapses_to_principal() const;

  bool contains(const FiniteSpace& s, Subset kernel) const;
  /// Kernels of the members in D(s), ascending; always includes ∅.
  const std::vector<Subset>& members(const FiniteSpace& s) const;

  friend bool operator==(const FilterClass& a, const FilterClass& b) { return a.name() == b.name(); }

 private:
  explicit FilterClass(Kind k) : kind_(k) {}
  std::vector<Subset> compute_members(const FiniteSpace& s) const;

  Kind kind_;
  std::shared_ptr<const FilterClass> first_;
  std::shared_ptr<const FilterClass> second_;
  int max_nodes_ = default_contour_nodes;
};

struct ClassProps {
  bool f1_composable = false;
  bool composable = false;
};

struct ComposabilityResult {
  bool holds = true;
  std::string witness;  // first refuting instance, empty when holds
};

/// J is D-composable: HF ∈ J(Y) whenever F ∈ J(X) and H ∈ D(X×Y), checked
/// exhaustively on grounds of size ≤ max_points. Space-dependent classes are
/// evaluated in every pair of spaces ξ on X and τ on Y, with D taken in ξ×τ.
ComposabilityResult is_composable(const FilterClass& j, const FilterClass& d, int max_points = 2);

ClassProps class_props(const FilterClass& c, int max_points = 2);

/// Memoized is_composable(c, F1) at the default bound.
bool is_f1_composable(const FilterClass& c);

/// adh♮D ⊆ D in the given space.
bool adh_stable(const FilterClass& d, const FiniteSpace& s);

/// Adh_D ξ: L'(x) = ⋂ {adh D : D ∈ D, x ∈ ker D}, the full set when no such D.
/// D is evaluated in `class_space` when given, otherwise in ξ.
FiniteSpace adh_reflector(const FiniteSpace& xi, const FilterClass& d,
                          const FiniteSpace* class_space = nullptr);

/// Point limits of Base_D ξ as the formula gives them:
/// L'(x) = ⋃ {lim D : D ∈ D, D ≤ {x}↑}. When D lacks {x}↑ this can miss x
/// itself, so the result need not be a convergence (clF1 in a space where
/// {x} is not closed is the typical case).
std::vector<Subset> base_limits(const FiniteSpace& xi, const FilterClass& d,
                                const FiniteSpace* class_space = nullptr);

/// The smallest convergence containing base_limits: each L'(x) gains x.
/// Equal to the raw limits whenever D contains the point filters.
FiniteSpace base_coreflector(const FiniteSpace& xi, const FilterClass& d,
                             const FiniteSpace* class_space = nullptr);

/// lim_{Base_D ξ} F = ⋃_{D ∈ D, D ≤ F} lim D evaluated at one kernel, without
/// passing through point limits.
Subset base_lim(const FiniteSpace& xi, const FilterClass& d, Subset kernel);

/// Adh_J applied to raw point limits: L''(x) = ⋂ {⋃_{z∈J} limits[z] : J ∈ J,
/// x ∈ ker J}, J taken in class_space.
std::vector<Subset> adh_limits(std::span<const Subset> limits, const FilterClass& j, const FiniteSpace& class_space);

struct AccessibilityResult {
  bool definitional = false;    // adh J ⊆ adh_{Base_D ξ} J for every J ∈ J
  bool via_reflectors = false;  // ξ ≥ Adh_J Base_D ξ (J taken in ξ)
  bool centered_base = false;   // the definitional test against base_coreflector instead
  std::optional<Subset> refuter;
};

AccessibilityResult accessibility(const FiniteSpace& xi, const FilterClass& j, const FilterClass& d);
/// Throws internal_error when the two characterizations disagree.
bool is_accessible(const FiniteSpace& xi, const FilterClass& j, const FilterClass& d);

/// F ∈ (J/D)#≥: every J ∈ J meshing F admits D ∈ D with D # J and D ≥ F.
bool is_mesh_refinable(Subset kernel, const FilterClass& j, const FilterClass& d, const FiniteSpace& s);

}  // namespace convkit
