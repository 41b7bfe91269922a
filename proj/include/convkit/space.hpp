#pragma once

// Finite convergence spaces.
//
// A convergence on a finite set is determined by its point limits
// L(x) = lim {x}↑: every filter is K↑ = ⋀_{x∈K} {x}↑, so the finite-meet
// axiom forces lim K↑ = ⋂_{x∈K} L(x). Centeredness ({x}↑ → x) is x ∈ L(x).
// Every finite convergence is a pretopology: V(x) has kernel
// {z : x ∈ L(z)} and lim V(x) = ⋂_{z∈V(x)} L(z) ∋ x.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "convkit/family.hpp"

namespace convkit {

struct SpaceKind {
  bool is_topology = false;
  bool is_P_diagonal = false;
  // Constant at finite scale.
  static constexpr bool is_pretopology = true;
  static constexpr bool is_paratopology = true;
  static constexpr bool is_pseudotopology = true;
};

class FiniteSpace {
 public:
  /// pointlim[x] = L(x). Throws if x ∉ L(x) or a set does not fit the ground.
  FiniteSpace(GroundSet ground, std::vector<Subset> pointlim);

  /// Every point converges only to itself.
  static FiniteSpace discrete(const GroundSet& g);
  /// Every filter converges to every point.
  static FiniteSpace indiscrete(const GroundSet& g);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Subset full() const { return ground_.full(); }
  Subset pointlim(int x) const { return pointlim_[static_cast<std::size_t>(x)]; }
  const std::vector<Subset>& pointlims() const { return pointlim_; }

  /// lim K↑; the degenerate filter converges to every point.
  Subset lim(Subset kernel) const;
  /// adh K↑ = ⋃_{x∈K} L(x); also the adherence of the set K.
  Subset adh(Subset kernel) const;

  /// Kernel of the vicinity filter V(x) = {z : x ∈ L(z)}.
  Subset vicinity(int x) const;
  /// Kernel of V(F) = ⋃_{F∈F} ⋂_{x∈F} V(x), which is ⋃_{x∈K} V(x).
  Subset vicinity_of(Subset kernel) const;

  bool is_closed(Subset a) const { return adh(a).subset_of(a); }
  /// Smallest closed superset; iterates adh to its fixpoint.
  Subset closure(Subset a) const;
  std::vector<Subset> closed_sets() const;
  /// Kernel of the neighborhood filter of x in the topological modification.
  Subset nbhd(int x) const;

  bool is_topology() const;
  bool is_P_diagonal() const;
  SpaceKind kind() const { return {is_topology(), is_P_diagonal()}; }

  /// this ≥ other: the identity from this to other is continuous.
  bool finer_than(const FiniteSpace& other) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.pointlim_ == b.pointlim_ && a.ground_ == b.ground_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> pointlim_;
};

Subset lim(const FiniteSpace& s, const Filter& f);
Subset adh_filter(const FiniteSpace& s, const Filter& f);
Subset adh_set(const FiniteSpace& s, Subset a);
Filter vicinity(const FiniteSpace& s, int x);
Filter vicinity_of_filter(const FiniteSpace& s, const Filter& f);
Filter nbhd(const FiniteSpace& s, int x);

/// Topological modification Tξ: the topology of the ξ-closed sets.
FiniteSpace topologize(const FiniteSpace& s);

/// f: X → Y a map; f continuous iff f(L(x)) ⊆ L_τ(f(x)) for every x.
bool is_continuous(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau);

/// f⁻τ: L(x) = f⁻(L_τ(f(x))).
FiniteSpace initial(const FiniteSpace& tau, const Relation& f);
/// fξ for a surjective map f: L(y) = ⋃_{x∈f⁻y} f(L_ξ(x)).
FiniteSpace final_space(const FiniteSpace& xi, const Relation& f);
FiniteSpace product(const FiniteSpace& xi, const FiniteSpace& tau);

/// adh_{fξ} D = f(adh_ξ f⁻D) for every filter D on Y.
bool final_adh_identity_check(const FiniteSpace& xi, const Relation& f);

/// Rejects relations that are not maps between the two spaces.
void require_map(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau);

/// "L(a)={a,b} L(b)={b}" style description for reports.
std::string describe(const FiniteSpace& s);

/// Calls fn on every centered space over g, in index order: the space with
/// index i has L(x) ∖ {x} given by successive (n-1)-bit chunks of i.
void for_each_space(const GroundSet& g, const std::function<void(const FiniteSpace&)>& fn);
FiniteSpace space_from_index(const GroundSet& g, std::uint64_t index);
std::uint64_t space_count(int n);

}  // namespace convkit
