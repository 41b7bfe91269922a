#pragma once

// Finite cascades, multifilters and contours.
//
// A cascade here is a finite rooted tree (finite trees are well-capped). Each
// non-maximal node carries a filter on the set of its immediate successors,
// stored as a kernel whose bit i selects children[i]. A multifilter labels
// every non-root node with a point of a ground set.
//
// On a finite ground, ∫_F G = ⋁_{F∈F} ⋀_{x∈F} G(x) has kernel
// ⋃_{x∈ker F} ker G(x): the meets grow as F shrinks, so the join is attained
// at F = ker F.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "convkit/filter_class.hpp"

namespace convkit {

inline constexpr int max_cascade_nodes = 31;

struct CascadeNode {
  std::vector<int> children;
  Subset filter;  // kernel over child positions; ignored on maximal nodes
};

class Multifilter;
class Filter;
Multifilter contour_compose(const Filter& j, const GroundSet& y, const Multifilter& phi);

class Cascade {
 public:
  /// nodes[0] is the estuary. Every other node must have exactly one parent
  /// and be reachable from the estuary.
  explicit Cascade(std::vector<CascadeNode> nodes);

  int size() const { return static_cast<int>(nodes_.size()); }
  const CascadeNode& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }
  bool is_maximal(int v) const { return node(v).children.empty(); }
  /// r(v) = 0 on maximal nodes, otherwise max over children of r + 1.
  int rank(int v) const;
  int rank() const { return rank(0); }

 private:
  Cascade() = default;
  friend class Multifilter;
  friend class MultifilterEnumerator;
  friend Multifilter contour_compose(const Filter&, const GroundSet&, const Multifilter&);
  std::vector<CascadeNode> nodes_;
};

class Multifilter {
 public:
  /// labels[v] for v ≥ 1; labels[0] is ignored. Requires rank ≥ 1.
  Multifilter(Cascade cascade, GroundSet ground, std::vector<int> labels);

  const Cascade& cascade() const { return cascade_; }
  const GroundSet& ground() const { return ground_; }
  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }

  /// Φ♮(v): the image under the labels of the filter carried by v.
  Subset image_of_node_filter(int v) const;

 private:
  Multifilter() = default;
  friend class MultifilterEnumerator;
  friend Multifilter contour_compose(const Filter&, const GroundSet&, const Multifilter&);
  Cascade cascade_;
  GroundSet ground_ = indexed_ground(1);
  std::vector<int> labels_;
};

struct ContourTrace {
  int node = 0;
  Subset kernel;
  std::vector<ContourTrace> children;  // only the children selected by the node filter
};

struct ContourResult {
  Filter filter;
  ContourTrace trace;
};

/// ∫_F G; g[x] is the filter attached to point x of F's ground.
Filter contour_along(const Filter& f, std::span<const Filter> g);

ContourResult contour(const Multifilter& phi);
/// Kernel of ∫Φ without building the trace.
Subset contour_kernel(const Multifilter& phi);

/// Rewrites Φ on X into a multifilter on Y whose contour is J(∫Φ), for a
/// filter J on X×Y. Throws internal_error if the contours differ.
Multifilter contour_compose(const Filter& j, const GroundSet& y, const Multifilter& phi);

/// True when every node filter is a D-filter. A node's children are given the
/// convergence induced from the space through the labels, so that
/// space-dependent classes have a space to live in.
bool is_class_multifilter(const Multifilter& phi, const FilterClass& d, const FiniteSpace& s);

/// Calls fn on one representative of every unordered rooted tree with
/// between 2 and max_nodes nodes; node filters are left empty.
void for_each_tree_shape(int max_nodes, const std::function<void(const Cascade&)>& fn);

/// Calls fn on every multifilter over `ground` whose cascade has at most
/// max_nodes nodes. Interior labels are enumerated only when
/// `all_labels` is set; otherwise they are 0.
void for_each_multifilter(const GroundSet& ground, int max_nodes, bool all_labels,
                          const std::function<void(const Multifilter&)>& fn);

/// Kernels of ∫D in the space, from all D-multifilters with at most
/// max_nodes nodes, plus the degenerate filter; ascending.
std::vector<Subset> contour_class_members(const FilterClass& d, const FiniteSpace& s, int max_nodes);

/// The class ∫D.
inline FilterClass int_class(const FilterClass& d, int max_nodes = FilterClass::default_contour_nodes) {
  return FilterClass::contour(d, max_nodes);
}

}  // namespace convkit
