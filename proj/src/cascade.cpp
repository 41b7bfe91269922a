#include "convkit/cascade.hpp"

#include <algorithm>
#include <set>

namespace convkit {

Cascade::Cascade(std::vector<CascadeNode> nodes) : nodes_(std::move(nodes)) {
  const int n = size();
  if (n < 1 || n > max_cascade_nodes) throw error("cascade must have between 1 and 31 nodes");
  std::vector<int> parents(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    const CascadeNode& nd = node(v);
    if (nd.children.size() > 31) throw error("too many children at one node");
    for (int c : nd.children) {
      if (c <= 0 || c >= n) throw error("child index out of range");
      if (++parents[static_cast<std::size_t>(c)] > 1) throw error("node " + std::to_string(c) + " has two parents");
    }
    if (!nd.children.empty() && !nd.filter.subset_of(Subset::full(static_cast<int>(nd.children.size()))))
      throw error("node filter selects a missing child");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    seen[static_cast<std::size_t>(v)] = true;
    for (int c : node(v).children) stack.push_back(c);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw error("cascade node unreachable from the estuary");
}

int Cascade::rank(int v) const {
  int r = 0;
  for (int c : node(v).children) r = std::max(r, rank(c) + 1);
  return r;
}

Multifilter::Multifilter(Cascade cascade, GroundSet ground, std::vector<int> labels)
    : cascade_(std::move(cascade)), ground_(std::move(ground)), labels_(std::move(labels)) {
  if (labels_.size() != static_cast<std::size_t>(cascade_.size())) throw error("multifilter needs one label per node");
  if (cascade_.rank() < 1) throw error("multifilter needs a cascade of rank at least 1");
  for (int v = 1; v < cascade_.size(); ++v)
    if (label(v) < 0 || label(v) >= ground_.size()) throw error("multifilter label out of range");
}

Subset Multifilter::image_of_node_filter(int v) const {
  const CascadeNode& nd = cascade_.node(v);
  Subset out;
  for_each_element(nd.filter, [&](int i) { out |= Subset::singleton(label(nd.children[static_cast<std::size_t>(i)])); });
  return out;
}

Filter contour_along(const Filter& f, std::span<const Filter> g) {
  if (g.size() != static_cast<std::size_t>(f.ground().size()))
    throw typing_error("contour needs one filter per point of the base ground");
  const GroundSet& target = g.front().ground();
  for (const Filter& gx : g)
    if (!(gx.ground() == target)) throw typing_error("contour filters over different ground sets");
  Subset k;
  for_each_element(f.kernel(), [&](int x) { k |= g[static_cast<std::size_t>(x)].kernel(); });
  return Filter::principal(target, k);
}

static Subset node_contour(const Multifilter& phi, int v) {
  const CascadeNode& nd = phi.cascade().node(v);
  if (nd.children.empty()) return Subset::singleton(phi.label(v));
  Subset out;
  for_each_element(nd.filter, [&](int i) { out |= node_contour(phi, nd.children[static_cast<std::size_t>(i)]); });
  return out;
}

static ContourTrace node_trace(const Multifilter& phi, int v) {
  ContourTrace t;
  t.node = v;
  const CascadeNode& nd = phi.cascade().node(v);
  if (nd.children.empty()) {
    t.kernel = Subset::singleton(phi.label(v));
    return t;
  }
  for_each_element(nd.filter, [&](int i) {
    t.children.push_back(node_trace(phi, nd.children[static_cast<std::size_t>(i)]));
    t.kernel |= t.children.back().kernel;
  });
  return t;
}

Subset contour_kernel(const Multifilter& phi) { return node_contour(phi, 0); }

ContourResult contour(const Multifilter& phi) {
  ContourTrace t = node_trace(phi, 0);
  return {Filter::principal(phi.ground(), t.kernel), std::move(t)};
}

Multifilter contour_compose(const Filter& j, const GroundSet& y, const Multifilter& phi) {
  const GroundSet& x = phi.ground();
  const int ny = y.size();
  if (j.ground().size() != x.size() * ny) throw typing_error("composing filter is not on X×Y");
  const Subset graph = j.kernel();
  auto row = [&](int p) { return Subset{(graph.bits >> (p * ny)) & Subset::full(ny).bits}; };

  // Each maximal node labeled x grows one leaf per point of J(x), all
  // selected; an empty row becomes a node carrying the degenerate filter.
  // Growing leaves keeps the tree valid, so the result skips revalidation.
  const Cascade& c = phi.cascade();
  Multifilter out;
  out.ground_ = y;
  std::vector<CascadeNode>& nodes = out.cascade_.nodes_;
  nodes.reserve(static_cast<std::size_t>(c.size()) * static_cast<std::size_t>(ny + 1));
  nodes = c.nodes_;
  out.labels_.assign(nodes.size(), 0);
  for (int v = 1; v < c.size(); ++v) {
    if (!c.is_maximal(v)) continue;
    const Subset r = row(phi.label(v));
    if (r.empty()) {
      nodes[static_cast<std::size_t>(v)].children.push_back(static_cast<int>(nodes.size()));
      nodes[static_cast<std::size_t>(v)].filter = Subset{};
      nodes.emplace_back();
      out.labels_.push_back(0);
      continue;
    }
    for_each_element(r, [&](int target) {
      nodes[static_cast<std::size_t>(v)].children.push_back(static_cast<int>(nodes.size()));
      nodes.emplace_back();
      out.labels_.push_back(target);
    });
    nodes[static_cast<std::size_t>(v)].filter = Subset::full(r.size());
  }
  if (static_cast<int>(nodes.size()) > max_cascade_nodes) throw error("composed cascade exceeds 31 nodes");
  Subset expected;
  for_each_element(contour_kernel(phi), [&](int p) { expected |= row(p); });
  if (contour_kernel(out) != expected) throw internal_error("composed multifilter has the wrong contour");
  return out;
}

bool is_class_multifilter(const Multifilter& phi, const FilterClass& d, const FiniteSpace& s) {
  if (!(s.ground() == phi.ground())) throw typing_error("multifilter and space over different ground sets");
  const Cascade& c = phi.cascade();
  for (int v = 0; v < c.size(); ++v) {
    const CascadeNode& nd = c.node(v);
    if (nd.children.empty()) continue;
    if (d.collapses_to_principal()) continue;
    const int m = static_cast<int>(nd.children.size());
    if (m > max_ground_size) throw error("node has too many children for class evaluation");
    std::vector<Subset> l(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      Subset lim = s.pointlim(phi.label(nd.children[static_cast<std::size_t>(i)]));
      for (int k = 0; k < m; ++k)
        if (lim.contains(phi.label(nd.children[static_cast<std::size_t>(k)]))) l[static_cast<std::size_t>(i)] |= Subset::singleton(k);
    }
    FiniteSpace induced(indexed_ground(m), std::move(l));
    if (!d.contains(induced, nd.filter)) return false;
  }
  return true;
}

// ------------------------------------------------------------ enumeration

namespace {

// Canonical unordered rooted trees, built bottom-up. A shape is the sorted
// multiset of its children's shape ids; ids grow with tree size.
struct ShapeTable {
  std::vector<std::vector<int>> children;
  std::vector<int> size;

  explicit ShapeTable(int max_nodes) {
    children.push_back({});
    size.push_back(1);
    for (int n = 2; n <= max_nodes; ++n) {
      std::vector<int> current;
      grow(n - 1, 0, current, n);
    }
  }

  void grow(int remaining, int min_id, std::vector<int>& current, int total) {
    if (remaining == 0) {
      children.push_back(current);
      size.push_back(total);
      return;
    }
    const int known = static_cast<int>(size.size());
    for (int id = min_id; id < known; ++id) {
      if (size[static_cast<std::size_t>(id)] >= total) break;
      if (size[static_cast<std::size_t>(id)] > remaining) break;
      current.push_back(id);
      grow(remaining - size[static_cast<std::size_t>(id)], id, current, total);
      current.pop_back();
    }
  }

  void emit(int id, std::vector<CascadeNode>& nodes) const {
    int self = static_cast<int>(nodes.size());
    nodes.push_back({});
    for (int child : children[static_cast<std::size_t>(id)]) {
      int pos = static_cast<int>(nodes.size());
      nodes[static_cast<std::size_t>(self)].children.push_back(pos);
      emit(child, nodes);
    }
  }
};

}  // namespace

// Reuses one cascade and one multifilter per shape, rewriting node filters
// and labels in place; the shape itself was validated once.
class MultifilterEnumerator {
 public:
  static void run(const GroundSet& ground, int max_nodes, bool all_labels,
                  const std::function<void(const Multifilter&)>& fn) {
    for_each_tree_shape(max_nodes, [&](const Cascade& shape) {
      Multifilter phi(shape, ground, std::vector<int>(static_cast<std::size_t>(shape.size()), 0));
      std::vector<int> interior, labeled;
      for (int v = 0; v < shape.size(); ++v) {
        if (!shape.is_maximal(v)) interior.push_back(v);
        if (v > 0 && (all_labels || shape.is_maximal(v))) labeled.push_back(v);
      }
      filters(phi, interior, 0, labeled, ground.size(), fn);
    });
  }

 private:
  static void filters(Multifilter& phi, const std::vector<int>& interior, std::size_t i,
                      const std::vector<int>& labeled, int n, const std::function<void(const Multifilter&)>& fn) {
    if (i == interior.size()) {
      labels(phi, labeled, 0, n, fn);
      return;
    }
    CascadeNode& nd = phi.cascade_.nodes_[static_cast<std::size_t>(interior[i])];
    const std::uint32_t count = 1u << nd.children.size();
    for (std::uint32_t k = 0; k < count; ++k) {
      nd.filter = Subset{k};
      filters(phi, interior, i + 1, labeled, n, fn);
    }
  }

  static void labels(Multifilter& phi, const std::vector<int>& labeled, std::size_t i, int n,
                     const std::function<void(const Multifilter&)>& fn) {
    if (i == labeled.size()) {
      fn(phi);
      return;
    }
    for (int x = 0; x < n; ++x) {
      phi.labels_[static_cast<std::size_t>(labeled[i])] = x;
      labels(phi, labeled, i + 1, n, fn);
    }
  }
};

void for_each_tree_shape(int max_nodes, const std::function<void(const Cascade&)>& fn) {
  if (max_nodes > max_cascade_nodes) throw error("tree enumeration capped at 31 nodes");
  if (max_nodes < 2) return;
  ShapeTable table(max_nodes);
  for (std::size_t id = 1; id < table.size.size(); ++id) {
    std::vector<CascadeNode> nodes;
    table.emit(static_cast<int>(id), nodes);
    fn(Cascade(std::move(nodes)));
  }
}

void for_each_multifilter(const GroundSet& ground, int max_nodes, bool all_labels,
                          const std::function<void(const Multifilter&)>& fn) {
  MultifilterEnumerator::run(ground, max_nodes, all_labels, fn);
}

std::vector<Subset> contour_class_members(const FilterClass& d, const FiniteSpace& s, int max_nodes) {
  std::set<std::uint32_t> found{0};
  for_each_multifilter(s.ground(), max_nodes, d.space_dependent(), [&](const Multifilter& phi) {
    Subset k = contour_kernel(phi);
    if (found.count(k.bits)) return;
    if (is_class_multifilter(phi, d, s)) found.insert(k.bits);
  });
  std::vector<Subset> out;
  for (std::uint32_t b : found) out.push_back(Subset{b});
  return out;
}

}  // namespace convkit
