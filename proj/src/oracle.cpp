#include "convkit/oracle.hpp"

namespace convkit::oracle {

namespace {

template <class Fn>
void each_filter(const GroundSet& g, Fn&& fn) {
  for_each_subset(g.full(), [&](Subset k) { fn(Filter::principal(g, k)); });
}

Family vicinity_family(const Convergence& c, int x) {
  Subset v;
  for (int z = 0; z < c.ground.size(); ++z)
    if (c.pointlim[static_cast<std::size_t>(z)].contains(x)) v |= Subset::singleton(z);
  return up_close(c.ground, {v});
}

}  // namespace

Convergence bare(const FiniteSpace& s) { return {s.ground(), s.pointlims()}; }

bool converges(const Convergence& c, const Filter& f, int x) {
  const Family v = vicinity_family(c, x);
  const Family ff = f.family();
  for (Subset m : v.minimals())
    if (!ff.contains(m)) return false;
  return true;
}

Subset lim(const Convergence& c, const Filter& f) {
  Subset out;
  for (int x = 0; x < c.ground.size(); ++x)
    if (converges(c, f, x)) out |= Subset::singleton(x);
  return out;
}

Subset adh(const Convergence& c, const Filter& f) {
  Subset out;
  each_filter(c.ground, [&](const Filter& g) {
    if (mesh(g.family(), f.family())) out |= lim(c, g);
  });
  return out;
}

bool is_closed(const Convergence& c, Subset a) {
  bool closed = true;
  each_filter(c.ground, [&](const Filter& g) {
    // The degenerate filter converges to every point by convention and is
    // left out, as it is from every statement about closure.
    if (!g.is_degenerate() && g.contains(a) && !lim(c, g).subset_of(a)) closed = false;
  });
  return closed;
}

std::vector<Subset> class_members(const Convergence& c, const std::string& class_name) {
  std::vector<Subset> out;
  for_each_subset(c.ground.full(), [&](Subset k) {
    if (class_name == "F1" || (class_name == "clF1" && is_closed(c, k))) out.push_back(k);
  });
  if (class_name != "F1" && class_name != "clF1") throw error("oracle has no class " + class_name);
  return out;
}

Subset adh_reflector_lim(const Convergence& c, const std::string& class_name, const Filter& f) {
  Subset out = c.ground.full();
  for (Subset k : class_members(c, class_name)) {
    Filter d = Filter::principal(c.ground, k);
    if (mesh(d.family(), f.family())) out &= adh(c, d);
  }
  return out;
}

Subset base_lim(const Convergence& c, const std::string& class_name, const Filter& f) {
  Subset out;
  for (Subset k : class_members(c, class_name)) {
    Filter d = Filter::principal(c.ground, k);
    if (finer(f, d)) out |= lim(c, d);
  }
  return out;
}

Subset topological_lim(const Convergence& c, const Filter& f) {
  std::vector<Subset> open;
  for_each_subset(c.ground.full(), [&](Subset a) {
    if (is_closed(c, a)) open.push_back(c.ground.full() - a);
  });
  Subset out;
  for (int x = 0; x < c.ground.size(); ++x) {
    bool all = true;
    for (Subset u : open)
      if (u.contains(x) && !f.contains(u)) all = false;
    if (all) out |= Subset::singleton(x);
  }
  return out;
}

Subset final_lim(const Convergence& xi, const Relation& f, const Filter& g) {
  const GroundSet& y = f.codomain();
  Subset out;
  for (int t = 0; t < y.size(); ++t) {
    // The coarsest filter converging to t is the meet of all images f(F)
    // with F → x ∈ f⁻t; meets of principal filters unite kernels.
    Filter coarsest = Filter::principal(y, Subset{});
    bool any = false;
    each_filter(xi.ground, [&](const Filter& ff) {
      for (int x = 0; x < xi.ground.size(); ++x) {
        if (!f.row(x).contains(t) || !converges(xi, ff, x)) continue;
        coarsest = any ? meet(coarsest, image(f, ff)) : image(f, ff);
        any = true;
      }
    });
    if (any && finer(g, coarsest)) out |= Subset::singleton(t);
  }
  return out;
}

Subset initial_lim(const Convergence& tau, const Relation& f, const Filter& g) {
  Subset out;
  const Subset image_lim = lim(tau, image(f, g));
  for (int x = 0; x < f.domain().size(); ++x)
    if (f.row(x).meets(image_lim) && f.row(x).subset_of(image_lim)) out |= Subset::singleton(x);
  return out;
}

bool compact_at(const Convergence& c, const std::string& class_name, const Filter& f, Subset a) {
  for (Subset k : class_members(c, class_name)) {
    Filter d = Filter::principal(c.ground, k);
    if (mesh(d.family(), f.family()) && !adh(c, d).meets(a)) return false;
  }
  return true;
}

Filter contour_along(const Filter& f, std::span<const Filter> g) {
  const GroundSet& target = g.front().ground();
  // Members of F are enumerated; the empty meet is the degenerate filter.
  bool first = true;
  Filter out = Filter::degenerate(target);
  for_each_subset(f.ground().full(), [&](Subset m) {
    if (!f.contains(m)) return;
    Filter inner = Filter::degenerate(target);
    bool started = false;
    for_each_element(m, [&](int x) {
      inner = started ? meet(inner, g[static_cast<std::size_t>(x)]) : g[static_cast<std::size_t>(x)];
      started = true;
    });
    out = first ? inner : join(out, inner);
    first = false;
  });
  return out;
}

namespace {

Filter node_contour(const Multifilter& phi, int v) {
  const CascadeNode& nd = phi.cascade().node(v);
  if (nd.children.empty()) return Filter::point(phi.ground(), phi.label(v));
  std::vector<Filter> g;
  for (int c : nd.children) g.push_back(node_contour(phi, c));
  const GroundSet& children = indexed_ground(static_cast<int>(nd.children.size()));
  return oracle::contour_along(Filter::principal(children, nd.filter), g);
}

}  // namespace

Filter contour(const Multifilter& phi) { return node_contour(phi, 0); }

}  // namespace convkit::oracle
