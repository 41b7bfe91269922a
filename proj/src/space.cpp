#include "convkit/space.hpp"

namespace convkit {

FiniteSpace::FiniteSpace(GroundSet ground, std::vector<Subset> limits)
    : ground_(std::move(ground)), pointlim_(std::move(limits)) {
  if (pointlim_.size() != static_cast<std::size_t>(ground_.size()))
    throw error("space needs one point limit per point");
  for (int x = 0; x < size(); ++x) {
    if (!ground_.fits(pointlim(x))) throw error("point limit does not fit ground");
    if (!pointlim(x).contains(x))
      throw error("centeredness violated: {" + ground_.name(x) + "}↑ must converge to " + ground_.name(x));
  }
}

FiniteSpace FiniteSpace::discrete(const GroundSet& g) {
  std::vector<Subset> l;
  for (int x = 0; x < g.size(); ++x) l.push_back(Subset::singleton(x));
  return FiniteSpace(g, std::move(l));
}

FiniteSpace FiniteSpace::indiscrete(const GroundSet& g) {
  return FiniteSpace(g, std::vector<Subset>(static_cast<std::size_t>(g.size()), g.full()));
}

Subset FiniteSpace::lim(Subset kernel) const {
  Subset out = full();
  for_each_element(kernel, [&](int x) { out &= pointlim(x); });
  return out;
}

Subset FiniteSpace::adh(Subset kernel) const {
  Subset out;
  for_each_element(kernel, [&](int x) { out |= pointlim(x); });
  return out;
}

Subset FiniteSpace::vicinity(int x) const {
  Subset out;
  for (int z = 0; z < size(); ++z)
    if (pointlim(z).contains(x)) out |= Subset::singleton(z);
  return out;
}

Subset FiniteSpace::vicinity_of(Subset kernel) const {
  Subset out;
  for_each_element(kernel, [&](int x) { out |= vicinity(x); });
  return out;
}

Subset FiniteSpace::closure(Subset a) const {
  Subset cur = a;
  const long cap = 1L << size();
  for (long step = 0; step <= cap; ++step) {
    Subset next = adh(cur);
    if (next == cur) return cur;
    cur = next;
  }
  throw internal_error("closure iteration did not stabilize");
}

std::vector<Subset> FiniteSpace::closed_sets() const {
  std::vector<Subset> out;
  for_each_subset(full(), [&](Subset a) {
    if (is_closed(a)) out.push_back(a);
  });
  return out;
}

Subset FiniteSpace::nbhd(int x) const {
  // The smallest open set around x omits exactly the points y with x ∉ cl{y}.
  Subset out;
  for (int y = 0; y < size(); ++y)
    if (closure(Subset::singleton(y)).contains(x)) out |= Subset::singleton(y);
  return out;
}

bool FiniteSpace::is_topology() const {
  for (int x = 0; x < size(); ++x)
    if (!lim(nbhd(x)).contains(x)) return false;
  return true;
}

bool FiniteSpace::is_P_diagonal() const {
  bool ok = true;
  for_each_subset(full(), [&](Subset k) {
    if (ok && !lim(k).subset_of(lim(vicinity_of(k)))) ok = false;
  });
  return ok;
}

bool FiniteSpace::finer_than(const FiniteSpace& other) const {
  if (!(ground_ == other.ground_)) throw typing_error("spaces over different ground sets");
  for (int x = 0; x < size(); ++x)
    if (!pointlim(x).subset_of(other.pointlim(x))) return false;
  return true;
}

static void require_ground(const FiniteSpace& s, const GroundSet& g) {
  if (!(s.ground() == g)) throw typing_error("filter and space over different ground sets");
}

Subset lim(const FiniteSpace& s, const Filter& f) {
  require_ground(s, f.ground());
  return s.lim(f.kernel());
}

Subset adh_filter(const FiniteSpace& s, const Filter& f) {
  require_ground(s, f.ground());
  return s.adh(f.kernel());
}

Subset adh_set(const FiniteSpace& s, Subset a) {
  if (!s.ground().fits(a)) throw typing_error("subset does not fit space");
  return s.adh(a);
}

Filter vicinity(const FiniteSpace& s, int x) { return Filter::principal(s.ground(), s.vicinity(x)); }

Filter vicinity_of_filter(const FiniteSpace& s, const Filter& f) {
  require_ground(s, f.ground());
  return Filter::principal(s.ground(), s.vicinity_of(f.kernel()));
}

Filter nbhd(const FiniteSpace& s, int x) { return Filter::principal(s.ground(), s.nbhd(x)); }

FiniteSpace topologize(const FiniteSpace& s) {
  // {x}↑ → y in Tξ iff x lies in every open set around y.
  std::vector<Subset> l(static_cast<std::size_t>(s.size()));
  for (int y = 0; y < s.size(); ++y) {
    Subset n = s.nbhd(y);
    for_each_element(n, [&](int x) { l[static_cast<std::size_t>(x)] |= Subset::singleton(y); });
  }
  return FiniteSpace(s.ground(), std::move(l));
}

void require_map(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau) {
  if (!(f.domain() == xi.ground()) || !(f.codomain() == tau.ground()))
    throw typing_error("map does not connect the given spaces");
  if (!f.is_map()) throw error("relation is not a map (must be total and single-valued)");
}

bool is_continuous(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau) {
  require_map(f, xi, tau);
  for (int x = 0; x < xi.size(); ++x)
    if (!f.image(xi.pointlim(x)).subset_of(tau.pointlim(f.apply(x)))) return false;
  return true;
}

FiniteSpace initial(const FiniteSpace& tau, const Relation& f) {
  if (!(f.codomain() == tau.ground())) throw typing_error("map codomain differs from space");
  if (!f.is_map()) throw error("initial convergence needs a map");
  std::vector<Subset> l;
  for (int x = 0; x < f.domain().size(); ++x) l.push_back(f.preimage(tau.pointlim(f.apply(x))));
  return FiniteSpace(f.domain(), std::move(l));
}

FiniteSpace final_space(const FiniteSpace& xi, const Relation& f) {
  if (!(f.domain() == xi.ground())) throw typing_error("map domain differs from space");
  if (!f.is_map()) throw error("final convergence needs a map");
  if (!f.is_surjective()) throw error("final convergence needs a surjective map");
  std::vector<Subset> l(static_cast<std::size_t>(f.codomain().size()));
  for (int x = 0; x < xi.size(); ++x) l[static_cast<std::size_t>(f.apply(x))] |= f.image(xi.pointlim(x));
  return FiniteSpace(f.codomain(), std::move(l));
}

FiniteSpace product(const FiniteSpace& xi, const FiniteSpace& tau) {
  GroundSet g = product(xi.ground(), tau.ground());
  int ny = tau.size();
  std::vector<Subset> l;
  for (int x = 0; x < xi.size(); ++x)
    for (int y = 0; y < ny; ++y) {
      Subset s;
      for_each_element(xi.pointlim(x), [&](int a) {
        for_each_element(tau.pointlim(y), [&](int b) { s |= Subset::singleton(pair_index(a, b, ny)); });
      });
      l.push_back(s);
    }
  return FiniteSpace(std::move(g), std::move(l));
}

bool final_adh_identity_check(const FiniteSpace& xi, const Relation& f) {
  FiniteSpace fxi = final_space(xi, f);
  bool ok = true;
  for_each_subset(fxi.full(), [&](Subset d) {
    if (ok && fxi.adh(d) != f.image(xi.adh(f.preimage(d)))) ok = false;
  });
  return ok;
}

std::string describe(const FiniteSpace& s) {
  std::string out;
  for (int x = 0; x < s.size(); ++x) {
    if (x > 0) out += ' ';
    out += "L(" + s.ground().name(x) + ")=" + s.ground().format(s.pointlim(x));
  }
  return out;
}

std::uint64_t space_count(int n) {
  if (n < 1 || n * (n - 1) > 62) throw error("space enumeration supports 1..8 points");
  return std::uint64_t{1} << (n * (n - 1));
}

FiniteSpace space_from_index(const GroundSet& g, std::uint64_t index) {
  const int n = g.size();
  if (index >= space_count(n)) throw error("space index out of range");
  std::vector<Subset> l;
  for (int x = 0; x < n; ++x) {
    Subset lx = Subset::singleton(x);
    int bit = 0;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      if ((index >> (x * (n - 1) + bit)) & 1u) lx |= Subset::singleton(y);
      ++bit;
    }
    l.push_back(lx);
  }
  return FiniteSpace(g, std::move(l));
}

void for_each_space(const GroundSet& g, const std::function<void(const FiniteSpace&)>& fn) {
  const std::uint64_t count = space_count(g.size());
  for (std::uint64_t i = 0; i < count; ++i) fn(space_from_index(g, i));
}

}  // namespace convkit
