#include "convkit/family.hpp"

#include <algorithm>
#include <unordered_set>

namespace convkit {

GroundSet::GroundSet(std::vector<std::string> names) {
  if (names.empty() || names.size() > static_cast<std::size_t>(max_ground_size))
    throw error("ground set must have between 1 and 16 points, got " + std::to_string(names.size()));
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw error("empty point name");
    if (!seen.insert(n).second) throw error("duplicate point name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

GroundSet GroundSet::indexed(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(names));
}

const GroundSet& indexed_ground(int n) {
  static const std::vector<GroundSet> grounds = [] {
    std::vector<GroundSet> g;
    for (int i = 1; i <= max_ground_size; ++i) g.push_back(GroundSet::indexed(i));
    return g;
  }();
  if (n < 1 || n > max_ground_size) throw error("ground size out of range");
  return grounds[static_cast<std::size_t>(n - 1)];
}

int GroundSet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if ((*names_)[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](int i) {
    if (!first) out += ',';
    out += name(i);
    first = false;
  });
  return out + "}";
}

GroundSet product(const GroundSet& x, const GroundSet& y) {
  if (x.size() * y.size() > max_ground_size)
    throw error("product ground exceeds 16 points");
  std::vector<std::string> names;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j) names.push_back("(" + x.name(i) + "," + y.name(j) + ")");
  return GroundSet(std::move(names));
}

// ---------------------------------------------------------------- families

Family Family::principal(const GroundSet& g, Subset s) {
  if (!g.fits(s)) throw typing_error("subset does not fit ground of size " + std::to_string(g.size()));
  return Family(g, {s});
}

bool Family::contains(Subset s) const {
  return std::any_of(minimals_.begin(), minimals_.end(), [&](Subset m) { return m.subset_of(s); });
}

std::vector<Subset> Family::members() const {
  std::vector<Subset> out;
  for_each_subset(ground_.full(), [&](Subset s) {
    if (contains(s)) out.push_back(s);
  });
  return out;
}

Family up_close(const GroundSet& g, std::span<const Subset> sets) {
  std::vector<Subset> sorted;
  sorted.reserve(sets.size());
  for (Subset s : sets) {
    if (!g.fits(s)) throw typing_error("subset does not fit ground of size " + std::to_string(g.size()));
    sorted.push_back(s);
  }
  // A set can only be absorbed by one of smaller or equal cardinality.
  std::sort(sorted.begin(), sorted.end(), [](Subset a, Subset b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subset> minimals;
  for (Subset s : sorted) {
    bool absorbed = std::any_of(minimals.begin(), minimals.end(), [&](Subset m) { return m.subset_of(s); });
    if (!absorbed) minimals.push_back(s);
  }
  std::sort(minimals.begin(), minimals.end());
  return Family(g, std::move(minimals));
}

static void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) throw typing_error("families over different ground sets");
}

bool mesh(const Family& a, const Family& b) {
  require_same_ground(a.ground(), b.ground());
  for (Subset x : a.minimals())
    for (Subset y : b.minimals())
      if (!x.meets(y)) return false;
  return true;
}

Family grill(const Family& a) {
  std::vector<Subset> out;
  for_each_subset(a.ground().full(), [&](Subset s) {
    bool meets_all = std::all_of(a.minimals().begin(), a.minimals().end(),
                                 [&](Subset m) { return s.meets(m); });
    if (meets_all) out.push_back(s);
  });
  return up_close(a.ground(), out);
}

Family family_op_image(const std::function<Subset(Subset)>& o, const Family& a) {
  std::vector<Subset> images;
  for (Subset m : a.members()) images.push_back(o(m));
  return up_close(a.ground(), images);
}

// ----------------------------------------------------------------- filters

Filter Filter::principal(const GroundSet& g, Subset kernel) {
  if (!g.fits(kernel)) throw typing_error("kernel does not fit ground of size " + std::to_string(g.size()));
  return Filter(g, kernel);
}

bool mesh(const Filter& f, const Filter& g) {
  require_same_ground(f.ground(), g.ground());
  return f.kernel().meets(g.kernel());
}

bool finer(const Filter& f, const Filter& g) {
  require_same_ground(f.ground(), g.ground());
  return f.kernel().subset_of(g.kernel());
}

Filter meet(const Filter& f, const Filter& g) {
  require_same_ground(f.ground(), g.ground());
  return Filter::principal(f.ground(), f.kernel() | g.kernel());
}

Filter join(const Filter& f, const Filter& g) {
  require_same_ground(f.ground(), g.ground());
  return Filter::principal(f.ground(), f.kernel() & g.kernel());
}

bool filter_equiv(const Filter& f, const Filter& g) {
  require_same_ground(f.ground(), g.ground());
  return f.kernel() == g.kernel();
}

// --------------------------------------------------------------- relations

Relation::Relation(GroundSet dom, GroundSet cod, std::vector<Subset> rows)
    : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {
  if (rows_.size() != static_cast<std::size_t>(dom_.size()))
    throw typing_error("relation needs one row per domain point");
  for (Subset r : rows_)
    if (!cod_.fits(r)) throw typing_error("relation row does not fit codomain");
}

Relation Relation::identity(const GroundSet& g) {
  std::vector<Subset> rows;
  for (int i = 0; i < g.size(); ++i) rows.push_back(Subset::singleton(i));
  return Relation(g, g, std::move(rows));
}

Relation Relation::from_map(const GroundSet& dom, const GroundSet& cod, std::span<const int> targets) {
  if (targets.size() != static_cast<std::size_t>(dom.size()))
    throw typing_error("map needs one target per domain point");
  std::vector<Subset> rows;
  for (int t : targets) {
    if (t < 0 || t >= cod.size()) throw typing_error("map target out of range");
    rows.push_back(Subset::singleton(t));
  }
  return Relation(dom, cod, std::move(rows));
}

Relation Relation::from_graph(const GroundSet& dom, const GroundSet& cod, Subset graph) {
  int ny = cod.size();
  std::vector<Subset> rows(static_cast<std::size_t>(dom.size()));
  for_each_element(graph, [&](int p) {
    if (p >= dom.size() * ny) throw typing_error("graph does not fit product ground");
    rows[static_cast<std::size_t>(p / ny)] |= Subset::singleton(p % ny);
  });
  return Relation(dom, cod, std::move(rows));
}

Subset Relation::image(Subset a) const {
  Subset out;
  for_each_element(a, [&](int x) { out |= rows_[static_cast<std::size_t>(x)]; });
  return out;
}

Subset Relation::preimage(Subset b) const {
  Subset out;
  for (int x = 0; x < dom_.size(); ++x)
    if (rows_[static_cast<std::size_t>(x)].meets(b)) out |= Subset::singleton(x);
  return out;
}

Relation Relation::inverse() const {
  std::vector<Subset> rows(static_cast<std::size_t>(cod_.size()));
  for (int x = 0; x < dom_.size(); ++x)
    for_each_element(row(x), [&](int y) { rows[static_cast<std::size_t>(y)] |= Subset::singleton(x); });
  return Relation(cod_, dom_, std::move(rows));
}

Subset Relation::graph() const {
  Subset g;
  int ny = cod_.size();
  for (int x = 0; x < dom_.size(); ++x)
    for_each_element(row(x), [&](int y) { g |= Subset::singleton(pair_index(x, y, ny)); });
  return g;
}

bool Relation::is_map() const {
  return std::all_of(rows_.begin(), rows_.end(), [](Subset r) { return r.size() == 1; });
}

bool Relation::is_surjective() const { return image(dom_.full()) == cod_.full(); }

Filter image(const Relation& r, const Filter& f) {
  require_same_ground(r.domain(), f.ground());
  return Filter::principal(r.codomain(), r.image(f.kernel()));
}

Filter preimage(const Relation& r, const Filter& g) {
  require_same_ground(r.codomain(), g.ground());
  return Filter::principal(r.domain(), r.preimage(g.kernel()));
}

Filter image(const Filter& h, const GroundSet& x, const GroundSet& y, const Filter& f) {
  if (h.ground().size() != x.size() * y.size()) throw typing_error("filter is not on X×Y");
  return image(Relation::from_graph(x, y, h.kernel()), f);
}

Filter preimage(const Filter& h, const GroundSet& x, const GroundSet& y, const Filter& g) {
  if (h.ground().size() != x.size() * y.size()) throw typing_error("filter is not on X×Y");
  return preimage(Relation::from_graph(x, y, h.kernel()), g);
}

Filter product_filter(const Filter& f, const Filter& g) {
  GroundSet pg = product(f.ground(), g.ground());
  int ny = g.ground().size();
  Subset k;
  for_each_element(f.kernel(), [&](int x) {
    for_each_element(g.kernel(), [&](int y) { k |= Subset::singleton(pair_index(x, y, ny)); });
  });
  return Filter::principal(pg, k);
}

}  // namespace convkit
