#include "convkit/filter_class.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "convkit/cascade.hpp"

namespace convkit {

FilterClass FilterClass::mesh_refine(const FilterClass& j, const FilterClass& d) {
  FilterClass c(Kind::mesh_refine);
  c.first_ = std::make_shared<const FilterClass>(j);
  c.second_ = std::make_shared<const FilterClass>(d);
  return c;
}

FilterClass FilterClass::contour(const FilterClass& d, int max_nodes) {
  if (max_nodes < 2 || max_nodes > max_cascade_nodes)
    throw error("contour class node bound must lie in 2..31");
  FilterClass c(Kind::contour);
  c.first_ = std::make_shared<const FilterClass>(d);
  c.max_nodes_ = max_nodes;
  return c;
}

namespace {

struct ClassParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw error("bad filter class '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a class name");
    return std::string(text.substr(start, pos - start));
  }

  FilterClass parse_class() {
    std::string w = word();
    if (w == "F1") return FilterClass::F1();
    if (w == "Fw") return FilterClass::Fomega();
    if (w == "F") return FilterClass::F();
    if (w == "Fdw") return FilterClass::FwedgeOmega();
    if (w == "clF1") return FilterClass::ClF1();
    if (w == "E") return FilterClass::Seq();
    if (w == "deg") return FilterClass::degenerate_only();
    if (w == "int") {
      expect('(');
      FilterClass d = parse_class();
      int nodes = FilterClass::default_contour_nodes;
      if (eat(';')) {
        std::string n = word();
        try {
          nodes = std::stoi(n);
        } catch (const std::exception&) {
          fail("expected a node bound");
        }
      }
      expect(')');
      return FilterClass::contour(d, nodes);
    }
    if (w == "mr") {
      expect('(');
      FilterClass j = parse_class();
      expect(',');
      FilterClass d = parse_class();
      expect(')');
      return FilterClass::mesh_refine(j, d);
    }
    fail("unknown class '" + w + "'");
  }
};

// Every kernel over an n-point ground, ascending, for the collapsing tags.
const std::vector<Subset>& all_kernels(int n) {
  static const std::vector<std::vector<Subset>> table = [] {
    std::vector<std::vector<Subset>> t(max_ground_size + 1);
    for (int k = 1; k <= max_ground_size; ++k)
      for (std::uint32_t b = 0; b <= Subset::full(k).bits; ++b) t[static_cast<std::size_t>(k)].push_back(Subset{b});
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

const std::vector<Subset>& degenerate_kernels() {
  static const std::vector<Subset> only{Subset{}};
  return only;
}

}  // namespace

FilterClass FilterClass::parse(std::string_view text) {
  ClassParser p{text};
  FilterClass c = p.parse_class();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return c;
}

std::string FilterClass::name() const {
  switch (kind_) {
    case Kind::principal: return "F1";
    case Kind::countably_based: return "Fw";
    case Kind::all: return "F";
    case Kind::countably_deep: return "Fdw";
    case Kind::closed_principal: return "clF1";
    case Kind::sequential: return "E";
    case Kind::degenerate_only: return "deg";
    case Kind::mesh_refine: return "mr(" + first_->name() + "," + second_->name() + ")";
    case Kind::contour:
      if (max_nodes_ == default_contour_nodes) return "int(" + first_->name() + ")";
      return "int(" + first_->name() + ";" + std::to_string(max_nodes_) + ")";
  }
  throw internal_error("unknown class kind");
}

bool FilterClass::space_dependent() const {
  switch (kind_) {
    case Kind::closed_principal: return true;
    case Kind::mesh_refine: return true;
    case Kind::contour: return first_->space_dependent();
    default: return false;
  }
}

bool FilterClass::collapses_to_principal() const {
  switch (kind_) {
    case Kind::principal:
    case Kind::countably_based:
    case Kind::all:
    case Kind::countably_deep:
    case Kind::sequential: return true;
    default: return false;
  }
}

bool FilterClass::contains(const FiniteSpace& s, Subset kernel) const {
  if (!s.ground().fits(kernel)) throw typing_error("kernel does not fit the space");
  if (kernel.empty()) return true;
  switch (kind_) {
    case Kind::closed_principal: return s.is_closed(kernel);
    case Kind::degenerate_only: return false;
    case Kind::mesh_refine: return is_mesh_refinable(kernel, *first_, *second_, s);
    case Kind::contour: {
      const auto& m = members(s);
      return std::binary_search(m.begin(), m.end(), kernel);
    }
    default: return true;
  }
}

const std::vector<Subset>& FilterClass::members(const FiniteSpace& s) const {
  if (collapses_to_principal()) return all_kernels(s.size());
  if (kind_ == Kind::degenerate_only) return degenerate_kernels();

  static std::mutex mu;
  static std::map<std::string, std::vector<Subset>> cache;
  std::string key = name();
  key += '|';
  key += std::to_string(s.size());
  for (Subset l : s.pointlims()) {
    key += ',';
    key += std::to_string(l.bits);
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Computed outside the lock: contour classes recurse into members() of
  // their base class. Two threads racing here compute the same value.
  std::vector<Subset> computed = compute_members(s);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(computed)).first->second;
}

std::vector<Subset> FilterClass::compute_members(const FiniteSpace& s) const {
  switch (kind_) {
    case Kind::closed_principal: return s.closed_sets();
    case Kind::mesh_refine: {
      std::vector<Subset> out;
      for_each_subset(s.full(), [&](Subset k) {
        if (k.empty() || is_mesh_refinable(k, *first_, *second_, s)) out.push_back(k);
      });
      return out;
    }
    case Kind::contour: return contour_class_members(*first_, s, max_nodes_);
    default: throw internal_error("compute_members on a constant class");
  }
}

// ------------------------------------------------------------ composability

ComposabilityResult is_composable(const FilterClass& j, const FilterClass& d, int max_points) {
  ComposabilityResult res;
  const bool dependent = j.space_dependent() || d.space_dependent();
  for (int nx = 1; nx <= max_points && res.holds; ++nx)
    for (int ny = 1; ny <= max_points && res.holds; ++ny) {
      const GroundSet& gx = indexed_ground(nx);
      const GroundSet& gy = indexed_ground(ny);
      std::uint64_t cx = dependent ? space_count(nx) : 1;
      std::uint64_t cy = dependent ? space_count(ny) : 1;
      for (std::uint64_t ix = 0; ix < cx && res.holds; ++ix)
        for (std::uint64_t iy = 0; iy < cy && res.holds; ++iy) {
          FiniteSpace xi = space_from_index(gx, ix);
          FiniteSpace tau = space_from_index(gy, iy);
          FiniteSpace prod = product(xi, tau);
          for (Subset h : d.members(prod)) {
            Relation r = Relation::from_graph(gx, gy, h);
            for (Subset f : j.members(xi)) {
              Subset hf = r.image(f);
              if (!j.contains(tau, hf)) {
                res.holds = false;
                res.witness = "X: " + describe(xi) + "; Y: " + describe(tau) + "; H=" +
                              prod.ground().format(h) + " F=" + gx.format(f) + " HF=" + gy.format(hf);
                break;
              }
            }
            if (!res.holds) break;
          }
        }
    }
  return res;
}

ClassProps class_props(const FilterClass& c, int max_points) {
  return {is_composable(c, FilterClass::F1(), max_points).holds, is_composable(c, c, max_points).holds};
}

bool is_f1_composable(const FilterClass& c) {
  static std::mutex mu;
  static std::map<std::string, bool> cache;
  const std::string key = c.name();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  bool v = is_composable(c, FilterClass::F1()).holds;
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = v;
  return v;
}

bool adh_stable(const FilterClass& d, const FiniteSpace& s) {
  // adh is monotone, so adh♮(K↑) = (adh K)↑.
  for (Subset k : d.members(s))
    if (!d.contains(s, s.adh(k))) return false;
  return true;
}

// ------------------------------------------------- reflector and coreflector

FiniteSpace adh_reflector(const FiniteSpace& xi, const FilterClass& d, const FiniteSpace* class_space) {
  const auto& members = d.members(class_space ? *class_space : xi);
  std::vector<Subset> l(static_cast<std::size_t>(xi.size()), xi.full());
  for (Subset k : members) {
    Subset a = xi.adh(k);
    for_each_element(k, [&](int x) { l[static_cast<std::size_t>(x)] &= a; });
  }
  return FiniteSpace(xi.ground(), std::move(l));
}

std::vector<Subset> base_limits(const FiniteSpace& xi, const FilterClass& d, const FiniteSpace* class_space) {
  std::vector<Subset> l(static_cast<std::size_t>(xi.size()));
  for (Subset k : d.members(class_space ? *class_space : xi)) {
    Subset lim = xi.lim(k);
    for_each_element(k, [&](int x) { l[static_cast<std::size_t>(x)] |= lim; });
  }
  return l;
}

FiniteSpace base_coreflector(const FiniteSpace& xi, const FilterClass& d, const FiniteSpace* class_space) {
  std::vector<Subset> l = base_limits(xi, d, class_space);
  for (int x = 0; x < xi.size(); ++x) l[static_cast<std::size_t>(x)] |= Subset::singleton(x);
  return FiniteSpace(xi.ground(), std::move(l));
}

Subset base_lim(const FiniteSpace& xi, const FilterClass& d, Subset kernel) {
  Subset out;
  for (Subset k : d.members(xi))
    if (kernel.subset_of(k)) out |= xi.lim(k);
  return out;
}

std::vector<Subset> adh_limits(std::span<const Subset> limits, const FilterClass& j, const FiniteSpace& class_space) {
  if (limits.size() != static_cast<std::size_t>(class_space.size())) throw typing_error("limits do not fit the space");
  std::vector<Subset> l(limits.size(), class_space.full());
  for (Subset k : j.members(class_space)) {
    Subset a;
    for_each_element(k, [&](int z) { a |= limits[static_cast<std::size_t>(z)]; });
    for_each_element(k, [&](int x) { l[static_cast<std::size_t>(x)] &= a; });
  }
  return l;
}

AccessibilityResult accessibility(const FiniteSpace& xi, const FilterClass& j, const FilterClass& d) {
  AccessibilityResult res;
  std::vector<Subset> base = base_limits(xi, d);
  FiniteSpace centered = base_coreflector(xi, d);
  auto adh_base = [&](Subset k) {
    Subset a;
    for_each_element(k, [&](int z) { a |= base[static_cast<std::size_t>(z)]; });
    return a;
  };
  res.definitional = true;
  res.centered_base = true;
  for (Subset k : j.members(xi)) {
    if (res.definitional && !xi.adh(k).subset_of(adh_base(k))) {
      res.definitional = false;
      res.refuter = k;
    }
    if (!xi.adh(k).subset_of(centered.adh(k))) res.centered_base = false;
  }
  std::vector<Subset> reflected = adh_limits(base, j, xi);
  res.via_reflectors = true;
  for (int x = 0; x < xi.size(); ++x)
    if (!xi.pointlim(x).subset_of(reflected[static_cast<std::size_t>(x)])) res.via_reflectors = false;
  return res;
}

bool is_accessible(const FiniteSpace& xi, const FilterClass& j, const FilterClass& d) {
  AccessibilityResult r = accessibility(xi, j, d);
  if (r.definitional != r.via_reflectors)
    throw internal_error("accessibility characterizations disagree on " + describe(xi) + " for (" + j.name() +
                         "/" + d.name() + ")");
  return r.definitional;
}

bool is_mesh_refinable(Subset kernel, const FilterClass& j, const FilterClass& d, const FiniteSpace& s) {
  const auto& dm = d.members(s);
  for (Subset jk : j.members(s)) {
    if (!jk.meets(kernel)) continue;
    bool found = std::any_of(dm.begin(), dm.end(), [&](Subset dk) { return dk.meets(jk) && dk.subset_of(kernel); });
    if (!found) return false;
  }
  return true;
}

}  // namespace convkit
