#include "convkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <thread>

#include <json.hpp>

#include "convkit/cascade.hpp"
#include "convkit/oracle.hpp"
#include "convkit/relations.hpp"
#include "convkit/spacedoc.hpp"

namespace convkit {

// ------------------------------------------------------------ enumeration

int max_points_cap() {
  if (const char* env = std::getenv("CONVKIT_MAX_POINTS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= max_ground_size) return static_cast<int>(v);
    throw error("CONVKIT_MAX_POINTS must be an integer between 1 and 16");
  }
  return 4;
}

std::vector<FiniteSpace> enumerate_spaces(int n) {
  if (n < 1) throw error("spaces need at least one point");
  if (n > max_points_cap()) throw error("space enumeration on " + std::to_string(n) + " points exceeds the cap of " +
                                        std::to_string(max_points_cap()) + " (set CONVKIT_MAX_POINTS)");
  std::vector<FiniteSpace> out;
  out.reserve(static_cast<std::size_t>(space_count(n)));
  for_each_space(indexed_ground(n), [&](const FiniteSpace& s) { out.push_back(s); });
  return out;
}

void for_each_map(const GroundSet& x, const GroundSet& y, const std::function<void(const Relation&)>& fn) {
  const int nx = x.size(), ny = y.size();
  std::vector<int> t(static_cast<std::size_t>(nx), 0);
  while (true) {
    fn(Relation::from_map(x, y, t));
    int i = 0;
    while (i < nx && ++t[static_cast<std::size_t>(i)] == ny) t[static_cast<std::size_t>(i++)] = 0;
    if (i == nx) return;
  }
}

void for_each_surjection(const GroundSet& x, const GroundSet& y, const std::function<void(const Relation&)>& fn) {
  if (y.size() > x.size()) return;
  for_each_map(x, y, [&](const Relation& f) {
    if (f.is_surjective()) fn(f);
  });
}

void for_each_relation(const GroundSet& x, const GroundSet& y, const std::function<void(const Relation&)>& fn) {
  const int cells = x.size() * y.size();
  if (cells > 20) throw error("relation enumeration limited to 20 cells");
  for (std::uint32_t g = 0; g < (1u << cells); ++g) fn(Relation::from_graph(x, y, Subset{g}));
}

std::uint64_t surjection_count(int nx, int ny) {
  // Inclusion-exclusion: Σ_k (-1)^k C(ny,k) (ny-k)^nx.
  std::int64_t total = 0;
  std::int64_t binom = 1;
  for (int k = 0; k <= ny; ++k) {
    std::int64_t p = 1;
    for (int i = 0; i < nx; ++i) p *= (ny - k);
    total += (k % 2 ? -1 : 1) * binom * p;
    binom = binom * (ny - k) / (k + 1);
  }
  return static_cast<std::uint64_t>(total);
}

FiniteSpace random_space(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, space_count(n) - 1);
  return space_from_index(indexed_ground(n), d(rng));
}

Relation random_map(const GroundSet& x, const GroundSet& y, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, y.size() - 1);
  std::vector<int> t(static_cast<std::size_t>(x.size()));
  for (int& v : t) v = d(rng);
  return Relation::from_map(x, y, t);
}

// ------------------------------------------------------------ plumbing

namespace {

using Item = std::function<void(std::vector<Record>&)>;

struct Plan {
  std::vector<Item> items;
  bool require_findings = false;  // a run without findings fails
};

std::string relation_text(const Relation& r) {
  std::string s;
  for (int x = 0; x < r.domain().size(); ++x) {
    if (!s.empty()) s += " ";
    s += r.domain().name(x) + "→";
    if (r.row(x).size() == 1)
      s += r.codomain().name(r.row(x).first());
    else
      s += r.codomain().format(r.row(x));
  }
  return s;
}

std::string pair_text(const FiniteSpace& xi, const FiniteSpace& tau, const Relation& f) {
  return "ξ: " + describe(xi) + " | τ: " + describe(tau) + " | " + relation_text(f);
}

Record fail(std::string text, std::string repro = {}) { return {Outcome::fails, std::move(text), std::move(repro), false}; }
Record finding(std::string text, std::string repro = {}) {
  return {Outcome::holds, std::move(text), std::move(repro), true};
}
Record verdict(bool ok, const std::string& text, const std::string& repro = {}) {
  return ok ? Record{} : fail(text, repro);
}

// A gated equivalence: outside the hypotheses the instance is
// not-applicable, and a failed conclusion there is kept as a finding.
Record gated(bool hypotheses, bool conclusion, const std::string& text, const std::string& repro = {}) {
  if (hypotheses) return verdict(conclusion, text, repro);
  Record r{Outcome::not_applicable, {}, {}, false};
  if (!conclusion) {
    r.text = "conclusion failed where hypotheses fail: " + text;
    r.finding = true;
  }
  return r;
}

int exhaustive_limit(const SuiteBounds& b) { return std::min(b.max_points, 3); }

std::vector<FiniteSpace> spaces_upto(const SuiteBounds& b) {
  std::vector<FiniteSpace> out;
  for (int n = 1; n <= exhaustive_limit(b); ++n) {
    auto s = enumerate_spaces(n);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

// Exhaustive spaces up to 3 points, then seeded samples on 4 points.
std::vector<FiniteSpace> spaces_for(const SuiteBounds& b, std::uint64_t salt, std::size_t samples) {
  std::vector<FiniteSpace> out = spaces_upto(b);
  if (b.max_points >= 4) {
    if (max_points_cap() < 4) throw error("sampling on 4 points exceeds CONVKIT_MAX_POINTS");
    std::mt19937_64 rng(b.seed ^ salt);
    for (std::size_t i = 0; i < samples; ++i) out.push_back(random_space(4, rng));
  }
  return out;
}

struct SpacePair {
  FiniteSpace xi;
  FiniteSpace tau;
};

std::vector<SpacePair> pairs_for(const SuiteBounds& b, std::uint64_t salt,
                                 const std::function<bool(const FiniteSpace&, const FiniteSpace&)>& keep) {
  std::vector<SpacePair> out;
  std::vector<std::vector<FiniteSpace>> by_size(4);
  for (int n = 1; n <= exhaustive_limit(b); ++n) by_size[static_cast<std::size_t>(n)] = enumerate_spaces(n);
  for (int nx = 1; nx <= exhaustive_limit(b); ++nx)
    for (int ny = 1; ny <= exhaustive_limit(b); ++ny)
      for (const FiniteSpace& xi : by_size[static_cast<std::size_t>(nx)])
        for (const FiniteSpace& tau : by_size[static_cast<std::size_t>(ny)])
          if (keep(xi, tau)) out.push_back({xi, tau});
  if (b.max_points >= 4) {
    if (max_points_cap() < 4) throw error("sampling on 4 points exceeds CONVKIT_MAX_POINTS");
    std::mt19937_64 rng(b.seed ^ salt);
    std::size_t made = 0;
    for (std::size_t tries = 0; made < b.pair_samples && tries < b.pair_samples * 50; ++tries) {
      int ny = 1 + static_cast<int>(tries % 4);
      FiniteSpace xi = random_space(4, rng);
      FiniteSpace tau = random_space(ny, rng);
      if (!keep(xi, tau)) continue;
      out.push_back({xi, tau});
      ++made;
    }
  }
  return out;
}

bool any_pair(const FiniteSpace&, const FiniteSpace&) { return true; }

// Relations from X to Y: every relation when the graph is small, every map
// otherwise.
void for_each_test_relation(const FiniteSpace& xi, const FiniteSpace& tau, const std::function<void(const Relation&)>& fn) {
  if (xi.size() * tau.size() <= 6)
    for_each_relation(xi.ground(), tau.ground(), fn);
  else
    for_each_map(xi.ground(), tau.ground(), fn);
}

std::vector<FilterClass> bound_classes(const SuiteBounds& b) {
  if (b.classes.empty()) throw error("no filter classes selected");
  return b.classes;
}

// ------------------------------------------------------------ suites

Plan suite_collapse(const SuiteBounds& b) {
  Plan p;
  for (const FiniteSpace& s : spaces_upto(b)) {
    p.items.push_back([s](std::vector<Record>& out) {
      const oracle::Convergence c = oracle::bare(s);
      std::string bad;
      for (int x = 0; x < s.size(); ++x)
        if (!s.lim(s.vicinity(x)).contains(x) || !oracle::converges(c, vicinity(s, x), x)) bad += " pretopology";
      const std::size_t all = std::size_t{1} << s.size();
      for (const FilterClass& k : {FilterClass::F(), FilterClass::Fomega(), FilterClass::FwedgeOmega(),
                                   FilterClass::Seq(), FilterClass::F1(),
                                   FilterClass::mesh_refine(FilterClass::F1(), FilterClass::F1()),
                                   FilterClass::contour(FilterClass::F1())})
        if (k.members(s).size() != all) bad += " class " + k.name();
      if (!(base_coreflector(s, FilterClass::F1()) == s) || base_limits(s, FilterClass::F1()) != s.pointlims())
        bad += " Base_F1";
      if (base_limits(s, FilterClass::Seq()) != s.pointlims()) bad += " Base_Seq";
      for_each_subset(s.full(), [&](Subset k) {
        Subset meet_of_points = s.full();
        for_each_element(k, [&](int x) { meet_of_points &= s.pointlim(x); });
        if (oracle::lim(c, Filter::principal(s.ground(), k)) != meet_of_points) bad += " point-determination";
      });
      out.push_back(verdict(bad.empty(), describe(s) + ":" + bad, dump_space(s)));
    });
  }
  // Isotone, intersection-closed nonempty families are up-closures of
  // their intersection.
  for (int n = 1; n <= exhaustive_limit(b); ++n) {
    p.items.push_back([n](std::vector<Record>& out) {
      const std::uint32_t sets = 1u << n;
      bool ok = true;
      for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << sets); ++fam) {
        auto has = [&](std::uint32_t a) { return ((fam >> a) & 1u) != 0; };
        bool isotone = true, closed = true;
        std::uint32_t meet = sets - 1;
        for (std::uint32_t a = 0; a < sets; ++a) {
          if (!has(a)) continue;
          meet &= a;
          for (std::uint32_t c = 0; c < sets; ++c) {
            if ((a & c) == a && !has(c)) isotone = false;
            if (has(c) && !has(a & c)) closed = false;
          }
        }
        if (!isotone || !closed) continue;
        for (std::uint32_t a = 0; a < sets; ++a)
          if (has(a) != ((a & meet) == meet)) ok = false;
      }
      out.push_back(verdict(ok, "a filter on " + std::to_string(n) + " points is not principal"));
    });
  }
  return p;
}

void oracle_space_checks(const FiniteSpace& s, std::vector<Record>& out) {
  const oracle::Convergence c = oracle::bare(s);
  const GroundSet& g = s.ground();
  std::string bad;
  FiniteSpace t = topologize(s);
  for (const char* name : {"F1", "clF1"}) {
    FilterClass d = FilterClass::parse(name);
    auto members = oracle::class_members(c, name);
    if (members != d.members(s)) bad += std::string(" members:") + name;
    FiniteSpace a = adh_reflector(s, d);
    for_each_subset(s.full(), [&](Subset k) {
      Filter f = Filter::principal(g, k);
      if (oracle::adh_reflector_lim(c, name, f) != a.lim(k)) bad += std::string(" Adh:") + name + ":" + g.format(k);
      if (oracle::base_lim(c, name, f) != base_lim(s, d, k)) bad += std::string(" Base:") + name + ":" + g.format(k);
      for_each_subset(s.full(), [&](Subset at) {
        if (oracle::compact_at(c, name, f, at) != is_compact_at(s, k, at, d))
          bad += std::string(" compact:") + name + ":" + g.format(k) + "@" + g.format(at);
      });
    });
  }
  for_each_subset(s.full(), [&](Subset k) {
    Filter f = Filter::principal(g, k);
    if (oracle::lim(c, f) != s.lim(k)) bad += " lim:" + g.format(k);
    if (oracle::adh(c, f) != s.adh(k)) bad += " adh:" + g.format(k);
    if (oracle::is_closed(c, k) != s.is_closed(k)) bad += " closed:" + g.format(k);
    if (oracle::topological_lim(c, f) != t.lim(k)) bad += " T:" + g.format(k);
  });
  out.push_back(verdict(bad.empty(), describe(s) + ":" + bad, dump_space(s)));
}

void oracle_map_checks(const FiniteSpace& xi, const FiniteSpace& tau, const Relation& f, std::vector<Record>& out) {
  const oracle::Convergence cx = oracle::bare(xi), ct = oracle::bare(tau);
  FiniteSpace fin = final_space(xi, f);
  FiniteSpace ini = initial(tau, f);
  std::string bad;
  for_each_subset(tau.full(), [&](Subset k) {
    if (oracle::final_lim(cx, f, Filter::principal(tau.ground(), k)) != fin.lim(k)) bad += " final:" + tau.ground().format(k);
  });
  for_each_subset(xi.full(), [&](Subset k) {
    if (oracle::initial_lim(ct, f, Filter::principal(xi.ground(), k)) != ini.lim(k)) bad += " initial:" + xi.ground().format(k);
  });
  out.push_back(verdict(bad.empty(), pair_text(xi, tau, f) + ":" + bad, dump_map_doc(xi, tau, f)));
}

Plan suite_oracle(const SuiteBounds& b) {
  Plan p;
  for (const FiniteSpace& s : spaces_upto(b))
    p.items.push_back([s](std::vector<Record>& out) { oracle_space_checks(s, out); });
  for (const SpacePair& sp : pairs_for(b, 0, any_pair)) {
    if (sp.xi.size() > 3 || sp.tau.size() > 3) continue;
    p.items.push_back([sp](std::vector<Record>& out) {
      for_each_surjection(sp.xi.ground(), sp.tau.ground(), [&](const Relation& f) { oracle_map_checks(sp.xi, sp.tau, f, out); });
    });
  }
  for (int n = 1; n <= exhaustive_limit(b); ++n) {
    p.items.push_back([n](std::vector<Record>& out) {
      std::size_t bad = 0;
      std::string first;
      for_each_multifilter(indexed_ground(n), 5, true, [&](const Multifilter& phi) {
        if (oracle::contour(phi).kernel() != contour_kernel(phi)) {
          if (bad++ == 0) first = dump_cascade_doc(phi);
        }
      });
      out.push_back(verdict(bad == 0, std::to_string(bad) + " contour disagreements on " + std::to_string(n) + " points", first));
    });
  }
  if (b.max_points >= 4) {
    if (max_points_cap() < 4) throw error("sampling on 4 points exceeds CONVKIT_MAX_POINTS");
    std::mt19937_64 rng(b.seed ^ 0x6f7261636c65ULL);
    for (std::size_t i = 0; i < b.oracle_samples; ++i) {
      FiniteSpace xi = random_space(4, rng);
      int ny = 1 + static_cast<int>(rng() % 4);
      FiniteSpace tau = random_space(ny, rng);
      Relation f = random_map(xi.ground(), tau.ground(), rng);
      for (int tries = 0; !f.is_surjective() && tries < 64; ++tries) f = random_map(xi.ground(), tau.ground(), rng);
      Subset k{static_cast<std::uint32_t>(rng() & 15u)};
      Subset at{static_cast<std::uint32_t>(rng() & 15u)};
      const char* cname = (rng() & 1u) ? "F1" : "clF1";
      p.items.push_back([xi, tau, f, k, at, cname](std::vector<Record>& out) {
        const oracle::Convergence c = oracle::bare(xi);
        const GroundSet& g = xi.ground();
        FilterClass d = FilterClass::parse(cname);
        Filter ff = Filter::principal(g, k);
        std::string bad;
        if (oracle::lim(c, ff) != xi.lim(k)) bad += " lim";
        if (oracle::adh(c, ff) != xi.adh(k)) bad += " adh";
        if (oracle::topological_lim(c, ff) != topologize(xi).lim(k)) bad += " T";
        if (oracle::adh_reflector_lim(c, cname, ff) != adh_reflector(xi, d).lim(k)) bad += " Adh";
        if (oracle::base_lim(c, cname, ff) != base_lim(xi, d, k)) bad += " Base";
        if (oracle::compact_at(c, cname, ff, at) != is_compact_at(xi, k, at, d)) bad += " compact";
        if (oracle::initial_lim(oracle::bare(tau), f, ff) != initial(tau, f).lim(k)) bad += " initial";
        if (f.is_surjective()) {
          Subset kt{k.bits & tau.full().bits};
          if (oracle::final_lim(c, f, Filter::principal(tau.ground(), kt)) != final_space(xi, f).lim(kt)) bad += " final";
        }
        out.push_back(verdict(bad.empty(), pair_text(xi, tau, f) + " F=" + g.format(k) + " " + cname + ":" + bad,
                              dump_map_doc(xi, tau, f)));
      });
    }
  }
  return p;
}

Plan suite_adhd(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FiniteSpace& s : spaces_for(b, 0x41, b.pair_samples)) {
    p.items.push_back([s, classes](std::vector<Record>& out) {
      for (const FilterClass& d : classes) {
        FiniteSpace a = adh_reflector(s, d);
        std::string bad;
        for_each_subset(s.full(), [&](Subset f) {
          for (int x = 0; x < s.size(); ++x)
            if (is_compact_at(s, f, Subset::singleton(x), d) != a.lim(f).contains(x))
              bad += " F=" + s.ground().format(f) + " x=" + s.ground().name(x);
        });
        out.push_back(verdict(bad.empty(), describe(s) + " " + d.name() + ":" + bad, dump_space(s)));
      }
    });
  }
  return p;
}

Plan suite_accessible(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FiniteSpace& s : spaces_for(b, 0x42, b.pair_samples)) {
    p.items.push_back([s, classes](std::vector<Record>& out) {
      for (const FilterClass& j : classes)
        for (const FilterClass& d : classes) {
          AccessibilityResult r = accessibility(s, j, d);
          std::string tag = describe(s) + " (" + j.name() + "/" + d.name() + ")";
          out.push_back(verdict(r.definitional == r.via_reflectors, tag + ": accessible " + std::to_string(r.definitional) +
                                                                        " but ξ ≥ Adh_J Base_D ξ is " +
                                                                        std::to_string(r.via_reflectors),
                                dump_space(s)));
          // Finite convergences are pretopological, so the converse of (2)
          // applies: accessible iff ξ equals Base over the meshable-refinable
          // filters.
          bool base_eq = base_limits(s, FilterClass::mesh_refine(j, d)) == s.pointlims();
          out.push_back(verdict(base_eq == r.definitional, tag + ": Base_(J/D) fixed point " + std::to_string(base_eq) +
                                                               " vs accessible " + std::to_string(r.definitional),
                                dump_space(s)));
        }
    });
  }
  return p;
}

Plan suite_vf(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FiniteSpace& s : spaces_for(b, 0x43, b.pair_samples)) {
    p.items.push_back([s, classes](std::vector<Record>& out) {
      for (const FilterClass& d : classes) {
        std::string bad;
        for_each_subset(s.full(), [&](Subset f) {
          for_each_subset(s.full(), [&](Subset at) {
            if (is_dj_compact_at(s, f, at, d, FilterClass::F1()) != is_compact_at(s, s.vicinity_of(f), at, d))
              bad += " F=" + s.ground().format(f) + " B=" + s.ground().format(at);
          });
        });
        out.push_back(verdict(bad.empty(), describe(s) + " " + d.name() + ":" + bad, dump_space(s)));
      }
    });
  }
  return p;
}

Plan suite_pdiag(const SuiteBounds& b, bool converse, bool search) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FiniteSpace& s : spaces_for(b, 0x44, b.pair_samples)) {
    p.items.push_back([s, classes, converse, search](std::vector<Record>& out) {
      for (const FilterClass& d : classes) {
        PdiagReport r = pdiag_bridge(s, d);
        std::string tag = describe(s) + " " + d.name();
        if (search) {
          if (r.p_diagonal && r.adh_stable) {
            out.push_back({});
            continue;
          }
          std::string why = !r.p_diagonal ? "not P-diagonal" : "adh♮D ⊄ D";
          out.push_back(finding(tag + " (" + why + "): (D/F1)-compactness " +
                                    (r.equivalence_anyway ? "still equals" : "differs from") + " D-compactness" +
                                    (r.witness.empty() ? "" : ", " + r.witness),
                                dump_space(s)));
          continue;
        }
        Outcome o = converse ? r.converse : r.forward;
        Record rec{o, {}, {}, false};
        if (o == Outcome::fails) rec = fail(tag + ": " + r.witness, dump_space(s));
        out.push_back(rec);
      }
    });
  }
  return p;
}

Plan suite_pointsuffice(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FilterClass& d : classes) (void)is_f1_composable(d);
  for (const SpacePair& sp : pairs_for(b, 0x45, any_pair)) {
    p.items.push_back([sp, classes](std::vector<Record>& out) {
      for (const FilterClass& d : classes) {
        CompactTable tx(sp.xi, d), tt(sp.tau, d);
        const bool hyp = is_f1_composable(d);
        for_each_test_relation(sp.xi, sp.tau, [&](const Relation& r) {
          bool full = relation_compact(r, tx, tt);
          bool point = relation_compact_pointwise(r, sp.xi, tt);
          out.push_back(gated(hyp, full == point, pair_text(sp.xi, sp.tau, r) + " " + d.name() + ": compact " +
                                                     std::to_string(full) + ", pointwise " + std::to_string(point),
                              dump_map_doc(sp.xi, sp.tau, r)));
        });
      }
    });
  }
  return p;
}

Plan suite_continuous(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FilterClass& d : classes) (void)is_f1_composable(d);
  for (const SpacePair& sp : pairs_for(b, 0x46, any_pair)) {
    p.items.push_back([sp, classes](std::vector<Record>& out) {
      CompactTable fx(sp.xi, FilterClass::F()), ft(sp.tau, FilterClass::F());
      for (const FilterClass& d : classes) {
        CompactTable tx(sp.xi, d), tt(sp.tau, d);
        const bool hyp = is_f1_composable(d) && adh_reflector(sp.tau, d) == sp.tau;
        for_each_map(sp.xi.ground(), sp.tau.ground(), [&](const Relation& f) {
          bool cont = is_continuous(f, sp.xi, sp.tau);
          bool comp = relation_compact(f, fx, ft);
          bool dcomp = relation_compact(f, tx, tt);
          out.push_back(gated(hyp, cont == comp && comp == dcomp,
                              pair_text(sp.xi, sp.tau, f) + " " + d.name() + ": continuous " + std::to_string(cont) +
                                  ", compact " + std::to_string(comp) + ", D-compact " + std::to_string(dcomp),
                              dump_map_doc(sp.xi, sp.tau, f)));
        });
      }
    });
  }
  return p;
}

Plan suite_eq(const SuiteBounds& b, bool fibers) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FilterClass& d : classes) (void)is_f1_composable(d);
  auto keep = [fibers](const FiniteSpace&, const FiniteSpace& tau) {
    return fibers ? tau.is_topology() : tau.is_P_diagonal();
  };
  for (const SpacePair& sp : pairs_for(b, fibers ? 0x48 : 0x47, keep)) {
    p.items.push_back([sp, classes, fibers](std::vector<Record>& out) {
      CompactTable f1x(sp.xi, FilterClass::F1()), f1t(sp.tau, FilterClass::F1());
      for (const FilterClass& d : classes) {
        FilterClass id = int_class(d);
        CompactTable tx(sp.xi, d), tt(sp.tau, d);
        std::optional<CompactTable> ix, it;
        if (fibers) {
          ix.emplace(sp.xi, id);
          it.emplace(sp.tau, id);
        }
        const bool hyp = is_f1_composable(d) && adh_stable(d, sp.tau);
        for_each_test_relation(sp.xi, sp.tau, [&](const Relation& r) {
          bool c1 = relation_compact(r, tx, tt);
          bool f1 = relation_compact(r, f1x, f1t);
          bool fibers_d = true, fibers_id = true;
          for (int x = 0; x < sp.xi.size(); ++x) {
            fibers_d = fibers_d && tt.at(r.row(x), r.row(x));
            if (fibers) fibers_id = fibers_id && it->at(r.row(x), r.row(x));
          }
          bool c2 = f1 && fibers_d;
          bool ok = c1 == c2;
          std::string text = pair_text(sp.xi, sp.tau, r) + " " + d.name() + ": D-compact " + std::to_string(c1) +
                             ", F1-compact with D-compact values " + std::to_string(c2);
          if (fibers) {
            bool c3 = f1 && fibers_id;
            bool c4 = relation_compact(r, *ix, *it);
            ok = ok && c2 == c3 && c3 == c4;
            text += ", with ∫D-compact values " + std::to_string(c3) + ", ∫D-compact " + std::to_string(c4);
          }
          out.push_back(gated(hyp, ok, text, dump_map_doc(sp.xi, sp.tau, r)));
        });
      }
    });
  }
  return p;
}

Plan suite_closed(const SuiteBounds& b, bool search) {
  Plan p;
  auto keep = [search](const FiniteSpace& xi, const FiniteSpace&) { return !search || !adherences_closed(xi); };
  for (const SpacePair& sp : pairs_for(b, search ? 0x4a : 0x49, keep)) {
    p.items.push_back([sp, search](std::vector<Record>& out) {
      const bool adh_closed = adherences_closed(sp.xi);
      CompactTable f1x(sp.xi, FilterClass::F1()), f1t(sp.tau, FilterClass::F1());
      for_each_map(sp.xi.ground(), sp.tau.ground(), [&](const Relation& f) {
        bool adherent = is_adherent(f, sp.xi, sp.tau).holds;
        bool closed = is_closed_map(f, sp.xi, sp.tau).holds;
        std::string text = pair_text(sp.xi, sp.tau, f);
        std::string repro = dump_map_doc(sp.xi, sp.tau, f);
        if (search) {
          if (closed && !adherent) {
            out.push_back(finding("closed but not adherent: " + text, repro));
          } else {
            out.push_back({});
          }
          return;
        }
        bool inverse = relation_compact(f.inverse(), f1t, f1x);
        out.push_back(verdict(adherent == inverse, "(1) adherent " + std::to_string(adherent) +
                                                       " vs inverse F1-compact " + std::to_string(inverse) + ": " + text,
                              repro));
        out.push_back(adherent ? verdict(closed, "(2) adherent but not closed: " + text, repro)
                               : Record{Outcome::vacuous, {}, {}, false});
        if (!closed)
          out.push_back({Outcome::vacuous, {}, {}, false});
        else
          out.push_back(gated(adh_closed, adherent, "(3) closed but not adherent: " + text, repro));
      });
    });
  }
  return p;
}

Plan suite_dperfect(const SuiteBounds& b, bool search) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FilterClass& d : classes) (void)is_f1_composable(d);
  auto keep = [search](const FiniteSpace& xi, const FiniteSpace& tau) {
    return tau.size() <= xi.size() && (search ? !xi.is_topology() : true);
  };
  for (const SpacePair& sp : pairs_for(b, search ? 0x4c : 0x4b, keep)) {
    p.items.push_back([sp, classes, search](std::vector<Record>& out) {
      for (const FilterClass& d : classes) {
        FilterClass id = int_class(d);
        CompactTable tx(sp.xi, d), tt(sp.tau, d);
        const bool hyp = is_f1_composable(d) && sp.xi.is_topology() && adh_stable(d, sp.xi);
        for_each_surjection(sp.xi.ground(), sp.tau.ground(), [&](const Relation& f) {
          bool p1 = is_D_perfect(f, d, sp.xi, sp.tau).holds;
          bool p2 = relation_compact(f.inverse(), tt, tx);
          std::string text = pair_text(sp.xi, sp.tau, f) + " " + d.name();
          std::string repro = dump_map_doc(sp.xi, sp.tau, f);
          if (search) {
            if (p1 == p2)
              out.push_back({});
            else
              out.push_back(finding(text + (p1 ? ": D-perfect but the inverse is not D-compact"
                                               : ": inverse D-compact but not D-perfect"),
                                    repro));
            return;
          }
          bool p3 = relation_compact(f.inverse(), sp.tau, sp.xi, id).holds;
          bool p4 = is_D_perfect(f, id, sp.xi, sp.tau).holds;
          out.push_back(gated(hyp, p1 == p2 && p2 == p3 && p3 == p4,
                              text + ": perfect " + std::to_string(p1) + ", inverse compact " + std::to_string(p2) +
                                  ", inverse ∫D-compact " + std::to_string(p3) + ", ∫D-perfect " + std::to_string(p4),
                              repro));
        });
      }
    });
  }
  return p;
}

Plan suite_dquotient(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FilterClass& d : classes) (void)is_f1_composable(d);
  auto keep = [](const FiniteSpace& xi, const FiniteSpace& tau) { return tau.size() <= xi.size(); };
  for (const SpacePair& sp : pairs_for(b, 0x4d, keep)) {
    p.items.push_back([sp, classes](std::vector<Record>& out) {
      for (const FilterClass& d : classes) {
        const bool hyp = is_f1_composable(d);
        for_each_surjection(sp.xi.ground(), sp.tau.ground(), [&](const Relation& f) {
          QuotientCharacterizations q = quotient_characterizations(f, d, sp.xi, sp.tau);
          bool ok = q.definitional == q.via_reflector && q.via_reflector == q.via_relation;
          out.push_back(gated(hyp, ok,
                              pair_text(sp.xi, sp.tau, f) + " " + d.name() + ": quotient " + std::to_string(q.definitional) +
                                  ", τ ≥ Adh_D fξ " + std::to_string(q.via_reflector) + ", compact relation " +
                                  std::to_string(q.via_relation),
                              dump_map_doc(sp.xi, sp.tau, f)));
        });
      }
    });
  }
  return p;
}

Plan suite_quotient_witness(const SuiteBounds& b) {
  Plan p;
  p.require_findings = true;
  auto keep = [](const FiniteSpace& xi, const FiniteSpace& tau) { return tau.size() <= xi.size(); };
  const FilterClass f1 = FilterClass::F1(), cl = FilterClass::ClF1();
  for (const SpacePair& sp : pairs_for(b, 0x4e, keep)) {
    p.items.push_back([sp, f1, cl](std::vector<Record>& out) {
      for_each_surjection(sp.xi.ground(), sp.tau.ground(), [&](const Relation& f) {
        if (!is_continuous(f, sp.xi, sp.tau)) return;
        Verdict q1 = is_D_quotient(f, f1, sp.xi, sp.tau);
        if (q1.holds || !is_D_quotient(f, cl, sp.xi, sp.tau).holds) {
          out.push_back({});
          return;
        }
        out.push_back(finding("clF1-quotient, not F1-quotient: " + pair_text(sp.xi, sp.tau, f) +
                                  "; refuting principal filter: " + q1.witness,
                              dump_map_doc(sp.xi, sp.tau, f)));
      });
    });
  }
  return p;
}

Plan suite_contourcompose(const SuiteBounds& b) {
  Plan p;
  const GroundSet y = GroundSet::indexed(2);
  for (int n = 1; n <= exhaustive_limit(b); ++n) {
    p.items.push_back([n, y](std::vector<Record>& out) {
      const GroundSet& x = indexed_ground(n);
      const GroundSet xy = product(x, y);
      std::size_t checked = 0, bad = 0;
      std::string first;
      for_each_multifilter(x, 7, false, [&](const Multifilter& phi) {
        // The closed-form contour is checked against the definition once per
        // Φ; every composition is then checked against J applied to it.
        const Subset image_of = contour_kernel(phi);
        if (oracle::contour(phi).kernel() != image_of && bad++ == 0)
          first = "closed-form contour differs from the definition\n" + dump_cascade_doc(phi);
        for (std::uint32_t k = 0; k < (1u << xy.size()); ++k) {
          ++checked;
          try {
            Multifilter composed = contour_compose(Filter::principal(xy, Subset{k}), y, phi);
            if (contour_kernel(composed) != Relation::from_graph(x, y, Subset{k}).image(image_of))
              throw internal_error("composed contour differs from J(∫Φ)");
          } catch (const internal_error& e) {
            if (bad++ == 0) first = std::string(e.what()) + "\n" + dump_cascade_doc(phi) + "\nJ=" + xy.format(Subset{k});
          }
        }
      });
      out.push_back(verdict(bad == 0,
                            std::to_string(bad) + " of " + std::to_string(checked) + " compositions failed on " +
                                std::to_string(n) + " points",
                            first));
    });
  }
  return p;
}

Plan suite_local(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FiniteSpace& xi : spaces_upto(b)) {
    p.items.push_back([xi, classes](std::vector<Record>& out) {
      for (const FilterClass& m : classes)
        for (const FilterClass& j : classes)
          for (const FilterClass& d : classes) {
            auto sigma = adh_limits(base_limits(adh_reflector(xi, m), d, &xi), j, xi);
            for_each_space(xi.ground(), [&](const FiniteSpace& theta) {
              bool lhs = true;
              for (int x = 0; x < xi.size(); ++x)
                if (!theta.pointlim(x).subset_of(sigma[static_cast<std::size_t>(x)])) lhs = false;
              bool rhs = true;
              for_each_subset(xi.full(), [&](Subset f) {
                for_each_element(theta.lim(f), [&](int x) {
                  if (rhs && !is_mcm_filter(xi, f, Subset::singleton(x), m, j, d)) rhs = false;
                });
              });
              out.push_back(verdict(lhs == rhs, "ξ: " + describe(xi) + " θ: " + describe(theta) + " M=" + m.name() +
                                                    " J=" + j.name() + " D=" + d.name() + ": θ ≥ Adh_J Base_D Adh_M ξ " +
                                                    std::to_string(lhs) + ", pointwise " + std::to_string(rhs),
                                    dump_space(xi) + "\n" + dump_space(theta)));
            });
          }
    });
  }
  return p;
}

struct Triple {
  FilterClass m, j, d;
  std::string label;
};

Plan theorem_plan(const SuiteBounds& b, std::uint64_t salt, bool perfect, const std::vector<Triple>& triples) {
  Plan p;
  for (const Triple& t : triples) {
    (void)is_f1_composable(t.j);
    (void)is_f1_composable(t.d);
  }
  auto keep = [](const FiniteSpace& xi, const FiniteSpace& tau) { return tau.size() <= xi.size(); };
  for (const SpacePair& sp : pairs_for(b, salt, keep)) {
    p.items.push_back([sp, triples, perfect](std::vector<Record>& out) {
      for_each_surjection(sp.xi.ground(), sp.tau.ground(), [&](const Relation& f) {
        if (!is_continuous(f, sp.xi, sp.tau)) return;
        for (const Triple& t : triples) {
          TheoremReport r = perfect ? theorem_mperfect_range(f, sp.xi, sp.tau, t.m, t.j, t.d)
                                    : theorem_mquot_range(f, sp.xi, sp.tau, t.m, t.j, t.d);
          std::string text = pair_text(sp.xi, sp.tau, f) + " " + t.label + ": lhs " + std::to_string(r.lhs) + ", rhs " +
                             std::to_string(r.rhs) + (r.witness.empty() ? "" : ", " + r.witness);
          Record rec{r.outcome, {}, {}, false};
          if (r.outcome == Outcome::fails) rec = fail(text, dump_map_doc(sp.xi, sp.tau, f));
          if (r.outcome == Outcome::not_applicable && r.lhs != r.rhs) {
            rec.text = "conclusion failed where hypotheses fail (" + r.hypothesis_failure + "): " + text;
            rec.finding = true;
          }
          out.push_back(std::move(rec));
        }
      });
    });
  }
  return p;
}

// Triples with M ⊆ J on every space up to the bound; the others can never
// meet the hypotheses.
std::vector<Triple> bound_triples(const SuiteBounds& b) {
  const std::vector<FiniteSpace> spaces = spaces_upto(b);
  std::vector<Triple> out;
  for (const FilterClass& m : bound_classes(b))
    for (const FilterClass& j : bound_classes(b)) {
      bool included = std::all_of(spaces.begin(), spaces.end(),
                                  [&](const FiniteSpace& s) { return class_included(m, j, s); });
      if (!included) continue;
      for (const FilterClass& d : bound_classes(b))
        out.push_back({m, j, d, "M=" + m.name() + " J=" + j.name() + " D=" + d.name()});
    }
  return out;
}

struct TableRow {
  const char* m;
  const char* j;
  const char* d;
  const char* name;
};

constexpr TableRow quotient_rows[] = {
    {"F1", "F", "F1", "hereditarily quotient with finitely generated range"},
    {"F1", "F1", "Fw", "hereditarily quotient with Fréchet range"},
    {"F1", "Fw", "Fw", "hereditarily quotient with strongly Fréchet range"},
    {"F1", "F", "Fw", "hereditarily quotient with bisequential range"},
    {"F1", "F", "F", "hereditarily quotient"},
    {"Fw", "Fw", "F1", "countably biquotient with finitely generated range"},
    {"Fw", "Fw", "Fw", "countably biquotient with strongly Fréchet range"},
    {"Fw", "F", "Fw", "countably biquotient with bisequential range"},
    {"Fw", "F", "F", "countably biquotient"},
    {"F", "F", "F1", "biquotient with finitely generated range"},
    {"F", "F", "Fw", "biquotient with bisequential range"},
    {"F", "F", "F", "biquotient"},
};

constexpr TableRow perfect_rows[] = {
    {"F1", "F", "F1", "closed with finitely generated range"},
    {"F1", "F1", "Fw", "closed with Fréchet range"},
    {"F1", "Fw", "Fw", "closed with strongly Fréchet range"},
    {"F1", "F", "Fw", "closed with bisequential range"},
    {"F1", "F", "F", "closed"},
    {"Fw", "Fw", "F1", "countably perfect with finitely generated range"},
    {"Fw", "Fw", "Fw", "countably perfect with strongly Fréchet range"},
    {"Fw", "F", "Fw", "countably perfect with bisequential range"},
    {"Fw", "F", "F", "countably perfect"},
    {"F", "F", "F1", "perfect with finitely generated range"},
    {"F", "F", "Fw", "perfect with bisequential range"},
    {"F", "F", "F", "perfect"},
};

Plan suite_class_tables(const SuiteBounds& b) {
  std::vector<Triple> q, pf;
  for (const TableRow& r : quotient_rows)
    q.push_back({FilterClass::parse(r.m), FilterClass::parse(r.j), FilterClass::parse(r.d), std::string("quotient row: ") + r.name});
  for (const TableRow& r : perfect_rows)
    pf.push_back({FilterClass::parse(r.m), FilterClass::parse(r.j), FilterClass::parse(r.d), std::string("perfect row: ") + r.name});
  Plan a = theorem_plan(b, 0x50, false, q);
  Plan c = theorem_plan(b, 0x51, true, pf);
  a.items.insert(a.items.end(), c.items.begin(), c.items.end());
  return a;
}

struct AccessRow {
  FilterClass j;
  const char* name;
};

Plan suite_neighborhood_table(const SuiteBounds& b) {
  Plan p;
  const FilterClass fw = FilterClass::Fomega();
  std::vector<AccessRow> rows{{FilterClass::F(), "bisequential"},
                              {fw, "strongly Fréchet"},
                              {FilterClass::mesh_refine(fw, fw), "productively Fréchet"},
                              {FilterClass::FwedgeOmega(), "weakly bisequential"},
                              {FilterClass::F1(), "Fréchet"}};
  for (const FiniteSpace& s : spaces_upto(b)) {
    if (!s.is_topology()) continue;
    p.items.push_back([s, rows, fw](std::vector<Record>& out) {
      for (const AccessRow& r : rows) {
        bool space = is_accessible(s, r.j, fw);
        bool filters = true;
        for (int x = 0; x < s.size(); ++x) filters = filters && is_mesh_refinable(s.nbhd(x), r.j, fw, s);
        out.push_back(verdict(space == filters, describe(s) + " " + r.name + ": space " + std::to_string(space) +
                                                    ", every neighborhood filter " + std::to_string(filters),
                              dump_space(s)));
      }
    });
  }
  return p;
}

Plan suite_usc(const SuiteBounds& b) {
  Plan p;
  auto keep = [](const FiniteSpace& xi, const FiniteSpace& tau) { return xi.is_topology() && tau.is_topology(); };
  for (const SpacePair& sp : pairs_for(b, 0x52, keep)) {
    p.items.push_back([sp](std::vector<Record>& out) {
      CompactTable tx(sp.xi, FilterClass::F1()), tt(sp.tau, FilterClass::F1());
      for_each_test_relation(sp.xi, sp.tau, [&](const Relation& r) {
        bool usc = is_usc(r, sp.xi, sp.tau);
        bool comp = relation_compact(r, tx, tt);
        out.push_back(verdict(usc == comp, pair_text(sp.xi, sp.tau, r) + ": usc " + std::to_string(usc) +
                                               ", F1-compact " + std::to_string(comp),
                              dump_map_doc(sp.xi, sp.tau, r)));
      });
    });
  }
  return p;
}

Plan suite_grill(const SuiteBounds& b) {
  Plan p;
  for (int nx = 1; nx <= exhaustive_limit(b); ++nx)
    for (int ny = 1; ny <= exhaustive_limit(b); ++ny)
      p.items.push_back([nx, ny](std::vector<Record>& out) {
        const GroundSet& x = indexed_ground(nx);
        const GroundSet& y = indexed_ground(ny);
        const GroundSet xy = product(x, y);
        std::size_t bad = 0;
        for_each_subset(xy.full(), [&](Subset h) {
          Filter hf = Filter::principal(xy, h);
          for_each_subset(x.full(), [&](Subset f) {
            for_each_subset(y.full(), [&](Subset g) {
              Filter ff = Filter::principal(x, f), gf = Filter::principal(y, g);
              bool a = mesh(hf, product_filter(ff, gf));
              bool c = mesh(image(hf, x, y, ff), gf);
              bool d = mesh(preimage(hf, x, y, gf), ff);
              if (a != c || c != d) ++bad;
            });
          });
        });
        out.push_back(verdict(bad == 0, std::to_string(bad) + " mesh identity failures on " + std::to_string(nx) + "×" +
                                            std::to_string(ny)));
      });
  return p;
}

Plan suite_cover(const SuiteBounds& b) {
  Plan p;
  for (const FiniteSpace& s : spaces_upto(b)) {
    p.items.push_back([s](std::vector<Record>& out) {
      for_each_subset(s.full(), [&](Subset k) {
        if (k.empty()) return;
        CoverCompactness c = cover_compactness(s, k);
        // Oracle-level agreement: cover-compactness equals its filter form.
        if (c.by_covers != c.by_filters) {
          out.push_back(fail(describe(s) + " K=" + s.ground().format(k) + ": covers " + std::to_string(c.by_covers) +
                                 ", filters " + std::to_string(c.by_filters),
                             dump_space(s)));
          return;
        }
        if (c.by_covers != c.compact)
          out.push_back(finding(describe(s) + " K=" + s.ground().format(k) + (s.is_P_diagonal() ? " (P-diagonal)" : "") +
                                    ": cover-compact " + std::to_string(c.by_covers) + ", compact " +
                                    std::to_string(c.compact),
                                dump_space(s)));
        else
          out.push_back({});
      });
    });
  }
  return p;
}

Plan suite_adh_topologize(const SuiteBounds& b) {
  Plan p;
  for (const FiniteSpace& s : spaces_for(b, 0x53, b.pair_samples)) {
    p.items.push_back([s](std::vector<Record>& out) {
      if (adh_reflector(s, FilterClass::ClF1()) == topologize(s))
        out.push_back({});
      else
        out.push_back(finding(describe(s) + ": Adh_clF1 differs from the topological modification", dump_space(s)));
    });
  }
  return p;
}

Plan suite_classes(const SuiteBounds& b) {
  Plan p;
  auto classes = bound_classes(b);
  for (const FilterClass& j : classes)
    for (const FilterClass& d : classes)
      p.items.push_back([j, d](std::vector<Record>& out) {
        ComposabilityResult r = is_composable(j, d);
        if (r.holds)
          out.push_back({});
        else
          out.push_back(finding(j.name() + " is not " + d.name() + "-composable: " + r.witness));
      });
  return p;
}

struct SuiteEntry {
  SuiteInfo info;
  std::function<Plan(const SuiteBounds&)> build;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = [] {
    std::vector<SuiteEntry> e;
    auto add = [&](std::string id, std::string summary, bool exploratory, std::function<Plan(const SuiteBounds&)> fn) {
      e.push_back({{std::move(id), std::move(summary), exploratory}, std::move(fn)});
    };
    add("collapse", "finite collapses: pretopology, F = Fω = F1, Base identity, principal filters", false, suite_collapse);
    add("oracle", "closed forms against definitional oracles", false, suite_oracle);
    add("adh-reflector", "D-compact at {x} iff x ∈ lim of Adh_D", false, suite_adhd);
    add("accessibility", "accessibility iff ξ ≥ Adh_J Base_D ξ; Base over meshable-refinable filters", false,
        suite_accessible);
    add("vicinity-compactness", "(D/F1)-compact at B iff V(F) is D-compact at B", false, suite_vf);
    add("pdiagonal-bridge", "P-diagonal and adh-stable: (D/F1)-compactness equals D-compactness", false,
        [](const SuiteBounds& b) { return suite_pdiag(b, false, false); });
    add("pdiagonal-converse", "ξ = Adh_D ξ and the implication force P-diagonality", false,
        [](const SuiteBounds& b) { return suite_pdiag(b, true, false); });
    add("pointwise-relations", "D-compact relations are decided at points", false, suite_pointsuffice);
    add("continuity", "continuous iff compact iff D-compact when τ = Adh_D τ", false, suite_continuous);
    add("compact-values", "D-compact iff F1-compact with D-compact values (P-diagonal τ)", false,
        [](const SuiteBounds& b) { return suite_eq(b, false); });
    add("fibers", "the four fiber characterizations on topological τ", false,
        [](const SuiteBounds& b) { return suite_eq(b, true); });
    add("adherent-maps", "adherent maps: inverse F1-compact, closed, and the converse", false,
        [](const SuiteBounds& b) { return suite_closed(b, false); });
    add("perfect-maps", "D-perfect, inverse D-compact and their ∫D forms on topological domains", false,
        [](const SuiteBounds& b) { return suite_dperfect(b, false); });
    add("quotient-maps", "D-quotient iff τ ≥ Adh_D fξ iff f: (X, f⁻τ) → (Y, fξ) is D-compact", false, suite_dquotient);
    add("contour-compose", "the composed multifilter has contour J(∫Φ)", false, suite_contourcompose);
    add("local-meshability", "θ ≥ Adh_J Base_D Adh_M ξ iff pointwise M-compactly (J/D)# filters", false, suite_local);
    add("meshable-quotient", "M-quotient with accessible range iff M-compactly meshable", false,
        [](const SuiteBounds& b) { return theorem_plan(b, 0x54, false, bound_triples(b)); });
    add("meshable-perfect", "M-perfect with accessible range iff the inverse is M-compactly meshable", false,
        [](const SuiteBounds& b) { return theorem_plan(b, 0x55, true, bound_triples(b)); });
    add("neighborhood-table", "accessible topological spaces iff accessible neighborhood filters, per row", false, suite_neighborhood_table);
    add("class-tables", "every (M, J, D) row of the quotient and perfect tables", false, suite_class_tables);
    add("usc", "u.s.c. relations between topologies are the F1-compact ones", false, suite_usc);
    add("grill", "H # F×G iff HF # G iff H⁻G # F", false, suite_grill);
    add("quotient-witness", "continuous surjections that are clF1-quotient but not F1-quotient", false,
        suite_quotient_witness);
    add("adherent-search", "closed maps that are not adherent", true,
        [](const SuiteBounds& b) { return suite_closed(b, true); });
    add("perfect-search", "D-perfect against inverse D-compact on non-topological domains", true,
        [](const SuiteBounds& b) { return suite_dperfect(b, true); });
    add("pdiagonal-search", "the (D/F1) bridge where its hypotheses fail", true,
        [](const SuiteBounds& b) { return suite_pdiag(b, false, true); });
    add("cover-search", "cover-compact sets against compact sets", true, suite_cover);
    add("adh-topologize", "Adh_clF1 against the topological modification", true, suite_adh_topologize);
    add("composability", "which classes are composable with which", true, suite_classes);
    return e;
  }();
  return entries;
}

constexpr std::uint64_t fnv_offset = 1469598103934665603ULL;
constexpr std::uint64_t fnv_prime = 1099511628211ULL;

void fnv(std::uint64_t& h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= fnv_prime;
  }
  h ^= 0xff;
  h *= fnv_prime;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const SuiteEntry& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

SuiteReport run_suite(const std::string& id, const SuiteBounds& bounds) {
  auto it = std::find_if(registry().begin(), registry().end(), [&](const SuiteEntry& e) { return e.info.id == id; });
  if (it == registry().end()) throw error("unknown suite '" + id + "'");
  if (bounds.max_points < 1 || bounds.max_points > max_points_cap())
    throw error("--max-points must be between 1 and " + std::to_string(max_points_cap()));

  const auto start = std::chrono::steady_clock::now();
  Plan plan = it->build(bounds);
  std::vector<std::vector<Record>> results(plan.items.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(plan.items.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.items.size(); i = next++) {
      try {
        plan.items[i](results[i]);
      } catch (const std::exception& e) {
        results[i].clear();
        results[i].push_back(fail(std::string("exception: ") + e.what()));
      }
    }
  };
  const int jobs = std::max(1, bounds.jobs);
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  SuiteReport r;
  r.id = id;
  r.exploratory = it->info.exploratory;
  r.max_points = bounds.max_points;
  r.seed = bounds.seed;
  std::uint64_t h = fnv_offset;
  fnv(h, id);
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const Record& rec : results[i]) {
      ++r.instances;
      ++r.counts[static_cast<std::size_t>(rec.outcome)];
      fnv(h, std::to_string(i) + ":" + to_string(rec.outcome) + (rec.finding ? ":finding:" : ":") + rec.text);
      if (rec.outcome == Outcome::fails && r.failures.size() < bounds.witness_limit) {
        r.failures.push_back(rec.text);
        r.repros.push_back(rec.repro);
      }
      if (rec.finding) {
        ++r.finding_count;
        if (r.findings.size() < bounds.witness_limit) r.findings.push_back(rec.text);
      }
    }
  }
  if (plan.require_findings && r.finding_count == 0) {
    ++r.instances;
    ++r.counts[static_cast<std::size_t>(Outcome::fails)];
    r.failures.push_back("no witness found within the bounds");
    r.repros.emplace_back();
    fnv(h, "missing witness");
  }
  r.digest = h;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string digest_hex(std::uint64_t d) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
  return buf;
}

std::string render_text(const SuiteReport& r) {
  std::string s = r.id + (r.exploratory ? " [exploratory]" : "") + ": " + std::to_string(r.instances) + " instances, " +
                  std::to_string(r.count(Outcome::holds)) + " holds, " + std::to_string(r.count(Outcome::fails)) +
                  " fails, " + std::to_string(r.count(Outcome::not_applicable)) + " not-applicable, " +
                  std::to_string(r.count(Outcome::vacuous)) + " vacuous";
  if (r.finding_count) s += ", " + std::to_string(r.finding_count) + " findings";
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", r.seconds);
  s += " (n ≤ " + std::to_string(r.max_points) + ", seed " + std::to_string(r.seed) + ", digest " + digest_hex(r.digest) +
       ", " + t + "s)\n";
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    s += "  FAIL " + r.failures[i] + "\n";
    if (!r.repros[i].empty()) s += "    repro: " + r.repros[i] + "\n";
  }
  for (const std::string& f : r.findings) s += "  finding: " + f + "\n";
  return s;
}

std::string render_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SuiteReport& r : reports) {
    nlohmann::json j;
    j["suite"] = r.id;
    j["exploratory"] = r.exploratory;
    j["max_points"] = r.max_points;
    j["seed"] = r.seed;
    j["instances"] = r.instances;
    j["outcomes"] = {{"holds", r.count(Outcome::holds)},
                     {"fails", r.count(Outcome::fails)},
                     {"not-applicable", r.count(Outcome::not_applicable)},
                     {"vacuous", r.count(Outcome::vacuous)}};
    j["findings"] = r.finding_count;
    j["finding_examples"] = r.findings;
    nlohmann::json fails = nlohmann::json::array();
    for (std::size_t i = 0; i < r.failures.size(); ++i) fails.push_back({{"instance", r.failures[i]}, {"repro", r.repros[i]}});
    j["failures"] = fails;
    j["digest"] = digest_hex(r.digest);
    j["seconds"] = r.seconds;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace convkit
