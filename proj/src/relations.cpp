#include "convkit/relations.hpp"

#include <algorithm>

namespace convkit {

namespace {

std::string fmt(const GroundSet& g, Subset s) { return g.format(s); }

void require_surjection(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau) {
  require_map(f, xi, tau);
  if (!f.is_surjective()) throw error("map is not surjective");
}

}  // namespace

Verdict relation_compact(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau, const FilterClass& d) {
  Verdict v;
  for_each_subset(xi.full(), [&](Subset a) {
    if (!v.holds) return;
    for_each_subset(xi.full(), [&](Subset f) {
      if (!v.holds || !is_compact_at(xi, f, a, d)) return;
      if (!is_compact_at(tau, r.image(f), r.image(a), d)) {
        v.holds = false;
        v.witness = "F=" + fmt(xi.ground(), f) + " is " + d.name() + "-compact at A=" + fmt(xi.ground(), a) +
                    " but RF=" + fmt(tau.ground(), r.image(f)) + " is not at RA=" + fmt(tau.ground(), r.image(a));
      }
    });
  });
  return v;
}

bool relation_compact(const Relation& r, const CompactTable& xi, const CompactTable& tau) {
  const std::uint32_t count = 1u << r.domain().size();
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t f = 0; f < count; ++f)
      if (xi.at(Subset{f}, Subset{a}) && !tau.at(r.image(Subset{f}), r.image(Subset{a}))) return false;
  return true;
}

Verdict relation_compact_pointwise(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau,
                                   const FilterClass& d) {
  Verdict v;
  for (int x = 0; x < xi.size() && v.holds; ++x) {
    for_each_subset(xi.full(), [&](Subset f) {
      if (!v.holds || !xi.lim(f).contains(x)) return;
      Subset rx = r.row(x);
      if (!is_compact_at(tau, r.image(f), rx, d)) {
        v.holds = false;
        v.witness = "F=" + fmt(xi.ground(), f) + " converges to " + xi.ground().name(x) + " but RF=" +
                    fmt(tau.ground(), r.image(f)) + " is not " + d.name() + "-compact at Rx=" + fmt(tau.ground(), rx);
      }
    });
  }
  return v;
}

bool relation_compact_pointwise(const Relation& r, const FiniteSpace& xi, const CompactTable& tau) {
  const std::uint32_t count = 1u << xi.size();
  for (int x = 0; x < xi.size(); ++x)
    for (std::uint32_t f = 0; f < count; ++f)
      if (xi.lim(Subset{f}).contains(x) && !tau.at(r.image(Subset{f}), r.row(x))) return false;
  return true;
}

Verdict is_adherent(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau) {
  require_map(f, xi, tau);
  Verdict v;
  for_each_subset(xi.full(), [&](Subset h) {
    if (!v.holds) return;
    Subset adh_h = xi.adh(h);
    for_each_element(tau.adh(f.image(h)), [&](int y) {
      if (v.holds && !adh_h.meets(f.preimage(Subset::singleton(y)))) {
        v.holds = false;
        v.witness = "H=" + fmt(xi.ground(), h) + ": " + tau.ground().name(y) + " adheres to f(H)=" +
                    fmt(tau.ground(), f.image(h)) + " but adh H=" + fmt(xi.ground(), adh_h) + " misses its fiber";
      }
    });
  });
  return v;
}

Verdict is_closed_map(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau) {
  require_map(f, xi, tau);
  Verdict v;
  for (Subset h : xi.closed_sets()) {
    if (!tau.is_closed(f.image(h))) {
      v.holds = false;
      v.witness = "H=" + fmt(xi.ground(), h) + " is closed but f(H)=" + fmt(tau.ground(), f.image(h)) + " is not";
      break;
    }
  }
  return v;
}

bool adherences_closed(const FiniteSpace& xi) {
  bool ok = true;
  for_each_subset(xi.full(), [&](Subset a) {
    if (ok && !xi.is_closed(xi.adh(a))) ok = false;
  });
  return ok;
}

Verdict is_D_perfect(const Relation& f, const FilterClass& d, const FiniteSpace& xi, const FiniteSpace& tau) {
  require_surjection(f, xi, tau);
  Verdict v = is_adherent(f, xi, tau);
  if (!v.holds) return v;
  for (int y = 0; y < tau.size(); ++y) {
    Subset fiber = f.preimage(Subset::singleton(y));
    if (!is_compact_set(xi, fiber, d)) {
      v.holds = false;
      v.witness = "fiber of " + tau.ground().name(y) + " = " + fmt(xi.ground(), fiber) + " is not " + d.name() +
                  "-compact";
      break;
    }
  }
  return v;
}

Verdict is_D_quotient(const Relation& f, const FilterClass& d, const FiniteSpace& xi, const FiniteSpace& tau) {
  require_surjection(f, xi, tau);
  FiniteSpace fxi = final_space(xi, f);
  Verdict v;
  for (Subset h : d.members(fxi)) {
    Subset adh_pre = xi.adh(f.preimage(h));
    for_each_element(tau.adh(h), [&](int y) {
      if (v.holds && !adh_pre.meets(f.preimage(Subset::singleton(y)))) {
        v.holds = false;
        v.witness = "H=" + fmt(tau.ground(), h) + ": " + tau.ground().name(y) + " adheres to H in the range but adh f⁻H=" +
                    fmt(xi.ground(), adh_pre) + " misses f⁻" + tau.ground().name(y);
      }
    });
    if (!v.holds) break;
  }
  return v;
}

QuotientCharacterizations quotient_characterizations(const Relation& f, const FilterClass& d, const FiniteSpace& xi,
                                                     const FiniteSpace& tau) {
  QuotientCharacterizations q;
  Verdict def = is_D_quotient(f, d, xi, tau);
  q.definitional = def.holds;
  q.witness = def.witness;
  FiniteSpace fxi = final_space(xi, f);
  q.via_reflector = tau.finer_than(adh_reflector(fxi, d));
  q.via_relation = relation_compact(f, initial(tau, f), fxi, d).holds;
  return q;
}

bool is_mcm_filter(const FiniteSpace& s, Subset f, Subset a, const FilterClass& m, const FilterClass& j,
                   const FilterClass& d) {
  std::vector<Subset> compact_d;
  for (Subset dk : d.members(s))
    if (is_compact_at(s, dk, a, m)) compact_d.push_back(dk);
  for (Subset jk : j.members(s)) {
    if (!jk.meets(f)) continue;
    if (std::none_of(compact_d.begin(), compact_d.end(), [&](Subset dk) { return dk.meets(jk); })) return false;
  }
  return true;
}

Verdict is_mcm_relation(const Relation& r, const FilterClass& m, const FilterClass& j, const FilterClass& d,
                        const FiniteSpace& xi, const FiniteSpace& tau) {
  Verdict v;
  for (int x = 0; x < xi.size() && v.holds; ++x) {
    Subset rx = r.row(x);
    for_each_subset(xi.full(), [&](Subset f) {
      if (!v.holds || !xi.lim(f).contains(x)) return;
      if (!is_mcm_filter(tau, r.image(f), rx, m, j, d)) {
        v.holds = false;
        v.witness = "F=" + fmt(xi.ground(), f) + " converges to " + xi.ground().name(x) + " but RF=" +
                    fmt(tau.ground(), r.image(f)) + " is not " + m.name() + "-compactly (" + j.name() + "/" +
                    d.name() + ")-meshable at " + fmt(tau.ground(), rx);
      }
    });
  }
  return v;
}

bool is_usc(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau) {
  std::vector<Subset> opens;
  for (Subset c : tau.closed_sets()) opens.push_back(complement(c, tau.size()));
  for (int x = 0; x < xi.size(); ++x) {
    Subset nx = xi.nbhd(x);
    for (Subset u : opens) {
      if (!r.row(x).subset_of(u)) continue;
      Subset upper;
      for (int z = 0; z < xi.size(); ++z)
        if (r.row(z).subset_of(u)) upper |= Subset::singleton(z);
      if (!nx.subset_of(upper)) return false;
    }
  }
  return true;
}

bool class_included(const FilterClass& m, const FilterClass& j, const FiniteSpace& s) {
  const auto& mm = m.members(s);
  return std::all_of(mm.begin(), mm.end(), [&](Subset k) { return j.contains(s, k); });
}

static std::string gate_map(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau) {
  if (!f.is_map()) return "not a map";
  if (!f.is_surjective()) return "not surjective";
  if (!is_continuous(f, xi, tau)) return "not continuous";
  return {};
}

static void settle(TheoremReport& t) {
  if (!t.hypothesis_failure.empty())
    t.outcome = Outcome::not_applicable;
  else
    t.outcome = t.lhs == t.rhs ? Outcome::holds : Outcome::fails;
}

TheoremReport theorem_mquot_range(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau,
                                  const FilterClass& m, const FilterClass& j, const FilterClass& d) {
  TheoremReport t;
  require_map(f, xi, tau);
  t.hypothesis_failure = gate_map(f, xi, tau);
  if (t.hypothesis_failure == "not a map" || t.hypothesis_failure == "not surjective") return t;
  FiniteSpace fxi = final_space(xi, f);
  if (t.hypothesis_failure.empty() && !(class_included(m, j, tau) && class_included(m, j, fxi)))
    t.hypothesis_failure = m.name() + " not included in " + j.name();
  if (t.hypothesis_failure.empty() && !(adh_reflector(tau, m) == tau))
    t.hypothesis_failure = "range is not Adh_" + m.name() + "-fixed";

  Verdict quot = is_D_quotient(f, m, xi, tau);
  AccessibilityResult acc = accessibility(tau, j, d);
  t.lhs = quot.holds && acc.definitional;
  Verdict mesh = is_mcm_relation(f, m, j, d, initial(tau, f), fxi);
  t.rhs = mesh.holds;
  if (!quot.holds)
    t.witness = "not " + m.name() + "-quotient: " + quot.witness;
  else if (!acc.definitional)
    t.witness = "range not accessible at J=" + tau.ground().format(*acc.refuter);
  if (!mesh.holds) t.witness += (t.witness.empty() ? "" : "; ") + mesh.witness;
  settle(t);
  return t;
}

TheoremReport theorem_mperfect_range(const Relation& f, const FiniteSpace& xi, const FiniteSpace& tau,
                                     const FilterClass& m, const FilterClass& j, const FilterClass& d) {
  TheoremReport t;
  require_map(f, xi, tau);
  t.hypothesis_failure = gate_map(f, xi, tau);
  if (t.hypothesis_failure == "not a map" || t.hypothesis_failure == "not surjective") return t;
  auto gate = [&](bool ok, const std::string& why) {
    if (t.hypothesis_failure.empty() && !ok) t.hypothesis_failure = why;
  };
  gate(class_included(m, j, tau) && class_included(m, j, xi), m.name() + " not included in " + j.name());
  gate(is_f1_composable(j), j.name() + " is not F1-composable");
  gate(is_f1_composable(d), d.name() + " is not F1-composable");
  gate(adh_reflector(tau, m) == tau, "range is not Adh_" + m.name() + "-fixed");
  gate(xi.is_P_diagonal(), "domain is not P-diagonal");
  gate(adh_stable(m, xi), "adh does not preserve " + m.name() + " in the domain");

  Verdict perfect = is_D_perfect(f, m, xi, tau);
  AccessibilityResult acc = accessibility(tau, j, d);
  t.lhs = perfect.holds && acc.definitional;
  Verdict mesh = is_mcm_relation(f.inverse(), m, j, d, tau, xi);
  t.rhs = mesh.holds;
  if (!perfect.holds)
    t.witness = "not " + m.name() + "-perfect: " + perfect.witness;
  else if (!acc.definitional)
    t.witness = "range not accessible at J=" + tau.ground().format(*acc.refuter);
  if (!mesh.holds) t.witness += (t.witness.empty() ? "" : "; ") + mesh.witness;
  settle(t);
  return t;
}

MapClassification classify(const Relation& r, const FiniteSpace& xi, const FiniteSpace& tau) {
  MapClassification c;
  c.subject = "relation " + std::to_string(xi.size()) + " → " + std::to_string(tau.size()) + " points";
  auto add = [&](std::string notion, std::optional<bool> value, std::string note) {
    c.verdicts.push_back({std::move(notion), value, std::move(note)});
  };
  const FilterClass f1 = FilterClass::F1(), cl = FilterClass::ClF1();
  const bool is_map = r.is_map();
  const bool surjective = is_map && r.is_surjective();

  add("map", is_map, is_map ? "" : "some point has no image or several");
  for (const FilterClass& d : {f1, cl}) {
    Verdict v = relation_compact(r, xi, tau, d);
    add("compact-relation(" + d.name() + ")", v.holds, v.witness);
  }
  add("usc", is_usc(r, xi, tau),
      xi.is_topology() && tau.is_topology() ? "" : "classical definition; spaces are not both topological");
  for (const FilterClass& m : {f1, cl}) {
    Verdict v = is_mcm_relation(r, m, f1, f1, xi, tau);
    add("M-meshable(" + m.name() + ",F1,F1)", v.holds, v.witness);
  }
  if (!is_map) {
    for (const char* n : {"continuous", "adherent", "closed", "perfect(F1)", "perfect(clF1)", "quotient(F1)",
                          "quotient(clF1)"})
      add(n, std::nullopt, "not a map");
    return c;
  }
  add("continuous", is_continuous(r, xi, tau), "");
  Verdict adh = is_adherent(r, xi, tau);
  add("adherent", adh.holds, adh.witness);
  Verdict closed = is_closed_map(r, xi, tau);
  add("closed", closed.holds, closed.witness);
  for (const FilterClass& d : {f1, cl}) {
    if (!surjective) {
      add("perfect(" + d.name() + ")", std::nullopt, "not surjective");
      continue;
    }
    Verdict v = is_D_perfect(r, d, xi, tau);
    add("perfect(" + d.name() + ")", v.holds, v.witness);
  }
  for (const FilterClass& d : {f1, cl}) {
    if (!surjective) {
      add("quotient(" + d.name() + ")", std::nullopt, "not surjective");
      continue;
    }
    Verdict v = is_D_quotient(r, d, xi, tau);
    add("quotient(" + d.name() + ")", v.holds, v.witness);
  }
  return c;
}

}  // namespace convkit
