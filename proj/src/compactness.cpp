#include "convkit/compactness.hpp"

#include <algorithm>

namespace convkit {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::not_applicable: return "not-applicable";
    case Outcome::vacuous: return "vacuous";
  }
  return "?";
}

static bool set_meshes(Subset s, const Family& a) {
  return std::all_of(a.minimals().begin(), a.minimals().end(), [&](Subset m) { return s.meets(m); });
}

CompactVerdict compact_at(const FiniteSpace& s, const Family& subject, const Family& at, const FilterClass& d) {
  if (!(subject.ground() == s.ground()) || !(at.ground() == s.ground()))
    throw typing_error("compactness query over different ground sets");
  CompactVerdict v;
  for (Subset k : d.members(s)) {
    if (!set_meshes(k, subject)) continue;
    v.vacuous = false;
    if (!set_meshes(s.adh(k), at)) {
      v.holds = false;
      v.refuter = k;
      return v;
    }
  }
  return v;
}

bool is_compact_at(const FiniteSpace& s, Subset f, Subset at, const FilterClass& d) {
  for (Subset k : d.members(s))
    if (k.meets(f) && !s.adh(k).meets(at)) return false;
  return true;
}

CompactTable::CompactTable(const FiniteSpace& s, const FilterClass& d) {
  const std::uint32_t count = 1u << s.size();
  adh_of_meshing_.resize(count);
  points_.resize(count);
  const auto& members = d.members(s);
  for (std::uint32_t f = 0; f < count; ++f) {
    auto& list = adh_of_meshing_[f];
    for (Subset k : members)
      if (k.meets(Subset{f})) list.push_back(s.adh(k));
    Subset pts;
    for (int x = 0; x < s.size(); ++x)
      if (at(Subset{f}, Subset::singleton(x))) pts |= Subset::singleton(x);
    points_[f] = pts;
  }
}

bool CompactTable::at(Subset f, Subset a) const {
  const auto& list = adh_of_meshing_[f.bits];
  return std::all_of(list.begin(), list.end(), [&](Subset adh) { return adh.meets(a); });
}

CompactVerdict dj_compact_at(const FiniteSpace& s, const Family& subject, const Family& at, const FilterClass& d,
                             const FilterClass& j) {
  if (!(subject.ground() == s.ground()) || !(at.ground() == s.ground()))
    throw typing_error("compactness query over different ground sets");
  CompactVerdict v;
  const auto& jm = j.members(s);
  for (Subset k : d.members(s)) {
    bool premise = std::all_of(jm.begin(), jm.end(), [&](Subset jk) {
      return !k.subset_of(jk) || set_meshes(s.adh(jk), subject);
    });
    if (!premise) continue;
    v.vacuous = false;
    if (!set_meshes(s.adh(k), at)) {
      v.holds = false;
      v.refuter = k;
      return v;
    }
  }
  return v;
}

bool is_dj_compact_at(const FiniteSpace& s, Subset f, Subset at, const FilterClass& d, const FilterClass& j) {
  const auto& jm = j.members(s);
  for (Subset k : d.members(s)) {
    bool premise = std::all_of(jm.begin(), jm.end(), [&](Subset jk) { return !k.subset_of(jk) || s.adh(jk).meets(f); });
    if (premise && !s.adh(k).meets(at)) return false;
  }
  return true;
}

bool is_cover(const FiniteSpace& s, const Family& cover, Subset k) {
  if (!(cover.ground() == s.ground())) throw typing_error("cover over a different ground set");
  bool ok = true;
  for_each_subset(s.full(), [&](Subset f) {
    if (!ok || !s.lim(f).meets(k)) return;
    bool contains = std::any_of(cover.minimals().begin(), cover.minimals().end(),
                                [&](Subset m) { return f.subset_of(m); });
    if (!contains) ok = false;
  });
  return ok;
}

CoverCompactness cover_compactness(const FiniteSpace& s, Subset k, bool countable) {
  if (s.size() > 4) throw error("cover enumeration is limited to 4 points");
  CoverCompactness r;
  r.countable_ignored = countable;
  const int n = s.size();
  const std::uint32_t subsets = 1u << n;

  // Every additive family, as a bitmask over the 2^n subsets.
  r.by_covers = true;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t fam = 1; fam < families && r.by_covers; ++fam) {
    std::vector<Subset> sets;
    for (std::uint32_t a = 0; a < subsets; ++a)
      if ((fam >> a) & 1u) sets.push_back(Subset{a});
    bool additive = true;
    for (Subset a : sets)
      for (Subset b : sets)
        if (!((fam >> (a | b).bits) & 1u)) additive = false;
    if (!additive) continue;
    // Covers are tested on the family as given, not its up-closure.
    auto covers = [&](const std::vector<Subset>& family) {
      bool ok = true;
      for_each_subset(s.full(), [&](Subset f) {
        if (!ok || !s.lim(f).meets(k)) return;
        if (std::none_of(family.begin(), family.end(), [&](Subset m) { return f.subset_of(m); })) ok = false;
      });
      return ok;
    };
    if (!covers(sets)) continue;
    bool single = std::any_of(sets.begin(), sets.end(), [&](Subset m) { return covers({m}); });
    if (!single) r.by_covers = false;
  }

  // Adherence computed from its definition: limits of all meshing filters.
  auto adh_def = [&](Subset f) {
    Subset out;
    for_each_subset(s.full(), [&](Subset g) {
      if (g.meets(f)) out |= s.lim(g);
    });
    return out;
  };
  r.by_filters = true;
  r.compact = true;
  for_each_subset(s.full(), [&](Subset f) {
    if (f.empty()) return;
    bool members_adhere = true;
    for_each_subset(s.full(), [&](Subset m) {
      if (f.subset_of(m) && !adh_def(m).meets(k)) members_adhere = false;
    });
    if (members_adhere && !adh_def(f).meets(k)) r.by_filters = false;
    if (f.meets(k) && !adh_def(f).meets(k)) r.compact = false;
  });
  return r;
}

PdiagReport pdiag_bridge(const FiniteSpace& s, const FilterClass& d) {
  PdiagReport r;
  r.adh_stable = adh_stable(d, s);
  r.p_diagonal = s.is_P_diagonal();
  r.adh_fixed = adh_reflector(s, d) == s;
  const FilterClass f1 = FilterClass::F1();

  bool equivalent = true;
  bool implication = true;
  for_each_subset(s.full(), [&](Subset f) {
    for_each_subset(s.full(), [&](Subset b) {
      bool c = is_compact_at(s, f, b, d);
      bool dj = is_dj_compact_at(s, f, b, d, f1);
      if (c != dj && equivalent) {
        equivalent = false;
        r.witness = "F=" + s.ground().format(f) + " B=" + s.ground().format(b) + (c ? " compact only" : " (D/F1) only");
      }
      if (c && !dj) implication = false;
    });
  });

  if (r.p_diagonal && r.adh_stable)
    r.forward = equivalent ? Outcome::holds : Outcome::fails;
  else
    r.equivalence_anyway = equivalent;
  if (r.adh_fixed && implication)
    r.converse = r.p_diagonal ? Outcome::holds : Outcome::fails;
  return r;
}

}  // namespace convkit
