// Prints one PASS/FAIL line per acceptance criterion; exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "convkit/harness.hpp"
#include "convkit/symbolic.hpp"

using namespace convkit;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

int cores() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

std::string first_failure(const SuiteReport& r) {
  return r.failures.empty() ? "" : "; first failure: " + r.failures.front();
}

void theorem_suites() {
  SuiteBounds b;
  b.max_points = 3;
  b.jobs = cores();
  const auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0, fails = 0;
  std::string detail;
  for (const char* id : {"quotient-maps", "perfect-maps", "continuity", "pointwise-relations", "accessibility",
                         "adh-reflector", "meshable-quotient", "meshable-perfect"}) {
    SuiteReport r = run_suite(id, b);
    instances += r.instances;
    fails += r.count(Outcome::fails);
    if (!r.passed() && detail.empty()) detail = std::string(" (") + id + first_failure(r) + ")";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[256];
  std::snprintf(buf, sizeof buf, "theorem suites on n <= 3, %zu instances, %zu fails, %.1fs with %d jobs", instances,
                fails, secs, b.jobs);
  line(1, fails == 0 && secs <= 60, buf + detail);
}

void oracle_equivalence() {
  SuiteBounds b;
  b.max_points = 4;
  b.jobs = cores();
  b.oracle_samples = 10000;
  SuiteReport r = run_suite("oracle", b);
  SuiteBounds small = b;
  small.max_points = 3;
  SuiteReport exhaustive = run_suite("oracle", small);
  std::size_t sampled = r.instances - exhaustive.instances;
  line(2, r.passed() && sampled >= 10000,
       "closed forms match the definitional oracle on " + std::to_string(exhaustive.instances) +
           " exhaustive instances (n <= 3) and " + std::to_string(sampled) + " seeded n = 4 samples, " +
           std::to_string(r.count(Outcome::fails)) + " fails" + first_failure(r));
}

void contour_suite() {
  SuiteBounds b;
  b.max_points = 3;
  b.jobs = cores();
  SuiteReport r = run_suite("contour-compose", b);
  std::string counts;
  for (const std::string& f : r.failures) counts += "; " + f;
  line(3, r.passed(), "composed contours equal J(contour) on every cascade with <= 7 nodes over n <= 3" + counts);
}

void quotient_witness() {
  SuiteBounds b;
  b.max_points = 3;
  b.jobs = cores();
  SuiteReport r = run_suite("quotient-witness", b);
  bool ok = r.passed() && r.finding_count > 0;
  line(4, ok, std::to_string(r.finding_count) + " continuous surjections are clF1-quotient but not F1-quotient" +
                  (r.findings.empty() ? "" : "; e.g. " + r.findings.front()));
}

void symbolic_battery() {
  using namespace convkit::sym;
  const auto start = std::chrono::steady_clock::now();
  const SymFilter fan = SymFilter::fan(FanSupport::all_columns);
  Battery battery = generate_battery(1, 1000, 1000);
  std::size_t meshing = 0, witness_bad = 0, refuter_bad = 0;
  for (const GridSet& s : battery.sets) {
    if (!sym_mesh(SymFilter::principal(s), fan)) continue;
    ++meshing;
    SeqTerm w = frechet_witness(s);
    if (!sym_finer(fan, w) || !sym_member(s, w)) ++witness_bad;
  }
  for (const SymFilter& t : battery.transversals) {
    RefuterCertificate c = strong_frechet_refuter(SymFilter::block_tail(), t);
    if (!c.verified_member || !c.verified_disjoint) ++refuter_bad;
  }
  ContourDerivation d = fan_as_contour(battery.sets);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "fan battery: %zu/%zu witnesses verified, %zu/%zu refuters verified, contour equivalence on %zu sets "
                "with %zu disagreements, %.2fs",
                meshing - witness_bad, meshing, battery.transversals.size() - refuter_bad, battery.transversals.size(),
                d.checked, d.disagreements.size(), secs);
  line(5, witness_bad == 0 && refuter_bad == 0 && d.disagreements.empty() && d.checked == 1000 && secs <= 5, buf);
}

void reproducibility() {
  SuiteBounds b;
  b.max_points = 4;
  b.seed = 7;
  b.jobs = 1;
  SuiteBounds parallel = b;
  parallel.jobs = std::max(2, cores());
  bool ok = true;
  std::string digests;
  for (const SuiteInfo& s : suites()) {
    if (!s.exploratory) continue;
    SuiteReport first = run_suite(s.id, b);
    SuiteReport second = run_suite(s.id, b);
    SuiteReport third = run_suite(s.id, parallel);
    ok = ok && first.digest == second.digest && first.digest == third.digest && first.passed();
    digests += " " + s.id + "=" + digest_hex(first.digest);
  }
  line(6, ok, "exploratory digests identical across runs and worker counts (seed 7, n <= 4):" + digests);
}

void collapse() {
  SuiteBounds b;
  b.max_points = 3;
  SuiteReport r = run_suite("collapse", b);
  line(7, r.passed(), "finite collapses hold on " + std::to_string(r.instances) + " instances" + first_failure(r));
}

}  // namespace

int main() {
  try {
    theorem_suites();
    oracle_equivalence();
    contour_suite();
    quotient_witness();
    symbolic_battery();
    reproducibility();
    collapse();
  } catch (const std::exception& e) {
    std::printf("FAIL: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
