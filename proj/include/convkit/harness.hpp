#pragma once

// Enumeration of small models and the suite runner.
//
// A suite is a list of independent work items; each item yields records
// with an outcome and, for failures and findings, a description and a
// reproducing document. Items run on a thread pool and are merged by index,
// so counts and the digest do not depend on --jobs.

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "convkit/compactness.hpp"
#include "convkit/filter_class.hpp"

namespace convkit {

/// Largest ground the enumerators accept: CONVKIT_MAX_POINTS, default 4.
int max_points_cap();

std::vector<FiniteSpace> enumerate_spaces(int n);
void for_each_map(const GroundSet& x, const GroundSet& y, const std::function<void(const Relation&)>& fn);
void for_each_surjection(const GroundSet& x, const GroundSet& y, const std::function<void(const Relation&)>& fn);
void for_each_relation(const GroundSet& x, const GroundSet& y, const std::function<void(const Relation&)>& fn);
std::uint64_t surjection_count(int nx, int ny);

FiniteSpace random_space(int n, std::mt19937_64& rng);
Relation random_map(const GroundSet& x, const GroundSet& y, std::mt19937_64& rng);

struct SuiteBounds {
  int max_points = 3;
  std::vector<FilterClass> classes{FilterClass::F1(), FilterClass::ClF1()};
  int jobs = 1;
  std::uint64_t seed = 1;
  std::size_t oracle_samples = 10000;  // seeded instances on 4 points
  std::size_t pair_samples = 200;      // seeded space pairs on 4 points
  std::size_t witness_limit = 5;
};

struct Record {
  Outcome outcome = Outcome::holds;
  std::string text;    // failure or finding description
  std::string repro;   // reproducing JSON document for failures
  bool finding = false;
};

struct SuiteReport {
  std::string id;
  bool exploratory = false;
  int max_points = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::array<std::size_t, 4> counts{};  // indexed by Outcome
  std::size_t finding_count = 0;
  std::vector<std::string> failures;  // bounded
  std::vector<std::string> repros;    // bounded, parallel to failures
  std::vector<std::string> findings;  // bounded
  std::uint64_t digest = 0;
  double seconds = 0;

  std::size_t count(Outcome o) const { return counts[static_cast<std::size_t>(o)]; }
  bool passed() const { return count(Outcome::fails) == 0; }
};

struct SuiteInfo {
  std::string id;
  std::string summary;
  bool exploratory = false;
};

const std::vector<SuiteInfo>& suites();
/// Throws error on an unknown id.
SuiteReport run_suite(const std::string& id, const SuiteBounds& bounds);

std::string digest_hex(std::uint64_t d);
std::string render_text(const SuiteReport& r);
std::string render_json(const std::vector<SuiteReport>& reports);

}  // namespace convkit
