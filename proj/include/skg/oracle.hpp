#pragma once

// Brute-force ground truth for small instances: enumeration, counting, and
// a verification report covering the whole gluing construction.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skg/vertex.hpp"

namespace skg {

inline constexpr std::uint64_t kDefaultVerifyGuard = 200'000;

// All vertices of S(n,k,s) in lexicographic bitstring order.  Throws
// GuardError above `guard` vertices.
std::vector<Vertex> enumerate_vertices(const Params& params,
                                       std::uint64_t guard = kDefaultVerifyGuard);

// n / (n - (s-1)k) * C(n - (s-1)k, k), exact.
boost::multiprecision::cpp_int count_formula(const Params& params);

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  Params params;
  Position p;
  std::vector<Check> checks;
  std::uint64_t vertex_count = 0;
  std::uint64_t cycle_count = 0;
  std::uint64_t tree_edges = 0;

  bool passed() const;
  const Check* find(const std::string& name) const;
  // One line per check: "NAME PASS|FAIL detail", preceded by the counters.
  std::string to_text() const;
};

// Produces the full Hamilton cycle to be checked.
using CycleSource = std::function<std::vector<Vertex>(const Params&, Position)>;

struct VerifyOptions {
  std::uint64_t guard = kDefaultVerifyGuard;
  CycleSource source;  // defaults to the hamilton generator
};

VerificationReport verify_instance(const Params& params, Position p, const VerifyOptions& options = {});

// Hamiltonicity of `cycle` against the enumerated vertex set; independent of
// how the cycle was produced.  Returns an empty string on success, otherwise
// a description of the first defect.
std::string hamilton_defect(const std::vector<Vertex>& vertices, const std::vector<Vertex>& cycle);

}  // namespace skg
