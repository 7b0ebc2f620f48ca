#pragma once

#include <cstdint>
#include <vector>

#include "skg/vertex.hpp"

namespace skg {

// The cycle C(x) = (x, shift(x,1), ..., shift(x,length-1)) of the rotation
// factor.  The representative is the unique shift lying in Y whose profile
// equals L_neck, so two vertices share a cycle iff their representatives
// are equal.
struct OrbitCycle {
  Vertex representative;
  int length;

  std::vector<Vertex> vertices() const;

  friend bool operator==(const OrbitCycle&, const OrbitCycle&) = default;
};

Vertex canonical_representative(const Vertex& x);

// Least t > 0 with shift(x, t) == x.
int orbit_length(const Vertex& x);

OrbitCycle orbit_cycle(const Vertex& x);

inline constexpr std::uint64_t kDefaultFactorGuard = 1'000'000;

// One cycle per necklace, sorted by representative.  Throws GuardError when
// the instance has more than `guard` vertices.
std::vector<OrbitCycle> enumerate_factor(const Params& params,
                                         std::uint64_t guard = kDefaultFactorGuard);

}  // namespace skg
