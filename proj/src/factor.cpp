#include "skg/factor.hpp"

#include <map>

#include "kernel.hpp"
#include "skg/oracle.hpp"
#include "skg/profile.hpp"

namespace skg {

std::vector<Vertex> OrbitCycle::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int t = 0; t < length; ++t) out.push_back(representative.shifted(t));
  return out;
}

Vertex canonical_representative(const Vertex& x) {
  std::vector<std::uint8_t> flags;
  detail::fill_matched(detail::CyclicView{x.storage(), 0}, x.params().s(), flags);
  std::vector<int> seq;
  std::vector<Position> ends;
  detail::leftward_runs(flags, detail::first_block_end(flags), seq, &ends);
  std::vector<int> scratch;
  const std::size_t offset = least_rotation_offset(seq, scratch);
  // The least rotation starts on a block; moving that block's right end to
  // position n puts the shift in Y with profile L_neck.
  return x.shifted(-ends[offset]);
}

int orbit_length(const Vertex& x) {
  const auto bits = x.storage();
  const std::size_t n = bits.size();
  // Prefix function; the smallest period dividing n is the orbit length.
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && bits[i] != bits[j]) j = pi[j - 1];
    if (bits[i] == bits[j]) ++j;
    pi[i] = j;
  }
  const std::size_t period = n - pi[n - 1];
  return static_cast<int>(n % period == 0 ? period : n);
}

OrbitCycle orbit_cycle(const Vertex& x) {
  return OrbitCycle{canonical_representative(x), orbit_length(x)};
}

std::vector<OrbitCycle> enumerate_factor(const Params& params, std::uint64_t guard) {
  std::map<Vertex, int> cycles;
  for (const Vertex& v : enumerate_vertices(params, guard)) {
    const Vertex rep = canonical_representative(v);
    if (!cycles.contains(rep)) cycles.emplace(rep, orbit_length(rep));
  }
  std::vector<OrbitCycle> out;
  out.reserve(cycles.size());
  for (const auto& [rep, length] : cycles) out.push_back(OrbitCycle{rep, length});
  return out;
}

}  // namespace skg
