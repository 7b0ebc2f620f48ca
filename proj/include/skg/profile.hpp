#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skg/vertex.hpp"

namespace skg {

// Signed block/gap lengths read right to left: (-beta_r, gamma_r, ...,
// -beta_1, gamma_1).  Blocks are negative, gaps positive.  Comparison is
// lexicographic over the entries.
struct GapBlockSeq {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int operator[](std::size_t i) const { return entries[i]; }
  std::string to_string() const;  // "(-8,4,-6,2)"

  friend bool operator==(const GapBlockSeq&, const GapBlockSeq&) = default;
  friend auto operator<=>(const GapBlockSeq&, const GapBlockSeq&) = default;
};

// True iff position 1 is unmatched and position n is matched.
bool in_Y(const Vertex& x);

// Throws PreconditionError unless in_Y(x).
GapBlockSeq L_of(const Vertex& x);

// L_of(shift(x, -q)); requires q matched and q + 1 unmatched.
GapBlockSeq L_at(const Vertex& x, Position q);

struct MinRotation {
  std::size_t offset;
  std::vector<int> rotated;
};

// Lexicographically least rotation, least offset among ties.  Linear time.
MinRotation min_rotation(std::span<const int> seq);

// Least offset of the minimal rotation; scratch is resized to 2*|seq|.
std::size_t least_rotation_offset(std::span<const int> seq, std::vector<int>& scratch);

// Necklace canonical form: the least L(x') over all shifts x' of x in Y.
GapBlockSeq L_neck(const Vertex& x);

}  // namespace skg
