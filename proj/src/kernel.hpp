#pragma once

// Internal primitives over a rotated view of a bit buffer.  The generator
// uses these directly on its own buffers so that testing a shifted vertex
// costs no copy; the public functions wrap them with offset 0.

#include <cstdint>
#include <span>
#include <vector>

#include "skg/vertex.hpp"

namespace skg::detail {

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// The vertex shift(stored, offset): position i reads storage index
// (i - 1 - offset) mod n.
struct CyclicView {
  std::span<const std::uint8_t> bits;
  std::int64_t offset = 0;

  std::int64_t n() const { return static_cast<std::int64_t>(bits.size()); }
  std::size_t index(Position i) const { return static_cast<std::size_t>(mod(i - 1 - offset, n())); }
  std::uint8_t at(Position i) const { return bits[index(i)]; }
};

// x_p = 1 and x_{p+1..p+s} = 0.  Bit p+s is then unmatched: the bits
// p+1..p+s are all 0, so no 1 lies within s-1 positions to its left.
bool connectable(const CyclicView& x, Position p, int s);

// w = shift(y, -1) reads 0 1 0^{s-1} at p..p+s with w_p unmatched, i.e.
// w_{p-s+1..p} = 0, w_{p+1} = 1, w_{p+2..p+s} = 0.  Pass the view of w.
bool tail_pattern(const CyclicView& w, Position p, int s);

// Head and tail patterns exclude each other at the same vertex for s >= 2:
// a head has x_{p+1} = 0 matched by x_p = 1, while a tail y has y_{p+1} = w_p
// unmatched.

// matched[i-1] = 1 iff view position i is matched.
void fill_matched(const CyclicView& x, int s, std::vector<std::uint8_t>& matched);

// The same two patterns read against the profile of the view x (tested
// vertex x for the head, w = shift(x, -1) for the tail).  head: x_p = 1 and
// x_{p+s} unmatched.  tail: w_p = x_{p+1} unmatched, w_{p+1} = 1 and
// w_{p+2..p+s} = 0.
bool head_in_profile(const CyclicView& x, std::span<const std::uint8_t> matched, Position p, int s);
bool tail_in_profile(const CyclicView& x, std::span<const std::uint8_t> matched, Position p, int s);

// Signed run lengths read leftwards from q, where q is matched and q+1 is
// unmatched: (-block, gap, -block, gap, ...).  When run_ends is given it
// receives the rightmost position (in 1..n) of each run.
void leftward_runs(std::span<const std::uint8_t> matched, Position q, std::vector<int>& out,
                   std::vector<Position>* run_ends = nullptr);

// First q in 1..n with q matched and q+1 unmatched.  Requires a gap.
Position first_block_end(std::span<const std::uint8_t> matched);

struct PushScan {
  int gamma_next;  // gap starting at p+s
  int beta_next;   // block after that gap
  Position q;      // end of that block: p+s-1+gamma_next+beta_next
};

PushScan scan_push(std::span<const std::uint8_t> matched, Position p, int s);

// For a connectable view: at least two blocks and P(x) = L_neck(x).  The
// vectors are work buffers, reused across calls.
bool in_tp(const CyclicView& x, Position p, int s, std::vector<std::uint8_t>& matched, std::vector<int>& seq,
           std::vector<int>& booth);

// In-place rewrites of the glider at p (storage coordinates of the view
// offset 0): 1 0^{s-1} 0 <-> 0 1 0^{s-1}.
void push_glider(std::span<std::uint8_t> bits, Position p);
void pull_glider(std::span<std::uint8_t> bits, Position p);

}  // namespace skg::detail
