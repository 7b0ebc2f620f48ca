#pragma once

#include <array>

#include "skg/profile.hpp"
#include "skg/vertex.hpp"

namespace skg {

// A connector (head, tail) at position p: shift(tail, -1) is head with the
// glider 1 0^{s-1} at p pushed one step right into the unmatched bit p + s.
struct Connector {
  Vertex head;
  Vertex tail;
  Position p;
};

bool is_connectable(const Vertex& x, Position p);

// True iff y is the tail of some connector at p, i.e. tail_to_head is defined.
bool is_tail(const Vertex& y, Position p);

Vertex head_to_tail(const Vertex& x, Position p);
Vertex tail_to_head(const Vertex& y, Position p);

Connector make_connector(const Vertex& head, Position p);

// (x, shift(x,1), shift(y,1), y); consecutive pairs, cyclically, are edges.
std::array<Vertex, 4> four_cycle(const Connector& c);

// Quantities around the push position of a connectable vertex: the block
// ending at p+s-1 (beta) with the gap to its left (gamma) and to its right
// (gamma_next), and the block after that gap (beta_next).
struct PushNeighborhood {
  int beta;
  int gamma;
  int gamma_next;
  int beta_next;
  int block_count;
};

PushNeighborhood push_neighborhood(const Vertex& x, Position p);

// Profile read from the end of the block after the gap following p.
// Requires a connectable vertex with at least two blocks.
GapBlockSeq P_of(const Vertex& x, Position p);

// The connectable vertex on the cycle of y whose P is strictly below
// P(tail_to_head(y, p)).
Vertex tau(const Vertex& y, Position p);

bool in_T_p(const Vertex& x, Position p);

}  // namespace skg
