#pragma once

// Vertices of the s-stable Kneser graph S(n,k,s) as cyclic bitstrings.
//
// All positions in this interface are 1-based and cyclic: position i and
// i + n denote the same bit.  Storage index j holds position j + 1.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skg {

using Position = std::int64_t;

class Params {
 public:
  // Throws ParamError unless k >= 1, s >= 2 and n >= s*k + 1.
  Params(int n, int k, int s);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int s() const noexcept { return s_; }
  // Number of matched positions in every vertex.
  int matched_count() const noexcept { return s_ * k_; }

  friend auto operator<=>(const Params&, const Params&) = default;

 private:
  int n_;
  int k_;
  int s_;
};

std::string to_string(const Params& params);

// Validates 1 <= p <= n, throwing ParamError otherwise.
Position checked_position(const Params& params, Position p);

class Vertex {
 public:
  // Canonical text form: n characters over {0,1}, leftmost = position 1.
  static Vertex from_bits(const Params& params, std::string_view bits);
  // Elements are 1-based; order does not matter but duplicates are rejected.
  static Vertex from_set(const Params& params, std::span<const int> elements);
  // Comma-separated form without spaces, e.g. "2,7,9".
  static Vertex from_set_string(const Params& params, std::string_view csv);
  // Storage bits (0/1 bytes, index 0 = position 1), validated.
  static Vertex from_storage(const Params& params, std::vector<std::uint8_t> bits);

  const Params& params() const noexcept { return params_; }
  int n() const noexcept { return params_.n(); }

  bool bit(Position i) const noexcept;
  std::span<const std::uint8_t> storage() const noexcept { return bits_; }

  std::vector<int> to_set() const;
  std::string to_string() const;
  std::string to_set_string() const;
  // Debug rendering with unmatched zeros shown as '-'.
  std::string to_pretty() const;

  // Position i of the result holds position i - t of this vertex.
  Vertex shifted(std::int64_t t) const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  Vertex(Params params, std::vector<std::uint8_t> bits)
      : params_(params), bits_(std::move(bits)) {}

  Params params_;
  std::vector<std::uint8_t> bits_;
};

inline Vertex shift(const Vertex& x, std::int64_t t) { return x.shifted(t); }

// True iff the two sets are disjoint.
bool is_edge(const Vertex& x, const Vertex& y);

enum class RunKind { Block, Gap };

struct Run {
  RunKind kind;
  Position start;
  int length;

  friend bool operator==(const Run&, const Run&) = default;
};

// Every 1 together with the s-1 zeros following it is matched; every other
// position is unmatched.  Blocks are maximal cyclic runs of matched
// positions, gaps maximal runs of unmatched ones.
struct MatchProfile {
  std::vector<bool> matched;  // index 0 = position 1
  std::vector<Run> runs;      // ordered by start position

  bool is_matched(Position i) const;
  std::vector<Position> matched_positions() const;
  std::vector<Position> unmatched_positions() const;
  std::vector<int> block_lengths() const;
  std::vector<int> gap_lengths() const;
  int block_count() const;
};

MatchProfile match_profile(const Vertex& x);

// Start positions of the k gliders 1 0^{s-1}, increasing.
std::vector<Position> gliders(const Vertex& x);

}  // namespace skg
