#pragma once

// Streaming generation of a Hamilton cycle in S(n,k,s).
//
// The walk follows the rotation cycles, forward or backward depending on the
// direction d, and switches cycles at the 4-cycles of the spanning-tree
// connectors T_p.  Every step does a constant number of O(n) passes over the
// current bitstring.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skg/vertex.hpp"

namespace skg {

enum class Direction : int { Backward = -1, Forward = 1 };

// Which rule produced the last step.
enum class StepCase {
  None,               // no step taken yet
  Shift,              // plain shift by d
  HeadToTail,         // d=+1, current is a T_p head
  TailToHead,         // d=+1, current is a T_p tail
  ShiftedHeadToTail,  // d=-1, shift(current,-1) is a T_p head
  ShiftedTailToHead,  // d=-1, shift(current,-1) is a T_p tail
};

struct GeneratorOptions {
  // Evaluate every case predicate on every step and count steps where more
  // than one applies.  Roughly doubles the per-step cost.
  bool audit = false;
};

// Resumable generator state.  Text form, one line:
//   "n k s p d current start emitted"
struct GeneratorSnapshot {
  Params params;
  Position p;
  std::string current;
  Direction direction;
  std::string start;
  std::uint64_t steps;

  std::string serialize() const;
  static GeneratorSnapshot parse(std::string_view text);
};

class Generator {
 public:
  explicit Generator(const Params& params, Position p = 1,
                     const std::optional<Vertex>& start = std::nullopt,
                     GeneratorOptions options = {});

  static Generator restore(const GeneratorSnapshot& snapshot, GeneratorOptions options = {});

  // 0^{n-sk} (1 0^{s-1})^k.
  static Vertex default_start(const Params& params);

  // Advances one vertex and returns a view of the new current bitstring.
  // The view is invalidated by the next call.
  std::span<const std::uint8_t> step();

  std::span<const std::uint8_t> current_bits() const noexcept { return current_; }
  Vertex current() const;
  Vertex start() const;
  Direction direction() const noexcept { return direction_; }
  StepCase last_case() const noexcept { return last_case_; }
  const Params& params() const noexcept { return params_; }
  Position p() const noexcept { return p_; }

  // True once the walk is back at the start vertex moving forward.
  bool closed() const noexcept { return closed_; }
  std::uint64_t steps() const noexcept { return steps_; }

  // Steps on which two of the four switching rules applied at once.
  std::uint64_t exclusivity_violations() const noexcept { return exclusivity_violations_; }

  // Bytes held by the generator's buffers.
  std::size_t footprint_bytes() const noexcept;

  GeneratorSnapshot snapshot() const;

 private:
  bool tp_head(std::int64_t offset);
  bool tp_tail(std::int64_t offset);
  void audit_cases();

  Params params_;
  Position p_;
  GeneratorOptions options_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> start_;
  std::vector<std::uint8_t> scratch_;
  std::vector<std::uint8_t> matched_;
  std::vector<int> seq_;
  std::vector<int> booth_;
  Direction direction_ = Direction::Forward;
  StepCase last_case_ = StepCase::None;
  bool closed_ = false;
  std::uint64_t steps_ = 0;
  std::uint64_t exclusivity_violations_ = 0;
};

using VertexSink = std::function<void(std::span<const std::uint8_t>)>;

// Emits the start vertex and then successive vertices until the cycle closes
// or `limit` vertices have been emitted.  Returns the number emitted.
std::uint64_t run(const Params& params, Position p, std::optional<std::uint64_t> limit,
                  const VertexSink& sink, const std::optional<Vertex>& start = std::nullopt);

std::vector<Vertex> run_collect(const Params& params, Position p = 1,
                                std::optional<std::uint64_t> limit = std::nullopt,
                                const std::optional<Vertex>& start = std::nullopt);

}  // namespace skg
