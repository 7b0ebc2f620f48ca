#include "skg/hamilton.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

#include "kernel.hpp"
#include "skg/error.hpp"

namespace skg {

namespace {

void rotate_right(std::vector<std::uint8_t>& bits) { std::rotate(bits.begin(), bits.end() - 1, bits.end()); }

void rotate_left(std::vector<std::uint8_t>& bits) { std::rotate(bits.begin(), bits.begin() + 1, bits.end()); }

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i] = '1';
  }
  return out;
}

}  // namespace

Vertex Generator::default_start(const Params& params) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(params.n()), 0);
  for (int j = 0; j < params.k(); ++j) bits[params.n() - params.matched_count() + j * params.s()] = 1;
  return Vertex::from_storage(params, std::move(bits));
}

Generator::Generator(const Params& params, Position p, const std::optional<Vertex>& start,
                     GeneratorOptions options)
    : params_(params), p_(checked_position(params, p)), options_(options) {
  const Vertex first = start ? *start : default_start(params);
  if (first.params() != params) {
    throw ParamError("start vertex belongs to " + to_string(first.params()) + ", not " + to_string(params));
  }
  const auto n = static_cast<std::size_t>(params.n());
  current_.assign(first.storage().begin(), first.storage().end());
  start_ = current_;
  scratch_.reserve(n);
  matched_.reserve(n);
  seq_.reserve(n);
  booth_.reserve(2 * n);
}

Generator Generator::restore(const GeneratorSnapshot& snapshot, GeneratorOptions options) {
  Generator g(snapshot.params, snapshot.p, Vertex::from_bits(snapshot.params, snapshot.start), options);
  const Vertex current = Vertex::from_bits(snapshot.params, snapshot.current);
  g.current_.assign(current.storage().begin(), current.storage().end());
  g.direction_ = snapshot.direction;
  g.steps_ = snapshot.steps;
  return g;
}

Vertex Generator::current() const { return Vertex::from_storage(params_, current_); }

Vertex Generator::start() const { return Vertex::from_storage(params_, start_); }

std::size_t Generator::footprint_bytes() const noexcept {
  return sizeof(*this) + current_.capacity() + start_.capacity() + scratch_.capacity() + matched_.capacity() +
         (seq_.capacity() + booth_.capacity()) * sizeof(int);
}

// Is the view shift(current, offset) a T_p head?
bool Generator::tp_head(std::int64_t offset) {
  const detail::CyclicView x{current_, offset};
  if (!detail::connectable(x, p_, params_.s())) return false;
  return detail::in_tp(x, p_, params_.s(), matched_, seq_, booth_);
}

// Is the view shift(current, offset) the tail of a T_p connector?  On
// success scratch_ holds the head as shift(scratch_, offset - 1).
bool Generator::tp_tail(std::int64_t offset) {
  if (!detail::tail_pattern(detail::CyclicView{current_, offset - 1}, p_, params_.s())) return false;
  scratch_.assign(current_.begin(), current_.end());
  // View position p of shift(scratch, offset - 1) is storage position p - offset + 1.
  detail::pull_glider(scratch_, p_ - offset + 1);
  const detail::CyclicView head{scratch_, offset - 1};
  return detail::in_tp(head, p_, params_.s(), matched_, seq_, booth_);
}

void Generator::audit_cases() {
  const std::int64_t offset = direction_ == Direction::Forward ? 0 : -1;
  const int applicable = static_cast<int>(tp_head(offset)) + static_cast<int>(tp_tail(offset));
  if (applicable > 1) ++exclusivity_violations_;
}

std::span<const std::uint8_t> Generator::step() {
  const int s = params_.s();
  // Forward steps test the current vertex; backward steps test its
  // predecessor shift(current, -1).
  const std::int64_t offset = direction_ == Direction::Forward ? 0 : -1;

  if (options_.audit) audit_cases();
  // One profile pass over the tested vertex serves both patterns.
  const detail::CyclicView tested{current_, offset};
  detail::fill_matched(tested, s, matched_);
  const bool head = detail::head_in_profile(tested, matched_, p_, s);
  const bool tail = detail::tail_in_profile(tested, matched_, p_, s);
  if (head && tail) {
    ++exclusivity_violations_;
    assert(!"head and tail patterns at the same vertex");
  }

  if (direction_ == Direction::Forward) {
    if (head && tp_head(0)) {
      // (i) x' -> y'
      detail::push_glider(current_, p_);
      rotate_right(current_);
      direction_ = Direction::Backward;
      last_case_ = StepCase::HeadToTail;
    } else if (tail && tp_tail(0)) {
      // (ii) y' -> x'
      rotate_left(scratch_);
      current_.swap(scratch_);
      direction_ = Direction::Backward;
      last_case_ = StepCase::TailToHead;
    } else {
      rotate_right(current_);
      last_case_ = StepCase::Shift;
    }
  } else {
    if (head && tp_head(-1)) {
      // (iii) shift(x',1) -> shift(y',1); the push at p of x' sits at p+1 here.
      detail::push_glider(current_, p_ + 1);
      rotate_right(current_);
      direction_ = Direction::Forward;
      last_case_ = StepCase::ShiftedHeadToTail;
    } else if (tail && tp_tail(-1)) {
      // (iv) shift(y',1) -> shift(x',1)
      rotate_left(scratch_);
      current_.swap(scratch_);
      direction_ = Direction::Forward;
      last_case_ = StepCase::ShiftedTailToHead;
    } else {
      rotate_left(current_);
      last_case_ = StepCase::Shift;
    }
  }

  if (steps_ == std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("step counter overflow");
  ++steps_;
  if (current_ == start_) {
    if (direction_ != Direction::Forward) {
      throw std::logic_error("walk returned to the start vertex moving backward");
    }
    closed_ = true;
  }
  return current_;
}

GeneratorSnapshot Generator::snapshot() const {
  return GeneratorSnapshot{params_, p_, bits_to_string(current_), direction_, bits_to_string(start_), steps_};
}

std::string GeneratorSnapshot::serialize() const {
  std::ostringstream out;
  out << params.n() << ' ' << params.k() << ' ' << params.s() << ' ' << p << ' '
      << static_cast<int>(direction) << ' ' << current << ' ' << start << ' ' << steps;
  return out.str();
}

GeneratorSnapshot GeneratorSnapshot::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, k = 0, s = 0, d = 0;
  Position p = 0;
  std::string current, start;
  std::uint64_t steps = 0;
  if (!(in >> n >> k >> s >> p >> d >> current >> start >> steps) || (d != 1 && d != -1)) {
    throw ParamError("malformed generator snapshot '" + std::string(text) + "'");
  }
  std::string rest;
  if (in >> rest) throw ParamError("trailing data in generator snapshot");
  const Params params(n, k, s);
  checked_position(params, p);
  Vertex::from_bits(params, current);
  Vertex::from_bits(params, start);
  return GeneratorSnapshot{params, p, current, static_cast<Direction>(d), start, steps};
}

std::uint64_t run(const Params& params, Position p, std::optional<std::uint64_t> limit, const VertexSink& sink,
                  const std::optional<Vertex>& start) {
  Generator g(params, p, start);
  if (limit && *limit == 0) return 0;
  sink(g.current_bits());
  std::uint64_t emitted = 1;
  while (!limit || emitted < *limit) {
    g.step();
    if (g.closed()) break;
    sink(g.current_bits());
    ++emitted;
  }
  return emitted;
}

std::vector<Vertex> run_collect(const Params& params, Position p, std::optional<std::uint64_t> limit,
                                const std::optional<Vertex>& start) {
  std::vector<Vertex> out;
  run(params, p, limit,
      [&](std::span<const std::uint8_t> bits) {
        out.push_back(Vertex::from_storage(params, {bits.begin(), bits.end()}));
      },
      start);
  return out;
}

}  // namespace skg
