#include "skg/connector.hpp"

#include "kernel.hpp"
#include "skg/error.hpp"

namespace skg {

namespace {

detail::CyclicView view(const Vertex& x, std::int64_t offset = 0) {
  return detail::CyclicView{x.storage(), offset};
}

std::vector<std::uint8_t> storage_copy(const Vertex& x) {
  return {x.storage().begin(), x.storage().end()};
}

}  // namespace

bool is_connectable(const Vertex& x, Position p) {
  return detail::connectable(view(x), p, x.params().s());
}

bool is_tail(const Vertex& y, Position p) {
  return detail::tail_pattern(view(y, -1), p, y.params().s());
}

Vertex head_to_tail(const Vertex& x, Position p) {
  if (!is_connectable(x, p)) {
    throw PreconditionError("vertex " + x.to_pretty() + " is not connectable at p=" + std::to_string(p));
  }
  auto bits = storage_copy(x);
  detail::push_glider(bits, p);
  return Vertex::from_storage(x.params(), std::move(bits)).shifted(1);
}

Vertex tail_to_head(const Vertex& y, Position p) {
  if (!is_tail(y, p)) {
    throw PreconditionError("vertex " + y.to_pretty() + " is not a connector tail at p=" + std::to_string(p));
  }
  auto bits = storage_copy(y.shifted(-1));
  detail::pull_glider(bits, p);
  return Vertex::from_storage(y.params(), std::move(bits));
}

Connector make_connector(const Vertex& head, Position p) { return Connector{head, head_to_tail(head, p), p}; }

std::array<Vertex, 4> four_cycle(const Connector& c) {
  return {c.head, c.head.shifted(1), c.tail.shifted(1), c.tail};
}

PushNeighborhood push_neighborhood(const Vertex& x, Position p) {
  if (!is_connectable(x, p)) {
    throw PreconditionError("vertex " + x.to_pretty() + " is not connectable at p=" + std::to_string(p));
  }
  const int s = x.params().s();
  const auto n = static_cast<std::int64_t>(x.n());
  std::vector<std::uint8_t> flags;
  detail::fill_matched(view(x), s, flags);
  const auto flag = [&](Position i) { return flags[static_cast<std::size_t>(detail::mod(i - 1, n))] != 0; };

  PushNeighborhood nb{};
  const detail::PushScan scan = detail::scan_push(flags, p, s);
  nb.gamma_next = scan.gamma_next;
  nb.beta_next = scan.beta_next;

  Position i = p + s - 1;
  while (flag(i) && nb.beta < n) {
    ++nb.beta;
    --i;
  }
  while (!flag(i) && nb.gamma < n) {
    ++nb.gamma;
    --i;
  }
  for (std::int64_t j = 0; j < n; ++j) {
    if (flags[static_cast<std::size_t>(j)] && !flags[static_cast<std::size_t>(detail::mod(j - 1, n))]) {
      ++nb.block_count;
    }
  }
  return nb;
}

GapBlockSeq P_of(const Vertex& x, Position p) {
  const PushNeighborhood nb = push_neighborhood(x, p);
  if (nb.block_count < 2) {
    throw PreconditionError("P is undefined for single-block vertex " + x.to_pretty());
  }
  std::vector<std::uint8_t> flags;
  detail::fill_matched(view(x), x.params().s(), flags);
  GapBlockSeq seq;
  detail::leftward_runs(flags, detail::scan_push(flags, p, x.params().s()).q, seq.entries);
  return seq;
}

Vertex tau(const Vertex& y, Position p) {
  const Vertex x = tail_to_head(y, p);
  const PushNeighborhood nb = push_neighborhood(x, p);
  if (nb.block_count < 2) {
    throw PreconditionError("tau requires a head with at least two blocks: " + x.to_pretty());
  }
  const int s = x.params().s();
  if (nb.gamma_next > 1) return y.shifted(-2);
  if (nb.beta > s) return y.shifted(s - 1);
  return y.shifted(nb.gamma + s - 1);
}

bool in_T_p(const Vertex& x, Position p) {
  if (!is_connectable(x, p)) return false;
  std::vector<std::uint8_t> matched;
  std::vector<int> seq, booth;
  return detail::in_tp(view(x), p, x.params().s(), matched, seq, booth);
}

}  // namespace skg
