#include "skg/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "skg/connector.hpp"
#include "skg/error.hpp"
#include "skg/factor.hpp"
#include "skg/hamilton.hpp"
#include "skg/profile.hpp"

namespace skg {

using boost::multiprecision::cpp_int;

cpp_int count_formula(const Params& params) {
  const int m = params.n() - (params.s() - 1) * params.k();
  cpp_int binom = 1;
  for (int i = 1; i <= params.k(); ++i) binom = binom * (m - params.k() + i) / i;
  return binom * params.n() / m;
}

namespace {

void enumerate_from(const Params& params, int pos, int ones_left, int first, int last,
                    std::vector<std::uint8_t>& bits, std::vector<Vertex>& out) {
  const int n = params.n();
  const int s = params.s();
  if (pos == n) {
    if (ones_left == 0 && first + n - last >= s) out.push_back(Vertex::from_storage(params, bits));
    return;
  }
  if (ones_left > 0 && (ones_left - 1) * s + 1 > n - pos) return;
  enumerate_from(params, pos + 1, ones_left, first, last, bits, out);
  if (ones_left > 0 && (last < 0 || pos - last >= s)) {
    bits[pos] = 1;
    enumerate_from(params, pos + 1, ones_left - 1, last < 0 ? pos : first, pos, bits, out);
    bits[pos] = 0;
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    --components;
    return true;
  }

  std::vector<std::size_t> parent;
  std::size_t components = parent.size();
};

void require_in_guard(const Params& params, std::uint64_t guard) {
  if (count_formula(params) > guard) {
    throw GuardError(to_string(params) + " has " + count_formula(params).str() + " vertices, above the limit of " +
                     std::to_string(guard));
  }
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const Params& params, std::uint64_t guard) {
  require_in_guard(params, guard);
  std::vector<Vertex> out;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(params.n()), 0);
  enumerate_from(params, 0, params.k(), -1, -1, bits, out);
  return out;
}

std::string hamilton_defect(const std::vector<Vertex>& vertices, const std::vector<Vertex>& cycle) {
  if (cycle.size() != vertices.size()) {
    return "cycle has " + std::to_string(cycle.size()) + " vertices, graph has " + std::to_string(vertices.size());
  }
  if (cycle.empty()) return {};
  const Params& params = vertices.front().params();
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].params() != params) return "vertex " + sorted[i].to_string() + " from another graph";
    if (i > 0 && sorted[i] == sorted[i - 1]) return "vertex " + sorted[i].to_string() + " visited twice";
  }
  std::vector<Vertex> expected = vertices;
  std::sort(expected.begin(), expected.end());
  if (sorted != expected) return "visited set differs from the vertex set";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex& a = cycle[i];
    const Vertex& b = cycle[(i + 1) % cycle.size()];
    if (!is_edge(a, b)) return "step " + std::to_string(i) + ": " + a.to_string() + " -> " + b.to_string() + " is not an edge";
  }
  return {};
}

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "instance n=" << params.n() << " k=" << params.k() << " s=" << params.s() << " p=" << p << '\n';
  out << "vertex_count " << vertex_count << '\n';
  out << "cycle_count " << cycle_count << '\n';
  out << "tree_edges " << tree_edges << '\n';
  for (const Check& c : checks) {
    out << c.name << ' ' << (c.passed ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
  }
  return out.str();
}

VerificationReport verify_instance(const Params& params, Position p, const VerifyOptions& options) {
  checked_position(params, p);
  VerificationReport report{params, p, {}};
  const std::vector<Vertex> vertices = enumerate_vertices(params, options.guard);
  report.vertex_count = vertices.size();
  const int s = params.s();

  // (a) the rotation cycles partition the vertex set
  const std::vector<OrbitCycle> cycles = enumerate_factor(params, options.guard);
  report.cycle_count = cycles.size();
  std::map<Vertex, std::size_t> cycle_of;
  {
    std::string defect;
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < cycles.size() && defect.empty(); ++c) {
      const std::vector<Vertex> orbit = cycles[c].vertices();
      total += orbit.size();
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (!cycle_of.emplace(orbit[i], c).second) {
          defect = "vertex " + orbit[i].to_string() + " lies on two cycles";
          break;
        }
        if (!is_edge(orbit[i], orbit[(i + 1) % orbit.size()])) {
          defect = "non-edge on cycle of " + cycles[c].representative.to_string();
          break;
        }
        if (canonical_representative(orbit[i]) != cycles[c].representative) {
          defect = "representative mismatch at " + orbit[i].to_string();
          break;
        }
      }
      if (defect.empty() && orbit.front().shifted(cycles[c].length) != orbit.front()) {
        defect = "cycle of " + cycles[c].representative.to_string() + " does not close";
      }
    }
    if (defect.empty() && (total != vertices.size() || cycle_of.size() != vertices.size())) {
      defect = "cycle lengths sum to " + std::to_string(total) + ", expected " + std::to_string(vertices.size());
    }
    report.checks.push_back({"factor_partition", defect.empty(),
                             defect.empty() ? std::to_string(cycles.size()) + " cycles" : defect});
  }

  // (b) connectors at p and their 4-cycles
  std::vector<Connector> connectors;
  {
    std::string defect;
    for (const Vertex& x : vertices) {
      if (!is_connectable(x, p)) continue;
      Connector c = make_connector(x, p);
      const auto quad = four_cycle(c);
      for (std::size_t i = 0; i < 4 && defect.empty(); ++i) {
        if (!is_edge(quad[i], quad[(i + 1) % 4])) defect = "4-cycle of " + x.to_string() + " misses an edge";
      }
      if (defect.empty() && tail_to_head(c.tail, p) != x) defect = "tail_to_head does not invert at " + x.to_string();
      if (!defect.empty()) break;
      connectors.push_back(std::move(c));
    }
    report.checks.push_back({"four_cycles", defect.empty(),
                             defect.empty() ? std::to_string(connectors.size()) + " connectors" : defect});
  }

  // (c) connectors at p are pairwise disjoint
  {
    std::set<Vertex> ends;
    for (const Connector& c : connectors) {
      ends.insert(c.head);
      ends.insert(c.tail);
    }
    const bool ok = ends.size() == 2 * connectors.size();
    report.checks.push_back({"connector_disjointness", ok,
                             std::to_string(ends.size()) + " distinct endpoints for " +
                                 std::to_string(connectors.size()) + " connectors"});
  }

  // (d) the auxiliary graph over all connectors at p is connected
  {
    UnionFind uf(cycles.size());
    for (const Connector& c : connectors) uf.unite(cycle_of.at(c.head), cycle_of.at(c.tail));
    report.checks.push_back({"connector_graph_connected", uf.components == 1,
                             std::to_string(uf.components) + " component(s)"});
  }

  // (e) T_p: one head on every cycle except the single-block root, forming a
  // spanning tree
  {
    const std::size_t root = cycle_of.at(Generator::default_start(params));
    std::vector<int> heads_per_cycle(cycles.size(), 0);
    UnionFind uf(cycles.size());
    std::string defect;
    std::uint64_t edges = 0;
    for (const Connector& c : connectors) {
      if (!in_T_p(c.head, p)) continue;
      ++edges;
      const std::size_t a = cycle_of.at(c.head);
      const std::size_t b = cycle_of.at(c.tail);
      ++heads_per_cycle[a];
      if (a == b && defect.empty()) defect = "T_p connector inside one cycle at " + c.head.to_string();
      if (!uf.unite(a, b) && defect.empty()) defect = "T_p closes a cycle at " + c.head.to_string();
    }
    for (std::size_t c = 0; c < cycles.size() && defect.empty(); ++c) {
      const int want = c == root ? 0 : 1;
      if (heads_per_cycle[c] != want) {
        defect = "cycle of " + cycles[c].representative.to_string() + " has " + std::to_string(heads_per_cycle[c]) +
                 " T_p heads, expected " + std::to_string(want);
      }
    }
    if (defect.empty() && (uf.components != 1 || edges + 1 != cycles.size())) {
      defect = std::to_string(edges) + " edges, " + std::to_string(uf.components) + " component(s)";
    }
    report.tree_edges = edges;
    report.checks.push_back({"tp_spanning_tree", defect.empty(),
                             defect.empty() ? std::to_string(edges) + " tree edges" : defect});
  }

  // (f) the generated walk is a Hamilton cycle
  {
    const CycleSource source = options.source ? options.source : [](const Params& pr, Position pos) {
      return run_collect(pr, pos);
    };
    std::string defect;
    try {
      defect = hamilton_defect(vertices, source(params, p));
    } catch (const std::exception& e) {
      defect = std::string("generator failed: ") + e.what();
    }
    report.checks.push_back({"hamilton_cycle", defect.empty(),
                             defect.empty() ? std::to_string(vertices.size()) + " vertices" : defect});
  }

  // (g) tau lowers P strictly along every connector at p
  {
    std::string defect;
    std::uint64_t descents = 0, to_root = 0, form_mismatches = 0;
    for (const Connector& c : connectors) {
      const PushNeighborhood nb = push_neighborhood(c.head, p);
      if (nb.block_count < 2) continue;
      const Vertex t = tau(c.tail, p);
      if (!is_connectable(t, p) || cycle_of.at(t) != cycle_of.at(c.tail)) {
        defect = "tau(" + c.tail.to_string() + ") is not a connectable vertex on the tail's cycle";
        break;
      }
      if (push_neighborhood(t, p).block_count < 2) {
        ++to_root;
        continue;
      }
      const GapBlockSeq before = P_of(c.head, p);
      const GapBlockSeq after = P_of(t, p);
      if (!(after < before)) {
        defect = "P does not descend at " + c.head.to_string() + ": " + before.to_string() + " -> " + after.to_string();
        break;
      }
      ++descents;
      const bool form = nb.gamma_next > 1 ? after[0] == -nb.beta_next && after[1] == nb.gamma_next - 1
                                          : after[0] == -(nb.beta_next + s);
      if (!form) ++form_mismatches;
    }
    if (defect.empty() && form_mismatches > 0) {
      defect = std::to_string(form_mismatches) + " descents with unexpected leading entries";
    }
    report.checks.push_back({"p_descent", defect.empty(),
                             defect.empty() ? std::to_string(descents) + " strict descents, " +
                                                  std::to_string(to_root) + " into the root"
                                            : defect});
  }

  return report;
}

}  // namespace skg
