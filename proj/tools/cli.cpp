#include "cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skg/error.hpp"
#include "skg/hamilton.hpp"
#include "skg/oracle.hpp"

namespace skg::cli {

namespace {

struct Config {
  int n = 0;
  int k = 0;
  int s = 0;
  Position p = 1;
  std::optional<std::uint64_t> limit;
  std::string format = "bits";
  std::optional<std::string> start;
  std::uint64_t steps = 0;
};

void add_instance_flags(CLI::App* cmd, Config& config) {
  cmd->add_option("--n", config.n, "ground set size")->required();
  cmd->add_option("--k", config.k, "set size")->required();
  cmd->add_option("--s", config.s, "stability (s >= 2)")->required();
  cmd->add_option("--p", config.p, "push position of the connectors")->capture_default_str();
}

void write_vertex(std::ostream& out, std::span<const std::uint8_t> bits, bool as_set, std::string& line) {
  line.clear();
  if (as_set) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (!bits[i]) continue;
      if (!line.empty()) line += ',';
      line += std::to_string(i + 1);
    }
  } else {
    for (auto b : bits) line += b ? '1' : '0';
  }
  line += '\n';
  out << line;
  out.flush();
}

int cmd_gen(const Config& config, std::ostream& out) {
  const Params params(config.n, config.k, config.s);
  std::optional<Vertex> start;
  if (config.start) start = Vertex::from_bits(params, *config.start);
  const bool as_set = config.format == "sets";
  std::string line;
  line.reserve(static_cast<std::size_t>(params.n()) * 2 + 1);
  run(params, config.p, config.limit,
      [&](std::span<const std::uint8_t> bits) { write_vertex(out, bits, as_set, line); }, start);
  return kExitOk;
}

int cmd_verify(const Config& config, std::ostream& out) {
  const Params params(config.n, config.k, config.s);
  const VerificationReport report = verify_instance(params, config.p);
  out << report.to_text();
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_count(const Config& config, std::ostream& out, std::ostream& err) {
  const Params params(config.n, config.k, config.s);
  const auto formula = count_formula(params);
  if (formula <= kDefaultVerifyGuard) {
    const auto enumerated = enumerate_vertices(params).size();
    if (formula != enumerated) {
      err << "count mismatch: formula " << formula << ", enumeration " << enumerated << '\n';
      return kExitFailed;
    }
  }
  out << formula << '\n';
  return kExitOk;
}

int cmd_bench(const Config& config, std::ostream& out) {
  const Params params(config.n, config.k, config.s);
  if (config.steps < 1) throw ParamError("--steps must be at least 1");
  Generator g(params, config.p);
  const auto begin = std::chrono::steady_clock::now();
  std::uint64_t checksum = 0;
  for (std::uint64_t i = 0; i < config.steps; ++i) checksum += g.step()[0];
  const auto end = std::chrono::steady_clock::now();
  const auto total = std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count();
  out << "n " << params.n() << '\n'
      << "steps " << config.steps << '\n'
      << "total_ns " << total << '\n'
      << "mean_ns_per_vertex " << static_cast<double>(total) / static_cast<double>(config.steps) << '\n'
      << "footprint_bytes " << g.footprint_bytes() << '\n'
      << "checksum " << checksum << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton cycles in s-stable Kneser graphs S(n,k,s)", "skg"};
  app.require_subcommand(1);
  Config config;

  auto* gen = app.add_subcommand("gen", "stream the Hamilton cycle, one vertex per line");
  add_instance_flags(gen, config);
  gen->add_option("--limit", config.limit, "stop after this many vertices")->check(CLI::PositiveNumber);
  gen->add_option("--format", config.format, "bits or sets")
      ->check(CLI::IsMember({"bits", "sets"}))
      ->capture_default_str();
  gen->add_option("--start", config.start, "start vertex as a bitstring");

  auto* verify = app.add_subcommand("verify", "brute-force check of the construction");
  add_instance_flags(verify, config);

  auto* count = app.add_subcommand("count", "number of vertices");
  add_instance_flags(count, config);

  auto* bench = app.add_subcommand("bench", "time the generator");
  add_instance_flags(bench, config);
  bench->add_option("--steps", config.steps, "vertices to generate")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(config, out);
    if (*verify) return cmd_verify(config, out);
    if (*count) return cmd_count(config, out, err);
    if (*bench) return cmd_bench(config, out);
  } catch (const ParamError& e) {
    err << "parameter error: " << e.what() << '\n';
  } catch (const VertexError& e) {
    err << "invalid vertex: " << e.what() << '\n';
  } catch (const GuardError& e) {
    err << "instance too large: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace skg::cli
