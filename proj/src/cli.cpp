#include "mintrans/cli.hpp"

#include <chrono>
#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "mintrans/dualizer.hpp"
#include "mintrans/enumerator.hpp"
#include "mintrans/extension.hpp"
#include "mintrans/hg_format.hpp"
#include "mintrans/oracle.hpp"
#include "mintrans/reductions.hpp"
#include "mintrans/traces.hpp"

namespace mintrans::cli {

namespace {

/// Raised for semantic usage problems CLI11 cannot see.
class UsageError : public Error {
 public:
  using Error::Error;
};

Hypergraph load(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return parse_hg(text);
}

Hypergraph load_over(const std::string& path, const Hypergraph& universe) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return parse_hg(text, universe);
}

void print_family(std::ostream& out, const Hypergraph& h, const Family& family) {
  for (const auto& s : family) out << format_set(h, s) << '\n';
}

struct EnumArgs {
  std::string input;
  std::optional<std::size_t> k;
  std::optional<std::string> auto_k;
  std::optional<std::size_t> conformal;
  std::optional<std::size_t> limit;
  bool verify = false;
  bool force = false;
  unsigned threads = 1;
};

int run_enum(const EnumArgs& args, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load(args.input);
  EnumConfig config;
  config.limit = args.limit;
  config.verify = args.verify;
  config.threads = args.threads;
  config.conformal_k = args.conformal;
  if (args.k) {
    config.k_policy = k_policy::Fixed{*args.k};
  } else if (args.auto_k == "log") {
    config.k_policy = k_policy::AutoLog{};
  } else if (args.auto_k == "vc") {
    if (h.universe_size() > kAutoVcVertexLimit && !args.force) {
      throw UsageError("--auto-k vc is exponential in the number of vertices; refusing " +
                       std::to_string(h.universe_size()) + " > " + std::to_string(kAutoVcVertexLimit) +
                       " vertices without --force");
    }
    config.k_policy = k_policy::AutoVC{};
  } else {
    // default: exact VC-dimension at desk scale, the log bound beyond
    config.k_policy = h.universe_size() <= kAutoVcVertexLimit ? KPolicy{k_policy::AutoVC{}} : KPolicy{k_policy::AutoLog{}};
  }

  const auto started = std::chrono::steady_clock::now();
  const EnumStats stats = enumerate_all(h, config, [&](const VertexSet& t) { out << format_set(h, t) << '\n' << std::flush; });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "count=" << stats.emitted << " steps=" << stats.steps << " k=" << stats.k
      << " truncated=" << (stats.truncated ? "yes" : "no") << " time=" << seconds << "s\n";
  return kExitOk;
}

int run_check(const std::string& h_path, const std::string& g_path, std::size_t k, bool conformal, unsigned threads,
              std::ostream& out, std::ostream& err) {
  const Hypergraph h = sperner_reduce(load(h_path));
  const Hypergraph g = load_over(g_path, h);
  try {
    validate_partial_dual(h, g.edges());
  } catch (const InvalidPartialDual& e) {
    err << "malformed instance: " << format_set(h, g.edge(e.index())) << " is not a minimal transversal of H\n";
    return kExitMalformedInstance;
  }
  if (k == 0 || k > h.universe_size()) throw UsageError(KOutOfRange(k, h.universe_size()).what());

  DualizeOptions options;
  options.mode = conformal ? DualizeMode::Conformal : DualizeMode::General;
  options.threads = threads;
  const Dualizer dualizer(h, k, options);
  const StepResult result = dualizer.step_unchecked(g.edges());
  if (result.is_dual()) {
    out << "DUAL\n";
    return kExitOk;
  }
  out << format_set(h, *result.transversal) << '\n';
  err << "found via " << to_string(result.source);
  if (result.trace) {
    err << " at trace (" << format_set(h, result.trace->part) << " | " << format_set(h, result.trace->support) << ")";
  }
  err << '\n';
  return kExitNotDual;
}

int run_conformality(const std::string& path, std::optional<std::size_t> max, std::ostream& out) {
  const Hypergraph h = load(path);
  const std::size_t value = conformality(h);
  if (max && value > *max) {
    out << '>' << *max << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

int run_extk(const std::string& path, std::size_t k, bool nondominated, std::optional<std::size_t> cap,
             std::ostream& out) {
  const Hypergraph h = load(path);
  if (k == 0 || k > h.universe_size()) throw UsageError(KOutOfRange(k, h.universe_size()).what());
  print_family(out, h, nondominated ? ext_k_nondominated(h, k, cap) : ext_k(h, k, cap).members());
  return kExitOk;
}

int run_gen(const std::string& kind, const std::string& path, std::size_t k, std::ostream& out) {
  const Hypergraph h = load(path);
  try {
    const LiftedHypergraph lift = kind == "hat-up" ? hat_up(h, k) : hat_down(h, k);
    out << serialize_hg(lift.lifted);
  } catch (const KOutOfRange& e) {
    throw UsageError(e.what());
  } catch (const PreconditionViolation& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate minimal transversals of hypergraphs and check hypergraph duality"};
  app.name(args.empty() ? "mintrans" : args.front());
  app.require_subcommand(1);

  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for the trace loop")->check(CLI::Range(1U, 256U));

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enum", "stream the minimal transversals, one per line");
  enum_cmd->add_option("hypergraph", enum_args.input, ".hg file")->required();
  auto* k_opt = enum_cmd->add_option("--k", enum_args.k, "trace width");
  auto* auto_opt = enum_cmd->add_option("--auto-k", enum_args.auto_k, "choose k from the VC-dimension or log2 |H|")
                       ->check(CLI::IsMember({"vc", "log"}));
  auto* conf_opt = enum_cmd->add_option("--conformal", enum_args.conformal, "skip the extension loop, trusting H is K-conformal");
  k_opt->excludes(auto_opt)->excludes(conf_opt);
  auto_opt->excludes(conf_opt);
  enum_cmd->add_option("--limit", enum_args.limit, "stop after N transversals");
  enum_cmd->add_flag("--verify", enum_args.verify, "re-check every output for minimality");
  enum_cmd->add_flag("--force", enum_args.force, "allow --auto-k vc on large universes");

  std::string check_h;
  std::string check_g;
  std::size_t check_k = 0;
  bool check_conformal = false;
  auto* check_cmd = app.add_subcommand("check", "decide whether G = Tr(H)");
  check_cmd->add_option("H", check_h, ".hg file")->required();
  check_cmd->add_option("G", check_g, ".hg file with members of Tr(H)")->required();
  check_cmd->add_option("--k", check_k, "trace width")->required();
  check_cmd->add_flag("--conformal", check_conformal, "skip the extension loop");

  std::string vc_input;
  auto* vc_cmd = app.add_subcommand("vcdim", "print the VC-dimension");
  vc_cmd->add_option("hypergraph", vc_input, ".hg file")->required();

  std::string conf_input;
  std::optional<std::size_t> conf_max;
  auto* conf_cmd = app.add_subcommand("conformality", "print the least k for which H is k-conformal");
  conf_cmd->add_option("hypergraph", conf_input, ".hg file")->required();
  conf_cmd->add_option("--max", conf_max, "print >K instead of values above K");

  std::string ext_input;
  std::size_t ext_k_value = 0;
  bool ext_nondominated = false;
  std::optional<std::size_t> ext_cap;
  auto* ext_cmd = app.add_subcommand("extk", "print the k-extension family");
  ext_cmd->add_option("hypergraph", ext_input, ".hg file")->required();
  ext_cmd->add_option("--k", ext_k_value, "trace width")->required();
  ext_cmd->add_flag("--nondominated", ext_nondominated, "only members inside no edge");
  ext_cmd->add_option("--cap", ext_cap, "abort once the family exceeds this size");

  std::string gen_kind;
  std::string gen_input;
  std::size_t gen_k = 0;
  auto* gen_cmd = app.add_subcommand("gen", "print a lifted hypergraph");
  gen_cmd->add_option("kind", gen_kind, "hat-up or hat-down")->required()->check(CLI::IsMember({"hat-up", "hat-down"}));
  gen_cmd->add_option("hypergraph", gen_input, ".hg file")->required();
  gen_cmd->add_option("--k", gen_k, "lift parameter")->required();

  std::string oracle_kind;
  std::vector<std::string> oracle_inputs;
  std::optional<std::size_t> oracle_k;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations");
  oracle_cmd->add_option("kind", oracle_kind, "enum, dual or extk")->required()->check(CLI::IsMember({"enum", "dual", "extk"}));
  oracle_cmd->add_option("inputs", oracle_inputs, ".hg files")->required();
  oracle_cmd->add_option("--k", oracle_k, "trace width (extk)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enum_cmd) {
      enum_args.threads = threads;
      return run_enum(enum_args, out, err);
    }
    if (*check_cmd) return run_check(check_h, check_g, check_k, check_conformal, threads, out, err);
    if (*vc_cmd) {
      out << vc_dim(load(vc_input)) << '\n';
      return kExitOk;
    }
    if (*conf_cmd) return run_conformality(conf_input, conf_max, out);
    if (*ext_cmd) return run_extk(ext_input, ext_k_value, ext_nondominated, ext_cap, out);
    if (*gen_cmd) return run_gen(gen_kind, gen_input, gen_k, out);
    if (*oracle_cmd) {
      const std::size_t wanted = oracle_kind == "dual" ? 2 : 1;
      if (oracle_inputs.size() != wanted) throw UsageError("oracle " + oracle_kind + " takes " + std::to_string(wanted) + " file(s)");
      const Hypergraph h = load(oracle_inputs.front());
      if (oracle_kind == "enum") {
        print_family(out, h, oracle::brute_tr(h));
        return kExitOk;
      }
      if (oracle_kind == "dual") {
        const bool dual = oracle::brute_is_dual(h, load_over(oracle_inputs.back(), h));
        out << (dual ? "DUAL" : "NOT-DUAL") << '\n';
        return dual ? kExitOk : kExitNotDual;
      }
      if (!oracle_k) throw UsageError("oracle extk needs --k");
      if (*oracle_k == 0 || *oracle_k > h.universe_size()) throw UsageError(KOutOfRange(*oracle_k, h.universe_size()).what());
      print_family(out, h, oracle::brute_ext_k(h, *oracle_k));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const KOutOfRange& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const SizeOverflow& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  }
  return kExitUsage;
}

}  // namespace mintrans::cli
