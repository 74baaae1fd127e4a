#include "mintrans/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "mintrans/traces.hpp"

namespace mintrans {

namespace {

#ifdef NDEBUG
constexpr bool kAlwaysVerify = false;
#else
constexpr bool kAlwaysVerify = true;
#endif

std::size_t clamp_k(std::size_t k, std::size_t n) { return std::clamp<std::size_t>(k, 1, std::max<std::size_t>(n, 1)); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::size_t choose_k(const Hypergraph& h, const KPolicy& policy) {
  const std::size_t n = h.universe_size();
  return std::visit(Overloaded{
                        [&](const k_policy::Fixed& fixed) {
                          if (fixed.k == 0 || fixed.k > n) throw KOutOfRange(fixed.k, n);
                          return fixed.k;
                        },
                        [&](const k_policy::AutoVC&) {
                          if (h.empty()) throw PreconditionViolation("choose_k needs at least one edge");
                          return clamp_k(static_cast<std::size_t>(vc_dim(h) + 1), n);
                        },
                        [&](const k_policy::AutoLog&) {
                          if (h.empty()) throw PreconditionViolation("choose_k needs at least one edge");
                          const auto log2m = static_cast<std::size_t>(std::bit_width(h.edge_count()) - 1);
                          return clamp_k(log2m + 1, n);
                        },
                    },
                    policy);
}

EnumStats enumerate_all(const Hypergraph& input, const EnumConfig& config, const EmitFn& emit) {
  using Clock = std::chrono::steady_clock;
  EnumStats stats;
  const Hypergraph h = sperner_reduce(input);
  const std::size_t n = h.universe_size();

  const auto reached_limit = [&] { return config.limit && stats.emitted >= *config.limit; };
  const auto publish = [&](const VertexSet& t) {
    if ((config.verify || kAlwaysVerify) && !is_minimal_transversal(h, t)) {
      throw PreconditionViolation("emitted set failed the minimal-transversal check");
    }
    emit(t);
    ++stats.emitted;
  };

  if (config.limit && *config.limit == 0) {
    stats.truncated = true;
    return stats;
  }
  if (h.has_empty_edge()) return stats;
  if (h.empty()) {
    publish(VertexSet(n));
    return stats;
  }

  DualizeOptions options;
  options.threads = config.threads;
  if (config.conformal_k) {
    options.mode = DualizeMode::Conformal;
    stats.k = choose_k(h, k_policy::Fixed{*config.conformal_k});
  } else {
    stats.k = choose_k(h, config.k_policy);
  }
  const Dualizer dualizer(h, stats.k, options);

  Family found;
  found.push_back(minimalize(h, h.universe()));
  publish(found.back());

  while (!reached_limit()) {
    const auto started = Clock::now();
    StepResult step = dualizer.step_unchecked(found);
    stats.step_seconds.push_back(std::chrono::duration<double>(Clock::now() - started).count());
    ++stats.steps;
    if (step.is_dual()) return stats;
    found.push_back(std::move(*step.transversal));
    publish(found.back());
  }
  stats.truncated = true;
  return stats;
}

Family enumerate_all(const Hypergraph& h, const EnumConfig& config) {
  Family out;
  enumerate_all(h, config, [&](const VertexSet& t) { out.push_back(t); });
  return out;
}

Hypergraph transversal_hypergraph(const Hypergraph& h, const EnumConfig& config) {
  return Hypergraph(h.universe_size(), enumerate_all(h, config), h.labels());
}

}  // namespace mintrans
