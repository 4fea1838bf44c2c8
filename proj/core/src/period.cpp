#include "feynman/period.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "feynman/mzv.hpp"
#include "feynman/symanzik.hpp"

namespace feynman {
namespace {

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
constexpr std::size_t kMaxTropicalEdges = 20;

// Uniform on [0, 1).
double unit_closed_open(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * kTwoPow53Inv; }

// Uniform on (0, 1].
double unit_open_closed(std::mt19937_64& rng) { return static_cast<double>((rng() >> 11) + 1) * kTwoPow53Inv; }

struct Stats {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Stats& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
};

class Integrand {
 public:
  Integrand(const SparsePolynomial& p, const SparsePolynomial& psi, const SparsePolynomial& xi,
            const IntegrandSpec& spec, const EdgeSet& order)
      : numerator_(p, order), psi_(psi, order), a_(spec.psi_power), b_(spec.xi_power) {
    if (b_ != 0) xi_ = CompiledPolynomial(xi, order);
  }

  double operator()(std::span<const double> x) const {
    double v = numerator_(x);
    if (a_ != 0) v /= std::pow(psi_(x), a_);
    if (b_ != 0) v /= std::pow(xi_(x), b_);
    return v;
  }

 private:
  CompiledPolynomial numerator_;
  CompiledPolynomial psi_;
  CompiledPolynomial xi_;
  int a_;
  int b_;
};

// Min over terms of the degree in the variables selected by mask, for every mask.
std::vector<int> min_degrees(const SparsePolynomial& p, const EdgeSet& order) {
  const std::size_t n = order.size();
  std::vector<std::vector<unsigned>> exps;
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = m.exponent(order[i]);
    exps.push_back(std::move(e));
  }
  std::vector<int> out(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < out.size(); ++mask) {
    int best = std::numeric_limits<int>::max();
    for (const auto& e : exps) {
      int d = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) d += static_cast<int>(e[i]);
      }
      best = std::min(best, d);
    }
    out[mask] = best;
  }
  return out;
}

// Sector data of the tropical sampler, indexed by edge subsets.
// omega(d) = |d| + mindeg_d(P) - A mindeg_d(Psi) - B mindeg_d(Xi) is the
// exponent of x_{d} / x_{rest} in the tropical integrand, and
// J(g) = sum_{e in g} J(g - e) / omega(g - e), J({e}) = 1, is its total mass.
struct TropicalTable {
  std::size_t n = 0;
  std::vector<double> omega;
  std::vector<double> j;
};

TropicalTable tropical_table(const SparsePolynomial& p, const SparsePolynomial& psi, const SparsePolynomial& xi,
                             const IntegrandSpec& spec, const EdgeSet& order) {
  TropicalTable t;
  t.n = order.size();
  if (t.n > kMaxTropicalEdges) throw std::invalid_argument("tropical sampler supports at most 20 edges");
  const std::size_t size = std::size_t{1} << t.n;
  const std::vector<int> dp = min_degrees(p, order);
  const std::vector<int> dpsi = min_degrees(psi, order);
  const std::vector<int> dxi = spec.xi_power != 0 ? min_degrees(xi, order) : std::vector<int>(size, 0);
  t.omega.assign(size, 0.0);
  t.j.assign(size, 0.0);
  const std::uint32_t full = static_cast<std::uint32_t>(size - 1);
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const int w = std::popcount(mask) + dp[mask] - spec.psi_power * dpsi[mask] - spec.xi_power * dxi[mask];
    if (mask != full && w <= 0) {
      std::string edges;
      for (std::size_t i = 0; i < t.n; ++i) {
        if (mask >> i & 1U) edges += (edges.empty() ? "" : ",") + std::to_string(order[i]);
      }
      throw std::domain_error("integral diverges on the subgraph {" + edges + "}");
    }
    t.omega[mask] = w;
  }
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    if (std::popcount(mask) == 1) {
      t.j[mask] = 1.0;
      continue;
    }
    double s = 0.0;
    for (std::size_t i = 0; i < t.n; ++i) {
      if (!(mask >> i & 1U)) continue;
      const std::uint32_t rest = mask & ~(1U << i);
      s += t.j[rest] / t.omega[rest];
    }
    t.j[mask] = s;
  }
  return t;
}

struct Context {
  const Integrand* f;
  const TropicalTable* tropical;
  std::size_t n;
  double simplex_volume;
  Sampler sampler;
  Chart chart;
};

Stats run_block(const Context& ctx, std::uint64_t count, std::uint64_t seed, unsigned worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), worker};
  std::mt19937_64 rng(seq);
  std::vector<double> x(ctx.n);
  Stats stats;
  const std::size_t n = ctx.n;

  for (std::uint64_t s = 0; s < count; ++s) {
    double weight = 0.0;
    if (ctx.sampler == Sampler::kTropical) {
      const TropicalTable& t = *ctx.tropical;
      std::uint32_t mask = static_cast<std::uint32_t>((std::size_t{1} << n) - 1);
      double log_kappa = 0.0;
      double log_ratio = 0.0;  // sum over steps of (|d| - omega(d)) log r
      while (std::popcount(mask) > 1) {
        // Largest remaining variable e with probability J(g - e) / (omega(g - e) J(g)).
        double u = unit_closed_open(rng) * t.j[mask];
        std::size_t pick = n;
        std::uint32_t rest = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(mask >> i & 1U)) continue;
          pick = i;
          rest = mask & ~(1U << i);
          u -= t.j[rest] / t.omega[rest];
          if (u < 0) break;
        }
        x[pick] = std::exp(log_kappa);
        const double log_r = std::log(unit_open_closed(rng)) / t.omega[rest];
        log_kappa += log_r;
        log_ratio += (std::popcount(rest) - t.omega[rest]) * log_r;
        mask = rest;
      }
      x[static_cast<std::size_t>(std::countr_zero(mask))] = std::exp(log_kappa);
      weight = t.j.back() * (*ctx.f)(x) * std::exp(log_ratio);
    } else if (ctx.chart == Chart::kSimplex) {
      double sum = 0.0;
      for (double& v : x) {
        v = -std::log(unit_open_closed(rng));
        sum += v;
      }
      for (double& v : x) v /= sum;
      weight = (*ctx.f)(x) * ctx.simplex_volume;
    } else {
      double jacobian = 1.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double u = unit_closed_open(rng);
        const double inv = 1.0 / (1.0 - u);
        x[i] = u * inv;
        jacobian *= inv * inv;
      }
      x[n - 1] = 1.0;
      weight = (*ctx.f)(x) * jacobian;
    }
    stats.add(weight);
  }
  return stats;
}

}  // namespace

PeriodEstimate integrate(const FeynmanGraph& g, const IntegrandSpec& spec, const IntegrationOptions& options) {
  if (options.samples == 0) throw std::invalid_argument("samples must be positive");
  if (options.workers == 0) throw std::invalid_argument("workers must be positive");
  if (g.edges().empty()) throw std::invalid_argument("graph has no edges");
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  const int degree = projective_degree(g, spec);
  if (degree != 0) {
    throw std::invalid_argument("projective degree is " + std::to_string(degree) + ", expected 0");
  }
  const EdgeSet order = g.edge_ids();
  for (EdgeId v : spec.numerator.variables()) {
    if (!g.has_edge(v)) throw std::invalid_argument("numerator uses a" + std::to_string(v) + ", which is not an edge");
  }

  const SparsePolynomial psi_g = psi_determinant(g);
  SparsePolynomial xi_g;
  if (spec.xi_power != 0) {
    xi_g = xi(g);
    if (xi_g.is_zero()) throw GraphError("Xi vanishes identically; the integral is undefined");
    for (const auto& [m, c] : xi_g.terms()) {
      if (c < 0) throw GraphError("Xi has a negative coefficient; only Euclidean kinematics are supported");
    }
  }

  const Integrand f(spec.numerator, psi_g, xi_g, spec, order);
  TropicalTable table;
  if (options.sampler == Sampler::kTropical) table = tropical_table(spec.numerator, psi_g, xi_g, spec, order);

  double volume = 1.0;
  for (std::size_t k = 2; k < order.size(); ++k) volume /= static_cast<double>(k);
  const Context ctx{&f, &table, order.size(), volume, options.sampler, options.chart};

  const unsigned workers = options.workers;
  std::vector<Stats> partial(workers);
  auto block = [&](unsigned w) {
    const std::uint64_t base = options.samples / workers;
    const std::uint64_t count = base + (w < options.samples % workers ? 1 : 0);
    partial[w] = run_block(ctx, count, options.seed, w);
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(block, w);
  }

  Stats total;
  for (const Stats& s : partial) total.merge(s);
  PeriodEstimate est;
  est.value = total.mean;
  est.samples = total.n;
  est.seed = options.seed;
  est.std_error = total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n)) : 0.0;
  if (!std::isfinite(est.value) || !std::isfinite(est.std_error)) {
    throw std::domain_error("integrand is not finite at a sample point");
  }
  return est;
}

double g_minus_2_two_loop() {
  const double z2 = zeta(2).value;
  const double z3 = zeta(3).value;
  return 197.0 / 144.0 + z2 / 2.0 - 3.0 * z2 * std::log(2.0) + 0.75 * z3;
}

}  // namespace feynman
