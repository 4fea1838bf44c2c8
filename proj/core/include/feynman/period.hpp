#pragma once

#include <cstdint>

#include "feynman/divergence.hpp"
#include "feynman/graph.hpp"

namespace feynman {

struct PeriodEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

enum class Sampler {
  /// Uniform points on the simplex (or the unit cube of the affine chart).
  kUniform,
  /// Importance sampling from the tropical approximation of the integrand,
  /// sector by sector in the ordering of the variables.
  kTropical,
};

enum class Chart {
  /// alpha on {alpha_e >= 0, sum alpha_e = 1} via normalized exponentials.
  kSimplex,
  /// alpha_last = 1, alpha_i = u_i / (1 - u_i) with u_i uniform on [0, 1).
  kAffine,
};

struct IntegrationOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  Sampler sampler = Sampler::kUniform;
  /// Only used by the uniform sampler.
  Chart chart = Chart::kSimplex;
};

/// Monte Carlo estimate of the projective integral of P / (Psi^A Xi^B)
/// over the positive coordinate simplex.
///
/// Samples are split into contiguous blocks, one per worker; worker w draws
/// from mt19937_64 seeded with (seed, w). Block statistics are merged in
/// worker order, so the value is a pure function of
/// (graph, spec, samples, seed, workers).
///
/// Throws std::invalid_argument for a nonzero projective degree, zero
/// samples or workers, a disconnected graph, or a numerator in variables
/// that are not edges; GraphError when Xi is needed but has a negative
/// coefficient or vanishes; std::domain_error when the tropical sampler
/// finds a subgraph with non-positive convergence degree.
PeriodEstimate integrate(const FeynmanGraph& g, const IntegrandSpec& spec, const IntegrationOptions& options = {});

/// Two-loop QED constant 197/144 + zeta(2)/2 - 3 zeta(2) log 2 + 3/4 zeta(3).
double g_minus_2_two_loop();

}  // namespace feynman
