#pragma once

#include <string>
#include <vector>

#include "feynman/rational.hpp"

namespace feynman {

/// Admissible MZV index (n_1, ..., n_r): every n_i >= 1 and n_r >= 2.
class MzvIndex {
 public:
  /// Throws std::invalid_argument for an empty or non-admissible index.
  explicit MzvIndex(std::vector<unsigned> indices);

  const std::vector<unsigned>& indices() const { return indices_; }
  unsigned weight() const;
  std::size_t depth() const { return indices_.size(); }

 private:
  std::vector<unsigned> indices_;
};

/// zeta(n_1..n_r) = sign * iterated integral over the letter sequence
/// (1, 0^{n_1-1}, ..., 1, 0^{n_r-1}) of dt/(t - letter).
struct IteratedIntegralWord {
  int sign = 1;
  std::vector<int> letters;
};

/// Numerical value with a bound on its absolute error. `text` holds the
/// value in fixed notation with the requested number of decimals.
struct ZetaValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::string text;
};

/// Largest supported target_digits.
inline constexpr unsigned kMaxZetaDigits = 40;

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);

struct EvenZeta {
  /// zeta(2n) = coefficient * pi^(2n).
  Rational coefficient;
  double value = 0.0;
};

/// Euler's closed form zeta(2n) = -B_{2n}/2 * (2 pi i)^{2n} / (2n)!.
/// Throws std::invalid_argument for n == 0.
EvenZeta euler_even_zeta(unsigned n);

/// Riemann zeta(n), n >= 2, by direct summation plus an Euler-Maclaurin
/// tail. The error bound is the first omitted correction term plus a
/// rounding allowance.
ZetaValue zeta(unsigned n, unsigned target_digits = 15);

/// Multiple zeta value. The iterated integral is split at t = 1/2; both
/// halves are multiple polylogarithms at 1/2, summed with geometric tail
/// bounds.
ZetaValue mzv(const MzvIndex& index, unsigned target_digits = 15);

/// |zeta(m) zeta(n) - zeta(m,n) - zeta(n,m) - zeta(m+n)| < tol.
bool stuffle_check(unsigned m, unsigned n, double tol);

IteratedIntegralWord iterated_integral_word(const MzvIndex& index);

/// Coefficients of P_{3,5} = c1 zeta(3,5) + c2 zeta(3) zeta(5) + c3 zeta(8).
struct P35Coefficients {
  Rational zeta35{-216, 5};
  Rational zeta3_zeta5{-81};
  Rational zeta8{522, 5};
};

struct P35Value {
  ZetaValue p35;
  /// 32 P_{3,5}.
  ZetaValue six_loop_period;
};

P35Value p35(unsigned target_digits = 15);

}  // namespace feynman
