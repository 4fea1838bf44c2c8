#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "feynman/rational.hpp"

namespace feynman {

/// Rational point of the Galois group, parameterized by the entries of the
/// matrix representations below: lambda, nu, sigma^(2n+1) and sigma^(3,5).
class GaloisElement {
 public:
  GaloisElement() = default;
  /// Throws std::invalid_argument if lambda == 0.
  GaloisElement(Rational lambda, Rational nu, std::map<unsigned, Rational> sigma, Rational sigma35);

  static GaloisElement identity() { return {}; }

  const Rational& lambda() const { return lambda_; }
  const Rational& nu() const { return nu_; }
  /// sigma^(n) for odd n >= 3; zero when not set.
  Rational sigma(unsigned n) const;
  const std::map<unsigned, Rational>& sigmas() const { return sigma_; }
  const Rational& sigma35() const { return sigma35_; }

  friend bool operator==(const GaloisElement& a, const GaloisElement& b);

 private:
  Rational lambda_ = 1;
  Rational nu_ = 0;
  std::map<unsigned, Rational> sigma_;  // no zero entries
  Rational sigma35_ = 0;
};

/// Square matrix acting on row vectors of periods: g(v) = v * M(g).
struct RepMatrix {
  std::vector<std::vector<Rational>> entries;
  std::vector<std::string> basis;

  std::size_t dim() const { return entries.size(); }
  bool is_lower_triangular() const;

  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
};

std::string to_string(const RepMatrix& m);

/// (2 pi i) -> lambda (2 pi i).
RepMatrix rep_2pi_i(const GaloisElement& g);
/// Basis (log 2, 1): [[lambda, 0], [nu, 1]].
RepMatrix rep_log2(const GaloisElement& g);
/// zeta(2n) -> lambda^{2n} zeta(2n). Throws for n == 0.
RepMatrix rep_zeta_even(const GaloisElement& g, unsigned n);
/// Basis (zeta(2n+1), 1): [[lambda^{2n+1}, 0], [sigma^(2n+1), 1]]. Throws for n == 0.
RepMatrix rep_zeta_odd(const GaloisElement& g, unsigned n);
/// Basis (zeta(3,5), zeta(3), 1):
///   [[lambda^8, 0, 0], [-5 lambda^3 sigma^(5), lambda^3, 0], [sigma^(3,5), sigma^(3), 1]].
RepMatrix rep_zeta35(const GaloisElement& g);

/// Group law of the parameters: for every representation R above,
/// R(compose(g, h)) == R(h) * R(g).
GaloisElement compose(const GaloisElement& g, const GaloisElement& h);

/// Basis of the representation generated by a period. Accepted names:
/// "2pi_i", "log2", "zeta(N)" for N >= 2, "zeta(3,5)". Throws
/// std::invalid_argument for anything else.
std::vector<std::string> galois_conjugate_span(std::string_view period_name);

struct RatioCheck {
  bool holds = false;
  /// |c_zeta3_zeta35 / c_zeta3_zeta8|, reduced.
  Rational observed_ratio;
  /// 216/522 = 12/29.
  Rational expected_ratio;
  int observed_sign = 0;
  /// Sign of -(216/5) / (522/5).
  int expected_sign = -1;
};

/// Checks that zeta(3,5) enters only through the combination
/// -216/5 zeta(3,5) + 522/5 zeta(8), i.e. |c1 / c2| == 216/522.
/// Throws std::invalid_argument if c_zeta3_zeta8 == 0.
RatioCheck check_ratio_constraint(const Rational& c_zeta3_zeta35, const Rational& c_zeta3_zeta8);

}  // namespace feynman
