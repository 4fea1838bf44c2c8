#include "feynman/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace feynman {
namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

// Allowance for accumulated rounding in 50-digit arithmetic.
const Real kRoundingAllowance("1e-44");

Real to_real(const Rational& r) {
  return Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r));
}

void check_digits(unsigned digits) {
  if (digits > kMaxZetaDigits) {
    throw std::invalid_argument("target_digits must be at most " + std::to_string(kMaxZetaDigits));
  }
}

Real target_error(unsigned digits) { return pow(Real(10), -static_cast<int>(digits)) / 10; }

std::string fixed(const Real& v, unsigned digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(static_cast<std::streamsize>(digits));
  os << v;
  return os.str();
}

ZetaValue make_value(const Real& v, const Real& err, unsigned digits) {
  return ZetaValue{v.convert_to<double>(), err.convert_to<double>(), fixed(v, digits)};
}

struct RealValue {
  Real value;
  Real error;
};

RealValue zeta_real(unsigned s, unsigned digits) {
  if (s < 2) throw std::invalid_argument("zeta(n) requires n >= 2");
  const Real target = target_error(digits);
  const unsigned cutoff = 2 * digits + 10;
  const Real big_k(cutoff);

  Real sum = 0;
  for (unsigned k = 1; k < cutoff; ++k) sum += pow(Real(k), -static_cast<int>(s));
  sum += pow(big_k, 1 - static_cast<int>(s)) / (s - 1);
  sum += pow(big_k, -static_cast<int>(s)) / 2;

  // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * K^{1-s-2j}
  Real rising = s;  // (s)_{2j-1}
  Real factorial = 2;
  Real power = pow(big_k, -static_cast<int>(s) - 1);
  for (unsigned j = 1;; ++j) {
    const Real term = to_real(bernoulli(2 * j)) / factorial * rising * power;
    // Next term, used as the remainder bound if we stop here.
    const Real next_rising = rising * (s + 2 * j - 1) * (s + 2 * j);
    const Real next_factorial = factorial * (2 * j + 1) * (2 * j + 2);
    const Real next_power = power / (big_k * big_k);
    const Real next = abs(to_real(bernoulli(2 * j + 2)) / next_factorial * next_rising * next_power);
    sum += term;
    if (next < target || j > 2 * cutoff) return {sum, next + kRoundingAllowance};
    rising = next_rising;
    factorial = next_factorial;
    power = next_power;
  }
}

// Letters of the iterated integral, smallest integration variable first.
std::vector<int> word_of(const std::vector<unsigned>& indices) {
  std::vector<int> w;
  for (unsigned n : indices) {
    w.push_back(1);
    w.insert(w.end(), n - 1, 0);
  }
  return w;
}

// Multiple polylogarithm at 1/2 for a word starting with letter 1:
// sum_{0<k_1<...<k_r} 2^{-k_r} / prod k_i^{n_i}.
RealValue polylog_half(const std::vector<int>& word, const Real& target) {
  if (word.empty()) return {Real(1), Real(0)};
  std::vector<unsigned> n;
  for (int letter : word) {
    if (letter == 1) {
      n.push_back(1);
    } else {
      ++n.back();
    }
  }
  const std::size_t r = n.size();

  // Tail for k > K is at most b_{K+1} / (1 - q), b_k = 2^{-k} (1 + ln k)^{r-1},
  // with q = (1/2)(1 + 1/(K+1))^{r-1} bounding b_{k+1}/b_k.
  auto tail_bound = [r](unsigned cutoff) {
    const Real k = cutoff + 1;
    const Real b = pow(Real(2), -static_cast<int>(cutoff + 1)) * pow(1 + log(k), static_cast<int>(r - 1));
    const Real q = pow(1 + 1 / k, static_cast<int>(r - 1)) / 2;
    return b / (1 - q);
  };
  unsigned cutoff = static_cast<unsigned>(2 * r + 10);
  while (tail_bound(cutoff) > target) cutoff += 8;

  std::vector<Real> inner(r, Real(0));
  inner[0] = 1;
  Real sum = 0;
  Real half_power = 1;
  for (unsigned k = 1; k <= cutoff; ++k) {
    half_power /= 2;
    const Real inv_k = Real(1) / k;
    sum += inner[r - 1] * pow(inv_k, static_cast<int>(n[r - 1])) * half_power;
    for (std::size_t i = r - 1; i >= 1; --i) inner[i] += inner[i - 1] * pow(inv_k, static_cast<int>(n[i - 1]));
  }
  return {sum, tail_bound(cutoff) + kRoundingAllowance};
}

RealValue mzv_real(const MzvIndex& index, unsigned digits) {
  const std::vector<int> word = word_of(index.indices());
  const std::size_t w = word.size();
  const Real target = target_error(digits) / (4 * (w + 1));

  Real value = 0;
  Real error = 0;
  for (std::size_t j = 0; j <= w; ++j) {
    const std::vector<int> prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(j));
    // t -> 1 - t maps the upper half onto (0, 1/2), reversing the order and
    // swapping the letters.
    std::vector<int> dual(word.rbegin(), word.rbegin() + static_cast<std::ptrdiff_t>(w - j));
    for (int& letter : dual) letter = 1 - letter;
    const RealValue a = polylog_half(prefix, target);
    const RealValue b = polylog_half(dual, target);
    value += a.value * b.value;
    error += a.error * abs(b.value) + b.error * abs(a.value) + a.error * b.error;
  }
  return {value, error + kRoundingAllowance};
}

}  // namespace

MzvIndex::MzvIndex(std::vector<unsigned> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("MZV index must be nonempty");
  for (unsigned n : indices_) {
    if (n == 0) throw std::invalid_argument("MZV indices must be positive");
  }
  if (indices_.back() < 2) throw std::invalid_argument("MZV index is not admissible: last entry must be >= 2");
}

unsigned MzvIndex::weight() const {
  unsigned w = 0;
  for (unsigned n : indices_) w += n;
  return w;
}

Rational bernoulli(unsigned n) {
  // Akiyama-Tanigawa; the table is built once, up to the largest n seen.
  static std::mutex mutex;
  static std::vector<Rational> table;
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    const unsigned target = static_cast<unsigned>(table.size());
    std::vector<Rational> a(target + 1);
    for (unsigned m = 0; m <= target; ++m) {
      a[m] = Rational(1, m + 1);
      for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    }
    table.push_back(a[0]);
  }
  if (n == 1) return Rational(-1, 2);  // the recursion yields +1/2
  return table[n];
}

EvenZeta euler_even_zeta(unsigned n) {
  if (n == 0) throw std::invalid_argument("euler_even_zeta requires n >= 1");
  // (2 i)^{2n} = (-1)^n 4^n
  BigInt factorial = 1;
  for (unsigned k = 2; k <= 2 * n; ++k) factorial *= k;
  BigInt four_n = 1;
  for (unsigned k = 0; k < n; ++k) four_n *= 4;
  Rational c = -bernoulli(2 * n) / 2 * Rational(four_n) / Rational(factorial);
  if (n % 2 == 1) c = -c;
  const Real pi = boost::math::constants::pi<Real>();
  return EvenZeta{c, (to_real(c) * pow(pi, static_cast<int>(2 * n))).convert_to<double>()};
}

ZetaValue zeta(unsigned n, unsigned target_digits) {
  check_digits(target_digits);
  const RealValue v = zeta_real(n, target_digits);
  return make_value(v.value, v.error, target_digits);
}

ZetaValue mzv(const MzvIndex& index, unsigned target_digits) {
  check_digits(target_digits);
  const RealValue v = mzv_real(index, target_digits);
  return make_value(v.value, v.error, target_digits);
}

bool stuffle_check(unsigned m, unsigned n, double tol) {
  if (m < 2 || n < 2) throw std::invalid_argument("stuffle_check requires m, n >= 2");
  constexpr unsigned kDigits = 30;
  const Real lhs = zeta_real(m, kDigits).value * zeta_real(n, kDigits).value;
  const Real rhs = mzv_real(MzvIndex({m, n}), kDigits).value + mzv_real(MzvIndex({n, m}), kDigits).value +
                   zeta_real(m + n, kDigits).value;
  return abs(lhs - rhs) < tol;
}

IteratedIntegralWord iterated_integral_word(const MzvIndex& index) {
  return IteratedIntegralWord{index.depth() % 2 == 0 ? 1 : -1, word_of(index.indices())};
}

P35Value p35(unsigned target_digits) {
  check_digits(target_digits);
  const unsigned work = std::min(kMaxZetaDigits, target_digits + 3);
  const P35Coefficients c;
  const RealValue z35 = mzv_real(MzvIndex({3, 5}), work);
  const RealValue z3 = zeta_real(3, work);
  const RealValue z5 = zeta_real(5, work);
  const RealValue z8 = zeta_real(8, work);
  const Real value = to_real(c.zeta35) * z35.value + to_real(c.zeta3_zeta5) * z3.value * z5.value +
                     to_real(c.zeta8) * z8.value;
  const Real error = abs(to_real(c.zeta35)) * z35.error +
                     abs(to_real(c.zeta3_zeta5)) * (z3.error * z5.value + z5.error * z3.value + z3.error * z5.error) +
                     abs(to_real(c.zeta8)) * z8.error;
  return P35Value{make_value(value, error, target_digits), make_value(32 * value, 32 * error, target_digits)};
}

}  // namespace feynman
