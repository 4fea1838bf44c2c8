#include "feynman/galois.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace feynman {
namespace {

Rational power(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

RepMatrix matrix(std::vector<std::vector<Rational>> entries, std::vector<std::string> basis) {
  return RepMatrix{std::move(entries), std::move(basis)};
}

std::string zeta_label(unsigned n) { return "zeta(" + std::to_string(n) + ")"; }

}  // namespace

GaloisElement::GaloisElement(Rational lambda, Rational nu, std::map<unsigned, Rational> sigma, Rational sigma35)
    : lambda_(std::move(lambda)), nu_(std::move(nu)), sigma35_(std::move(sigma35)) {
  if (lambda_ == 0) throw std::invalid_argument("lambda must be nonzero");
  for (auto& [n, s] : sigma) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("sigma is indexed by odd n >= 3");
    if (s != 0) sigma_.emplace(n, std::move(s));
  }
}

Rational GaloisElement::sigma(unsigned n) const {
  auto it = sigma_.find(n);
  return it == sigma_.end() ? Rational(0) : it->second;
}

bool operator==(const GaloisElement& a, const GaloisElement& b) {
  return a.lambda_ == b.lambda_ && a.nu_ == b.nu_ && a.sigma_ == b.sigma_ && a.sigma35_ == b.sigma35_;
}

bool RepMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries[i].size(); ++j) {
      if (entries[i][j] != 0) return false;
    }
  }
  return true;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  const std::size_t n = a.dim();
  RepMatrix r{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))), a.basis};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.entries[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    }
  }
  return r;
}

std::string to_string(const RepMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += i < m.basis.size() ? m.basis[i] : "";
    out += ": [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += to_string(m.entries[i][j]);
    }
    out += "]\n";
  }
  return out;
}

RepMatrix rep_2pi_i(const GaloisElement& g) { return matrix({{g.lambda()}}, {"(2pi i)"}); }

RepMatrix rep_log2(const GaloisElement& g) {
  return matrix({{g.lambda(), 0}, {g.nu(), 1}}, {"log(2)", "1"});
}

RepMatrix rep_zeta_even(const GaloisElement& g, unsigned n) {
  if (n == 0) throw std::invalid_argument("rep_zeta_even requires n >= 1");
  return matrix({{power(g.lambda(), 2 * n)}}, {zeta_label(2 * n)});
}

RepMatrix rep_zeta_odd(const GaloisElement& g, unsigned n) {
  if (n == 0) throw std::invalid_argument("rep_zeta_odd requires n >= 1");
  const unsigned w = 2 * n + 1;
  return matrix({{power(g.lambda(), w), 0}, {g.sigma(w), 1}}, {zeta_label(w), "1"});
}

RepMatrix rep_zeta35(const GaloisElement& g) {
  const Rational l3 = power(g.lambda(), 3);
  return matrix({{power(g.lambda(), 8), 0, 0}, {-5 * l3 * g.sigma(5), l3, 0}, {g.sigma35(), g.sigma(3), 1}},
                {"zeta(3,5)", "zeta(3)", "1"});
}

GaloisElement compose(const GaloisElement& g, const GaloisElement& h) {
  // Read off from M(h) * M(g) in each representation.
  const Rational& lg = g.lambda();
  std::map<unsigned, Rational> sigma;
  for (const auto& [n, s] : g.sigmas()) sigma[n] += s;
  for (const auto& [n, s] : h.sigmas()) sigma[n] += s * power(lg, n);
  const Rational sigma35 = h.sigma35() * power(lg, 8) - 5 * h.sigma(3) * power(lg, 3) * g.sigma(5) + g.sigma35();
  return GaloisElement(h.lambda() * lg, h.nu() * lg + g.nu(), std::move(sigma), sigma35);
}

std::vector<std::string> galois_conjugate_span(std::string_view name) {
  if (name == "2pi_i" || name == "(2pi i)" || name == "2pii") return {"(2pi i)"};
  if (name == "log2" || name == "log(2)") return {"log(2)", "1"};
  if (name == "zeta(3,5)" || name == "zeta35") return {"zeta(3,5)", "zeta(3)", "1"};
  if (name.starts_with("zeta(") && name.ends_with(")")) {
    const std::string_view digits = name.substr(5, name.size() - 6);
    if (!digits.empty() && digits.size() < 6 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const unsigned n = static_cast<unsigned>(std::stoul(std::string(digits)));
      if (n >= 2 && n % 2 == 0) return {zeta_label(n)};
      if (n >= 3) return {zeta_label(n), "1"};
    }
  }
  throw std::invalid_argument("no representation implemented for period '" + std::string(name) + "'");
}

RatioCheck check_ratio_constraint(const Rational& c_zeta3_zeta35, const Rational& c_zeta3_zeta8) {
  if (c_zeta3_zeta8 == 0) throw std::invalid_argument("coefficient of zeta(3) zeta(8) must be nonzero");
  const Rational ratio = c_zeta3_zeta35 / c_zeta3_zeta8;
  RatioCheck r;
  r.expected_ratio = Rational(216, 5) / Rational(522, 5);
  r.observed_ratio = ratio < 0 ? Rational(-ratio) : ratio;
  r.observed_sign = ratio > 0 ? 1 : (ratio < 0 ? -1 : 0);
  r.holds = r.observed_ratio == r.expected_ratio;
  return r;
}

}  // namespace feynman
