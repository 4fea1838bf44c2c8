#include "feynman/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace feynman {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  // Merge repeated ids and drop zero exponents.
  std::vector<Factor> merged;
  for (const auto& f : factors_) {
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
  factors_ = std::move(merged);
}

Monomial Monomial::variable(EdgeId id, unsigned exponent) { return Monomial({{id, exponent}}); }

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(EdgeId id) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{id, 0});
  return it != factors_.end() && it->first == id ? it->second : 0;
}

unsigned Monomial::degree_in(const EdgeSet& vars) const {
  unsigned d = 0;
  for (const auto& f : factors_) {
    if (std::binary_search(vars.begin(), vars.end(), f.first)) d += f.second;
  }
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& f : factors_) {
    if (other.exponent(f.first) < f.second) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (const auto& [id, e] : a.factors_) {
    const unsigned sub = b.exponent(id);
    if (sub > e) throw std::domain_error("monomial division is not exact");
    if (e > sub) r.factors_.emplace_back(id, e - sub);
  }
  return r;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return i < fa.size() && j == fb.size();
}

SparsePolynomial::SparsePolynomial(Rational constant) {
  if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

SparsePolynomial::SparsePolynomial(const Monomial& m, Rational coefficient) {
  if (coefficient != 0) terms_.emplace(m, std::move(coefficient));
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const SparsePolynomial::TermMap::value_type& SparsePolynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return *terms_.begin();
}

EdgeSet SparsePolynomial::variables() const {
  EdgeSet vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

unsigned SparsePolynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const SparsePolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

SparsePolynomial pow(const SparsePolynomial& p, unsigned n) {
  SparsePolynomial r(1);
  for (unsigned i = 0; i < n; ++i) r *= p;
  return r;
}

SparsePolynomial divide_exact(const SparsePolynomial& p, const SparsePolynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_m, lead_c] = d.leading_term();
  SparsePolynomial remainder = p;
  SparsePolynomial quotient;
  while (!remainder.is_zero()) {
    const auto& [m, c] = remainder.leading_term();
    if (!lead_m.divides(m)) throw std::domain_error("polynomial division is not exact");
    const SparsePolynomial step(m / lead_m, c / lead_c);
    quotient += step;
    remainder -= step * d;
  }
  return quotient;
}

double evaluate(const SparsePolynomial& p, const std::map<EdgeId, double>& point) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double term = to_double(c);
    for (const auto& [id, e] : m.factors()) {
      auto it = point.find(id);
      if (it == point.end()) throw std::out_of_range("no value for variable a" + std::to_string(id));
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

std::optional<unsigned> is_homogeneous(const SparsePolynomial& p) {
  if (p.is_zero()) return 0u;
  const unsigned d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

std::pair<unsigned, unsigned> degree_in_vars(const SparsePolynomial& p, const EdgeSet& vars_in) {
  if (p.is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  EdgeSet vars = vars_in;
  std::sort(vars.begin(), vars.end());
  unsigned lo = ~0u;
  unsigned hi = 0;
  for (const auto& [m, c] : p.terms()) {
    const unsigned d = m.degree_in(vars);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

std::string to_string(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const auto& [id, e] : m.factors()) {
      if (!body.empty()) body += "*";
      body += "a" + std::to_string(id);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += to_string(magnitude) + "*" + body;
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : s_(text) {}

  SparsePolynomial parse() {
    SparsePolynomial result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, sign < 0 ? Rational(-c) : c);
      skip_space();
    }
    return result;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Rational coeff = 1;
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip_space();
      if (at_end()) fail("expected a factor");
      if (peek() == 'a') {
        ++pos_;
        const unsigned id = parse_unsigned();
        if (id == 0) fail("edge ids start at 1");
        unsigned e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          e = parse_unsigned();
        }
        factors.emplace_back(static_cast<EdgeId>(id), e);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '/') {
          ++pos_;
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        try {
          coeff *= parse_rational(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {Monomial(std::move(factors)), coeff};
  }

  unsigned parse_unsigned() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    unsigned v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

CompiledPolynomial::CompiledPolynomial(const SparsePolynomial& p, const EdgeSet& variable_order) {
  offsets_.push_back(0);
  for (const auto& [m, c] : p.terms()) {
    coefficients_.push_back(to_double(c));
    for (const auto& [id, e] : m.factors()) {
      auto it = std::find(variable_order.begin(), variable_order.end(), id);
      if (it == variable_order.end()) throw std::out_of_range("no slot for variable a" + std::to_string(id));
      factors_.emplace_back(static_cast<std::size_t>(it - variable_order.begin()), e);
    }
    offsets_.push_back(factors_.size());
  }
}

double CompiledPolynomial::operator()(std::span<const double> x) const {
  double sum = 0.0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    double term = coefficients_[t];
    for (std::size_t k = offsets_[t]; k < offsets_[t + 1]; ++k) {
      const auto [slot, e] = factors_[k];
      for (unsigned i = 0; i < e; ++i) term *= x[slot];
    }
    sum += term;
  }
  return sum;
}

double CompiledPolynomial::max_term(std::span<const double> x) const {
  double best = 0.0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    double term = std::abs(coefficients_[t]);
    for (std::size_t k = offsets_[t]; k < offsets_[t + 1]; ++k) {
      const auto [slot, e] = factors_[k];
      for (unsigned i = 0; i < e; ++i) term *= x[slot];
    }
    best = std::max(best, term);
  }
  return best;
}

}  // namespace feynman
