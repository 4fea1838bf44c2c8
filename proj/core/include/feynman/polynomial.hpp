#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "feynman/graph.hpp"
#include "feynman/rational.hpp"

namespace feynman {

/// Power product of edge variables a_e, stored as (edge id, exponent)
/// pairs sorted by id with no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<EdgeId, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(EdgeId id, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const;
  unsigned exponent(EdgeId id) const;
  /// Sum of exponents restricted to vars (vars sorted).
  unsigned degree_in(const EdgeSet& vars) const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, largest first: higher total degree first,
/// then the larger exponent at the smallest edge id where they differ.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q in the edge variables. Terms are kept in
/// GrlexDescending order with no zero coefficients, so structural equality
/// is polynomial equality.
class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDescending>;

  SparsePolynomial() = default;
  SparsePolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  SparsePolynomial(int constant) : SparsePolynomial(Rational(constant)) {}  // NOLINT
  SparsePolynomial(const Monomial& m, Rational coefficient = 1);

  static SparsePolynomial variable(EdgeId id) { return SparsePolynomial(Monomial::variable(id)); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  /// First term in GrlexDescending order. Requires a nonzero polynomial.
  const TermMap::value_type& leading_term() const;
  /// Sorted ids of all variables that occur.
  EdgeSet variables() const;
  /// Largest total degree (0 for the zero polynomial).
  unsigned total_degree() const;

  SparsePolynomial& operator+=(const SparsePolynomial& rhs);
  SparsePolynomial& operator-=(const SparsePolynomial& rhs);
  SparsePolynomial& operator*=(const SparsePolynomial& rhs);
  SparsePolynomial& operator*=(const Rational& c);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator-(SparsePolynomial a) { return a *= Rational(-1); }
  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

SparsePolynomial pow(const SparsePolynomial& p, unsigned n);

/// Exact quotient p / d. Throws std::domain_error if d does not divide p.
SparsePolynomial divide_exact(const SparsePolynomial& p, const SparsePolynomial& d);

/// Direct sum of coefficient * monomial over the terms in GrlexDescending
/// order. Throws std::out_of_range if a variable has no value.
double evaluate(const SparsePolynomial& p, const std::map<EdgeId, double>& point);

/// Total degree when all terms share it. The zero polynomial reports 0.
std::optional<unsigned> is_homogeneous(const SparsePolynomial& p);

/// (min, max) over terms of the degree restricted to vars. Throws
/// std::domain_error for the zero polynomial.
std::pair<unsigned, unsigned> degree_in_vars(const SparsePolynomial& p, const EdgeSet& vars);

/// Canonical text, e.g. "a1*a3 + 2*a1^2 - 1/3*a2". The zero polynomial is "0".
std::string to_string(const SparsePolynomial& p);

/// Inverse of to_string; also accepts extra whitespace, repeated terms and
/// coefficients written after the variables. Throws std::invalid_argument.
SparsePolynomial parse_polynomial(std::string_view text);

/// Flat floating-point form for fast repeated evaluation. Variables are
/// addressed by their position in the variable list given at construction;
/// terms are summed in the same order as evaluate().
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  CompiledPolynomial(const SparsePolynomial& p, const EdgeSet& variable_order);

  double operator()(std::span<const double> x) const;
  std::size_t num_terms() const { return coefficients_.size(); }

  /// Largest |coefficient| * monomial over all terms (tropical value).
  double max_term(std::span<const double> x) const;

 private:
  std::vector<double> coefficients_;
  std::vector<std::size_t> offsets_;  // into factors_, size num_terms + 1
  std::vector<std::pair<std::size_t, unsigned>> factors_;
};

}  // namespace feynman
