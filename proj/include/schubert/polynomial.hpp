#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/integer.hpp"

namespace schubert {

/// Exponent vector over x_1, x_2, ...; trailing zeros are always trimmed so
/// the builtin vector comparison is lexicographic order with x_1 > x_2 > ...
using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with exact integer coefficients.  No zero
/// coefficient is ever stored.
class SparsePolynomial {
 public:
  using Terms = std::map<Exponent, Integer>;

  SparsePolynomial() = default;
  SparsePolynomial(long constant);  // NOLINT: integers promote to constants
  SparsePolynomial(const Integer& constant);

  static SparsePolynomial variable(int i);
  static SparsePolynomial monomial(Exponent exponent, const Integer& coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Largest variable index appearing; 0 for constants.
  int variable_count() const noexcept;
  Integer coefficient(const Exponent& exponent) const;

  /// Adds c * x^e in place.
  void add_term(Exponent exponent, const Integer& coeff);

  /// Swaps x_i and x_{i+1}.
  SparsePolynomial swap_variables(int i) const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Integer& scalar);

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(SparsePolynomial a) { return a *= Integer(-1); }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(SparsePolynomial a, const Integer& s) { return a *= s; }
  friend SparsePolynomial operator*(const Integer& s, SparsePolynomial a) { return a *= s; }
  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

SparsePolynomial pow(const SparsePolynomial& p, unsigned e);

/// Normalizes an exponent vector by trimming trailing zeros.
Exponent trim_exponent(Exponent e);

/// Divided difference (p - s_i p) / (x_i - x_{i+1}), computed monomial by
/// monomial with exact quotients.  Throws Error(IndexOutOfRange) for i < 1.
SparsePolynomial divided_difference(int i, const SparsePolynomial& p);

}  // namespace schubert
