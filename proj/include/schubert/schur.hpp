#pragma once

// Symmetric-function kernel: Schur-basis arithmetic through
// Littlewood-Richardson tableaux, Pieri and Jacobi-Trudi, and a
// semistandard-tableau oracle that never touches the LR code.

#include <map>
#include <optional>
#include <string>

#include "schubert/indexing.hpp"
#include "schubert/integer.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Sparse integer combination of Schur functions, ordered by the canonical
/// partition order.  Zero coefficients are never stored.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, Integer>;

  SchurExpansion() = default;
  static SchurExpansion basis(const Partition& lambda, const Integer& coeff = 1);
  static SchurExpansion one() { return basis(Partition{}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Integer& coeff);

  SchurExpansion& operator+=(const SchurExpansion& other);
  SchurExpansion& operator-=(const SchurExpansion& other);
  SchurExpansion& operator*=(const Integer& scalar);
  SchurExpansion& operator*=(const SchurExpansion& other);

  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
  friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
  friend SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b);
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Optional bound on the outer shapes produced by an LR expansion: shapes
/// with more than `rows` rows or more than `cols` columns are dropped.
struct ShapeBound {
  int rows;
  int cols;
};

/// c_{lambda mu}^nu: the number of LR skew tableaux of shape nu/lambda and
/// content mu (rows weak, columns strict, reverse reading word a lattice word).
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// All nu with c_{lambda mu}^nu != 0 (restricted to `bound` if given).
std::map<Partition, Integer> lr_expand(const Partition& lambda, const Partition& mu,
                                       std::optional<ShapeBound> bound = std::nullopt);

SchurExpansion schur_multiply(const SchurExpansion& a, const SchurExpansion& b);

enum class PieriKind { Row, Column };

/// s_lambda * h_p (Row) or s_lambda * e_p (Column) by direct strip enumeration.
SchurExpansion pieri(const Partition& lambda, int p, PieriKind kind);

/// det(h_{lambda_i + j - i}) expanded in the Schur basis; equals s_lambda.
SchurExpansion jacobi_trudi(const Partition& lambda);

/// s_lambda(x_1..x_n) summed over semistandard tableaux with entries <= n.
SparsePolynomial oracle_schur_polynomial(const Partition& lambda, int n);

/// Kostka number: semistandard tableaux of shape lambda with the given content.
Integer oracle_kostka(const Partition& lambda, const std::vector<int>& content);

}  // namespace schubert
