#pragma once

// Schubert calculus on complete and partial flag manifolds Fl_D(C^n) through
// Schubert polynomials.  Classes of a partial flag manifold are indexed by
// minimal-length coset representatives (equivalently ordered set partitions
// with block sizes D); products are taken in the full flag ring.

#include <map>
#include <string>
#include <vector>

#include "schubert/indexing.hpp"
#include "schubert/integer.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

struct FlagDescriptor {
  std::vector<int> dims;

  FlagDescriptor() = default;
  /// Throws Error(InvalidArgument) unless every block is positive.
  explicit FlagDescriptor(std::vector<int> block_sizes);
  static FlagDescriptor complete(int n) { return FlagDescriptor(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int n() const noexcept;
  int complex_dimension() const noexcept;
  int block_count() const noexcept { return static_cast<int>(dims.size()); }
  /// s_i = d_1 + ... + d_i for i = 1..m.
  std::vector<int> partial_sums() const;
  bool is_complete() const noexcept;
  std::string to_string() const;

  friend bool operator==(const FlagDescriptor&, const FlagDescriptor&) = default;
};

class FlagClass {
 public:
  using Terms = std::map<Permutation, Integer>;

  explicit FlagClass(FlagDescriptor space) : space_(std::move(space)) {}

  static FlagClass zero(const FlagDescriptor& space) { return FlagClass(space); }
  static FlagClass one(const FlagDescriptor& space);
  static FlagClass schubert(const FlagDescriptor& space, const Permutation& w, const Integer& coeff = 1);
  static FlagClass schubert(const FlagDescriptor& space, const OrderedSetPartition& index, const Integer& coeff = 1);

  const FlagDescriptor& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Permutation& w) const;
  /// Throws Error(InvalidArgument) unless w is a minimal coset representative in S_n.
  void add_term(const Permutation& w, const Integer& coeff);

  FlagClass& operator+=(const FlagClass& other);
  FlagClass& operator-=(const FlagClass& other);
  FlagClass& operator*=(const Integer& scalar);

  friend FlagClass operator+(FlagClass a, const FlagClass& b) { return a += b; }
  friend FlagClass operator-(FlagClass a, const FlagClass& b) { return a -= b; }
  friend FlagClass operator*(FlagClass a, const Integer& s) { return a *= s; }
  friend FlagClass operator*(const Integer& s, FlagClass a) { return a *= s; }
  friend FlagClass operator*(const FlagClass& a, const FlagClass& b);
  friend bool operator==(const FlagClass&, const FlagClass&) = default;

  std::string to_string() const;

 private:
  FlagDescriptor space_;
  Terms terms_;
};

struct SchubertPolynomial {
  Permutation w;
  SparsePolynomial polynomial;
};

/// S_w.  Results are cached process-wide; the cache is safe for concurrent
/// readers and writers and only ever publishes fully built entries.
SchubertPolynomial schubert_polynomial(const Permutation& w);

/// S_w computed as d_{b_1} ... d_{b_p} applied to x_1^{n-1} ... x_{n-1}, where
/// (b_1..b_p) must be a reduced word of w^{-1} w_0 in S_n (n = w.size()).
/// Throws Error(InvalidArgument) when the word is not reduced for w^{-1} w_0.
SparsePolynomial schubert_polynomial_from_word(const Permutation& w, const std::vector<int>& word);

/// Expansion sum c_w S_w over w in S_n by triangular elimination: the
/// lex-smallest monomial of S_w (x_1 > x_2 > ...) is x^{code(w)}.
/// Throws Error(SupportOutsideStaircase) when a monomial exceeds (n-1, ..., 1).
std::map<Permutation, Integer> expand_in_schubert_basis(const SparsePolynomial& p, int n);

/// Class of a polynomial in x_1..x_n on Fl_D(C^n): expands in a large enough
/// symmetric group and drops the labels that vanish on Fl_D.
FlagClass polynomial_to_flag_class(const SparsePolynomial& p, const FlagDescriptor& space);

/// Sum c_w S_w as a polynomial.
SparsePolynomial flag_class_polynomial(const FlagClass& a);

FlagClass flag_multiply(const FlagClass& a, const FlagClass& b);
/// Coefficient of the point class (the longest minimal coset representative).
Integer flag_integrate(const FlagClass& a);

/// Monk's rule: sigma_{s_r} * a.  r must be one of the partial sums s_1..s_{m-1}.
FlagClass monk_multiply(int r, const FlagClass& a);

/// c_j of the tautological subbundle S_i of rank s_i, i in 1..m.
/// Throws Error(IndexOutOfRange) or Error(DegreeOutOfRange).
FlagClass flag_chern_class(const FlagDescriptor& space, int bundle, int j);

}  // namespace schubert
