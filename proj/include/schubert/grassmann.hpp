#pragma once

// Cohomology ring of the complex Grassmannian Gr_k(C^n) in the Schubert basis.
//
// Sign convention: the Schubert basis is primary.  c_i(Q) = sigma_(i) and
// c_i(S) = (-1)^i sigma_(1^i), where S and Q are the tautological sub- and
// quotient bundles.  A class "2 c_1(S)" in tautological-bundle language is
// therefore -2 sigma_(1) here; even powers (and so all intersection numbers
// of even degree) are unaffected.

#include <map>
#include <string>
#include <vector>

#include "schubert/indexing.hpp"
#include "schubert/integer.hpp"

namespace schubert {

/// Gr_k(C^n).  0 <= k <= n; k = 0 and k = n are the one-point Grassmannians.
struct GrassmannianDescriptor {
  int k = 0;
  int n = 0;

  GrassmannianDescriptor() = default;
  GrassmannianDescriptor(int k_, int n_);

  int l() const noexcept { return n - k; }
  int complex_dimension() const noexcept { return k * (n - k); }
  Partition box() const { return Partition::box(k, n - k); }
  std::string to_string() const;

  friend bool operator==(const GrassmannianDescriptor&, const GrassmannianDescriptor&) = default;
};

class GrassmannClass {
 public:
  using Terms = std::map<Partition, Integer>;

  explicit GrassmannClass(GrassmannianDescriptor space) : space_(space) {}

  static GrassmannClass zero(GrassmannianDescriptor space) { return GrassmannClass(space); }
  static GrassmannClass one(GrassmannianDescriptor space) { return schubert(space, Partition{}); }
  /// sigma_lambda; throws Error(BoxOverflow) when lambda leaves the box.
  static GrassmannClass schubert(GrassmannianDescriptor space, const Partition& lambda, const Integer& coeff = 1);

  const GrassmannianDescriptor& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Partition& lambda) const;
  /// Adds coeff * sigma_lambda; throws Error(BoxOverflow).
  void add_term(const Partition& lambda, const Integer& coeff);
  /// True when every term has the same degree (the zero class included).
  bool is_homogeneous() const noexcept;

  GrassmannClass& operator+=(const GrassmannClass& other);
  GrassmannClass& operator-=(const GrassmannClass& other);
  GrassmannClass& operator*=(const Integer& scalar);

  friend GrassmannClass operator+(GrassmannClass a, const GrassmannClass& b) { return a += b; }
  friend GrassmannClass operator-(GrassmannClass a, const GrassmannClass& b) { return a -= b; }
  friend GrassmannClass operator-(GrassmannClass a) { return a *= Integer(-1); }
  friend GrassmannClass operator*(GrassmannClass a, const Integer& s) { return a *= s; }
  friend GrassmannClass operator*(const Integer& s, GrassmannClass a) { return a *= s; }
  friend GrassmannClass operator*(const GrassmannClass& a, const GrassmannClass& b);
  GrassmannClass& operator*=(const GrassmannClass& other) { return *this = *this * other; }
  friend bool operator==(const GrassmannClass&, const GrassmannClass&) = default;

  std::string to_string() const;

 private:
  GrassmannianDescriptor space_;
  Terms terms_;
};

/// LR product truncated to the k x l box.  Throws Error(SpaceMismatch).
GrassmannClass gr_multiply(const GrassmannClass& a, const GrassmannClass& b);
GrassmannClass gr_power(const GrassmannClass& a, unsigned exponent);

/// Coefficient of the point class sigma_{k x l}.  Only the top-degree part of
/// an inhomogeneous class contributes.
Integer gr_integrate(const GrassmannClass& a);

/// Rotated complement of lambda in the k x l box.
Partition poincare_dual(const Partition& lambda, const GrassmannianDescriptor& space);

enum class Bundle { Sub, Quot };

/// c_i of the tautological sub/quotient bundle.  Throws Error(DegreeOutOfRange)
/// unless 0 <= i <= rank.
GrassmannClass chern_class(Bundle bundle, int i, const GrassmannianDescriptor& space);

/// det(sigma_{lambda_i + j - i}) evaluated in the ring; equals sigma_lambda.
GrassmannClass giambelli(const Partition& lambda, const GrassmannianDescriptor& space);

/// A bundle for degeneracy loci over Gr_k(C^n).
struct BundleSpec {
  enum class Kind { Sub, Quot, Trivial } kind = Kind::Sub;
  int trivial_rank = 0;

  static BundleSpec sub() { return {Kind::Sub, 0}; }
  static BundleSpec quot() { return {Kind::Quot, 0}; }
  static BundleSpec trivial(int rank) { return {Kind::Trivial, rank}; }
  int rank(const GrassmannianDescriptor& space) const noexcept;
};

/// c_0..c_max_degree of the virtual bundle F - E, i.e. c(F) / c(E).
std::vector<GrassmannClass> virtual_chern_classes(const BundleSpec& e, const BundleSpec& f, int max_degree,
                                                  const GrassmannianDescriptor& space);

/// Class of {rank <= rho} for a generic map E -> F of ranks e, f:
/// det(c_{f - rho + j - i}(F - E)) of size (e - rho).  `chern` holds
/// c_0, c_1, ... of F - E; throws Error(MissingChernDegree) when a needed
/// degree is absent and Error(InvalidArgument) unless 0 <= rho <= min(e, f).
GrassmannClass thom_porteous(const GrassmannianDescriptor& space, int e, int f, int rho,
                             const std::vector<GrassmannClass>& chern);

/// Intersection number of m general translates of the Thom-Porteous locus of
/// Hom(S, Q) with e = k, f = l.  Throws Error(DimensionMismatch) unless
/// m (e - rho)(f - rho) equals dim Gr_k(C^n), Error(InvalidArgument) when
/// (e, f) are not the ranks of (S, Q).
Integer degeneracy_count(const GrassmannianDescriptor& space, int e, int f, int rho, int m);

}  // namespace schubert
