#pragma once

// The degree-halving correspondence kappa between real even / quaternionic /
// octonionic Schubert calculus and complex Schubert calculus.
//
//   real even  Fl_{2D}(R^{2n}):  kappa[sigma_{DI}] = 2^{|I|} [sigma_I]  on Fl_D(C^n)
//   quaternionic Fl_D(H^n):      kappa[sigma_I]    = 2^{|I|} [sigma_I]  on Fl_D(C^n)
//   octonionic Fl(O^3):          kappa[sigma_w]    =         [sigma_w]  on Fl(H^3)
//
// kappa is a ring isomorphism, so structure constants in the doubled basis
// are the complex Littlewood-Richardson coefficients.  Orientations of the
// real classes are fixed so that every multiplicity above is positive.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "schubert/flag.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/indexing.hpp"
#include "schubert/integer.hpp"

namespace schubert {

enum class HalvingKind { RealEven, Quaternionic, Octonionic };

std::string_view to_string(HalvingKind kind) noexcept;

/// The complex fixed-point space of a halving space (for the octonionic flag
/// manifold this is the fixed point set of the composite Fl(O) -> Fl(H^3) -> Fl(C^3)).
using FixedPointSpace = std::variant<GrassmannianDescriptor, FlagDescriptor>;

struct HalvingSpaceDescriptor {
  HalvingKind kind = HalvingKind::RealEven;
  FixedPointSpace fixed_point;

  /// Gr_{real_k}(R^{real_n}); both must be even (Error(NotADouble) otherwise).
  static HalvingSpaceDescriptor real_even_grassmannian(int real_k, int real_n);
  /// Fl_{real_dims}(R^N); every entry must be even.
  static HalvingSpaceDescriptor real_even_flag(const std::vector<int>& real_dims);
  static HalvingSpaceDescriptor quaternionic_grassmannian(int k, int n);
  static HalvingSpaceDescriptor quaternionic_flag(const std::vector<int>& dims);
  /// Fl(O^3), the only octonionic flag manifold with three steps.
  static HalvingSpaceDescriptor octonionic_flag();

  bool is_grassmannian() const noexcept { return std::holds_alternative<GrassmannianDescriptor>(fixed_point); }
  /// Block sizes D of the complex fixed-point space.
  std::vector<int> fixed_block_sizes() const;
  /// Block sizes of the index OSPs: 2D for real even spaces, D otherwise.
  std::vector<int> index_block_sizes() const;
  /// Complex dimension of the complex fixed-point space.
  int fixed_dimension() const noexcept;
  /// Real dimension of the halving space itself.
  int real_dimension() const noexcept;
  std::string to_string() const;

  friend bool operator==(const HalvingSpaceDescriptor&, const HalvingSpaceDescriptor&) = default;
};

/// Rational combination of Schubert classes of a halving space, indexed by
/// ordered set partitions (doubled ones for real even spaces).
class HalvingClass {
 public:
  using Terms = std::map<OrderedSetPartition, Rational>;

  explicit HalvingClass(HalvingSpaceDescriptor space) : space_(std::move(space)) {}

  static HalvingClass one(const HalvingSpaceDescriptor& space);
  static HalvingClass schubert(const HalvingSpaceDescriptor& space, const OrderedSetPartition& index,
                               const Rational& coeff = 1);

  const HalvingSpaceDescriptor& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const OrderedSetPartition& index) const;
  /// Throws Error(NotADoubleIndex) for undoubled indices on real even spaces,
  /// Error(InvalidArgument) for indices with the wrong block sizes.
  void add_term(const OrderedSetPartition& index, const Rational& coeff);

  HalvingClass& operator+=(const HalvingClass& other);
  HalvingClass& operator-=(const HalvingClass& other);
  HalvingClass& operator*=(const Rational& scalar);

  friend HalvingClass operator+(HalvingClass a, const HalvingClass& b) { return a += b; }
  friend HalvingClass operator-(HalvingClass a, const HalvingClass& b) { return a -= b; }
  friend HalvingClass operator*(HalvingClass a, const Rational& s) { return a *= s; }
  friend HalvingClass operator*(const HalvingClass& a, const HalvingClass& b);
  friend bool operator==(const HalvingClass&, const HalvingClass&) = default;

  std::string to_string() const;

 private:
  HalvingSpaceDescriptor space_;
  Terms terms_;
};

using ComplexClass = std::variant<GrassmannClass, FlagClass>;
using KappaImage = std::variant<GrassmannClass, FlagClass, HalvingClass>;

ComplexClass complex_one(const FixedPointSpace& space);
/// Basis class of the fixed-point space indexed by an OSP with block sizes D.
ComplexClass complex_schubert(const FixedPointSpace& space, const OrderedSetPartition& index, const Integer& coeff = 1);
ComplexClass complex_multiply(const ComplexClass& a, const ComplexClass& b);
Integer complex_integrate(const ComplexClass& a);
/// Terms of a complex class re-indexed by OSPs with block sizes D.
std::map<OrderedSetPartition, Integer> complex_terms(const ComplexClass& a);
bool operator==(const ComplexClass& a, const ComplexClass& b);
std::string to_string(const ComplexClass& a);

/// kappa.  Real even and quaternionic classes map to the complex fixed-point
/// ring; octonionic classes map to the quaternionic Fl(H^3).  Throws
/// Error(NonIntegral) when an image coefficient is not an integer.
KappaImage kappa(const HalvingClass& a);
/// kappa followed, for octonionic classes, by the quaternionic kappa.
ComplexClass kappa_to_complex(const HalvingClass& a);
/// Inverse of kappa_to_complex onto the given halving space.
HalvingClass kappa_inverse(const ComplexClass& a, const HalvingSpaceDescriptor& space);

/// Pontryagin class p_j(S_i) of a real even or quaternionic space in its
/// Schubert basis: the same coefficients as c_j(S_i) over the complex
/// fixed-point space, re-indexed on the halving side.
HalvingClass pontryagin_class(const HalvingSpaceDescriptor& space, int bundle, int j);

enum class CharacteristicKind { Pontryagin };

/// kappa(p_j(S_i)) = 2^j c_j(S_i^C), expanded in the complex Schubert basis.
ComplexClass kappa_char_class(CharacteristicKind kind, int j, int bundle, const HalvingSpaceDescriptor& space);

/// Product in the doubled basis of a real even space; structure constants are
/// the complex LR coefficients.  Throws Error(SpaceMismatch), or
/// Error(InvalidArgument) for spaces that are not real even.
HalvingClass real_double_multiply(const HalvingClass& a, const HalvingClass& b);
/// The same product rule for any halving kind.
HalvingClass halving_multiply(const HalvingClass& a, const HalvingClass& b);

// Problems ---------------------------------------------------------------------------

using SpaceDescriptor = std::variant<GrassmannianDescriptor, FlagDescriptor, HalvingSpaceDescriptor>;

std::string to_string(const SpaceDescriptor& space);

struct Condition {
  OrderedSetPartition index;
  int count = 1;
};

enum class SolveMode { Count, Class, LowerBound };

struct SchubertProblem {
  SpaceDescriptor space;
  std::vector<Condition> conditions;
  SolveMode mode = SolveMode::Count;
};

/// Intersection number of the conditions on a complex Grassmannian or flag
/// manifold.  Throws Error(DimensionMismatch) unless the codimensions add up to
/// the dimension.
Integer complex_intersection_number(const FixedPointSpace& space, const std::vector<Condition>& conditions);

/// The complex problem obtained by halving every condition of a real even
/// problem (Error(NotADoubleIndex) otherwise) or by reading a quaternionic or
/// octonionic problem over its complex fixed-point space.
SchubertProblem halved_problem(const SchubertProblem& problem);

/// Certified lower bound |signed real count| for a double Schubert problem on a
/// real even space.  Since kappa sends the real point class to 2^{dim} times
/// the complex point class and every condition sigma_{DI} to 2^{|I|} sigma_I,
/// the powers of two cancel when the codimensions add up, and the signed real
/// count equals the complex intersection number of the halved problem.
Integer real_lower_bound(const SchubertProblem& problem);

/// Exact generic solution count of a quaternionic Schubert problem: the
/// complex intersection number of the same indices on Fl_D(C^n).
Integer quaternionic_count(const SchubertProblem& problem);

/// Lower bound for the number of W in Gr_{2k}(R^{2n}) on which m generic maps
/// have corank >= e - rho: the halved Thom-Porteous count on Gr_k(C^n).
/// e, f, rho are the real ranks (all even; Error(NotADouble) otherwise).
Integer real_degeneracy_lower_bound(const HalvingSpaceDescriptor& space, int e, int f, int rho, int m);

}  // namespace schubert
