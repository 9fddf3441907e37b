#include "schubert/grassmann.hpp"

#include <sstream>

#include "schubert/determinant.hpp"
#include "schubert/errors.hpp"
#include "schubert/schur.hpp"

namespace schubert {

GrassmannianDescriptor::GrassmannianDescriptor(int k_, int n_) : k(k_), n(n_) {
  if (k < 0 || n < 0 || k > n)
    throw Error(ErrorKind::InvalidArgument, "Grassmannian needs 0 <= k <= n, got k=" + std::to_string(k) +
                                                " n=" + std::to_string(n));
}

std::string GrassmannianDescriptor::to_string() const {
  return "Gr_" + std::to_string(k) + "(C^" + std::to_string(n) + ")";
}

// GrassmannClass ----------------------------------------------------------------

GrassmannClass GrassmannClass::schubert(GrassmannianDescriptor space, const Partition& lambda, const Integer& coeff) {
  GrassmannClass c(space);
  c.add_term(lambda, coeff);
  return c;
}

Integer GrassmannClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GrassmannClass::add_term(const Partition& lambda, const Integer& coeff) {
  if (!lambda.fits_in_box(space_.k, space_.l()))
    throw Error(ErrorKind::BoxOverflow, lambda.to_string() + " does not fit in the box of " + space_.to_string());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool GrassmannClass::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

GrassmannClass& GrassmannClass::operator+=(const GrassmannClass& other) {
  if (!(space_ == other.space_)) throw Error(ErrorKind::SpaceMismatch, space_.to_string() + " vs " + other.space_.to_string());
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GrassmannClass& GrassmannClass::operator-=(const GrassmannClass& other) {
  if (!(space_ == other.space_)) throw Error(ErrorKind::SpaceMismatch, space_.to_string() + " vs " + other.space_.to_string());
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GrassmannClass& GrassmannClass::operator*=(const Integer& scalar) {
  if (scalar == 0) terms_.clear();
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

GrassmannClass operator*(const GrassmannClass& a, const GrassmannClass& b) { return gr_multiply(a, b); }

std::string GrassmannClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    Integer mag = abs(c);
    if (mag != 1) out << mag.get_str() << '*';
    out << "sigma" << p.to_string();
  }
  return out.str();
}

// Ring operations ----------------------------------------------------------------

GrassmannClass gr_multiply(const GrassmannClass& a, const GrassmannClass& b) {
  if (!(a.space() == b.space()))
    throw Error(ErrorKind::SpaceMismatch, a.space().to_string() + " vs " + b.space().to_string());
  const auto& space = a.space();
  GrassmannClass out(space);
  const ShapeBound bound{space.k, space.l()};
  const int dim = space.complex_dimension();
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      if (la.size() + lb.size() > dim) continue;
      const Integer scale = ca * cb;
      for (const auto& [nu, c] : lr_expand(la, lb, bound)) out.add_term(nu, scale * c);
    }
  }
  return out;
}

GrassmannClass gr_power(const GrassmannClass& a, unsigned exponent) {
  GrassmannClass result = GrassmannClass::one(a.space());
  for (unsigned t = 0; t < exponent; ++t) result = gr_multiply(result, a);
  return result;
}

Integer gr_integrate(const GrassmannClass& a) { return a.coefficient(a.space().box()); }

Partition poincare_dual(const Partition& lambda, const GrassmannianDescriptor& space) {
  const int k = space.k;
  const int l = space.l();
  if (!lambda.fits_in_box(k, l))
    throw Error(ErrorKind::BoxOverflow, lambda.to_string() + " does not fit in the box of " + space.to_string());
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = l - lambda[k - 1 - i];
  return Partition(std::move(parts));
}

GrassmannClass chern_class(Bundle bundle, int i, const GrassmannianDescriptor& space) {
  const int rank = bundle == Bundle::Sub ? space.k : space.l();
  if (i < 0 || i > rank)
    throw Error(ErrorKind::DegreeOutOfRange, "c_" + std::to_string(i) + " of a rank " + std::to_string(rank) + " bundle");
  const Partition lambda = bundle == Bundle::Quot ? Partition{i} : Partition(std::vector<int>(static_cast<std::size_t>(i), 1));
  // On Gr_0 and Gr_n one bundle is trivial and its positive-degree classes vanish.
  if (!lambda.fits_in_box(space.k, space.l())) return GrassmannClass(space);
  return GrassmannClass::schubert(space, lambda, bundle == Bundle::Sub && i % 2 == 1 ? -1 : 1);
}

GrassmannClass giambelli(const Partition& lambda, const GrassmannianDescriptor& space) {
  if (!lambda.fits_in_box(space.k, space.l()))
    throw Error(ErrorKind::BoxOverflow, lambda.to_string() + " does not fit in the box of " + space.to_string());
  const int len = lambda.length();
  std::vector<std::vector<GrassmannClass>> matrix(static_cast<std::size_t>(len),
                                                  std::vector<GrassmannClass>(static_cast<std::size_t>(len), GrassmannClass(space)));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      const int degree = lambda[i] + j - i;
      if (degree >= 0 && degree <= space.l())
        matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = GrassmannClass::schubert(space, Partition{degree});
    }
  return laplace_determinant(matrix, GrassmannClass::zero(space), GrassmannClass::one(space),
                             [](const GrassmannClass& c) { return c.is_zero(); });
}

// Degeneracy loci ------------------------------------------------------------------

int BundleSpec::rank(const GrassmannianDescriptor& space) const noexcept {
  switch (kind) {
    case Kind::Sub: return space.k;
    case Kind::Quot: return space.l();
    case Kind::Trivial: return trivial_rank;
  }
  return 0;
}

namespace {

GrassmannClass total_chern_degree(const BundleSpec& b, int d, const GrassmannianDescriptor& space) {
  if (d == 0) return GrassmannClass::one(space);
  if (b.kind == BundleSpec::Kind::Trivial || d > b.rank(space)) return GrassmannClass::zero(space);
  return chern_class(b.kind == BundleSpec::Kind::Sub ? Bundle::Sub : Bundle::Quot, d, space);
}

}  // namespace

std::vector<GrassmannClass> virtual_chern_classes(const BundleSpec& e, const BundleSpec& f, int max_degree,
                                                  const GrassmannianDescriptor& space) {
  if (max_degree < 0) return {};
  // Segre-type inverse of c(E): s_0 = 1, s_d = -sum_{i=1..d} c_i(E) s_{d-i}.
  std::vector<GrassmannClass> inverse;
  for (int d = 0; d <= max_degree; ++d) {
    if (d == 0) {
      inverse.push_back(GrassmannClass::one(space));
      continue;
    }
    GrassmannClass s(space);
    for (int i = 1; i <= d; ++i) s -= total_chern_degree(e, i, space) * inverse[static_cast<std::size_t>(d - i)];
    inverse.push_back(std::move(s));
  }
  std::vector<GrassmannClass> out;
  for (int d = 0; d <= max_degree; ++d) {
    GrassmannClass c(space);
    for (int i = 0; i <= d; ++i) c += total_chern_degree(f, i, space) * inverse[static_cast<std::size_t>(d - i)];
    out.push_back(std::move(c));
  }
  return out;
}

GrassmannClass thom_porteous(const GrassmannianDescriptor& space, int e, int f, int rho,
                             const std::vector<GrassmannClass>& chern) {
  if (rho < 0 || rho > std::min(e, f))
    throw Error(ErrorKind::InvalidArgument, "rank bound must satisfy 0 <= rho <= min(e, f)");
  const int size = e - rho;
  std::vector<std::vector<GrassmannClass>> matrix(static_cast<std::size_t>(size),
                                                  std::vector<GrassmannClass>(static_cast<std::size_t>(size), GrassmannClass(space)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const int degree = f - rho + j - i;
      if (degree < 0) continue;
      if (degree >= static_cast<int>(chern.size()))
        throw Error(ErrorKind::MissingChernDegree, "c_" + std::to_string(degree) + "(F - E) was not supplied");
      const auto& c = chern[static_cast<std::size_t>(degree)];
      if (!(c.space() == space)) throw Error(ErrorKind::SpaceMismatch, c.space().to_string() + " vs " + space.to_string());
      matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    }
  return laplace_determinant(matrix, GrassmannClass::zero(space), GrassmannClass::one(space),
                             [](const GrassmannClass& c) { return c.is_zero(); });
}

Integer degeneracy_count(const GrassmannianDescriptor& space, int e, int f, int rho, int m) {
  if (e != space.k || f != space.l())
    throw Error(ErrorKind::InvalidArgument, "Hom(S, Q) on " + space.to_string() + " has ranks (" +
                                                std::to_string(space.k) + ", " + std::to_string(space.l()) + ")");
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "number of maps must be nonnegative");
  if (rho < 0 || rho > std::min(e, f))
    throw Error(ErrorKind::InvalidArgument, "rank bound must satisfy 0 <= rho <= min(e, f)");
  const int codim = (e - rho) * (f - rho);
  if (m * codim != space.complex_dimension())
    throw Error(ErrorKind::DimensionMismatch, std::to_string(m) + " loci of codimension " + std::to_string(codim) +
                                                  " do not meet in points of " + space.to_string() + " (dimension " +
                                                  std::to_string(space.complex_dimension()) + ")");
  const int top = f - rho + (e - rho) - 1;
  const auto chern = virtual_chern_classes(BundleSpec::sub(), BundleSpec::quot(), std::max(top, 0), space);
  const GrassmannClass locus = thom_porteous(space, e, f, rho, chern);
  return gr_integrate(gr_power(locus, static_cast<unsigned>(m)));
}

}  // namespace schubert
