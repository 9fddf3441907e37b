#include "schubert/halving.hpp"

#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<int> grassmann_blocks(const GrassmannianDescriptor& g) { return {g.k, g.l()}; }

std::vector<int> fixed_blocks(const FixedPointSpace& space) {
  return std::visit(Overloaded{[](const GrassmannianDescriptor& g) { return grassmann_blocks(g); },
                               [](const FlagDescriptor& f) { return f.dims; }},
                    space);
}

int fixed_dim(const FixedPointSpace& space) {
  return std::visit([](const auto& s) { return s.complex_dimension(); }, space);
}

std::vector<int> halve_dims(const std::vector<int>& real_dims) {
  std::vector<int> out;
  out.reserve(real_dims.size());
  for (int d : real_dims) {
    if (d < 0 || d % 2 != 0)
      throw Error(ErrorKind::NotADouble, "real dimension " + std::to_string(d) + " is not even");
    out.push_back(d / 2);
  }
  return out;
}

// Index on the complex fixed-point side of a halving index.
OrderedSetPartition to_fixed_index(const HalvingSpaceDescriptor& space, const OrderedSetPartition& index) {
  if (space.kind == HalvingKind::RealEven) {
    if (!is_double(index))
      throw Error(ErrorKind::NotADoubleIndex, index.to_string() + " is not a doubled index");
    return osp_halve(index);
  }
  return index;
}

OrderedSetPartition from_fixed_index(const HalvingSpaceDescriptor& space, const OrderedSetPartition& index) {
  return space.kind == HalvingKind::RealEven ? osp_double(index) : index;
}

Integer integral_or_throw(const Rational& q) {
  if (q.get_den() != 1) throw Error(ErrorKind::NonIntegral, "kappa image coefficient " + q.get_str() + " is not an integer");
  return q.get_num();
}

HalvingSpaceDescriptor quaternionic_of(const FixedPointSpace& fixed) {
  return HalvingSpaceDescriptor{HalvingKind::Quaternionic, fixed};
}

}  // namespace

std::string_view to_string(HalvingKind kind) noexcept {
  switch (kind) {
    case HalvingKind::RealEven: return "real_even";
    case HalvingKind::Quaternionic: return "quaternionic";
    case HalvingKind::Octonionic: return "octonionic";
  }
  return "unknown";
}

// HalvingSpaceDescriptor ---------------------------------------------------------------

HalvingSpaceDescriptor HalvingSpaceDescriptor::real_even_grassmannian(int real_k, int real_n) {
  auto dims = halve_dims({real_k, real_n});
  return {HalvingKind::RealEven, GrassmannianDescriptor(dims[0], dims[1])};
}

HalvingSpaceDescriptor HalvingSpaceDescriptor::real_even_flag(const std::vector<int>& real_dims) {
  return {HalvingKind::RealEven, FlagDescriptor(halve_dims(real_dims))};
}

HalvingSpaceDescriptor HalvingSpaceDescriptor::quaternionic_grassmannian(int k, int n) {
  return {HalvingKind::Quaternionic, GrassmannianDescriptor(k, n)};
}

HalvingSpaceDescriptor HalvingSpaceDescriptor::quaternionic_flag(const std::vector<int>& dims) {
  return {HalvingKind::Quaternionic, FlagDescriptor(dims)};
}

HalvingSpaceDescriptor HalvingSpaceDescriptor::octonionic_flag() {
  return {HalvingKind::Octonionic, FlagDescriptor::complete(3)};
}

std::vector<int> HalvingSpaceDescriptor::fixed_block_sizes() const { return fixed_blocks(fixed_point); }

std::vector<int> HalvingSpaceDescriptor::index_block_sizes() const {
  auto sizes = fixed_block_sizes();
  if (kind == HalvingKind::RealEven)
    for (int& d : sizes) d *= 2;
  return sizes;
}

int HalvingSpaceDescriptor::fixed_dimension() const noexcept { return fixed_dim(fixed_point); }

int HalvingSpaceDescriptor::real_dimension() const noexcept {
  return (kind == HalvingKind::Octonionic ? 8 : 4) * fixed_dimension();
}

std::string HalvingSpaceDescriptor::to_string() const {
  if (kind == HalvingKind::Octonionic) return "Fl(O^3)";
  const auto sizes = index_block_sizes();
  const char* field = kind == HalvingKind::RealEven ? "R" : "H";
  int total = 0;
  for (int d : sizes) total += d;
  std::ostringstream out;
  if (is_grassmannian()) {
    out << "Gr_" << sizes[0];
  } else {
    out << "Fl_(";
    for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
    out << ")";
  }
  out << "(" << field << "^" << total << ")";
  return out.str();
}

// HalvingClass -------------------------------------------------------------------------

HalvingClass HalvingClass::one(const HalvingSpaceDescriptor& space) {
  return schubert(space, OrderedSetPartition::identity(space.index_block_sizes()));
}

HalvingClass HalvingClass::schubert(const HalvingSpaceDescriptor& space, const OrderedSetPartition& index,
                                    const Rational& coeff) {
  HalvingClass c(space);
  c.add_term(index, coeff);
  return c;
}

Rational HalvingClass::coefficient(const OrderedSetPartition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HalvingClass::add_term(const OrderedSetPartition& index, const Rational& coeff) {
  if (index.block_sizes() != space_.index_block_sizes())
    throw Error(ErrorKind::InvalidArgument, index.to_string() + " does not index a class on " + space_.to_string());
  if (space_.kind == HalvingKind::RealEven && !is_double(index))
    throw Error(ErrorKind::NotADoubleIndex, index.to_string() + " is not a doubled index");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

HalvingClass& HalvingClass::operator+=(const HalvingClass& other) {
  if (!(space_ == other.space_)) throw Error(ErrorKind::SpaceMismatch, "adding classes on different spaces");
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

HalvingClass& HalvingClass::operator-=(const HalvingClass& other) {
  if (!(space_ == other.space_)) throw Error(ErrorKind::SpaceMismatch, "subtracting classes on different spaces");
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

HalvingClass& HalvingClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= scalar;
  return *this;
}

HalvingClass operator*(const HalvingClass& a, const HalvingClass& b) { return halving_multiply(a, b); }

std::string HalvingClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [index, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*s" << index.to_string();
  }
  return out.str();
}

// Complex classes ---------------------------------------------------------------------

ComplexClass complex_one(const FixedPointSpace& space) {
  return std::visit(Overloaded{[](const GrassmannianDescriptor& g) -> ComplexClass { return GrassmannClass::one(g); },
                               [](const FlagDescriptor& f) -> ComplexClass { return FlagClass::one(f); }},
                    space);
}

ComplexClass complex_schubert(const FixedPointSpace& space, const OrderedSetPartition& index, const Integer& coeff) {
  if (index.block_sizes() != fixed_blocks(space))
    throw Error(ErrorKind::InvalidArgument, index.to_string() + " has the wrong block sizes");
  return std::visit(
      Overloaded{[&](const GrassmannianDescriptor& g) -> ComplexClass {
                   return GrassmannClass::schubert(g, osp_to_partition(index), coeff);
                 },
                 [&](const FlagDescriptor& f) -> ComplexClass { return FlagClass::schubert(f, index, coeff); }},
      space);
}

ComplexClass complex_multiply(const ComplexClass& a, const ComplexClass& b) {
  if (a.index() != b.index()) throw Error(ErrorKind::SpaceMismatch, "multiplying classes on different spaces");
  if (a.index() == 0) return gr_multiply(std::get<GrassmannClass>(a), std::get<GrassmannClass>(b));
  return flag_multiply(std::get<FlagClass>(a), std::get<FlagClass>(b));
}

Integer complex_integrate(const ComplexClass& a) {
  return std::visit(Overloaded{[](const GrassmannClass& g) { return gr_integrate(g); },
                               [](const FlagClass& f) { return flag_integrate(f); }},
                    a);
}

std::map<OrderedSetPartition, Integer> complex_terms(const ComplexClass& a) {
  std::map<OrderedSetPartition, Integer> out;
  std::visit(Overloaded{[&](const GrassmannClass& g) {
                          for (const auto& [lambda, c] : g.terms())
                            out.emplace(partition_to_osp(lambda, g.space().k, g.space().l()), c);
                        },
                        [&](const FlagClass& f) {
                          for (const auto& [w, c] : f.terms()) out.emplace(permutation_to_osp(w, f.space().dims), c);
                        }},
             a);
  return out;
}

bool operator==(const ComplexClass& a, const ComplexClass& b) {
  if (a.index() != b.index()) return false;
  if (a.index() == 0) return std::get<GrassmannClass>(a) == std::get<GrassmannClass>(b);
  return std::get<FlagClass>(a) == std::get<FlagClass>(b);
}

std::string to_string(const ComplexClass& a) {
  return std::visit([](const auto& c) { return c.to_string(); }, a);
}

namespace {

ComplexClass complex_space_of(const FixedPointSpace& space) {
  return std::visit(Overloaded{[](const GrassmannianDescriptor& g) -> ComplexClass { return GrassmannClass(g); },
                               [](const FlagDescriptor& f) -> ComplexClass { return FlagClass(f); }},
                    space);
}

FixedPointSpace space_of(const ComplexClass& a) {
  return std::visit([](const auto& c) -> FixedPointSpace { return c.space(); }, a);
}

void add_complex_term(ComplexClass& acc, const OrderedSetPartition& index, const Integer& coeff) {
  std::visit(Overloaded{[&](GrassmannClass& g) { g.add_term(osp_to_partition(index), coeff); },
                        [&](FlagClass& f) { f.add_term(osp_to_permutation(index), coeff); }},
             acc);
}

}  // namespace

// kappa ----------------------------------------------------------------------------

KappaImage kappa(const HalvingClass& a) {
  const auto& space = a.space();
  if (space.kind == HalvingKind::Octonionic) {
    HalvingClass image(quaternionic_of(space.fixed_point));
    for (const auto& [index, c] : a.terms()) image.add_term(index, c);
    return image;
  }
  ComplexClass image = complex_space_of(space.fixed_point);
  for (const auto& [index, c] : a.terms()) {
    const auto fixed = to_fixed_index(space, index);
    add_complex_term(image, fixed, integral_or_throw(c * Rational(pow2(static_cast<unsigned>(osp_length(fixed))))));
  }
  if (std::holds_alternative<GrassmannClass>(image)) return std::get<GrassmannClass>(image);
  return std::get<FlagClass>(image);
}

ComplexClass kappa_to_complex(const HalvingClass& a) {
  KappaImage image = kappa(a);
  if (auto* h = std::get_if<HalvingClass>(&image)) image = kappa(*h);
  if (auto* g = std::get_if<GrassmannClass>(&image)) return *g;
  return std::get<FlagClass>(image);
}

HalvingClass kappa_inverse(const ComplexClass& a, const HalvingSpaceDescriptor& space) {
  if (!(space_of(a) == space.fixed_point))
    throw Error(ErrorKind::SpaceMismatch, "class does not live on the fixed-point space of " + space.to_string());
  HalvingClass out(space);
  for (const auto& [index, c] : complex_terms(a))
    out.add_term(from_fixed_index(space, index),
                 Rational(c) / Rational(pow2(static_cast<unsigned>(osp_length(index)))));
  return out;
}

namespace {

ComplexClass complex_chern(const FixedPointSpace& space, int bundle, int j) {
  return std::visit(Overloaded{[&](const GrassmannianDescriptor& g) -> ComplexClass {
                                 if (bundle != 1)
                                   throw Error(ErrorKind::IndexOutOfRange,
                                               "a Grassmannian has one tautological subbundle");
                                 return chern_class(Bundle::Sub, j, g);
                               },
                               [&](const FlagDescriptor& f) -> ComplexClass { return flag_chern_class(f, bundle, j); }},
                    space);
}

void require_not_octonionic(const HalvingSpaceDescriptor& space, const char* what) {
  if (space.kind == HalvingKind::Octonionic)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " is not defined on " + space.to_string());
}

}  // namespace

HalvingClass pontryagin_class(const HalvingSpaceDescriptor& space, int bundle, int j) {
  require_not_octonionic(space, "p_j");
  HalvingClass out(space);
  for (const auto& [index, c] : complex_terms(complex_chern(space.fixed_point, bundle, j)))
    out.add_term(from_fixed_index(space, index), c);
  return out;
}

ComplexClass kappa_char_class(CharacteristicKind kind, int j, int bundle, const HalvingSpaceDescriptor& space) {
  (void)kind;
  require_not_octonionic(space, "p_j");
  auto c = complex_chern(space.fixed_point, bundle, j);
  const Integer scale = pow2(static_cast<unsigned>(j));
  std::visit([&](auto& cls) { cls *= scale; }, c);
  return c;
}

HalvingClass halving_multiply(const HalvingClass& a, const HalvingClass& b) {
  if (!(a.space() == b.space())) throw Error(ErrorKind::SpaceMismatch, "multiplying classes on different spaces");
  const auto& space = a.space();
  HalvingClass out(space);
  for (const auto& [ia, ca] : a.terms()) {
    const auto fa = complex_schubert(space.fixed_point, to_fixed_index(space, ia));
    for (const auto& [ib, cb] : b.terms()) {
      const auto fb = complex_schubert(space.fixed_point, to_fixed_index(space, ib));
      for (const auto& [index, c] : complex_terms(complex_multiply(fa, fb)))
        out.add_term(from_fixed_index(space, index), ca * cb * Rational(c));
    }
  }
  return out;
}

HalvingClass real_double_multiply(const HalvingClass& a, const HalvingClass& b) {
  if (a.space().kind != HalvingKind::RealEven || b.space().kind != HalvingKind::RealEven)
    throw Error(ErrorKind::InvalidArgument, "real_double_multiply expects classes on a real even space");
  return halving_multiply(a, b);
}

// Problems -----------------------------------------------------------------------------

std::string to_string(const SpaceDescriptor& space) {
  return std::visit([](const auto& s) { return s.to_string(); }, space);
}

Integer complex_intersection_number(const FixedPointSpace& space, const std::vector<Condition>& conditions) {
  int codim = 0;
  for (const auto& cond : conditions) {
    if (cond.count < 0) throw Error(ErrorKind::InvalidArgument, "negative condition count");
    codim += osp_length(cond.index) * cond.count;
  }
  const int dim = fixed_dim(space);
  if (codim != dim)
    throw Error(ErrorKind::DimensionMismatch, "codimensions add up to " + std::to_string(codim) +
                                                  " but the space has dimension " + std::to_string(dim));
  ComplexClass acc = complex_one(space);
  for (const auto& cond : conditions) {
    const auto factor = complex_schubert(space, cond.index);
    for (int i = 0; i < cond.count; ++i) acc = complex_multiply(acc, factor);
  }
  return complex_integrate(acc);
}

SchubertProblem halved_problem(const SchubertProblem& problem) {
  const auto* space = std::get_if<HalvingSpaceDescriptor>(&problem.space);
  if (!space) return problem;
  SchubertProblem out;
  out.mode = problem.mode == SolveMode::LowerBound ? SolveMode::Count : problem.mode;
  out.space = std::visit([](const auto& s) -> SpaceDescriptor { return s; }, space->fixed_point);
  for (const auto& cond : problem.conditions) {
    if (cond.index.block_sizes() != space->index_block_sizes())
      throw Error(ErrorKind::InvalidArgument, cond.index.to_string() + " does not index a class on " + space->to_string());
    out.conditions.push_back({to_fixed_index(*space, cond.index), cond.count});
  }
  return out;
}

namespace {

Integer halved_count(const SchubertProblem& problem) {
  const auto& space = std::get<HalvingSpaceDescriptor>(problem.space);
  const auto halved = halved_problem(problem);
  return complex_intersection_number(space.fixed_point, halved.conditions);
}

}  // namespace

Integer real_lower_bound(const SchubertProblem& problem) {
  const auto* space = std::get_if<HalvingSpaceDescriptor>(&problem.space);
  if (!space || space->kind != HalvingKind::RealEven)
    throw Error(ErrorKind::InvalidArgument, "real_lower_bound expects a problem on a real even space");
  return abs(halved_count(problem));
}

Integer quaternionic_count(const SchubertProblem& problem) {
  const auto* space = std::get_if<HalvingSpaceDescriptor>(&problem.space);
  if (!space || space->kind == HalvingKind::RealEven)
    throw Error(ErrorKind::InvalidArgument, "quaternionic_count expects a quaternionic or octonionic problem");
  return halved_count(problem);
}

Integer real_degeneracy_lower_bound(const HalvingSpaceDescriptor& space, int e, int f, int rho, int m) {
  if (space.kind != HalvingKind::RealEven || !space.is_grassmannian())
    throw Error(ErrorKind::InvalidArgument, "degeneracy bounds need a real even Grassmannian");
  const auto halves = halve_dims({e, f, rho});
  return abs(degeneracy_count(std::get<GrassmannianDescriptor>(space.fixed_point), halves[0], halves[1], halves[2], m));
}

}  // namespace schubert
