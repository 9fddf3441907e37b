#include <doctest.h>

#include <random>

#include "schubert/errors.hpp"
#include "schubert/halving.hpp"

using namespace schubert;

namespace {

ErrorKind kind_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

const auto rgr48 = HalvingSpaceDescriptor::real_even_grassmannian(4, 8);
const auto rgr816 = HalvingSpaceDescriptor::real_even_grassmannian(8, 16);
const auto hgr24 = HalvingSpaceDescriptor::quaternionic_grassmannian(2, 4);
const auto rfl222 = HalvingSpaceDescriptor::real_even_flag({2, 2, 2});
const GrassmannianDescriptor gr24(2, 4);

OrderedSetPartition grass_index(const Partition& lambda, int k, int l) { return partition_to_osp(lambda, k, l); }

// sigma_{D lambda} on a real even Grassmannian, given the undoubled lambda.
HalvingClass real_sigma(const HalvingSpaceDescriptor& space, const Partition& lambda) {
  const auto& g = std::get<GrassmannianDescriptor>(space.fixed_point);
  return HalvingClass::schubert(space, osp_double(grass_index(lambda, g.k, g.l())));
}

SchubertProblem real_problem(const HalvingSpaceDescriptor& space, const Partition& doubled, int count) {
  const auto sizes = space.index_block_sizes();
  return {space, {{grass_index(doubled, sizes[0], sizes[1]), count}}, SolveMode::LowerBound};
}

}  // namespace

TEST_CASE("halving space descriptors") {
  CHECK(rgr48.fixed_point == FixedPointSpace(GrassmannianDescriptor(2, 4)));
  CHECK(rgr48.real_dimension() == 16);
  CHECK(rgr48.index_block_sizes() == std::vector<int>{4, 4});
  CHECK(rgr48.to_string() == "Gr_4(R^8)");
  CHECK(rfl222.fixed_block_sizes() == std::vector<int>{1, 1, 1});
  CHECK(HalvingSpaceDescriptor::octonionic_flag().real_dimension() == 24);
  CHECK(kind_of([] { HalvingSpaceDescriptor::real_even_grassmannian(3, 8); }) == ErrorKind::NotADouble);
  CHECK(kind_of([] { HalvingSpaceDescriptor::real_even_flag({2, 1, 3}); }) == ErrorKind::NotADouble);
}

TEST_CASE("halving classes only accept doubled indices on real spaces") {
  CHECK(kind_of([] { HalvingClass::schubert(rgr48, grass_index({1}, 4, 4)); }) == ErrorKind::NotADoubleIndex);
  CHECK(kind_of([] { HalvingClass::schubert(rgr48, grass_index({1}, 2, 2)); }) == ErrorKind::InvalidArgument);
  CHECK_NOTHROW(HalvingClass::schubert(hgr24, grass_index({1}, 2, 2)));
}

TEST_CASE("kappa on basis classes") {
  const auto image = kappa(real_sigma(rgr816, {2, 2}));
  CHECK(std::get<GrassmannClass>(image) ==
        GrassmannClass::schubert(GrassmannianDescriptor(4, 8), {2, 2}, 16));
  CHECK(std::get<GrassmannClass>(kappa(HalvingClass::one(rgr48))) == GrassmannClass::one(gr24));
  CHECK(std::get<GrassmannClass>(kappa(HalvingClass::schubert(hgr24, grass_index({1}, 2, 2)))) ==
        GrassmannClass::schubert(gr24, {1}, 2));
  const auto oct = HalvingSpaceDescriptor::octonionic_flag();
  const Permutation w{2, 3, 1};
  const auto index = permutation_to_osp(w, {1, 1, 1});
  const auto quaternionic = std::get<HalvingClass>(kappa(HalvingClass::schubert(oct, index, 3)));
  CHECK(quaternionic == HalvingClass::schubert(HalvingSpaceDescriptor::quaternionic_flag({1, 1, 1}), index, 3));
  CHECK(std::get<FlagClass>(kappa_to_complex(HalvingClass::schubert(oct, index))) ==
        FlagClass::schubert(FlagDescriptor::complete(3), w, 4));
}

TEST_CASE("kappa rejects non-integral images and inverts exactly") {
  CHECK(kind_of([] { kappa(real_sigma(rgr48, {1}) * Rational(1, 4)); }) == ErrorKind::NonIntegral);
  CHECK(std::get<GrassmannClass>(kappa(real_sigma(rgr48, {1}) * Rational(1, 2))) == GrassmannClass::schubert(gr24, {1}));
  for (const auto& lambda : partitions_in_box(2, 2)) {
    const ComplexClass c = GrassmannClass::schubert(gr24, lambda, 3);
    const auto back = kappa_inverse(c, rgr48);
    CHECK(back.coefficient(osp_double(grass_index(lambda, 2, 2))) == Rational(3) / Rational(pow2(static_cast<unsigned>(lambda.size()))));
    CHECK(kappa_to_complex(back) == c);
  }
}

TEST_CASE("real double products") {
  CHECK(real_double_multiply(real_sigma(rgr48, {1}), real_sigma(rgr48, {1})) ==
        real_sigma(rgr48, {2}) + real_sigma(rgr48, {1, 1}));
  CHECK(real_double_multiply(real_sigma(rgr48, {2, 1}), HalvingClass::one(rgr48)) == real_sigma(rgr48, {2, 1}));
  CHECK(real_double_multiply(real_sigma(rgr48, {2, 2}), real_sigma(rgr48, {1})).is_zero());
  CHECK(kind_of([] { real_double_multiply(real_sigma(rgr48, {1}), real_sigma(rgr816, {1})); }) ==
        ErrorKind::SpaceMismatch);
  CHECK(kind_of([] { real_double_multiply(HalvingClass::one(hgr24), HalvingClass::one(hgr24)); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("kappa is multiplicative on doubled bases") {
  for (const auto& space : {rgr48, rfl222, HalvingSpaceDescriptor::real_even_grassmannian(4, 10)}) {
    const auto sizes = space.fixed_block_sizes();
    int n = 0;
    for (int d : sizes) n += d;
    std::vector<OrderedSetPartition> indices;
    for (const auto& w : permutations_of(n))
      if (w.is_minimal_coset_rep(sizes)) indices.push_back(osp_double(permutation_to_osp(w, sizes)));
    for (const auto& a : indices)
      for (const auto& b : indices) {
        const auto x = HalvingClass::schubert(space, a), y = HalvingClass::schubert(space, b);
        CHECK(kappa_to_complex(real_double_multiply(x, y)) == complex_multiply(kappa_to_complex(x), kappa_to_complex(y)));
        // halving the degrees: a basis class of real degree 4d lands in complex degree d
        CHECK(osp_length(a) % 4 == 0);
      }
  }
}

TEST_CASE("Pontryagin classes") {
  // kappa(p_1) = 2 c_1(S), hence kappa(p_1^i) = 2^i c_1(S)^i
  for (int n = 3; n <= 7; ++n) {
    const auto space = HalvingSpaceDescriptor::real_even_grassmannian(2, 2 * n);
    const auto& g = std::get<GrassmannianDescriptor>(space.fixed_point);
    const auto p1 = pontryagin_class(space, 1, 1);
    const auto c1 = chern_class(Bundle::Sub, 1, g);
    CHECK(kappa_char_class(CharacteristicKind::Pontryagin, 1, 1, space) == ComplexClass(c1 * Integer(2)));
    HalvingClass power = HalvingClass::one(space);
    GrassmannClass expected = GrassmannClass::one(g);
    for (int i = 1; i <= 5; ++i) {
      power = real_double_multiply(power, p1);
      expected = expected * c1 * Integer(2);
      CHECK(kappa_to_complex(power) == ComplexClass(expected));
    }
  }
  CHECK(kappa_char_class(CharacteristicKind::Pontryagin, 0, 1, rgr48) == ComplexClass(GrassmannClass::one(gr24)));
  const auto p1 = pontryagin_class(rgr48, 1, 1);
  CHECK(kappa_to_complex(real_double_multiply(p1, p1)) ==
        ComplexClass(chern_class(Bundle::Sub, 1, gr24) * chern_class(Bundle::Sub, 1, gr24) * Integer(4)));
  CHECK(pontryagin_class(rgr48, 1, 2) == real_sigma(rgr48, {1, 1}));
  CHECK(kind_of([] { pontryagin_class(rgr48, 2, 1); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("polynomials in Pontryagin classes transfer to polynomials in scaled Chern classes") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4), exponent(0, 3);
  for (const auto& space : {rgr48, HalvingSpaceDescriptor::real_even_grassmannian(4, 10),
                            HalvingSpaceDescriptor::real_even_grassmannian(6, 12)}) {
    const auto& g = std::get<GrassmannianDescriptor>(space.fixed_point);
    for (int trial = 0; trial < 20; ++trial) {
      HalvingClass real(space);
      GrassmannClass complex(g);
      for (int term = 0; term < 3; ++term) {
        const int c = coeff(rng);
        HalvingClass r = HalvingClass::one(space) * Rational(c);
        GrassmannClass z = GrassmannClass::one(g) * Integer(c);
        for (int j = 1; j <= g.k; ++j)
          for (int e = exponent(rng); e > 0; --e) {
            r = real_double_multiply(r, pontryagin_class(space, 1, j));
            z = z * chern_class(Bundle::Sub, j, g) * pow2(static_cast<unsigned>(j));
          }
        real += r;
        complex += z;
      }
      CHECK(kappa_to_complex(real) == ComplexClass(complex));
    }
  }
}

TEST_CASE("real lower bounds") {
  CHECK(real_lower_bound(real_problem(rgr816, {4, 4, 4, 4}, 4)) == 6);
  CHECK(real_lower_bound(real_problem(rgr48, {2, 2}, 4)) == 2);
  CHECK(real_lower_bound(real_problem(rgr48, {4, 4, 4, 4}, 1)) == 1);
  CHECK(kind_of([] { real_lower_bound(real_problem(rgr48, {2, 2}, 3)); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { real_lower_bound(real_problem(rgr48, {1}, 16)); }) == ErrorKind::NotADoubleIndex);
  CHECK(kind_of([] { real_lower_bound(SchubertProblem{hgr24, {}, SolveMode::Count}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("quaternionic counts") {
  auto problem = [](std::vector<Condition> conditions) { return SchubertProblem{hgr24, std::move(conditions), SolveMode::Count}; };
  CHECK(quaternionic_count(problem({{grass_index({1}, 2, 2), 4}})) == 2);
  CHECK(quaternionic_count(problem({{grass_index({2, 2}, 2, 2), 1}})) == 1);
  CHECK(quaternionic_count(problem({{grass_index({2}, 2, 2), 2}})) == 1);
  CHECK(kind_of([&] { quaternionic_count(problem({{grass_index({1}, 2, 2), 3}})); }) == ErrorKind::DimensionMismatch);
  const auto oct = HalvingSpaceDescriptor::octonionic_flag();
  const auto s1 = permutation_to_osp(Permutation{2, 1, 3}, {1, 1, 1});
  const auto s2 = permutation_to_osp(Permutation{1, 3, 2}, {1, 1, 1});
  CHECK(quaternionic_count(SchubertProblem{oct, {{s1, 2}, {s2, 1}}, SolveMode::Count}) == 1);
}

TEST_CASE("three routes to the count agree") {
  for (const auto& g : {GrassmannianDescriptor(2, 4), GrassmannianDescriptor(2, 5)}) {
    const auto real = HalvingSpaceDescriptor::real_even_grassmannian(2 * g.k, 2 * g.n);
    const auto quat = HalvingSpaceDescriptor::quaternionic_grassmannian(g.k, g.n);
    const auto shapes = partitions_in_box(g.k, g.l());
    // every pair and triple of conditions whose degrees fill the space
    for (std::size_t a = 0; a < shapes.size(); ++a)
      for (std::size_t b = a; b < shapes.size(); ++b)
        for (std::size_t c = b; c < shapes.size(); ++c) {
          if (shapes[a].size() + shapes[b].size() + shapes[c].size() != g.complex_dimension()) continue;
          std::vector<Condition> complex_conditions, real_conditions;
          for (const auto* lambda : {&shapes[a], &shapes[b], &shapes[c]}) {
            complex_conditions.push_back({grass_index(*lambda, g.k, g.l()), 1});
            real_conditions.push_back({osp_double(grass_index(*lambda, g.k, g.l())), 1});
          }
          const Integer complex = complex_intersection_number(g, complex_conditions);
          CHECK(real_lower_bound({real, real_conditions, SolveMode::LowerBound}) == abs(complex));
          CHECK(quaternionic_count({quat, complex_conditions, SolveMode::Count}) == complex);
        }
  }
}

TEST_CASE("real degeneracy bounds") {
  CHECK(real_degeneracy_lower_bound(rgr48, 4, 4, 2, 4) == 32);
  CHECK(real_degeneracy_lower_bound(HalvingSpaceDescriptor::real_even_grassmannian(0, 6), 0, 6, 0, 0) == 1);
  CHECK(kind_of([] { real_degeneracy_lower_bound(rgr48, 4, 4, 2, 3); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { real_degeneracy_lower_bound(rgr48, 4, 4, 1, 4); }) == ErrorKind::NotADouble);
}
