#include <doctest.h>

#include <functional>
#include <random>
#include <thread>

#include "schubert/errors.hpp"
#include "schubert/flag.hpp"
#include "schubert/grassmann.hpp"

using namespace schubert;

namespace {

const SparsePolynomial x1 = SparsePolynomial::variable(1);
const SparsePolynomial x2 = SparsePolynomial::variable(2);
const SparsePolynomial x3 = SparsePolynomial::variable(3);

const FlagDescriptor fl3 = FlagDescriptor::complete(3);
const FlagDescriptor fl4 = FlagDescriptor::complete(4);

FlagClass sigma(const FlagDescriptor& space, const Permutation& w) { return FlagClass::schubert(space, w); }

// Every reduced word of u, found by peeling right descents.
void reduced_words(const Permutation& u, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  if (u.length() == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i = 1; i < u.size(); ++i)
    if (u(i) > u(i + 1)) {
      suffix.push_back(i);
      reduced_words(u.times_simple(i), suffix, out);
      suffix.pop_back();
    }
}

SparsePolynomial elementary(int j, int vars) {
  SparsePolynomial e;
  std::function<void(int, int, SparsePolynomial)> go = [&](int start, int left, SparsePolynomial m) {
    if (left == 0) {
      e += m;
      return;
    }
    for (int v = start; v <= vars; ++v) go(v + 1, left - 1, m * SparsePolynomial::variable(v));
  };
  go(1, j, SparsePolynomial(1));
  return e;
}

}  // namespace

TEST_CASE("Schubert polynomials") {
  CHECK(schubert_polynomial(Permutation::identity(3)).polynomial == SparsePolynomial(1));
  CHECK(schubert_polynomial(Permutation::longest(3)).polynomial == x1 * x1 * x2);
  CHECK(schubert_polynomial(Permutation{2, 1, 3}).polynomial == x1);
  CHECK(schubert_polynomial(Permutation{1, 3, 2}).polynomial == x1 + x2);
  CHECK(schubert_polynomial(Permutation{1, 3, 2, 4}).polynomial == x1 + x2);
  CHECK(schubert_polynomial(Permutation{1, 4, 3, 2}).polynomial ==
        x1 * x1 * x2 + x1 * x1 * x3 + x1 * x2 * x2 + x1 * x2 * x3 + x2 * x2 * x3);
}

TEST_CASE("Schubert polynomials do not depend on the reduced word") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& w : permutations_of(n)) {
      const auto u = w.inverse() * Permutation::longest(n);
      std::vector<int> suffix;
      std::vector<std::vector<int>> words;
      reduced_words(u, suffix, words);
      REQUIRE(!words.empty());
      const auto expected = schubert_polynomial(w).polynomial;
      for (const auto& word : words) CHECK(schubert_polynomial_from_word(w, word) == expected);
      if (u.length() > 0) {
        auto bad = words.front();
        bad.push_back(bad.back());
        CHECK_THROWS_AS(schubert_polynomial_from_word(w, bad), Error);
      }
    }
}

TEST_CASE("Schubert polynomials have nonnegative coefficients and degree l(w)") {
  for (const auto& w : permutations_of(5)) {
    const auto p = schubert_polynomial(w).polynomial;
    CHECK(p.degree() == w.length());
    for (const auto& [e, c] : p.terms()) CHECK(c > 0);
  }
}

TEST_CASE("expansion in the Schubert basis") {
  const auto one = expand_in_schubert_basis(x1, 3);
  CHECK(one.size() == 1);
  CHECK(one.at(Permutation{2, 1, 3}) == 1);
  const auto two = expand_in_schubert_basis(x1 * x1 + x1 * x2, 3);
  CHECK(two.size() == 2);
  CHECK(two.at(Permutation{3, 1, 2}) == 1);
  CHECK(two.at(Permutation{2, 3, 1}) == 1);
  CHECK(expand_in_schubert_basis(SparsePolynomial(), 3).empty());
  try {
    expand_in_schubert_basis(x1 * x1 * x1, 3);
    FAIL("expected SupportOutsideStaircase");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SupportOutsideStaircase);
  }
}

TEST_CASE("expansion inverts random combinations in S_4") {
  std::mt19937 rng(3);
  const auto perms = permutations_of(4);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int t = 0; t < 100; ++t) {
    std::map<Permutation, Integer> combo;
    for (int k = 0; k < 5; ++k) {
      const int c = coeff(rng);
      auto& slot = combo[perms[pick(rng)]];
      slot += c;
    }
    std::erase_if(combo, [](const auto& kv) { return kv.second == 0; });
    SparsePolynomial p;
    for (const auto& [w, c] : combo) p += schubert_polynomial(w).polynomial * c;
    CHECK(expand_in_schubert_basis(p, 4) == combo);
  }
}

TEST_CASE("flag products") {
  CHECK(sigma(fl3, {2, 1, 3}) * sigma(fl3, {1, 3, 2}) == sigma(fl3, {3, 1, 2}) + sigma(fl3, {2, 3, 1}));
  CHECK(sigma(fl3, {2, 3, 1}) * FlagClass::one(fl3) == sigma(fl3, {2, 3, 1}));
  CHECK(flag_integrate(sigma(fl3, {2, 1, 3}) * sigma(fl3, {1, 3, 2}) * sigma(fl3, {2, 1, 3})) == 1);
  CHECK(flag_integrate(FlagClass::one(fl3)) == 0);
  CHECK(flag_integrate(sigma(fl3, Permutation::longest(3))) == 1);
  // powers of sigma_{s_1} + sigma_{s_2} + sigma_{s_3} on Fl(C^4), against repeated Monk's rule
  FlagClass h = sigma(fl4, Permutation::simple(1, 4)) + sigma(fl4, Permutation::simple(2, 4)) +
                sigma(fl4, Permutation::simple(3, 4));
  FlagClass acc = FlagClass::one(fl4);
  for (int i = 0; i < 6; ++i) acc = acc * h;
  FlagClass monk = FlagClass::one(fl4);
  for (int i = 0; i < 6; ++i) monk = monk_multiply(1, monk) + monk_multiply(2, monk) + monk_multiply(3, monk);
  CHECK(acc == monk);
}

TEST_CASE("flag structure constants are nonnegative and symmetric") {
  for (const auto& space : {fl3, fl4})
    for (const auto& u : permutations_of(space.n()))
      for (const auto& v : permutations_of(space.n())) {
        const auto uv = sigma(space, u) * sigma(space, v);
        CHECK(uv == sigma(space, v) * sigma(space, u));
        for (const auto& [w, c] : uv.terms()) CHECK(c > 0);
      }
}

TEST_CASE("Monk's rule agrees with the polynomial product") {
  for (const auto& space : {fl3, fl4})
    for (const auto& v : permutations_of(space.n())) {
      const auto sv = sigma(space, v);
      for (int r = 1; r < space.n(); ++r)
        CHECK(monk_multiply(r, sv) == sigma(space, Permutation::simple(r, space.n())) * sv);
    }
  CHECK(monk_multiply(1, FlagClass::one(fl3)) == sigma(fl3, {2, 1, 3}));
  CHECK(monk_multiply(2, sigma(fl3, {1, 3, 2})) == sigma(fl3, {1, 3, 2}) * sigma(fl3, {1, 3, 2}));
}

TEST_CASE("partial flags with two blocks reproduce the Grassmannian") {
  for (const auto& g : {GrassmannianDescriptor(2, 4), GrassmannianDescriptor(2, 5)}) {
    const FlagDescriptor flag({g.k, g.l()});
    const auto shapes = partitions_in_box(g.k, g.l());
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        const auto prod = GrassmannClass::schubert(g, a) * GrassmannClass::schubert(g, b);
        FlagClass expected(flag);
        for (const auto& [nu, c] : prod.terms())
          expected.add_term(osp_to_permutation(partition_to_osp(nu, g.k, g.l())), c);
        const auto fa = FlagClass::schubert(flag, partition_to_osp(a, g.k, g.l()));
        const auto fb = FlagClass::schubert(flag, partition_to_osp(b, g.k, g.l()));
        CHECK(fa * fb == expected);
      }
  }
  const FlagDescriptor flag({2, 2});
  CHECK(flag_integrate(FlagClass::schubert(flag, partition_to_osp({2, 2}, 2, 2))) == 1);
  CHECK(FlagClass::schubert(flag, partition_to_osp({1}, 2, 2)) * FlagClass::schubert(flag, partition_to_osp({2, 1}, 2, 2)) ==
        FlagClass::schubert(flag, partition_to_osp({2, 2}, 2, 2)));
}

TEST_CASE("flag classes reject labels outside the parabolic quotient") {
  const FlagDescriptor flag({2, 2});
  CHECK_THROWS_AS(FlagClass::schubert(flag, Permutation{2, 1, 3, 4}), Error);
  CHECK_THROWS_AS(monk_multiply(1, FlagClass::one(flag)), Error);
  CHECK(monk_multiply(2, FlagClass::one(flag)) == FlagClass::schubert(flag, Permutation{1, 3, 2, 4}));
}

TEST_CASE("Chern classes of tautological subbundles") {
  for (const auto& space : {fl3, fl4, FlagDescriptor({1, 2, 1})}) {
    const auto sums = space.partial_sums();
    for (int i = 1; i <= space.block_count(); ++i)
      for (int j = 0; j <= sums[static_cast<std::size_t>(i - 1)]; ++j) {
        const auto expected = polynomial_to_flag_class(elementary(j, sums[static_cast<std::size_t>(i - 1)]) *
                                                           Integer(j % 2 ? -1 : 1),
                                                       space);
        CHECK(flag_chern_class(space, i, j) == expected);
        if (i == space.block_count() && j > 0) CHECK(flag_chern_class(space, i, j).is_zero());
      }
  }
  CHECK(flag_chern_class(fl3, 1, 1) == sigma(fl3, {2, 1, 3}) * Integer(-1));
  CHECK_THROWS_AS(flag_chern_class(fl3, 4, 1), Error);
  CHECK_THROWS_AS(flag_chern_class(fl3, 1, 2), Error);
}

TEST_CASE("the Schubert polynomial cache is safe under concurrent use") {
  const auto perms = permutations_of(6);
  std::vector<SparsePolynomial> results(perms.size());
  std::vector<std::jthread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < perms.size(); i += 4)
        results[i] = schubert_polynomial(perms[i]).polynomial;
    });
  pool.clear();
  for (std::size_t i = 0; i < perms.size(); i += 37) {
    const auto w = perms[i];
    const auto u = w.inverse() * Permutation::longest(6);
    CHECK(results[i] == schubert_polynomial_from_word(w, u.reduced_word()));
  }
}
