// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the criterion's budget.  Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schubert/flag.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/halving.hpp"
#include "schubert/oracle.hpp"
#include "schubert/schur.hpp"

using namespace schubert;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail << "first failure: " << what << "; ";
    ok = ok && condition;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= budget_seconds) {
    out.ok = false;
    out.detail << "over budget of " << budget_seconds << " s; ";
  }
  if (!out.ok) ++failures;
  std::string detail = out.detail.str();
  if (detail.size() >= 2) detail.resize(detail.size() - 2);
  std::printf("%s %2d  %-58s %9.4f s  %s\n", out.ok ? "PASS" : "FAIL", number, title.c_str(), seconds,
              detail.c_str());
}

GrassmannClass sigma(const GrassmannianDescriptor& g, const Partition& lambda) {
  return GrassmannClass::schubert(g, lambda);
}

HalvingClass real_sigma(const HalvingSpaceDescriptor& space, const Partition& lambda) {
  const auto& g = std::get<GrassmannianDescriptor>(space.fixed_point);
  return HalvingClass::schubert(space, osp_double(partition_to_osp(lambda, g.k, g.l())));
}

SchubertProblem grassmann_problem(const SpaceDescriptor& space, const Partition& lambda, int k, int l, int count,
                                  SolveMode mode) {
  return {space, {{partition_to_osp(lambda, k, l), count}}, mode};
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  criterion(1, "Gr_4(C^8): integral of s(2,2)^4 is 6", 1.0, [](Outcome& out) {
    const GrassmannianDescriptor g(4, 8);
    const Integer value = gr_integrate(gr_power(sigma(g, {2, 2}), 4));
    out.detail << "value " << value.get_str() << "; ";
    out.require(value == 6, "integral");
  });

  criterion(2, "Gr_2(C^4): integral of s(1,1)^4 is 2; Gr_4(R^8) bound 2", 1.0, [](Outcome& out) {
    const GrassmannianDescriptor g(2, 4);
    const Integer literal = gr_integrate(gr_power(sigma(g, {1, 1}), 4));
    const Integer halved = gr_integrate(gr_power(sigma(g, {1}), 4));
    const auto rgr48 = HalvingSpaceDescriptor::real_even_grassmannian(4, 8);
    const auto image = kappa_to_complex(real_sigma(rgr48, {1}));
    const Integer bound = real_lower_bound(grassmann_problem(rgr48, {2, 2}, 4, 4, 4, SolveMode::LowerBound));
    out.detail << "literal s(1,1)^4 = " << literal.get_str() << " (degree 8 exceeds dim 4); "
               << "kappa(s_R(2,2)) = " << to_string(image) << ", s(1)^4 = " << halved.get_str()
               << "; real_lower_bound = " << bound.get_str() << "; ";
    out.require(literal == 2, "literal integral of s(1,1)^4");
    out.require(bound == 2, "real_lower_bound");
  });

  criterion(3, "Gr_8(R^16): four D(2,2) conditions give lower bound 6", 1.0, [](Outcome& out) {
    const auto space = HalvingSpaceDescriptor::real_even_grassmannian(8, 16);
    const Integer bound = real_lower_bound(grassmann_problem(space, {4, 4, 4, 4}, 8, 8, 4, SolveMode::LowerBound));
    out.detail << "value " << bound.get_str() << "; ";
    out.require(bound == 6, "real_lower_bound");
  });

  criterion(4, "four lines in HP^3 meet 2 common lines", 1.0, [](Outcome& out) {
    const auto space = HalvingSpaceDescriptor::quaternionic_grassmannian(2, 4);
    const Integer count = quaternionic_count(grassmann_problem(space, {1}, 2, 2, 4, SolveMode::Count));
    out.detail << "value " << count.get_str() << "; ";
    out.require(count == 2, "quaternionic_count");
  });

  criterion(5, "rank <= 1 locus on Gr_2(C^4): class 2s(1), count 32", 1.0, [](Outcome& out) {
    const GrassmannianDescriptor g(2, 4);
    const auto chern = virtual_chern_classes(BundleSpec::sub(), BundleSpec::quot(), 1, g);
    const auto locus = thom_porteous(g, 2, 2, 1, chern);
    const Integer count = degeneracy_count(g, 2, 2, 1, 4);
    const auto rgr48 = HalvingSpaceDescriptor::real_even_grassmannian(4, 8);
    const Integer real = real_degeneracy_lower_bound(rgr48, 4, 4, 2, 4);
    out.detail << "class " << locus.to_string() << ", count " << count.get_str() << ", real bound "
               << real.get_str() << "; ";
    out.require(locus == sigma(g, {1}) * Integer(2), "class");
    out.require(count == 32, "degeneracy_count");
    out.require(real == 32, "real_degeneracy_lower_bound");
  });

  criterion(6, "schur_multiply against the tableau oracle, sizes <= 5", 60.0, [](Outcome& out) {
    std::vector<Partition> shapes;
    for (int n = 0; n <= 5; ++n)
      for (auto& p : partitions_of(n)) shapes.push_back(std::move(p));
    long identities = 0;
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        const auto product = schur_multiply(SchurExpansion::basis(a), SchurExpansion::basis(b));
        const auto oracle = oracle_product(a, b);
        std::set<Partition> support;
        for (const auto& [nu, c] : product.terms()) support.insert(nu);
        for (const auto& [nu, c] : oracle.terms()) support.insert(nu);
        for (const auto& nu : support) {
          ++identities;
          out.require(product.coefficient(nu) == oracle.coefficient(nu),
                      "c(" + a.to_string() + ", " + b.to_string() + "; " + nu.to_string() + ")");
        }
      }
    out.detail << shapes.size() * shapes.size() << " products, " << identities << " coefficient identities; ";
    out.require(identities >= 400, "at least 400 identities");
  });

  criterion(7, "ring axioms on random triples; duality in 3x3 boxes", 60.0, [](Outcome& out) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-3, 3), terms(1, 3);
    long triples = 0;
    for (const auto& g : {GrassmannianDescriptor(2, 5), GrassmannianDescriptor(3, 6)}) {
      const auto shapes = partitions_in_box(g.k, g.l());
      std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
      auto random_class = [&] {
        GrassmannClass x(g);
        for (int t = terms(rng); t > 0; --t) x.add_term(shapes[pick(rng)], coeff(rng));
        return x;
      };
      for (int trial = 0; trial < 500; ++trial, ++triples) {
        const auto a = random_class(), b = random_class(), c = random_class();
        out.require((a * b) * c == a * (b * c), "associativity on " + g.to_string());
        out.require(a * b == b * a, "commutativity on " + g.to_string());
        out.require(a * GrassmannClass::one(g) == a, "unit on " + g.to_string());
      }
    }
    long pairs = 0;
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        const GrassmannianDescriptor g(k, k + l);
        const auto shapes = partitions_in_box(k, l);
        for (const auto& a : shapes)
          for (const auto& b : shapes) {
            if (a.size() + b.size() != k * l) continue;
            ++pairs;
            const Integer expected = b == poincare_dual(a, g) ? 1 : 0;
            out.require(gr_integrate(sigma(g, a) * sigma(g, b)) == expected,
                        "pairing " + a.to_string() + ", " + b.to_string() + " on " + g.to_string());
          }
      }
    out.detail << triples << " triples, " << pairs << " complementary pairs; ";
  });

  criterion(8, "Giambelli in the 3x3 box; Jacobi-Trudi to size 8", 30.0, [](Outcome& out) {
    const GrassmannianDescriptor g(3, 6);
    const auto shapes = partitions_in_box(3, 3);
    for (const auto& lambda : shapes)
      out.require(giambelli(lambda, g) == sigma(g, lambda), "giambelli " + lambda.to_string());
    long jt = 0;
    for (int n = 0; n <= 8; ++n)
      for (const auto& lambda : partitions_of(n)) {
        ++jt;
        out.require(jacobi_trudi(lambda) == SchurExpansion::basis(lambda), "jacobi_trudi " + lambda.to_string());
      }
    out.detail << shapes.size() << " Giambelli cases (every shape in the box), " << jt << " Jacobi-Trudi cases; ";
  });

  criterion(9, "flag products: Monk, positivity, Fl_(2,2) vs Gr_2(C^4)", 120.0, [](Outcome& out) {
    long monk = 0, products = 0;
    for (int n = 3; n <= 4; ++n) {
      const auto space = FlagDescriptor::complete(n);
      const auto perms = permutations_of(n);
      for (const auto& w : perms) {
        const auto sw = FlagClass::schubert(space, w);
        for (int r = 1; r < n; ++r, ++monk)
          out.require(flag_multiply(FlagClass::schubert(space, Permutation::simple(r, n)), sw) == monk_multiply(r, sw),
                      "Monk s_" + std::to_string(r) + " * " + w.to_string());
        if (n != 4) continue;
        for (const auto& u : perms) {
          ++products;
          const auto product = flag_multiply(FlagClass::schubert(space, u), sw);
          for (const auto& [v, c] : product.terms())
            out.require(c > 0, "constant of " + v.to_string() + " in " + u.to_string() + " * " + w.to_string());
        }
      }
    }
    const FlagDescriptor flag({2, 2});
    const GrassmannianDescriptor gr(2, 4);
    const auto shapes = partitions_in_box(2, 2);
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        const auto product = flag_multiply(FlagClass::schubert(flag, partition_to_osp(a, 2, 2)),
                                           FlagClass::schubert(flag, partition_to_osp(b, 2, 2)));
        const auto grassmann = sigma(gr, a) * sigma(gr, b);
        FlagClass expected(flag);
        for (const auto& [nu, c] : grassmann.terms())
          expected.add_term(osp_to_permutation(partition_to_osp(nu, 2, 2)), c);
        out.require(product == expected, "Fl_(2,2) " + a.to_string() + " * " + b.to_string());
      }
    out.detail << monk << " Monk products, " << products << " S_4 products, " << shapes.size() * shapes.size()
               << " Fl_(2,2) products; ";
  });

  criterion(10, "kappa is multiplicative; kappa(p1^i) = 2^i c1^i, i <= 5", 30.0, [](Outcome& out) {
    long pairs = 0;
    for (const auto& space : {HalvingSpaceDescriptor::real_even_grassmannian(4, 8),
                              HalvingSpaceDescriptor::real_even_flag({2, 2, 2})}) {
      std::vector<OrderedSetPartition> indices;
      if (const auto* g = std::get_if<GrassmannianDescriptor>(&space.fixed_point)) {
        for (const auto& lambda : partitions_in_box(g->k, g->l()))
          indices.push_back(osp_double(partition_to_osp(lambda, g->k, g->l())));
      } else {
        const auto& f = std::get<FlagDescriptor>(space.fixed_point);
        for (const auto& w : permutations_of(f.n()))
          if (w.is_minimal_coset_rep(f.dims)) indices.push_back(osp_double(permutation_to_osp(w, f.dims)));
      }
      for (const auto& a : indices)
        for (const auto& b : indices) {
          ++pairs;
          const auto x = HalvingClass::schubert(space, a);
          const auto y = HalvingClass::schubert(space, b);
          out.require(kappa_to_complex(real_double_multiply(x, y)) ==
                          complex_multiply(kappa_to_complex(x), kappa_to_complex(y)),
                      "kappa(" + a.to_string() + " * " + b.to_string() + ") on " + space.to_string());
        }
    }
    // Gr_2(R^12) halves to CP^5, where c1^5 is still nonzero.
    const auto space = HalvingSpaceDescriptor::real_even_grassmannian(2, 12);
    const auto& g = std::get<GrassmannianDescriptor>(space.fixed_point);
    const auto c1 = chern_class(Bundle::Sub, 1, g);
    const auto p1 = pontryagin_class(space, 1, 1);
    out.require(kappa_char_class(CharacteristicKind::Pontryagin, 1, 1, space) == ComplexClass(c1 * Integer(2)),
                "kappa_char_class p1");
    HalvingClass power = HalvingClass::one(space);
    GrassmannClass expected = GrassmannClass::one(g);
    for (int i = 1; i <= 5; ++i) {
      power = real_double_multiply(power, p1);
      expected = expected * c1 * Integer(2);
      out.require(kappa_to_complex(power) == ComplexClass(expected), "kappa(p1^" + std::to_string(i) + ")");
      out.require(!expected.is_zero(), "c1^" + std::to_string(i) + " vanishes");
    }
    out.detail << pairs << " basis pairs, powers 1..5 on " << space.to_string() << "; ";
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
