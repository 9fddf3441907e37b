#include "schubert/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include "schubert/flag.hpp"
#include "schubert/grassmann.hpp"
#include "schubert/halving.hpp"
#include "schubert/oracle.hpp"
#include "schubert/schur.hpp"

namespace schubert {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++result_.passed;
      return;
    }
    if (result_.failed++ == 0) result_.first_failure = describe();
  }

  // Engine exceptions count as failures of the case that raised them.
  void guarded(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return label + ": " + e.what(); });
    }
  }

  SuiteResult finish(std::chrono::steady_clock::time_point start) {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result_;
  }

 private:
  SuiteResult result_;
};

template <class Body>
SuiteResult run_suite(const std::string& name, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Suite suite(name);
  suite.guarded(name, [&] { body(suite); });
  return suite.finish(start);
}

SchurExpansion restricted(const SchurExpansion& e, int k, int l) {
  SchurExpansion out;
  for (const auto& [nu, c] : e.terms())
    if (nu.fits_in_box(k, l)) out.add_term(nu, c);
  return out;
}

SchurExpansion as_expansion(const GrassmannClass& a) {
  SchurExpansion out;
  for (const auto& [lambda, c] : a.terms()) out.add_term(lambda, c);
  return out;
}

SuiteResult grassmannian_suite(const GrassmannianDescriptor& space, const SelfTestOptions& options) {
  return run_suite("Gr_" + std::to_string(space.k) + "(C^" + std::to_string(space.n) + ")", [&](Suite& s) {
    const auto shapes = partitions_in_box(space.k, space.l());
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        auto product = gr_multiply(GrassmannClass::schubert(space, a), GrassmannClass::schubert(space, b));
        if (options.flip_lr_sign) product *= Integer(-1);
        const auto expected = restricted(oracle_product(a, b, space.k), space.k, space.l());
        s.check(as_expansion(product) == expected, [&] {
          return "s" + a.to_string() + " * s" + b.to_string() + " = " + product.to_string() + ", oracle " +
                 expected.to_string();
        });
        const Integer pairing = gr_integrate(GrassmannClass::schubert(space, a) * GrassmannClass::schubert(space, b));
        const Integer dual = b == poincare_dual(a, space) ? 1 : 0;
        s.check(pairing == dual, [&] { return "pairing of " + a.to_string() + " and " + b.to_string(); });
      }
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        for (const auto& c : shapes) {
          const auto x = GrassmannClass::schubert(space, a);
          const auto y = GrassmannClass::schubert(space, b);
          const auto z = GrassmannClass::schubert(space, c);
          s.check((x * y) * z == x * (y * z) && x * y == y * x, [&] {
            return "ring axioms on " + a.to_string() + ", " + b.to_string() + ", " + c.to_string();
          });
        }
    for (const auto& a : shapes)
      s.check(giambelli(a, space) == GrassmannClass::schubert(space, a),
              [&] { return "giambelli " + a.to_string(); });
  });
}

SuiteResult kappa_suite(const HalvingSpaceDescriptor& space) {
  return run_suite("kappa on " + space.to_string(), [&](Suite& s) {
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
        const auto x = HalvingClass::schubert(space, a);
        const auto y = HalvingClass::schubert(space, b);
        s.check(kappa_to_complex(real_double_multiply(x, y)) ==
                    complex_multiply(kappa_to_complex(x), kappa_to_complex(y)),
                [&] { return "kappa(" + a.to_string() + " * " + b.to_string() + ")"; });
      }
  });
}

SuiteResult schur_suite(int max_size, const SelfTestOptions& options) {
  return run_suite("Schur products up to size " + std::to_string(max_size), [&](Suite& s) {
    std::vector<Partition> shapes;
    for (int n = 0; n <= max_size; ++n)
      for (auto& p : partitions_of(n)) shapes.push_back(std::move(p));
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        auto product = schur_multiply(SchurExpansion::basis(a), SchurExpansion::basis(b));
        if (options.flip_lr_sign) product *= Integer(-1);
        const auto expected = oracle_product(a, b);
        s.check(product == expected, [&] { return "s" + a.to_string() + " * s" + b.to_string(); });
      }
    for (int n = 0; n <= 2 * max_size && n <= 8; ++n)
      for (const auto& lambda : partitions_of(n))
        s.check(jacobi_trudi(lambda) == SchurExpansion::basis(lambda),
                [&] { return "jacobi_trudi " + lambda.to_string(); });
  });
}

SuiteResult flag_suite(int n) {
  return run_suite("Fl(C^" + std::to_string(n) + ")", [&](Suite& s) {
    const auto space = FlagDescriptor::complete(n);
    const auto perms = permutations_of(n);
    const auto w0 = Permutation::longest(n);
    for (const auto& v : perms) {
      const auto sv = FlagClass::schubert(space, v);
      for (int r = 1; r < n; ++r)
        s.check(FlagClass::schubert(space, Permutation::simple(r, n)) * sv == monk_multiply(r, sv),
                [&] { return "Monk s_" + std::to_string(r) + " * " + v.to_string(); });
      for (const auto& u : perms) {
        const auto product = FlagClass::schubert(space, u) * sv;
        bool nonnegative = true;
        for (const auto& [w, c] : product.terms()) nonnegative = nonnegative && c > 0;
        s.check(nonnegative, [&] { return "negative constant in " + u.to_string() + " * " + v.to_string(); });
        if (u.length() + v.length() == w0.length())
          s.check(flag_integrate(product) == (v == w0 * u ? 1 : 0),
                  [&] { return "pairing of " + u.to_string() + " and " + v.to_string(); });
      }
    }
  });
}

SuiteResult flag_grassmann_suite() {
  return run_suite("Fl_(2,2)(C^4) against Gr_2(C^4)", [&](Suite& s) {
    const FlagDescriptor flag({2, 2});
    const GrassmannianDescriptor gr(2, 4);
    const auto shapes = partitions_in_box(2, 2);
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        const auto fa = FlagClass::schubert(flag, partition_to_osp(a, 2, 2));
        const auto fb = FlagClass::schubert(flag, partition_to_osp(b, 2, 2));
        const auto gprod = GrassmannClass::schubert(gr, a) * GrassmannClass::schubert(gr, b);
        FlagClass expected(flag);
        for (const auto& [nu, c] : gprod.terms()) expected.add_term(osp_to_permutation(partition_to_osp(nu, 2, 2)), c);
        s.check(fa * fb == expected, [&] { return "Fl_(2,2) product " + a.to_string() + " * " + b.to_string(); });
      }
  });
}

}  // namespace

bool SelfTestReport::ok() const noexcept {
  for (const auto& s : suites)
    if (s.failed > 0) return false;
  return true;
}

SelfTestReport run_selftest(SelfTestLevel level, const SelfTestOptions& options) {
  SelfTestReport report;
  report.suites.push_back(grassmannian_suite(GrassmannianDescriptor(2, 4), options));
  report.suites.push_back(kappa_suite(HalvingSpaceDescriptor::real_even_grassmannian(4, 8)));
  if (level == SelfTestLevel::Full) {
    report.suites.push_back(schur_suite(4, options));
    report.suites.push_back(grassmannian_suite(GrassmannianDescriptor(3, 6), options));
    report.suites.push_back(flag_suite(3));
    report.suites.push_back(flag_suite(4));
    report.suites.push_back(flag_grassmann_suite());
    report.suites.push_back(kappa_suite(HalvingSpaceDescriptor::real_even_flag({2, 2, 2})));
  }
  return report;
}

void print_selftest(std::ostream& out, const SelfTestReport& report) {
  for (const auto& s : report.suites) {
    out << (s.failed ? "FAIL " : "ok   ") << s.name << ": " << s.passed << " passed, " << s.failed << " failed ("
        << s.seconds << " s)\n";
    if (s.failed) out << "  first failure: " << s.first_failure << "\n";
  }
  out << (report.ok() ? "selftest passed" : "selftest FAILED") << "\n";
}

}  // namespace schubert
