#include "schubert/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

Exponent trim_exponent(Exponent e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

SparsePolynomial::SparsePolynomial(long constant) : SparsePolynomial(Integer(constant)) {}

SparsePolynomial::SparsePolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

SparsePolynomial SparsePolynomial::variable(int i) {
  if (i < 1) throw Error(ErrorKind::IndexOutOfRange, "variables are indexed from 1");
  Exponent e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  return monomial(std::move(e));
}

SparsePolynomial SparsePolynomial::monomial(Exponent exponent, const Integer& coeff) {
  SparsePolynomial p;
  p.add_term(std::move(exponent), coeff);
  return p;
}

int SparsePolynomial::degree() const noexcept {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

int SparsePolynomial::variable_count() const noexcept {
  int n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
  return n;
}

Integer SparsePolynomial::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(trim_exponent(exponent));
  return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePolynomial::add_term(Exponent exponent, const Integer& coeff) {
  if (coeff == 0) return;
  for (int x : exponent)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  auto [it, inserted] = terms_.try_emplace(trim_exponent(std::move(exponent)), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::swap_variables(int i) const {
  SparsePolynomial out;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    if (static_cast<int>(f.size()) < i + 1) f.resize(static_cast<std::size_t>(i + 1), 0);
    std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(i)]);
    out.add_term(std::move(f), c);
  }
  return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out;
  Exponent e;
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      e.assign(std::max(ea.size(), eb.size()), 0);
      for (std::size_t t = 0; t < ea.size(); ++t) e[t] += ea[t];
      for (std::size_t t = 0; t < eb.size(); ++t) e[t] += eb[t];
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

SparsePolynomial pow(const SparsePolynomial& p, unsigned e) {
  SparsePolynomial result(1L);
  for (unsigned t = 0; t < e; ++t) result = result * p;
  return result;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest lex term first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = e.empty();
    if (mag != 1 || constant) out << mag.get_str();
    bool need_star = mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << 'x' << (i + 1);
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

SparsePolynomial divided_difference(int i, const SparsePolynomial& p) {
  if (i < 1) throw Error(ErrorKind::IndexOutOfRange, "divided difference index must be >= 1");
  const auto ui = static_cast<std::size_t>(i - 1);
  SparsePolynomial out;
  for (const auto& [e, c] : p.terms()) {
    Exponent base = e;
    if (base.size() < ui + 2) base.resize(ui + 2, 0);
    const int a = base[ui];
    const int b = base[ui + 1];
    if (a == b) continue;
    // x_i^a x_{i+1}^b with a > b contributes (x_i x_{i+1})^b * h_{a-b-1}(x_i, x_{i+1});
    // a < b is the negative of the swapped case.
    const int lo = std::min(a, b);
    const int span = std::abs(a - b) - 1;
    const Integer coeff = a > b ? c : Integer(-c);
    for (int t = 0; t <= span; ++t) {
      Exponent f = base;
      f[ui] = lo + span - t;
      f[ui + 1] = lo + t;
      out.add_term(std::move(f), coeff);
    }
  }
  return out;
}

}  // namespace schubert
