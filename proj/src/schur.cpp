#include "schubert/schur.hpp"

#include <sstream>

#include "schubert/determinant.hpp"
#include "schubert/errors.hpp"

namespace schubert {

// SchurExpansion -------------------------------------------------------------

SchurExpansion SchurExpansion::basis(const Partition& lambda, const Integer& coeff) {
  SchurExpansion s;
  s.add_term(lambda, coeff);
  return s;
}

Integer SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchurExpansion::add_term(const Partition& lambda, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SchurExpansion& SchurExpansion::operator*=(const Integer& scalar) {
  if (scalar == 0) terms_.clear();
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

SchurExpansion& SchurExpansion::operator*=(const SchurExpansion& other) {
  *this = schur_multiply(*this, other);
  return *this;
}

SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b) { return schur_multiply(a, b); }

std::string SchurExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    Integer mag = abs(c);
    if (mag != 1) out << mag.get_str() << '*';
    out << 's' << p.to_string();
  }
  return out.str();
}

// Products ----------------------------------------------------------------------

SchurExpansion schur_multiply(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out;
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      const Integer scale = ca * cb;
      for (const auto& [nu, c] : lr_expand(la, lb)) out.add_term(nu, scale * c);
    }
  }
  return out;
}

namespace {

// Horizontal strips of size p added to lambda.
void horizontal_strips(const Partition& lambda, int row, int remaining, std::vector<int>& nu, SchurExpansion& out) {
  if (remaining == 0) {
    std::vector<int> parts = nu;
    for (int i = row; i < lambda.length(); ++i) parts.push_back(lambda[i]);
    out.add_term(Partition(std::move(parts)), 1);
    return;
  }
  if (row > lambda.length()) return;
  // Row `row` may grow up to the old length of the row above.
  const int cap = row == 0 ? lambda[0] + remaining : lambda[row - 1];
  for (int len = std::min(cap, lambda[row] + remaining); len >= lambda[row]; --len) {
    nu.push_back(len);
    horizontal_strips(lambda, row + 1, remaining - (len - lambda[row]), nu, out);
    nu.pop_back();
  }
}

}  // namespace

SchurExpansion pieri(const Partition& lambda, int p, PieriKind kind) {
  if (p < 0) throw Error(ErrorKind::InvalidArgument, "Pieri degree must be nonnegative");
  if (kind == PieriKind::Column) {
    SchurExpansion conj;
    const auto rows = pieri(lambda.conjugate(), p, PieriKind::Row);
    for (const auto& [nu, c] : rows.terms()) conj.add_term(nu.conjugate(), c);
    return conj;
  }
  SchurExpansion out;
  std::vector<int> nu;
  horizontal_strips(lambda, 0, p, nu, out);
  return out;
}

SchurExpansion jacobi_trudi(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<std::vector<SchurExpansion>> matrix(static_cast<std::size_t>(l),
                                                  std::vector<SchurExpansion>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int degree = lambda[i] + j - i;
      if (degree >= 0) matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = SchurExpansion::basis(Partition{degree});
    }
  return laplace_determinant(matrix, SchurExpansion{}, SchurExpansion::one(),
                             [](const SchurExpansion& s) { return s.is_zero(); });
}

// Oracle ---------------------------------------------------------------------------

namespace {

// Semistandard fillings, row by row and left to right.
class TableauWalker {
 public:
  TableauWalker(const Partition& shape, int max_entry, const std::vector<int>* content)
      : shape_(shape), max_entry_(max_entry), content_(content) {
    for (int i = 0; i < shape.length(); ++i) grid_.emplace_back(static_cast<std::size_t>(shape[i]), 0);
    used_.assign(static_cast<std::size_t>(max_entry) + 1, 0);
  }

  template <class Visit>
  void walk(Visit&& visit) {
    step(0, 0, visit);
  }

  const std::vector<int>& used() const { return used_; }

 private:
  template <class Visit>
  void step(int r, int c, Visit& visit) {
    if (r == shape_.length()) {
      visit(used_);
      return;
    }
    if (c == shape_[r]) {
      step(r + 1, 0, visit);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= max_entry_; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (content_ && used_[uv] >= (*content_)[uv - 1]) continue;
      grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      ++used_[uv];
      step(r, c + 1, visit);
      --used_[uv];
    }
  }

  const Partition& shape_;
  int max_entry_;
  const std::vector<int>* content_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> used_;
};

}  // namespace

SparsePolynomial oracle_schur_polynomial(const Partition& lambda, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "oracle needs at least one variable");
  SparsePolynomial out;
  if (lambda.length() > n) return out;
  TableauWalker walker(lambda, n, nullptr);
  walker.walk([&](const std::vector<int>& used) {
    out.add_term(Exponent(used.begin() + 1, used.end()), 1);
  });
  return out;
}

Integer oracle_kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative content");
    total += c;
  }
  if (total != lambda.size() || content.empty()) return lambda.size() == 0 && total == 0 ? 1 : 0;
  Integer count = 0;
  TableauWalker walker(lambda, static_cast<int>(content.size()), &content);
  walker.walk([&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace schubert
