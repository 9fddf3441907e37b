#include "schubert/flag.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "schubert/errors.hpp"

namespace schubert {

// FlagDescriptor -----------------------------------------------------------------

FlagDescriptor::FlagDescriptor(std::vector<int> block_sizes) : dims(std::move(block_sizes)) {
  if (dims.empty()) throw Error(ErrorKind::InvalidArgument, "flag manifold needs at least one block");
  for (int d : dims)
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "flag block sizes must be positive");
}

int FlagDescriptor::n() const noexcept { return std::accumulate(dims.begin(), dims.end(), 0); }

int FlagDescriptor::complex_dimension() const noexcept {
  int dim = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    for (std::size_t j = i + 1; j < dims.size(); ++j) dim += dims[i] * dims[j];
  return dim;
}

std::vector<int> FlagDescriptor::partial_sums() const {
  std::vector<int> s;
  int acc = 0;
  for (int d : dims) s.push_back(acc += d);
  return s;
}

bool FlagDescriptor::is_complete() const noexcept {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 1; });
}

std::string FlagDescriptor::to_string() const {
  std::ostringstream out;
  out << "Fl_(";
  for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
  out << ")(C^" << n() << ")";
  return out.str();
}

// FlagClass -------------------------------------------------------------------------

FlagClass FlagClass::one(const FlagDescriptor& space) { return schubert(space, Permutation::identity(space.n())); }

FlagClass FlagClass::schubert(const FlagDescriptor& space, const Permutation& w, const Integer& coeff) {
  FlagClass c(space);
  c.add_term(w, coeff);
  return c;
}

FlagClass FlagClass::schubert(const FlagDescriptor& space, const OrderedSetPartition& index, const Integer& coeff) {
  if (index.block_sizes() != space.dims)
    throw Error(ErrorKind::InvalidArgument, index.to_string() + " does not have the block sizes of " + space.to_string());
  return schubert(space, osp_to_permutation(index), coeff);
}

Integer FlagClass::coefficient(const Permutation& w) const {
  auto it = terms_.find(w.extended(space_.n()));
  return it == terms_.end() ? Integer(0) : it->second;
}

void FlagClass::add_term(const Permutation& w, const Integer& coeff) {
  const int n = space_.n();
  if (w.trimmed().size() > n)
    throw Error(ErrorKind::InvalidArgument, w.to_string() + " is not in S_" + std::to_string(n));
  Permutation key = w.trimmed().extended(n);
  if (!key.is_minimal_coset_rep(space_.dims))
    throw Error(ErrorKind::InvalidArgument, w.to_string() + " is not a minimal coset representative for " + space_.to_string());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FlagClass& FlagClass::operator+=(const FlagClass& other) {
  if (!(space_ == other.space_)) throw Error(ErrorKind::SpaceMismatch, space_.to_string() + " vs " + other.space_.to_string());
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FlagClass& FlagClass::operator-=(const FlagClass& other) {
  if (!(space_ == other.space_)) throw Error(ErrorKind::SpaceMismatch, space_.to_string() + " vs " + other.space_.to_string());
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FlagClass& FlagClass::operator*=(const Integer& scalar) {
  if (scalar == 0) terms_.clear();
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

FlagClass operator*(const FlagClass& a, const FlagClass& b) { return flag_multiply(a, b); }

std::string FlagClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    Integer mag = abs(c);
    if (mag != 1) out << mag.get_str() << '*';
    out << "sigma" << w.to_string();
  }
  return out.str();
}

// Schubert polynomials --------------------------------------------------------------

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

class SchubertCache {
 public:
  static SchubertCache& instance() {
    static SchubertCache cache;
    return cache;
  }

  SparsePolynomial get(const Permutation& w) {
    const Permutation key = w.trimmed();
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key.one_line()); it != table_.end()) return it->second;
    }
    SparsePolynomial p = compute(key);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key.one_line(), std::move(p)).first->second;
  }

 private:
  // Dominant permutations (weakly decreasing code) have S_w = x^code; any other
  // w has an index with c_i < c_{i+1}, where S_w = d_i S_{w s_i}.
  SparsePolynomial compute(const Permutation& w) {
    const auto code = w.code();
    for (std::size_t i = 0; i + 1 < code.size(); ++i) {
      if (code[i] < code[i + 1]) {
        const int idx = static_cast<int>(i) + 1;
        return divided_difference(idx, get(w.times_simple(idx)));
      }
    }
    return SparsePolynomial::monomial(code);
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, SparsePolynomial, VectorHash> table_;
};

SparsePolynomial staircase(int n) {
  Exponent e;
  for (int i = 1; i < n; ++i) e.push_back(n - i);
  return SparsePolynomial::monomial(e);
}

}  // namespace

SchubertPolynomial schubert_polynomial(const Permutation& w) { return {w, SchubertCache::instance().get(w)}; }

SparsePolynomial schubert_polynomial_from_word(const Permutation& w, const std::vector<int>& word) {
  const int n = w.size();
  const Permutation target = w.inverse() * Permutation::longest(n);
  Permutation product = Permutation::identity(n);
  for (int b : word) {
    if (b < 1 || b >= n) throw Error(ErrorKind::InvalidArgument, "letter s_" + std::to_string(b) + " outside S_" + std::to_string(n));
    product = product.times_simple(b);
  }
  if (!(product == target) || static_cast<int>(word.size()) != target.length())
    throw Error(ErrorKind::InvalidArgument, "word is not a reduced word of w^-1 w0 for " + w.to_string());
  SparsePolynomial p = staircase(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(*it, p);
  return p;
}

std::map<Permutation, Integer> expand_in_schubert_basis(const SparsePolynomial& p, int n) {
  for (const auto& [e, c] : p.terms()) {
    bool inside = static_cast<int>(e.size()) <= std::max(n - 1, 0);
    for (std::size_t i = 0; inside && i < e.size(); ++i) inside = e[i] <= n - 1 - static_cast<int>(i);
    if (!inside) {
      throw Error(ErrorKind::SupportOutsideStaircase,
                  "monomial " + SparsePolynomial::monomial(e).to_string() + " lies outside the staircase of S_" + std::to_string(n));
    }
  }
  std::map<Permutation, Integer> out;
  SparsePolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [lead, coeff] = *rest.terms().begin();
    const Permutation w = Permutation::from_code(lead, n);
    const Integer c = coeff;
    rest -= schubert_polynomial(w).polynomial * c;
    out[w] += c;
  }
  return out;
}

namespace {

int ambient_rank(const SparsePolynomial& p, int n) {
  int m = std::max(n, 1);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i) m = std::max(m, e[i] + static_cast<int>(i) + 1);
  return m;
}

}  // namespace

FlagClass polynomial_to_flag_class(const SparsePolynomial& p, const FlagDescriptor& space) {
  const int n = space.n();
  if (p.variable_count() > n)
    throw Error(ErrorKind::InvalidArgument, "polynomial uses variables beyond x_" + std::to_string(n));
  FlagClass out(space);
  for (const auto& [w, c] : expand_in_schubert_basis(p, ambient_rank(p, n))) {
    const Permutation t = w.trimmed();
    if (t.size() > n) continue;  // vanishes on Fl(C^n)
    const Permutation key = t.extended(n);
    if (!key.is_minimal_coset_rep(space.dims))
      throw Error(ErrorKind::InvalidArgument, "polynomial is not invariant under the block permutations of " + space.to_string());
    out.add_term(key, c);
  }
  return out;
}

SparsePolynomial flag_class_polynomial(const FlagClass& a) {
  SparsePolynomial p;
  for (const auto& [w, c] : a.terms()) p += schubert_polynomial(w).polynomial * c;
  return p;
}

FlagClass flag_multiply(const FlagClass& a, const FlagClass& b) {
  if (!(a.space() == b.space()))
    throw Error(ErrorKind::SpaceMismatch, a.space().to_string() + " vs " + b.space().to_string());
  const int dim = a.space().complex_dimension();
  FlagClass out(a.space());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      if (u.length() + v.length() > dim) continue;
      const SparsePolynomial product = schubert_polynomial(u).polynomial * schubert_polynomial(v).polynomial;
      out += polynomial_to_flag_class(product, a.space()) * (cu * cv);
    }
  }
  return out;
}

Integer flag_integrate(const FlagClass& a) {
  return a.coefficient(osp_to_permutation(OrderedSetPartition::longest(a.space().dims)));
}

FlagClass monk_multiply(int r, const FlagClass& a) {
  const auto& space = a.space();
  const int n = space.n();
  const auto sums = space.partial_sums();
  if (r < 1 || r >= n || std::find(sums.begin(), sums.end(), r) == sums.end())
    throw Error(ErrorKind::InvalidArgument, "s_" + std::to_string(r) + " is not a degree-one class of " + space.to_string());
  FlagClass out(space);
  for (const auto& [w, c] : a.terms()) {
    for (int j = 1; j <= r; ++j) {
      for (int k = r + 1; k <= n; ++k) {
        if (w(j) > w(k)) continue;
        bool covers = true;
        for (int l = j + 1; l < k && covers; ++l) covers = !(w(j) < w(l) && w(l) < w(k));
        if (!covers) continue;
        std::vector<int> v = w.one_line();
        std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(k - 1)]);
        out.add_term(Permutation(std::move(v)), c);
      }
    }
  }
  return out;
}

FlagClass flag_chern_class(const FlagDescriptor& space, int bundle, int j) {
  const auto sums = space.partial_sums();
  if (bundle < 1 || bundle > space.block_count())
    throw Error(ErrorKind::IndexOutOfRange, "tautological bundle S_" + std::to_string(bundle) + " on " + space.to_string());
  const int rank = sums[static_cast<std::size_t>(bundle - 1)];
  if (j < 0 || j > rank)
    throw Error(ErrorKind::DegreeOutOfRange, "c_" + std::to_string(j) + " of a rank " + std::to_string(rank) + " bundle");
  // c(S_i) = prod_{t <= s_i} (1 - x_t), so c_j = (-1)^j e_j(x_1..x_{s_i}).
  SparsePolynomial e;
  std::vector<int> pick(static_cast<std::size_t>(rank), 0);
  std::fill(pick.end() - j, pick.end(), 1);
  do {
    e.add_term(Exponent(pick.begin(), pick.end()), j % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return polynomial_to_flag_class(e, space);
}

}  // namespace schubert
