#include "schubert/indexing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

}  // namespace

// Partition -------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw Error(ErrorKind::InvalidArgument, "negative part in partition (" + join(parts_) + ")");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::InvalidArgument, "parts must be weakly decreasing: (" + join(parts_) + ")");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidArgument, "negative box dimension");
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_)
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

bool Partition::fits_in_box(int rows, int cols) const noexcept {
  return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::to_string() const { return "(" + join(parts_) + ")"; }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

// OrderedSetPartition --------------------------------------------------------------

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  int n = 0;
  for (auto& block : blocks_) {
    std::sort(block.begin(), block.end());
    n += static_cast<int>(block.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& block : blocks_) {
    for (int x : block) {
      if (x < 1 || x > n)
        throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(x) + " outside {1.." + std::to_string(n) + "}");
      if (seen[static_cast<std::size_t>(x)])
        throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(x) + " repeated across blocks");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  ground_size_ = n;
}

OrderedSetPartition OrderedSetPartition::identity(const std::vector<int>& block_sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int d : block_sizes) {
    if (d < 0) throw Error(ErrorKind::InvalidArgument, "block sizes must be nonnegative");
    std::vector<int> block(static_cast<std::size_t>(d));
    std::iota(block.begin(), block.end(), next);
    next += d;
    blocks.push_back(std::move(block));
  }
  return OrderedSetPartition(std::move(blocks));
}

OrderedSetPartition OrderedSetPartition::longest(const std::vector<int>& block_sizes) {
  int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<std::vector<int>> blocks;
  int top = n;
  for (int d : block_sizes) {
    if (d < 0) throw Error(ErrorKind::InvalidArgument, "block sizes must be nonnegative");
    std::vector<int> block;
    for (int t = top - d + 1; t <= top; ++t) block.push_back(t);
    top -= d;
    blocks.push_back(std::move(block));
  }
  return OrderedSetPartition(std::move(blocks));
}

std::vector<int> OrderedSetPartition::block_sizes() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

std::string OrderedSetPartition::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (j) s += ',';
    s += '{' + join(blocks_[j]) + '}';
  }
  return s + ")";
}

// Permutation -----------------------------------------------------------------

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidArgument, "not a permutation of 1.." + std::to_string(n) + ": [" + join(one_line_) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (one_line_[static_cast<std::size_t>(i)] > one_line_[static_cast<std::size_t>(j)]) ++length_;
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "simple transposition s_" + std::to_string(i) + " not in S_" + std::to_string(n));
  return identity(n).times_simple(i);
}

Permutation Permutation::from_code(const std::vector<int>& code, int n) {
  std::vector<int> available(static_cast<std::size_t>(n));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    if (c < 0 || c >= static_cast<int>(available.size()))
      throw Error(ErrorKind::InvalidArgument, "code entry out of range for S_" + std::to_string(n));
    out.push_back(available[static_cast<std::size_t>(c)]);
    available.erase(available.begin() + c);
  }
  if (static_cast<int>(code.size()) > n)
    for (std::size_t i = static_cast<std::size_t>(n); i < code.size(); ++i)
      if (code[i] != 0) throw Error(ErrorKind::InvalidArgument, "code longer than n");
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::times_simple(int i) const {
  Permutation w = i + 1 > size() ? extended(i + 1) : *this;
  auto a = static_cast<std::size_t>(i - 1);
  std::swap(w.one_line_[a], w.one_line_[a + 1]);
  w.length_ += w.one_line_[a] > w.one_line_[a + 1] ? 1 : -1;
  return w;
}

Permutation Permutation::extended(int m) const {
  if (m <= size()) return *this;
  std::vector<int> v = one_line_;
  for (int i = size() + 1; i <= m; ++i) v.push_back(i);
  Permutation w;
  w.one_line_ = std::move(v);
  w.length_ = length_;
  return w;
}

Permutation Permutation::trimmed() const {
  Permutation w = *this;
  while (!w.one_line_.empty() && w.one_line_.back() == static_cast<int>(w.one_line_.size()))
    w.one_line_.pop_back();
  return w;
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(one_line_.size(), 0);
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    for (std::size_t j = i + 1; j < one_line_.size(); ++j)
      if (one_line_[j] < one_line_[i]) ++c[i];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::vector<int> Permutation::reduced_word() const {
  // Strip right descents: w = (w s_i) s_i with l(w s_i) = l(w) - 1.
  std::vector<int> word;
  Permutation w = *this;
  while (w.length() > 0) {
    for (int i = 1; i < w.size(); ++i) {
      if (w(i) > w(i + 1)) {
        word.push_back(i);
        w = w.times_simple(i);
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool Permutation::is_minimal_coset_rep(const std::vector<int>& block_sizes) const {
  std::vector<bool> allowed(one_line_.size() + 1, false);
  int s = 0;
  for (int d : block_sizes) {
    s += d;
    if (s < static_cast<int>(allowed.size())) allowed[static_cast<std::size_t>(s)] = true;
  }
  for (int i = 1; i < size(); ++i)
    if ((*this)(i) > (*this)(i + 1) && !allowed[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::string Permutation::to_string() const { return "[" + join(one_line_) + "]"; }

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(out));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  return a.one_line_ <=> b.one_line_;
}

// RankFunction ------------------------------------------------------------------

RankFunction::RankFunction(const OrderedSetPartition& osp)
    : blocks_(osp.block_count()), ground_size_(osp.ground_size()) {
  std::vector<int> block_of(static_cast<std::size_t>(ground_size_) + 1, 0);
  for (int j = 0; j < blocks_; ++j)
    for (int x : osp.blocks()[static_cast<std::size_t>(j)]) block_of[static_cast<std::size_t>(x)] = j + 1;
  table_.assign(static_cast<std::size_t>(blocks_ * ground_size_), 0);
  for (int i = 1; i <= blocks_; ++i) {
    int count = 0;
    for (int k = 1; k <= ground_size_; ++k) {
      if (block_of[static_cast<std::size_t>(k)] <= i) ++count;
      table_[static_cast<std::size_t>((i - 1) * ground_size_ + (k - 1))] = count;
    }
  }
}

int RankFunction::operator()(int i, int k) const {
  if (i < 1 || i > blocks_ || k < 1 || k > ground_size_)
    throw Error(ErrorKind::IndexOutOfRange, "rank index (" + std::to_string(i) + "," + std::to_string(k) +
                                                ") outside [1," + std::to_string(blocks_) + "]x[1," +
                                                std::to_string(ground_size_) + "]");
  return table_[static_cast<std::size_t>((i - 1) * ground_size_ + (k - 1))];
}

// Doubling ----------------------------------------------------------------------

Partition partition_double(const Partition& lambda) {
  std::vector<int> parts;
  parts.reserve(2 * lambda.parts().size());
  for (int p : lambda.parts()) {
    parts.push_back(2 * p);
    parts.push_back(2 * p);
  }
  return Partition(std::move(parts));
}

bool is_double(const Partition& lambda) noexcept {
  const auto& p = lambda.parts();
  if (p.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < p.size(); i += 2)
    if (p[i] % 2 != 0 || p[i] != p[i + 1]) return false;
  return true;
}

Partition partition_halve(const Partition& lambda) {
  if (!is_double(lambda))
    throw Error(ErrorKind::NotADouble, lambda.to_string() + " is not the double of a partition");
  std::vector<int> parts;
  for (std::size_t i = 0; i < lambda.parts().size(); i += 2) parts.push_back(lambda.parts()[i] / 2);
  return Partition(std::move(parts));
}

OrderedSetPartition osp_double(const OrderedSetPartition& osp) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : osp.blocks()) {
    std::vector<int> doubled;
    for (int i : block) {
      doubled.push_back(2 * i - 1);
      doubled.push_back(2 * i);
    }
    blocks.push_back(std::move(doubled));
  }
  return OrderedSetPartition(std::move(blocks));
}

bool is_double(const OrderedSetPartition& osp) noexcept {
  for (const auto& block : osp.blocks()) {
    if (block.size() % 2 != 0) return false;
    for (std::size_t t = 0; t < block.size(); t += 2)
      if (block[t] % 2 != 1 || block[t + 1] != block[t] + 1) return false;
  }
  return true;
}

OrderedSetPartition osp_halve(const OrderedSetPartition& osp) {
  if (!is_double(osp))
    throw Error(ErrorKind::NotADouble, osp.to_string() + " is not a doubled ordered set partition");
  std::vector<std::vector<int>> blocks;
  for (const auto& block : osp.blocks()) {
    std::vector<int> half;
    for (std::size_t t = 0; t < block.size(); t += 2) half.push_back(block[t + 1] / 2);
    blocks.push_back(std::move(half));
  }
  return OrderedSetPartition(std::move(blocks));
}

// Lengths and ranks ----------------------------------------------------------------

int osp_length(const OrderedSetPartition& osp) {
  int inversions = 0;
  const auto& blocks = osp.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (int a : blocks[i])
        for (int b : blocks[j])
          if (a > b) ++inversions;
  return inversions;
}

int osp_rank(const OrderedSetPartition& osp, int i, int k) { return RankFunction(osp)(i, k); }

// Dictionaries ------------------------------------------------------------------------

OrderedSetPartition partition_to_osp(const Partition& lambda, int k, int l) {
  if (k < 0 || l < 0) throw Error(ErrorKind::InvalidArgument, "negative box dimension");
  if (!lambda.fits_in_box(k, l))
    throw Error(ErrorKind::BoxOverflow, lambda.to_string() + " does not fit in the " + std::to_string(k) + "x" +
                                            std::to_string(l) + " box");
  std::vector<int> first;
  std::vector<bool> used(static_cast<std::size_t>(k + l) + 1, false);
  for (int i = 1; i <= k; ++i) {
    int a = lambda[k - i] + i;
    first.push_back(a);
    used[static_cast<std::size_t>(a)] = true;
  }
  std::vector<int> second;
  for (int x = 1; x <= k + l; ++x)
    if (!used[static_cast<std::size_t>(x)]) second.push_back(x);
  return OrderedSetPartition({std::move(first), std::move(second)});
}

Partition osp_to_partition(const OrderedSetPartition& osp) {
  if (osp.block_count() != 2)
    throw Error(ErrorKind::InvalidArgument, "Grassmannian dictionary needs two blocks, got " + osp.to_string());
  const auto& first = osp.blocks()[0];
  const int k = static_cast<int>(first.size());
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) parts[static_cast<std::size_t>(k - i)] = first[static_cast<std::size_t>(i - 1)] - i;
  return Partition(std::move(parts));
}

Permutation osp_to_permutation(const OrderedSetPartition& osp) {
  std::vector<int> one_line;
  for (const auto& block : osp.blocks()) one_line.insert(one_line.end(), block.begin(), block.end());
  return Permutation(std::move(one_line));
}

OrderedSetPartition permutation_to_osp(const Permutation& w, const std::vector<int>& block_sizes) {
  int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (w.size() > n || w.trimmed().size() > n)
    throw Error(ErrorKind::InvalidArgument, w.to_string() + " does not live in S_" + std::to_string(n));
  std::vector<std::vector<int>> blocks;
  int pos = 1;
  for (int d : block_sizes) {
    std::vector<int> block;
    for (int t = 0; t < d; ++t) block.push_back(w(pos++));
    blocks.push_back(std::move(block));
  }
  return OrderedSetPartition(std::move(blocks));
}

// Enumeration ---------------------------------------------------------------------

namespace {

void box_partitions(int rows, int cols, std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == rows) return;
  int cap = prefix.empty() ? cols : prefix.back();
  for (int p = 1; p <= cap; ++p) {
    prefix.push_back(p);
    box_partitions(rows, cols, prefix, out);
    prefix.pop_back();
  }
}

void partitions_rec(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(cap, remaining); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  box_partitions(rows, cols, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (n >= 0) partitions_rec(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace schubert
