#pragma once

// Combinatorial index types for Schubert classes: partitions (Grassmannians),
// ordered set partitions (partial flags) and permutations (complete flags),
// together with the doubling maps used by the real/quaternionic layer.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace schubert {

/// Weakly decreasing sequence of positive integers.  Trailing zeros are
/// stripped on construction so equal diagrams compare equal structurally.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The full rows x cols rectangle.
  static Partition box(int rows, int cols);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero past the last row.
  int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  Partition conjugate() const;
  bool fits_in_box(int rows, int cols) const noexcept;
  bool contains(const Partition& inner) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Canonical term order: by size, then lexicographically by parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordered list of disjoint blocks whose union is {1..N}.  Elements inside a
/// block are kept sorted; the block order is significant.
class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

  /// ({1..d1}, {d1+1..d1+d2}, ...): the index of the unit class.
  static OrderedSetPartition identity(const std::vector<int>& block_sizes);
  /// Blocks filled from the top down: the index of the point class.
  static OrderedSetPartition longest(const std::vector<int>& block_sizes);

  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int ground_size() const noexcept { return ground_size_; }
  std::vector<int> block_sizes() const;

  std::string to_string() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int ground_size_ = 0;
};

/// Permutation of {1..n} in one-line notation.  Values past n are fixed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// The adjacent transposition s_i in S_n (1 <= i < n).
  static Permutation simple(int i, int n);
  /// Inverse of `code()`: the permutation of S_n with the given Lehmer code.
  static Permutation from_code(const std::vector<int>& code, int n);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  /// w(i) for 1-based i; i itself when i > size().
  int operator()(int i) const noexcept {
    return i <= size() ? one_line_[static_cast<std::size_t>(i - 1)] : i;
  }
  const std::vector<int>& one_line() const noexcept { return one_line_; }
  int length() const noexcept { return length_; }

  Permutation inverse() const;
  /// w * s_i: swaps the entries in positions i and i+1.
  Permutation times_simple(int i) const;
  /// Same permutation viewed in S_m, m >= size().
  Permutation extended(int m) const;
  /// Drops trailing fixed points; the stable S_infinity representative.
  Permutation trimmed() const;

  /// Lehmer code c_i = #{j > i : w(j) < w(i)}, trimmed of trailing zeros.
  std::vector<int> code() const;
  /// A reduced word (a_1..a_l) with w = s_{a_1} ... s_{a_l}.
  std::vector<int> reduced_word() const;
  /// True when w only has descents at the partial sums of `block_sizes`.
  bool is_minimal_coset_rep(const std::vector<int>& block_sizes) const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.one_line_ == b.one_line_;
  }
  /// Orders by length, then one-line notation.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

 private:
  std::vector<int> one_line_;
  int length_ = 0;
};

/// Rank table r(i,k) = #{l in I_1 u ... u I_i : l <= k}, the dimensions
/// dim(F_i n A_k) cutting out the Schubert cell of I.
class RankFunction {
 public:
  explicit RankFunction(const OrderedSetPartition& osp);
  /// 1 <= i <= blocks, 1 <= k <= N; throws Error(IndexOutOfRange).
  int operator()(int i, int k) const;
  int blocks() const noexcept { return blocks_; }
  int ground_size() const noexcept { return ground_size_; }

 private:
  int blocks_;
  int ground_size_;
  std::vector<int> table_;
};

// Doubling ------------------------------------------------------------------

/// Subdivides each box into a 2x2 square: (a,b,..) -> (2a,2a,2b,2b,..).
Partition partition_double(const Partition& lambda);
/// Inverse of partition_double; throws Error(NotADouble).
Partition partition_halve(const Partition& lambda);
bool is_double(const Partition& lambda) noexcept;

/// Replaces each element i of a block by the pair (2i-1, 2i).
OrderedSetPartition osp_double(const OrderedSetPartition& osp);
/// Inverse of osp_double; throws Error(NotADouble).
OrderedSetPartition osp_halve(const OrderedSetPartition& osp);
bool is_double(const OrderedSetPartition& osp) noexcept;

// Lengths and ranks -----------------------------------------------------------

/// Inter-block inversions #{(a,b): a in I_i, b in I_j, i < j, a > b}; the
/// complex codimension of the Schubert cell.
int osp_length(const OrderedSetPartition& osp);
int osp_rank(const OrderedSetPartition& osp, int i, int k);

// Dictionaries ------------------------------------------------------------------

/// lambda inside the k x l box  <->  two-block OSP on {1..k+l} whose first
/// block is {lambda_k + 1, lambda_{k-1} + 2, ..., lambda_1 + k}.
/// Throws Error(BoxOverflow) when lambda does not fit.
OrderedSetPartition partition_to_osp(const Partition& lambda, int k, int l);
/// Inverse of partition_to_osp; requires exactly two blocks.
Partition osp_to_partition(const OrderedSetPartition& osp);

/// Minimal coset representative: blocks written in increasing order, concatenated.
Permutation osp_to_permutation(const OrderedSetPartition& osp);
/// Coset of w modulo S_{d_1} x ... x S_{d_m}: block j collects the values in
/// the j-th run of positions.
OrderedSetPartition permutation_to_osp(const Permutation& w, const std::vector<int>& block_sizes);

/// All partitions inside the rows x cols box, in canonical order.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// All partitions of `n`.
std::vector<Partition> partitions_of(int n);
/// All permutations of S_n in lexicographic one-line order.
std::vector<Permutation> permutations_of(int n);

}  // namespace schubert
