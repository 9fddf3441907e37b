// Littlewood-Richardson tableau enumeration.
//
// Rows of nu/lambda are filled top to bottom and each row right to left,
// which is exactly the reverse reading order, so the lattice condition can be
// checked incrementally.  Every LR tableau is produced exactly once.

#include <algorithm>
#include <limits>

#include "schubert/schur.hpp"

namespace schubert {

namespace {

class LrEnumerator {
 public:
  LrEnumerator(const Partition& lambda, const Partition& mu, const Partition* target, std::optional<ShapeBound> bound)
      : lambda_(lambda), mu_(mu), target_(target), bound_(bound) {
    max_rows_ = lambda.length() + mu.length();
    if (target_) max_rows_ = std::max(max_rows_, target_->length());
    if (bound_) max_rows_ = std::min(max_rows_, bound_->rows);
    count_.assign(static_cast<std::size_t>(mu.length()) + 2, 0);
    nu_.assign(static_cast<std::size_t>(std::max(max_rows_, lambda.length())), 0);
    fill_.resize(nu_.size());
  }

  std::map<Partition, Integer> run() {
    if (bound_ && !lambda_.fits_in_box(bound_->rows, bound_->cols)) return {};
    row(0, mu_.size());
    return std::move(found_);
  }

 private:
  int lam(int i) const { return lambda_[i]; }

  // Entry of the filling at (row, col), 0 for cells of lambda.
  int entry(int r, int c) const {
    if (c < lam(r)) return 0;
    return fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - lam(r))];
  }

  void record() {
    std::vector<int> parts(nu_.begin(), nu_.end());
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
      if (i >= filled_rows_) parts[static_cast<std::size_t>(i)] = lam(i);
    Partition nu(std::move(parts));
    if (target_ && nu != *target_) return;
    found_[nu] += 1;
  }

  void row(int i, int remaining) {
    if (remaining == 0) {
      filled_rows_ = i;
      // The rest of the target (if any) must coincide with lambda.
      record();
      return;
    }
    if (i >= max_rows_) return;
    if (i >= static_cast<int>(nu_.size())) return;

    const int above = i == 0 ? std::numeric_limits<int>::max() : nu_[static_cast<std::size_t>(i - 1)];
    int lo = lam(i);
    int hi = std::min(above, lam(i) + remaining);
    if (i == 0) hi = std::min(hi, lam(0) + mu_[0]);
    if (bound_) hi = std::min(hi, bound_->cols);
    if (target_) {
      const int t = (*target_)[i];
      if (t < lo || t > hi) return;
      lo = hi = t;
    }
    // Rows below must still have room: the remaining boxes need rows i..max_rows_-1.
    for (int len = hi; len >= lo; --len) {
      nu_[static_cast<std::size_t>(i)] = len;
      const int added = len - lam(i);
      auto& cells = fill_[static_cast<std::size_t>(i)];
      cells.assign(static_cast<std::size_t>(added), 0);
      fill_cell(i, len - 1, std::min(i + 1, mu_.length()), remaining - added);
    }
    nu_[static_cast<std::size_t>(i)] = 0;
  }

  // Fill column c of row i with a value <= cap, then continue leftwards.
  void fill_cell(int i, int c, int cap, int remaining_after_row) {
    if (c < lam(i)) {
      row(i + 1, remaining_after_row);
      return;
    }
    const int above = i == 0 ? 0 : entry(i - 1, c);
    for (int v = cap; v > above; --v) {
      const auto uv = static_cast<std::size_t>(v);
      if (count_[uv] >= mu_[v - 1]) continue;
      if (v > 1 && count_[uv] + 1 > count_[uv - 1]) continue;
      ++count_[uv];
      fill_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c - lam(i))] = v;
      fill_cell(i, c - 1, v, remaining_after_row);
      --count_[uv];
    }
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition* target_;
  std::optional<ShapeBound> bound_;
  int max_rows_ = 0;
  int filled_rows_ = 0;
  std::vector<int> count_;
  std::vector<int> nu_;
  std::vector<std::vector<int>> fill_;
  std::map<Partition, Integer> found_;
};

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  auto found = LrEnumerator(lambda, mu, &nu, std::nullopt).run();
  auto it = found.find(nu);
  return it == found.end() ? Integer(0) : it->second;
}

std::map<Partition, Integer> lr_expand(const Partition& lambda, const Partition& mu, std::optional<ShapeBound> bound) {
  // The enumeration is cheaper when the factor with fewer boxes supplies the content.
  if (mu.size() > lambda.size()) return LrEnumerator(mu, lambda, nullptr, bound).run();
  return LrEnumerator(lambda, mu, nullptr, bound).run();
}

}  // namespace schubert
