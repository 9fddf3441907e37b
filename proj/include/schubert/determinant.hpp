#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

/// Determinant over a commutative ring with no division available, by
/// Laplace expansion along rows with minors memoized on the set of columns
/// already used.  `zero` and `one` are the ring's identities (they carry
/// context such as the ambient space).  Zero entries are skipped via
/// `is_zero(entry)`.
template <class T, class IsZero>
T laplace_determinant(const std::vector<std::vector<T>>& matrix, const T& zero, const T& one, IsZero is_zero) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n > 24) throw Error(ErrorKind::InvalidArgument, "determinant too large for Laplace expansion");
  if (n == 0) return one;

  std::unordered_map<std::uint32_t, T> memo;
  const std::uint32_t full = (1u << n) - 1u;

  // minor(mask) = determinant of rows popcount(mask).. with columns outside mask.
  auto minor = [&](auto&& self, std::uint32_t used) -> T {
    if (used == full) return one;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const std::size_t row = static_cast<std::size_t>(std::popcount(used));
    T acc = zero;
    int position = 0;
    for (std::size_t col = 0; col < n; ++col) {
      const std::uint32_t bit = 1u << col;
      if (used & bit) continue;
      const T& entry = matrix[row][col];
      if (!is_zero(entry)) {
        T term = entry * self(self, used | bit);
        if (position % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(minor, 0u);
}

}  // namespace schubert
