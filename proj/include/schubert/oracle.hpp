#pragma once

// Littlewood-Richardson-free reference computations built on semistandard
// tableau counts.  Used by the self-test suites and the unit tests.

#include "schubert/indexing.hpp"
#include "schubert/integer.hpp"
#include "schubert/schur.hpp"

namespace schubert {

/// Coefficient of x^alpha in s_lambda * s_mu, as a sum over splits alpha = beta + gamma
/// of Kostka products K_{lambda,beta} K_{mu,gamma}.
Integer oracle_product_monomial(const Partition& lambda, const Partition& mu, const std::vector<int>& alpha);

/// s_lambda * s_mu expanded in Schur functions by peeling monomial coefficients
/// in decreasing dominance order against the unitriangular Kostka matrix.
/// With max_rows >= 0 only shapes with at most that many rows are computed.
SchurExpansion oracle_product(const Partition& lambda, const Partition& mu, int max_rows = -1);

}  // namespace schubert
