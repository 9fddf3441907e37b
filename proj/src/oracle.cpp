#include "schubert/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace schubert {

namespace {

// Kostka numbers are symmetric in the order of the content, so cache on the
// sorted nonzero content.
Integer kostka(const Partition& lambda, std::vector<int> content) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, std::vector<int>>, Integer> cache;
  std::erase(content, 0);
  std::sort(content.begin(), content.end(), std::greater<>());
  auto key = std::make_pair(lambda, content);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Integer value = oracle_kostka(lambda, content);
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), value);
  return value;
}

void splits(const std::vector<int>& alpha, std::size_t i, int remaining, std::vector<int>& beta,
            const std::function<void()>& visit) {
  if (i == alpha.size()) {
    if (remaining == 0) visit();
    return;
  }
  for (int b = std::min(alpha[i], remaining); b >= 0; --b) {
    beta[i] = b;
    splits(alpha, i + 1, remaining - b, beta, visit);
  }
  beta[i] = 0;
}

}  // namespace

Integer oracle_product_monomial(const Partition& lambda, const Partition& mu, const std::vector<int>& alpha) {
  Integer total = 0;
  std::vector<int> beta(alpha.size(), 0);
  splits(alpha, 0, lambda.size(), beta, [&] {
    std::vector<int> gamma(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) gamma[i] = alpha[i] - beta[i];
    const Integer left = kostka(lambda, beta);
    if (left == 0) return;
    total += left * kostka(mu, gamma);
  });
  return total;
}

SchurExpansion oracle_product(const Partition& lambda, const Partition& mu, int max_rows) {
  const int size = lambda.size() + mu.size();
  auto shapes = partitions_of(size);
  if (max_rows >= 0) std::erase_if(shapes, [&](const Partition& p) { return p.length() > max_rows; });
  // Anything dominating a shape with at most max_rows rows has at most
  // max_rows rows too, so the truncated peeling is exact on what remains.
  // Lex-decreasing order refines dominance, so every nu dominating alpha is
  // settled before alpha.
  std::sort(shapes.begin(), shapes.end(), [](const Partition& a, const Partition& b) { return b < a; });
  SchurExpansion out;
  for (const auto& alpha : shapes) {
    Integer c = oracle_product_monomial(lambda, mu, alpha.parts());
    for (const auto& [nu, coeff] : out.terms()) c -= coeff * kostka(nu, alpha.parts());
    out.add_term(alpha, c);
  }
  return out;
}

}  // namespace schubert
