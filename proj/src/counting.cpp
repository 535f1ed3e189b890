#include "qbmap/counting.hpp"

#include <stdexcept>

namespace qbmap {

namespace {

void check(int n, int sigma) {
  if (n < 0 || sigma < 1) throw std::invalid_argument("need n >= 0 and sigma >= 1");
}

BigInt pow3(int n) {
  BigInt r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt count_forests(int n, int sigma) {
  check(n, sigma);
  return pow3(n) * sigma * binomial(2 * n + sigma, n) / (2 * n + sigma);
}

BigInt count_bridges(int sigma) {
  if (sigma < 1) throw std::invalid_argument("need sigma >= 1");
  return binomial(2 * sigma, sigma);
}

BigInt count_quadrangulations(int n, int sigma) {
  check(n, sigma);
  return pow3(n) * factorial(2 * sigma) * factorial(2 * n + sigma - 1) /
         (factorial(sigma) * factorial(sigma - 1) * factorial(n) * factorial(n + sigma + 1));
}

BigInt count_formula(char kind, int n, int sigma) {
  switch (kind) {
    case 'F': return count_forests(n, sigma);
    case 'B': return count_bridges(sigma);
    case 'Q': return count_quadrangulations(n, sigma);
    default: throw std::invalid_argument(std::string("unknown count kind ") + kind);
  }
}

}  // namespace qbmap
