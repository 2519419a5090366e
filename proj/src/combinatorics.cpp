#include "mathbook/combinatorics.hpp"

#include "mathbook/error.hpp"

#include <gmp.h>

namespace mathbook::comb {

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.backend().data(), n);
  return out;
}

BigInt binomial(std::uint64_t p, std::uint64_t q) {
  if (q > p) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.backend().data(), p, q);
  return out;
}

BigInt perm(std::uint64_t n, std::uint64_t k) {
  if (k > n) raise(ErrorKind::InvalidSelection, "cannot pick more items than the pool holds");
  BigInt out(1);
  for (std::uint64_t i = n - k + 1; i <= n; ++i) out *= i;
  return out;
}

BigInt perm_rep(std::uint64_t n, std::uint64_t k) {
  if (k > std::numeric_limits<unsigned>::max()) raise(ErrorKind::InvalidInput, "exponent too large");
  return pow(BigInt(n), static_cast<unsigned>(k));
}

BigInt comb_rep(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return BigInt(k == 0 ? 1 : 0);
  return binomial(n + k - 1, k);
}

std::vector<BigInt> pascal_row(std::uint64_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

Rational binomial_pmf_exact(std::uint64_t n, const Rational& p, std::uint64_t x) {
  if (p < 0 || p > 1) raise(ErrorKind::InvalidProbability, "p must lie in [0, 1]");
  if (x > n) raise(ErrorKind::InvalidSelection, "successes exceed trials");
  if (n > std::numeric_limits<unsigned>::max()) raise(ErrorKind::InvalidInput, "too many trials");
  const Rational q = Rational(1) - p;
  return Rational(binomial(n, x)) * pow(p, static_cast<unsigned>(x)) *
         pow(q, static_cast<unsigned>(n - x));
}

double binomial_pmf(std::uint64_t n, const Rational& p, std::uint64_t x) {
  return to_double(binomial_pmf_exact(n, p, x));
}

}  // namespace mathbook::comb
