#pragma once

// Counting: factorials, binomial coefficients, the four selection formulas,
// Pascal rows and the binomial probability mass function.

#include "mathbook/scalar.hpp"

#include <cstdint>
#include <vector>

namespace mathbook::comb {

BigInt factorial(std::uint64_t n);

/// p! / (q! (p - q)!), and 0 when q > p.
BigInt binomial(std::uint64_t p, std::uint64_t q);

/// Ordered selections without repetition, n! / (n - k)!. InvalidSelection if k > n.
BigInt perm(std::uint64_t n, std::uint64_t k);

/// Ordered selections with repetition, n^k.
BigInt perm_rep(std::uint64_t n, std::uint64_t k);

/// Multisets of size k from n kinds, C(n + k - 1, k).
BigInt comb_rep(std::uint64_t n, std::uint64_t k);

std::vector<BigInt> pascal_row(std::uint64_t n);

/// P(X = x) for X ~ Bin(n, p), evaluated exactly and rounded once at the end.
Rational binomial_pmf_exact(std::uint64_t n, const Rational& p, std::uint64_t x);
double binomial_pmf(std::uint64_t n, const Rational& p, std::uint64_t x);

}  // namespace mathbook::comb
