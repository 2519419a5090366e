#pragma once

// Integer arithmetic: congruences, modular inverses and powers, divisibility
// criteria, primes, gcd/lcm, the Chinese remainder theorem, Z_m composition
// tables and ISBN-10 check digits. Everything is arbitrary precision.

#include "mathbook/scalar.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mathbook::nt {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; the product of p^e is the factored integer.
using Factorization = std::vector<PrimePower>;

/// A residue class `residue (mod modulus)` with 0 <= residue < modulus.
class Congruence {
 public:
  /// Reduces `residue` into [0, modulus). Throws InvalidModulus if modulus <= 1.
  Congruence(const BigInt& residue, const BigInt& modulus);

  const BigInt& residue() const noexcept { return residue_; }
  const BigInt& modulus() const noexcept { return modulus_; }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  BigInt residue_;
  BigInt modulus_;
};

/// Mathematical residue in [0, m), also for negative n.
BigInt mod_reduce(const BigInt& n, const BigInt& m);

/// base^exp mod m by square-and-multiply.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m);

/// x in [1, m) with a*x = 1 (mod m), or nothing when gcd(a, m) != 1.
std::optional<BigInt> inv_mod(const BigInt& a, const BigInt& m);

BigInt gcd_euclid(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Bezout coefficients: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

std::vector<std::uint64_t> sieve_eratosthenes(std::uint64_t limit);

/// Trial division up to the square root of the unfactored part.
Factorization factorize(const BigInt& n);
BigInt expand(const Factorization& f);

bool is_prime(const BigInt& n);
BigInt next_prime(const BigInt& n);

/// Decides d | n with the schoolbook digit rules (last digits, digit sums,
/// alternating sums) rather than by division. d must be one of
/// 2, 3, 4, 5, 8, 9, 10, 11.
bool digit_divisibility(const BigInt& n, unsigned d);

struct CrtSolution {
  BigInt residue;
  BigInt modulus;

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// Merges the system pairwise; moduli need not be coprime. Nothing is
/// returned when two congruences contradict each other.
std::optional<CrtSolution> crt_solve(std::span<const Congruence> system);

enum class TableOp { Add, Mul };

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Composition table of Z_m: entry (i, j) = (i op j) mod m.
IntMatrix cayley_table(std::int64_t m, TableOp op);

/// ISBN-10 with hyphens or spaces stripped; 'X' stands for 10 in the last slot.
/// Throws ParseError on malformed input.
char isbn10_check_digit(std::string_view first9);
bool isbn10_validate(std::string_view isbn);

/// Digits of an ISBN string with separators removed, validated for length.
std::string isbn10_normalize(std::string_view text, std::size_t expected_length);

}  // namespace mathbook::nt
