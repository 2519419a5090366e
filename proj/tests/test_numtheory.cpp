#include "doctest.h"
#include "test_support.hpp"

#include "mathbook/numtheory.hpp"

#include <random>

using namespace mathbook;
using namespace mathbook::nt;

TEST_CASE("mod_reduce") {
  CHECK(mod_reduce(7, 3) == 1);
  CHECK(mod_reduce(138, 6) == 0);
  CHECK(mod_reduce(-181, 11) == 6);
  CHECK(mod_reduce(-5, 11) == mod_reduce(-181, 11));
  CHECK_KIND(mod_reduce(3, 0), InvalidModulus);
  CHECK_KIND(mod_reduce(3, -4), InvalidModulus);
}

TEST_CASE("mod_pow") {
  CHECK(mod_pow(72, 17, 143) == 63);
  CHECK(mod_pow(97, 17, 143) == 15);
  CHECK(mod_pow(5, 0, 7) == 1);
  CHECK_KIND(mod_pow(5, 2, 1), InvalidModulus);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t b = rng() % 1000, e = rng() % 40, m = 2 + rng() % 500;
    std::uint64_t naive = 1 % m;
    for (std::uint64_t i = 0; i < e; ++i) naive = naive * b % m;
    CHECK(mod_pow(b, e, m) == naive);
  }
}

TEST_CASE("inv_mod") {
  CHECK(inv_mod(13, 3) == BigInt(1));
  CHECK_FALSE(inv_mod(6, 3).has_value());
  CHECK(inv_mod(25, 26) == BigInt(25));

  for (int m = 2; m < 60; ++m)
    for (int a = -30; a < 60; ++a) {
      const auto x = inv_mod(a, m);
      REQUIRE(x.has_value() == (gcd_euclid(a, m) == 1));
      if (x) CHECK(mod_reduce(BigInt(a) * *x, m) == 1);
    }
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd_euclid(1620, 1575) == 45);
  CHECK(lcm(1620, 1575) == 56700);
  CHECK(gcd_euclid(-12, 0) == 12);
  CHECK(gcd_euclid(0, 0) == 0);
  CHECK(lcm(9, 0) == 0);

  BigInt x, y;
  const BigInt g = extended_gcd(1620, 1575, x, y);
  CHECK(g == 45);
  CHECK(1620 * x + 1575 * y == g);
}

TEST_CASE("sieve") {
  CHECK(sieve_eratosthenes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve_eratosthenes(2) == std::vector<std::uint64_t>{2});
  const auto p100 = sieve_eratosthenes(100);
  CHECK(p100.size() == 25);
  CHECK(p100.back() == 97);
  CHECK_KIND(sieve_eratosthenes(1), EmptyRange);

  const auto primes = sieve_eratosthenes(10000);
  std::vector<std::uint64_t> by_test;
  for (std::uint64_t n = 0; n <= 10000; ++n)
    if (is_prime(n)) by_test.push_back(n);
  CHECK(primes == by_test);
}

TEST_CASE("factorize") {
  CHECK(factorize(2475) == Factorization{{3, 2}, {5, 2}, {11, 1}});
  CHECK(factorize(2) == Factorization{{2, 1}});
  const Factorization big{{2, 2}, {5, 1}, {19, 1}, {1998643, 1}, {BigInt("841738751563495613665777"), 1}};
  CHECK(factorize(BigInt("639287400183625434237847625432180")) == big);
  CHECK_KIND(factorize(1), InvalidInput);
}

TEST_CASE("primality") {
  CHECK(is_prime(113));
  CHECK_FALSE(is_prime(2475));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(-7));
  CHECK(next_prime(BigInt("18376453728920832746324838939938376346565")) ==
        BigInt("18376453728920832746324838939938376346577"));
  CHECK(next_prime(13) == 17);
  // Carmichael numbers and a strong pseudoprime to bases 2 and 3.
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(41041));
  CHECK_FALSE(is_prime(1373653));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST_CASE("digit divisibility") {
  CHECK(digit_divisibility(32527, 11));
  CHECK_FALSE(digit_divisibility(1431, 11));
  CHECK(digit_divisibility(0, 9));
  CHECK_KIND(digit_divisibility(10, 7), UnsupportedCriterion);
  CHECK(digit_divisibility(BigInt("123456789012345678901234567890"), 9));
}

TEST_CASE("crt") {
  const std::vector<Congruence> han{{2, 3}, {3, 5}, {2, 7}};
  CHECK(crt_solve(han) == CrtSolution{23, 105});

  const std::vector<Congruence> candy{{2, 5}, {1, 6}};
  const auto r = crt_solve(candy);
  REQUIRE(r);
  CHECK(*r == CrtSolution{7, 30});
  CHECK(r->residue + r->modulus == 37);
  CHECK(mod_reduce(37, 7) == 2);

  const std::vector<Congruence> clash{{1, 4}, {3, 4}};
  CHECK_FALSE(crt_solve(clash).has_value());

  CHECK_KIND(Congruence(1, 1), InvalidModulus);
  CHECK(Congruence(-1, 4).residue() == 3);
}

TEST_CASE("cayley tables") {
  IntMatrix z4(4, 4);
  z4 << 0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 1;
  CHECK(cayley_table(4, TableOp::Mul) == z4);
  IntMatrix z2(2, 2);
  z2 << 0, 1, 1, 0;
  CHECK(cayley_table(2, TableOp::Add) == z2);

  const auto z7 = cayley_table(7, TableOp::Mul);
  for (Eigen::Index i = 1; i < 7; ++i) CHECK((z7.row(i).array() == 1).any());
}

TEST_CASE("isbn") {
  CHECK(isbn10_check_digit("968120618") == '5');
  CHECK(isbn10_check_digit("048645844") == 'X');
  CHECK(isbn10_check_digit("968-12-0618") == '5');
  CHECK_FALSE(isbn10_validate("968-12-0618-4"));
  CHECK(isbn10_validate("968-12-0618-5"));
  CHECK(isbn10_validate("0-486-45844-X"));
  CHECK_KIND(isbn10_check_digit("12345"), ParseError);
  CHECK_KIND(isbn10_validate("X234567890"), ParseError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    std::string s;
    for (int i = 0; i < 9; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
    CHECK(isbn10_validate(s + isbn10_check_digit(s)));
  }
}
