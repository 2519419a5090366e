#include "mathbook/numtheory.hpp"

#include "mathbook/error.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cctype>

namespace mathbook::nt {

namespace {

const mpz_t& raw(const BigInt& z) { return z.backend().data(); }

bool divisible_by(const BigInt& n, unsigned long d) {
  return mpz_divisible_ui_p(raw(n), d) != 0;
}

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first 13 primes as bases is exact below this bound.
const BigInt& deterministic_mr_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

bool strong_probable_prime(const BigInt& n, const BigInt& base) {
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  BigInt x = mod_pow(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(BigInt a, BigInt n) {
  a = mod_reduce(a, n);
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_perfect_square(const BigInt& n) {
  return mpz_perfect_square_p(raw(n)) != 0;
}

BigInt half_mod(BigInt x, const BigInt& n) {
  if ((x & 1) != 0) x += n;
  return x >> 1;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_probable_prime(const BigInt& n) {
  if (is_perfect_square(n)) return false;
  long long d_small = 5;
  for (;;) {
    const int j = jacobi(BigInt(d_small), n);
    if (j == -1) break;
    if (j == 0 && abs(BigInt(d_small)) != n) return false;
    d_small = d_small > 0 ? -(d_small + 2) : -(d_small - 2);
  }
  const BigInt D(d_small);
  const BigInt P(1);
  const BigInt Q = (1 - D) / 4;

  BigInt d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  BigInt U(0), V(2), Qk(1);  // U_0, V_0, Q^0
  const unsigned bits = static_cast<unsigned>(msb(d)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    // double: k -> 2k
    U = (U * V) % n;
    V = mod_reduce(V * V - 2 * Qk, n);
    Qk = (Qk * Qk) % n;
    if (bit_test(d, i)) {
      // increment: k -> k + 1
      const BigInt U1 = half_mod(mod_reduce(P * U + V, n), n);
      const BigInt V1 = half_mod(mod_reduce(D * U + P * V, n), n);
      U = U1;
      V = V1;
      Qk = mod_reduce(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    V = mod_reduce(V * V - 2 * Qk, n);
    Qk = (Qk * Qk) % n;
    if (V == 0) return true;
  }
  return false;
}

std::string decimal_digits(const BigInt& n) { return n.str(); }

}  // namespace

Congruence::Congruence(const BigInt& residue, const BigInt& modulus) : modulus_(modulus) {
  if (modulus <= 1) raise(ErrorKind::InvalidModulus, "modulus must exceed 1");
  residue_ = mod_reduce(residue, modulus);
}

BigInt mod_reduce(const BigInt& n, const BigInt& m) {
  if (m <= 0) raise(ErrorKind::InvalidModulus, "modulus must be positive");
  BigInt r = n % m;
  if (r < 0) r += m;
  return r;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
  if (m <= 1) raise(ErrorKind::InvalidModulus, "modulus must exceed 1");
  if (exp < 0) raise(ErrorKind::InvalidInput, "negative exponent");
  BigInt result(1);
  BigInt b = mod_reduce(base, m);
  BigInt e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_s(1), s(0);
  BigInt old_t(0), t(1);
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::optional<BigInt> inv_mod(const BigInt& a, const BigInt& m) {
  if (m <= 1) raise(ErrorKind::InvalidModulus, "modulus must exceed 1");
  BigInt x, y;
  const BigInt g = extended_gcd(mod_reduce(a, m), m, x, y);
  if (g != 1) return std::nullopt;
  return mod_reduce(x, m);
}

BigInt gcd_euclid(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return x;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return BigInt(0);
  return abs(a * b) / gcd_euclid(a, b);
}

std::vector<std::uint64_t> sieve_eratosthenes(std::uint64_t limit) {
  if (limit < 2) raise(ErrorKind::EmptyRange, "sieve limit must be at least 2");
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

Factorization factorize(const BigInt& n) {
  if (n < 2) raise(ErrorKind::InvalidInput, "factorize needs n >= 2");
  Factorization out;
  BigInt rest = n;
  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (divisible_by(rest, d)) {
      mpz_divexact_ui(rest.backend().data(), raw(rest), d);
      ++e;
    }
    if (e > 0) out.push_back({BigInt(d), e});
    return e > 0;
  };
  strip(2);
  bool cofactor_checked = false;
  for (unsigned long d = 3; rest > 1; d += 2) {
    if (BigInt(d) * d > rest) break;
    if (strip(d)) cofactor_checked = false;
    // A prime cofactor ends the search early; trial division would only
    // confirm it by running up to its square root.
    if (!cofactor_checked && rest > 1) {
      if (is_prime(rest)) break;
      cofactor_checked = true;
    }
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

BigInt expand(const Factorization& f) {
  BigInt n(1);
  for (const auto& [p, e] : f) n *= pow(p, e);
  return n;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const std::vector<std::uint64_t> small = sieve_eratosthenes(1000);
  for (const auto p : small) {
    if (n == p) return true;
    if (divisible_by(n, p)) return false;
  }
  if (n < 1000 * 1000) return true;
  for (const unsigned w : kWitnesses) {
    if (!strong_probable_prime(n, BigInt(w))) return false;
  }
  if (n < deterministic_mr_bound()) return true;
  return strong_lucas_probable_prime(n);
}

BigInt next_prime(const BigInt& n) {
  if (n < 2) return BigInt(2);
  BigInt c = n + 1;
  if ((c & 1) == 0 && c != 2) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

bool digit_divisibility(const BigInt& n, unsigned d) {
  if (d != 2 && d != 3 && d != 4 && d != 5 && d != 8 && d != 9 && d != 10 && d != 11) {
    raise(ErrorKind::UnsupportedCriterion, "no digit rule for " + std::to_string(d));
  }
  if (n < 0) raise(ErrorKind::InvalidInput, "digit rules apply to n >= 0");
  const std::string digits = decimal_digits(n);
  auto digit = [&](std::size_t from_right) -> unsigned {
    return from_right < digits.size() ? unsigned(digits[digits.size() - 1 - from_right] - '0') : 0;
  };

  switch (d) {
    case 2: return digit(0) % 2 == 0;
    case 5: return digit(0) == 0 || digit(0) == 5;
    case 10: return digit(0) == 0;
    case 4: {
      // 10t + u is a multiple of 4 iff 2t + u is.
      const unsigned v = 2 * digit(1) + digit(0);
      return v % 4 == 0;
    }
    case 8: {
      // 100h + 10t + u is a multiple of 8 iff 4h + 2t + u is.
      const unsigned v = 4 * digit(2) + 2 * digit(1) + digit(0);
      return v % 8 == 0;
    }
    case 3:
    case 9: {
      std::string s = digits;
      while (s.size() > 1) {
        unsigned long long sum = 0;
        for (char c : s) sum += unsigned(c - '0');
        s = std::to_string(sum);
      }
      const unsigned root = unsigned(s[0] - '0');
      return d == 3 ? (root == 0 || root == 3 || root == 6 || root == 9)
                    : (root == 0 || root == 9);
    }
    case 11: {
      std::string s = digits;
      for (;;) {
        long long alt = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          const long long v = s[s.size() - 1 - i] - '0';
          alt += (i % 2 == 0) ? v : -v;
        }
        if (alt < 0) alt = -alt;
        if (alt < 11) return alt == 0;
        s = std::to_string(alt);
      }
    }
  }
  return false;
}

std::optional<CrtSolution> crt_solve(std::span<const Congruence> system) {
  if (system.empty()) raise(ErrorKind::InvalidInput, "empty congruence system");
  BigInt r = system[0].residue();
  BigInt m = system[0].modulus();
  for (std::size_t i = 1; i < system.size(); ++i) {
    const BigInt& r2 = system[i].residue();
    const BigInt& m2 = system[i].modulus();
    BigInt p, q;
    const BigInt g = extended_gcd(m, m2, p, q);
    const BigInt diff = r2 - r;
    if (diff % g != 0) return std::nullopt;
    const BigInt m2g = m2 / g;
    // m*p = g (mod m2), so t = (diff/g)*p solves m*t = diff (mod m2).
    const BigInt t = m2g == 1 ? BigInt(0) : mod_reduce((diff / g) * p, m2g);
    const BigInt merged = m * m2g;
    r = mod_reduce(r + m * t, merged);
    m = merged;
  }
  return CrtSolution{r, m};
}

IntMatrix cayley_table(std::int64_t m, TableOp op) {
  if (m < 2) raise(ErrorKind::InvalidModulus, "table modulus must be at least 2");
  IntMatrix t(m, m);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      t(i, j) = op == TableOp::Add ? (i + j) % m : static_cast<std::int64_t>((__int128)i * j % m);
    }
  }
  return t;
}

std::string isbn10_normalize(std::string_view text, std::size_t expected_length) {
  std::string out;
  for (char c : text) {
    if (c == '-' || c == ' ') continue;
    out.push_back(c == 'x' ? 'X' : c);
  }
  if (out.size() != expected_length) {
    raise(ErrorKind::ParseError, "expected " + std::to_string(expected_length) + " ISBN symbols");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool last = i + 1 == out.size();
    const char c = out[i];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c == 'X' && last && expected_length == 10) continue;
    raise(ErrorKind::ParseError, std::string("bad ISBN symbol '") + c + "'");
  }
  return out;
}

char isbn10_check_digit(std::string_view first9) {
  const std::string s = isbn10_normalize(first9, 9);
  unsigned sum = 0;
  for (unsigned i = 0; i < 9; ++i) sum += (i + 1) * unsigned(s[i] - '0');
  // a_1 + 2a_2 + ... + 9a_9 + 10a_10 = 0 (mod 11) and 10 = -1, so a_10 is the sum itself.
  const unsigned check = sum % 11;
  return check == 10 ? 'X' : char('0' + check);
}

bool isbn10_validate(std::string_view isbn) {
  const std::string s = isbn10_normalize(isbn, 10);
  unsigned sum = 0;
  for (unsigned i = 0; i < 10; ++i) {
    const unsigned v = s[i] == 'X' ? 10 : unsigned(s[i] - '0');
    sum += (i + 1) * v;
  }
  return sum % 11 == 0;
}

}  // namespace mathbook::nt
