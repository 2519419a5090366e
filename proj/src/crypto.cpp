#include "mathbook/crypto.hpp"

#include "mathbook/error.hpp"
#include "mathbook/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

namespace mathbook::crypto {

RsaKeypair rsa_keypair(const BigInt& p, const BigInt& q, const BigInt& e) {
  if (!nt::is_prime(p) || !nt::is_prime(q)) raise(ErrorKind::NotPrime, "p and q must be prime");
  if (p == q) raise(ErrorKind::NotPrime, "p and q must differ");
  const BigInt phi = (p - 1) * (q - 1);
  if (e <= 1) raise(ErrorKind::BadExponent, "public exponent must exceed 1");
  const auto d = nt::inv_mod(e, phi);
  if (!d) raise(ErrorKind::BadExponent, "exponent shares a factor with (p-1)(q-1)");
  return {p * q, e, *d, p, q};
}

std::vector<BigInt> rsa_encrypt_text(std::string_view text, const BigInt& n, const BigInt& e) {
  std::vector<BigInt> out;
  out.reserve(text.size());
  for (char ch : text) {
    const unsigned code = static_cast<unsigned char>(ch);
    if (code >= n) raise(ErrorKind::CharOutOfRange, "character code " + std::to_string(code) + " is not below n");
    out.push_back(nt::mod_pow(BigInt(code), e, n));
  }
  return out;
}

std::string rsa_decrypt_text(const std::vector<BigInt>& blocks, const BigInt& n, const BigInt& d) {
  std::string out;
  out.reserve(blocks.size());
  for (const auto& c : blocks) {
    const BigInt m = nt::mod_pow(c, d, n);
    if (m > 255) raise(ErrorKind::CharOutOfRange, "block " + c.str() + " does not decrypt to a byte");
    out.push_back(static_cast<char>(m.convert_to<unsigned>()));
  }
  return out;
}

namespace {

std::size_t printable_width(const BigInt& n) {
  std::size_t w = 1;
  BigInt cap(95);
  while (cap < n) {
    cap *= 95;
    ++w;
  }
  return w;
}

}  // namespace

std::string rsa_to_printable(const std::vector<BigInt>& blocks, const BigInt& n) {
  const std::size_t w = printable_width(n);
  std::string out;
  for (BigInt c : blocks) {
    if (c < 0 || c >= n) raise(ErrorKind::CharOutOfRange, "block outside [0, n)");
    std::string digits(w, ' ');
    for (std::size_t i = w; i-- > 0;) {
      digits[i] = static_cast<char>(32 + (c % 95).convert_to<int>());
      c /= 95;
    }
    out += digits;
  }
  return out;
}

std::vector<BigInt> rsa_from_printable(std::string_view text, const BigInt& n) {
  const std::size_t w = printable_width(n);
  if (text.size() % w != 0) raise(ErrorKind::ParseError, "printable text length is not a multiple of the block width");
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < text.size(); i += w) {
    BigInt c(0);
    for (std::size_t j = 0; j < w; ++j) {
      const int ch = static_cast<unsigned char>(text[i + j]);
      if (ch < 32 || ch > 126) raise(ErrorKind::ParseError, "non-printable character");
      c = c * 95 + (ch - 32);
    }
    out.push_back(c);
  }
  return out;
}

std::vector<int> letters_to_numbers(std::string_view text) {
  std::vector<int> out;
  out.reserve(text.size());
  for (char ch : text) {
    const unsigned char u = static_cast<unsigned char>(ch);
    if (u >= 'a' && u <= 'z') {
      out.push_back(u - 'a');
    } else if (u >= 'A' && u <= 'Z') {
      out.push_back(u - 'A');
    } else {
      raise(ErrorKind::NonAlphabetic, std::string("not a letter a-z: '") + ch + "'");
    }
  }
  return out;
}

std::string numbers_to_letters(const std::vector<int>& values, bool upper) {
  std::string out;
  out.reserve(values.size());
  for (int v : values) out.push_back(static_cast<char>((upper ? 'A' : 'a') + v));
  return out;
}

namespace {

int mod26(long long x) { return static_cast<int>(((x % 26) + 26) % 26); }

int inverse26(int a) {
  for (int x = 1; x < 26; ++x)
    if (mod26(static_cast<long long>(a) * x) == 1) return x;
  raise(ErrorKind::NonInvertibleA, "a = " + std::to_string(a) + " has no inverse mod 26");
}

// Spanish letter frequencies in percent, most frequent letters only.
constexpr std::array<std::pair<char, double>, 6> kSpanish = {
    {{'e', 13.68}, {'a', 12.53}, {'o', 8.68}, {'s', 7.98}, {'r', 6.87}, {'n', 6.71}}};

double spanish_score(const std::string& plain) {
  if (plain.empty()) return 0.0;
  double s = 0.0;
  for (char ch : plain)
    for (const auto& [letter, pct] : kSpanish)
      if (ch == letter) s += pct;
  return s / static_cast<double>(plain.size());
}

}  // namespace

std::string affine_encrypt(std::string_view plain, AffineKey key) {
  const int a = mod26(key.a), b = mod26(key.b);
  if (std::gcd(a, 26) != 1) raise(ErrorKind::NonInvertibleA, "gcd(a, 26) must be 1");
  auto v = letters_to_numbers(plain);
  for (int& x : v) x = mod26(static_cast<long long>(a) * x + b);
  return numbers_to_letters(v, true);
}

std::string affine_decrypt(std::string_view cipher, AffineKey key) {
  const int a = mod26(key.a), b = mod26(key.b);
  if (std::gcd(a, 26) != 1) raise(ErrorKind::NonInvertibleA, "gcd(a, 26) must be 1");
  const int inv = inverse26(a);
  auto v = letters_to_numbers(cipher);
  for (int& y : v) y = mod26(static_cast<long long>(inv) * (y - b));
  return numbers_to_letters(v, false);
}

std::vector<std::pair<char, std::size_t>> letter_frequencies(std::string_view text) {
  std::array<std::size_t, 26> counts{};
  for (int v : letters_to_numbers(text)) ++counts[v];
  std::vector<std::pair<char, std::size_t>> out;
  for (int i = 0; i < 26; ++i)
    if (counts[i] > 0) out.emplace_back(static_cast<char>('A' + i), counts[i]);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& l, const auto& r) { return l.second > r.second; });
  return out;
}

std::vector<AffineCandidate> affine_crack(std::string_view cipher, std::pair<char, char> assumed) {
  const auto freq = letter_frequencies(cipher);
  if (freq.size() < 2) raise(ErrorKind::Degenerate, "need at least two distinct letters");
  const auto xs = letters_to_numbers(std::string{assumed.first, assumed.second});
  const int x1 = xs[0], x2 = xs[1];
  if (x1 == x2) raise(ErrorKind::Degenerate, "assumed plaintext letters must differ");

  // Cipher letters tied for first place, and those tied for second.
  std::vector<int> first, second;
  for (const auto& [ch, c] : freq)
    if (c == freq[0].second) first.push_back(ch - 'A');
  if (first.size() == 1) {
    for (const auto& [ch, c] : freq)
      if (c == freq[1].second) second.push_back(ch - 'A');
  }

  std::vector<std::pair<int, int>> pairings;
  if (first.size() > 1) {
    for (int y1 : first)
      for (int y2 : first)
        if (y1 != y2) pairings.emplace_back(y1, y2);
  } else {
    for (int y2 : second) pairings.emplace_back(first[0], y2);
  }

  std::vector<AffineCandidate> out;
  for (const auto& [y1, y2] : pairings) {
    for (int a = 1; a < 26; ++a) {
      if (std::gcd(a, 26) != 1) continue;
      const int b = mod26(y1 - static_cast<long long>(a) * x1);
      if (mod26(static_cast<long long>(a) * x2 + b) != y2) continue;
      const AffineKey key{a, b};
      if (std::any_of(out.begin(), out.end(), [&](const auto& c) { return c.key == key; })) continue;
      out.push_back({key, spanish_score(affine_decrypt(cipher, key))});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& l, const auto& r) { return l.score > r.score; });
  return out;
}

namespace {

std::string hill_apply(std::string_view text, const la::IntegerMatrix& m, bool upper, bool pad) {
  const auto k = static_cast<std::size_t>(m.rows());
  auto v = letters_to_numbers(text);
  if (v.size() % k != 0) {
    if (!pad) raise(ErrorKind::LengthMismatch, "ciphertext length is not a multiple of the key size");
    v.resize(v.size() + (k - v.size() % k), 'x' - 'a');
  }
  std::vector<int> out(v.size());
  for (std::size_t blk = 0; blk < v.size(); blk += k) {
    for (std::size_t i = 0; i < k; ++i) {
      BigInt acc(0);
      for (std::size_t j = 0; j < k; ++j) acc += m(i, j) * v[blk + j];
      out[blk + i] = nt::mod_reduce(acc, 26).convert_to<int>();
    }
  }
  return numbers_to_letters(out, upper);
}

la::IntegerMatrix checked_inverse(const la::IntegerMatrix& key) {
  if (key.rows() != key.cols() || key.rows() == 0) raise(ErrorKind::NonSquare, "key must be square");
  const auto inv = la::mat_inv_mod(key, BigInt(26));
  if (!inv) raise(ErrorKind::NonInvertibleKey, "gcd(det K, 26) must be 1");
  return *inv;
}

}  // namespace

std::string hill_encrypt(std::string_view plain, const la::IntegerMatrix& key) {
  checked_inverse(key);
  return hill_apply(plain, key, true, true);
}

std::string hill_decrypt(std::string_view cipher, const la::IntegerMatrix& key) {
  return hill_apply(cipher, checked_inverse(key), false, false);
}

}  // namespace mathbook::crypto
