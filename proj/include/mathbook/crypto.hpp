#pragma once

// Didactic ciphers: per-character RSA, the affine (Caesar) cipher with
// frequency cracking, and the Hill matrix cipher mod 26. Letters map a=0 .. z=25.

#include "mathbook/linalg.hpp"
#include "mathbook/scalar.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mathbook::crypto {

struct RsaKeypair {
  BigInt n;
  BigInt e;
  BigInt d;
  BigInt p;
  BigInt q;
};

/// d = e^-1 mod (p-1)(q-1). NotPrime unless p and q are distinct primes;
/// BadExponent unless gcd(e, (p-1)(q-1)) = 1.
RsaKeypair rsa_keypair(const BigInt& p, const BigInt& q, const BigInt& e);

/// One block per byte: c = m^e mod n. CharOutOfRange when a byte is >= n.
std::vector<BigInt> rsa_encrypt_text(std::string_view text, const BigInt& n, const BigInt& e);

/// CharOutOfRange when a decrypted block is not a byte.
std::string rsa_decrypt_text(const std::vector<BigInt>& blocks, const BigInt& n, const BigInt& d);

/// Each block written as a fixed number of base-95 digits drawn from the
/// printable range 32..126, so any block below n survives the trip.
std::string rsa_to_printable(const std::vector<BigInt>& blocks, const BigInt& n);
std::vector<BigInt> rsa_from_printable(std::string_view text, const BigInt& n);

/// Letters as 0..25, either case. NonAlphabetic on anything else.
std::vector<int> letters_to_numbers(std::string_view text);
std::string numbers_to_letters(const std::vector<int>& values, bool upper);

struct AffineKey {
  int a = 1;
  int b = 0;

  friend bool operator==(const AffineKey&, const AffineKey&) = default;
};

/// x -> (a x + b) mod 26, output uppercase. NonInvertibleA if gcd(a, 26) > 1.
std::string affine_encrypt(std::string_view plain, AffineKey key);
/// Lowercase output using a^-1 mod 26.
std::string affine_decrypt(std::string_view cipher, AffineKey key);

/// Uppercase letters by descending count, ties alphabetical.
std::vector<std::pair<char, std::size_t>> letter_frequencies(std::string_view text);

struct AffineCandidate {
  AffineKey key;
  double score = 0.0;  // agreement of the decryption with Spanish letter frequencies
};

/// Pairs the two most frequent ciphertext letters with `assumed` and solves
/// the resulting 2x2 congruence system. Ties in the frequency ranking expand
/// to every pairing. Best candidate first. Degenerate if the text has fewer
/// than two distinct letters.
std::vector<AffineCandidate> affine_crack(std::string_view cipher,
                                          std::pair<char, char> assumed = {'e', 'a'});

/// Block-wise K v mod 26 on column vectors of length k; a ragged tail is
/// padded with 'x'. NonInvertibleKey unless gcd(det K, 26) = 1.
std::string hill_encrypt(std::string_view plain, const la::IntegerMatrix& key);
/// Uses K^-1 mod 26; padding is kept.
std::string hill_decrypt(std::string_view cipher, const la::IntegerMatrix& key);

}  // namespace mathbook::crypto
