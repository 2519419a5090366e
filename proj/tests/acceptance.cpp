// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include "property_suite.hpp"

#include "mathbook/combinatorics.hpp"
#include "mathbook/complex.hpp"
#include "mathbook/applied.hpp"
#include "mathbook/crypto.hpp"
#include "mathbook/error.hpp"
#include "mathbook/information.hpp"
#include "mathbook/linalg.hpp"
#include "mathbook/numtheory.hpp"
#include "mathbook/polynomial.hpp"
#include "mathbook/text_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace mathbook;

namespace {

struct Criterion {
  std::string title;
  std::function<bool(std::string&)> check;
};

std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

bool isbn(std::string&) {
  return nt::isbn10_check_digit("968120618") == '5' && nt::isbn10_check_digit("048645844") == 'X' &&
         !nt::isbn10_validate("968-12-0618-4");
}

bool rsa(std::string& why) {
  const auto k = crypto::rsa_keypair(11, 13, 17);
  if (k.d != 113) return why = "d = " + k.d.str(), false;
  const std::vector<BigInt> expect{63, 89, 114, 15};
  const auto c = crypto::rsa_encrypt_text("hola", k.n, k.e);
  if (c != expect) {
    why = "encrypt(\"hola\") =";
    for (const auto& b : c) why += " " + b.str();
    why += "; 63 89 114 15 is the encryption of ASCII 72 111 108 97 (\"Hola\")";
    return false;
  }
  if (crypto::rsa_decrypt_text(c, k.n, k.d) != "hola") return why = "decryption differs", false;
  for (int m = 0; m < 143; ++m)
    if (nt::mod_pow(nt::mod_pow(m, k.e, k.n), k.d, k.n) != m) return why = "residue " + std::to_string(m), false;
  return true;
}

bool hill(std::string& why) {
  const auto key = io::parse_matrix<BigInt>("3 2;5 3");
  const auto c = crypto::hill_encrypt("hola", key);
  if (c != "XZHD") return why = "got " + c, false;
  if (la::mat_inv_mod(key, 26) != io::parse_matrix<BigInt>("23 2;5 23")) return why = "inverse key differs", false;
  return crypto::hill_decrypt(c, key) == "hola";
}

bool affine(std::string& why) {
  const auto c = crypto::affine_encrypt("notenemosreservadeagua", {1, 3});
  if (c != "QRWHQHPRVUHVHUYDGHDJXD") return why = "got " + c, false;
  const auto f = crypto::letter_frequencies(c);
  if (f.size() < 2 || f[0] != std::pair<char, std::size_t>{'H', 5} || f[1] != std::pair<char, std::size_t>{'D', 3}) {
    return why = "frequency ranking differs", false;
  }
  const auto cs = crypto::affine_crack(c);
  return !cs.empty() && cs.front().key == crypto::AffineKey{1, 3};
}

bool reed_solomon(std::string& why) {
  const auto data = rationals({"1.2", "-3.2", "-5.4", "-1.1"});
  const auto cw = poly::rs_encode(data);
  if (std::vector<Rational>(cw.begin() + 4, cw.end()) != rationals({"14", "44.2", "93.8", "167.1"})) {
    return why = "redundancy differs", false;
  }
  const auto bad = rationals({"1.2", "3.2", "-5.4", "-1.1", "12.8", "44.2", "93.8", "167.1"});
  if (poly::rs_verify(bad)) return why = "corruption not detected", false;
  const auto expected = poly::poly_scale(
      Rational(1, 1800),
      poly::parse_polynomial("31x^7-1009x^6+13513x^5-95995x^4+389074x^3-886516x^2+1020282x-437220"));
  if (poly::rs_interpolant(bad) != expected) return why = "interpolant differs", false;
  const auto fix = poly::rs_correct(bad, 2);
  if (!fix || fix->error_positions != std::vector<std::size_t>{2, 5}) return why = "wrong error positions", false;
  return fix->codeword[1] == parse_rational("-3.2") && fix->codeword[4] == 14;
}

bool entropy(std::string& why) {
  const double h = info::sequence_entropy("AGCTTTTCATTCTGACTGCAACGGGCAATATG");
  const std::vector<std::uint64_t> uniform(64, 1);
  const double u = info::entropy_from_counts(uniform);
  why = "H = " + std::to_string(h) + ", uniform = " + std::to_string(u);
  return std::abs(h - 4.5736) <= 1e-4 && u == 6.0;
}

bool linear_algebra(std::string& why) {
  auto q = [](std::string_view t) { return io::parse_matrix<Rational>(t); };
  const auto s = la::gauss_solve(q("0 -1 3;1 2 -1;-2 3 1"), q("2;-2;0"));
  if (s.kind != la::SolveKind::Unique || s.solution != la::Vector<Rational>(q("-1/2;-1/2;1/2"))) {
    return why = "system solution differs", false;
  }
  if (la::invert(q("2 -1;0 3")) != q("1/2 1/6;0 1/3")) return why = "inverse differs", false;
  if (la::matmul(q("2 1;-1 0;4 3"), q("-1 1 -3/2;0 1/2 1")) != q("-2 5/2 -2;1 -1 3/2;-4 11/2 -3")) {
    return why = "Falk product differs", false;
  }
  const auto l = io::parse_matrix<BigInt>("0 2 0 1 3;2 0 1 0 1;0 1 0 1 0;1 0 1 0 2;3 1 0 2 0");
  const auto l2 = io::parse_matrix<BigInt>("14 3 3 6 4;3 6 0 5 6;3 0 2 0 3;6 5 0 6 3;4 6 3 3 14");
  if (la::mat_pow(l, 2) != l2) return why = "graph square differs", false;
  return la::path_count(l, 5, 3, 2) == 3;
}

bool fitting(std::string& why) {
  auto pts = io::parse_points<double>(io::read_file(std::string(MATHBOOK_TEST_DATA) + "/braking.csv"));
  for (auto& p : pts) p.x /= 3.6;
  const double slope = la::fit_poly(pts, 1, true).coefficients[1];
  const auto ratio = la::fit_poly(la::ratio_points(pts), 1, false);
  const double a = ratio.coefficients[1], b = ratio.coefficients[0], mu = la::friction_coefficient(a);
  why = "slope " + std::to_string(slope) + ", a " + std::to_string(a) + ", b " + std::to_string(b) + ", mu " +
        std::to_string(mu);
  return std::abs(slope - 2.881) <= 0.005 && std::abs(a - 0.078) <= 0.001 && std::abs(b - 1.412) <= 0.01 &&
         std::abs(mu - 0.653) <= 0.005;
}

bool navigation(std::string& why) {
  const auto s = applied::wind_triangle(143, 120, 140, 11);
  const double residual = applied::wind_recomposition_residual(143, 120, 140, 11, s);
  why = "gs " + std::to_string(s.ground_speed) + ", drift " + std::to_string(s.drift_deg);
  return std::abs(s.ground_speed - 109.01) <= 0.05 && std::abs(std::abs(s.drift_deg) - 0.27) <= 0.02 &&
         residual < 1e-6;
}

bool complex_numbers(std::string& why) {
  if (cx::c_div(cx::ComplexQ{2, -2}, cx::ComplexQ{1, 3}) != cx::ComplexQ{Rational(-2, 5), Rational(-4, 5)}) {
    return why = "quotient differs", false;
  }
  const auto r = cx::nth_roots({-1, 0}, 2);
  if (r.size() != 2) return false;
  const auto r0 = cx::to_rect(r[0]), r1 = cx::to_rect(r[1]);
  if (std::hypot(r0.re, r0.im - 1) > 1e-12 || std::hypot(r1.re, r1.im + 1) > 1e-12) return why = "roots differ", false;
  const std::vector<cx::Polar> xs{{10, cx::deg_to_rad(60)}, {5, cx::deg_to_rad(45)}};
  const auto s = cx::phasor_sum(xs);
  why = "sum " + std::to_string(s.modulus) + " at " + std::to_string(cx::rad_to_deg(s.argument));
  return std::abs(s.modulus - 14.89) <= 0.01 && std::abs(cx::rad_to_deg(s.argument) - 55) <= 0.5;
}

bool combinatorics(std::string& why) {
  const double pmf = comb::binomial_pmf(30, Rational(1, 2), 13);
  why = "pmf " + std::to_string(pmf);
  return comb::binomial(9, 4) == 126 && comb::perm(26, 3) == 15600 && comb::comb_rep(5, 3) == 35 &&
         comb::binomial(49, 6) == 13983816 && std::abs(pmf - 0.1115) <= 5e-4;
}

bool properties(std::string& why) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& p : props::core_properties()) {
    const auto r = p.check();
    if (!r.passed) return why = p.name + ": " + r.detail, false;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  why = std::to_string(secs) + " s";
  return secs < 60.0;
}

bool golden_quadratic(std::string& why) {
  const auto r = poly::quadratic_roots(1, -1, -1);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r.plus.re);
  why = buf;
  return std::abs(r.plus.re - 1.618033988749895) <= 1e-12 && r.plus.im == 0.0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"ISBN check digits", isbn},
      {"RSA toy keypair and roundtrip", rsa},
      {"Hill cipher", hill},
      {"Affine cipher and frequency crack", affine},
      {"Reed-Solomon encode, detect, correct", reed_solomon},
      {"Codon entropy", entropy},
      {"Exact linear algebra", linear_algebra},
      {"Braking-distance fits", fitting},
      {"Wind triangle", navigation},
      {"Complex arithmetic and phasors", complex_numbers},
      {"Counting", combinatorics},
      {"Property suites", properties},
      {"Golden ratio root", golden_quadratic},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const Error& e) {
      detail = e.what();
    }
    failures += !ok;
    std::printf("%s %zu. %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
