#include "cli.hpp"

#include "json_output.hpp"

#include "mathbook/applied.hpp"
#include "mathbook/combinatorics.hpp"
#include "mathbook/complex.hpp"
#include "mathbook/crypto.hpp"
#include "mathbook/error.hpp"
#include "mathbook/imaging.hpp"
#include "mathbook/information.hpp"
#include "mathbook/linalg.hpp"
#include "mathbook/numtheory.hpp"
#include "mathbook/polynomial.hpp"
#include "mathbook/text_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

namespace mathbook::cli {

namespace {

using json = nlohmann::json;
using Args = std::vector<std::string>;
namespace jo = json_out;

struct Ctx {
  std::ostream* out = nullptr;
  std::istream* in = nullptr;
  bool json = false;
  bool deg = false;
};

struct Opts {
  std::string op = "mul";
  std::vector<std::string> probs;
  std::string csv;
  unsigned degree = 1;
  bool origin = false;
  bool ratio = false;
  bool kmh = false;
  double g_fit = 9.81;
  double g_projectile = 9.80;
  std::size_t max_errors = 1;
  std::string n, e, d;
  bool printable = false;
  int a = 1, b = 0;
  std::string plain_pair = "ea";
  std::string key;
  double r = 0.0, l = 0.0;
  std::optional<double> c;
  std::optional<double> freq, w, v, i0;
  std::optional<double> t;
  unsigned steps = 0;
  std::string prefix = "frame";
  bool pgm = false;
  unsigned maxval = 255;
};

void emit(const Ctx& ctx, const std::string& plain, const json& j) {
  if (ctx.json) {
    *ctx.out << j.dump() << '\n';
  } else {
    *ctx.out << plain;
    if (plain.empty() || plain.back() != '\n') *ctx.out << '\n';
  }
}

std::string fmt(double x) { return io::format_scalar(x); }

/// "-" reads stdin, an existing file is read, anything else is the literal.
std::string source_text(const Ctx& ctx, const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << ctx.in->rdbuf();
    return os.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return io::read_file(arg);
  return arg;
}

std::string joined(const Args& args) {
  std::string s;
  for (const auto& a : args) s += a + " ";
  return s;
}

BigInt big(const std::string& s) { return parse_bigint(s); }
Rational rat(const std::string& s) { return parse_rational(s); }
double real(const std::string& s) { return to_double(parse_rational(s)); }

std::uint64_t small(const std::string& s) {
  const BigInt z = parse_bigint(s);
  if (z < 0 || z > std::numeric_limits<std::uint32_t>::max()) {
    raise(ErrorKind::InvalidInput, "'" + s + "' must lie in 0..4294967295");
  }
  return z.convert_to<std::uint64_t>();
}

template <class S>
la::Matrix<S> matrix_arg(const Ctx& ctx, const std::string& arg) {
  return io::parse_matrix<S>(source_text(ctx, arg));
}

img::Image image_arg(const Ctx& ctx, const std::string& arg) {
  const std::string text = source_text(ctx, arg);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 2, "P2") == 0) return img::pgm_read(text);
  img::Image m = io::parse_matrix<double>(text);
  img::require_intensities(m);
  return m;
}

std::vector<Rational> rational_list(const Args& args) {
  std::vector<Rational> out;
  for (const auto& tok : io::split_tokens(joined(args))) out.push_back(rat(tok));
  return out;
}

std::string list_text(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

json rational_array(const std::vector<Rational>& v) {
  return jo::array(v, [](const Rational& q) { return jo::rational(q); });
}

std::string polar_text(const cx::Polar& p) {
  return fmt(p.modulus) + "@" + fmt(cx::rad_to_deg(p.argument)) + "deg (" + fmt(p.argument) + " rad)";
}

template <class S>
std::string complex_text(const cx::Complex<S>& z) {
  const auto part = [](const S& x) {
    if constexpr (std::is_same_v<S, double>) {
      return fmt(x);
    } else {
      return to_string(x);
    }
  };
  std::string s = part(z.re);
  if (z.im < S(0)) {
    s += "-" + part(-z.im) + "i";
  } else {
    s += "+" + part(z.im) + "i";
  }
  return s;
}

bool is_polar_literal(const std::string& s) {
  return s.find('@') != std::string::npos || s.find("\xE2\x88\xA0") != std::string::npos;
}

/// "M@Adeg", "M@Arad", or "M@A" (degrees with --deg, else radians).
cx::Polar parse_polar(const Ctx& ctx, std::string s) {
  if (const auto pos = s.find("\xE2\x88\xA0"); pos != std::string::npos) s.replace(pos, 3, "@");
  const auto at = s.find('@');
  if (at == std::string::npos) raise(ErrorKind::ParseError, "expected M@angle");
  std::string ang = s.substr(at + 1);
  bool degrees = ctx.deg;
  if (ang.size() > 3 && ang.compare(ang.size() - 3, 3, "deg") == 0) {
    degrees = true;
    ang.resize(ang.size() - 3);
  } else if (ang.size() > 3 && ang.compare(ang.size() - 3, 3, "rad") == 0) {
    degrees = false;
    ang.resize(ang.size() - 3);
  }
  const double m = real(s.substr(0, at));
  const double a = real(ang);
  if (m < 0.0) raise(ErrorKind::ParseError, "modulus must be non-negative");
  return {m, cx::principal_argument(degrees ? cx::deg_to_rad(a) : a)};
}

/// "a", "bi", "a+bi", "a-bi", "i", "-i".
cx::ComplexQ parse_complex_exact(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) raise(ErrorKind::ParseError, "empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {rat(s), Rational(0)};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (!im.empty() && im.back() == '*') im.pop_back();
  return {re.empty() ? Rational(0) : rat(re), rat(im)};
}

cx::ComplexD to_d(const cx::ComplexQ& z) { return {to_double(z.re), to_double(z.im)}; }

cx::ComplexD parse_complex(const Ctx& ctx, const std::string& s) {
  if (is_polar_literal(s)) return cx::to_rect(parse_polar(ctx, s));
  return to_d(parse_complex_exact(s));
}

cx::Polar parse_phasor(const Ctx& ctx, const std::string& s) {
  if (is_polar_literal(s)) return parse_polar(ctx, s);
  return cx::to_polar(to_d(parse_complex_exact(s)));
}

json image_json(const img::Image& m) { return jo::matrix(m); }

void emit_image(const Ctx& ctx, const Opts& o, const img::Image& m) {
  if (o.pgm && !ctx.json) {
    *ctx.out << img::pgm_write(m, o.maxval);
    return;
  }
  emit(ctx, io::format_matrix(m), image_json(m));
}

std::string solution_kind(la::SolveKind k) {
  switch (k) {
    case la::SolveKind::Unique: return "Unique";
    case la::SolveKind::Inconsistent: return "Inconsistent";
    case la::SolveKind::Underdetermined: return "Underdetermined";
  }
  return "";
}

struct Builder {
  Ctx& ctx;
  Opts& o;

  using Handler = std::function<void(const Args&)>;

  /// nargs < 0 accepts one or more positionals.
  CLI::App* verb(CLI::App* noun, const std::string& name, const std::string& help, int nargs,
                 Handler h) const {
    auto args = std::make_shared<Args>();
    auto* c = noun->add_subcommand(name, help);
    if (nargs != 0) {
      auto* opt = c->add_option("args", *args, "operands")->required();
      if (nargs > 0) opt->expected(nargs);
    }
    c->callback([args, h] { h(*args); });
    return c;
  }

  void number_theory(CLI::App& app) const {
    auto* nt = app.add_subcommand("nt", "number theory");
    nt->require_subcommand(1);
    const Ctx& c = ctx;
    verb(nt, "mod", "N M: least non-negative residue", 2, [&c](const Args& a) {
      const BigInt r = nt::mod_reduce(big(a[0]), big(a[1]));
      emit(c, r.str(), {{"result", jo::integer(r)}});
    });
    verb(nt, "powmod", "B E M: B^E mod M", 3, [&c](const Args& a) {
      const BigInt r = nt::mod_pow(big(a[0]), big(a[1]), big(a[2]));
      emit(c, r.str(), {{"result", jo::integer(r)}});
    });
    verb(nt, "invmod", "A M: inverse of A mod M", 2, [&c](const Args& a) {
      const auto r = nt::inv_mod(big(a[0]), big(a[1]));
      if (!r) raise(ErrorKind::NotInvertible, a[0] + " has no inverse mod " + a[1]);
      emit(c, r->str(), {{"result", jo::integer(*r)}});
    });
    verb(nt, "gcd", "A B: greatest common divisor", 2, [&c](const Args& a) {
      const BigInt r = nt::gcd_euclid(big(a[0]), big(a[1]));
      emit(c, r.str(), {{"result", jo::integer(r)}});
    });
    verb(nt, "lcm", "A B: least common multiple", 2, [&c](const Args& a) {
      const BigInt r = nt::lcm(big(a[0]), big(a[1]));
      emit(c, r.str(), {{"result", jo::integer(r)}});
    });
    verb(nt, "sieve", "N: primes up to N", 1, [&c](const Args& a) {
      const auto primes = nt::sieve_eratosthenes(small(a[0]));
      std::string s;
      for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? " " : "") + std::to_string(primes[i]);
      emit(c, s, {{"primes", primes}});
    });
    verb(nt, "factor", "N: prime factorization", 1, [&c](const Args& a) {
      const auto f = nt::factorize(big(a[0]));
      std::string s;
      json j = json::array();
      for (const auto& pp : f) {
        if (!s.empty()) s += " * ";
        s += pp.prime.str() + (pp.exponent > 1 ? "^" + std::to_string(pp.exponent) : "");
        j.push_back({{"prime", jo::integer(pp.prime)}, {"exponent", pp.exponent}});
      }
      emit(c, s, {{"factors", j}});
    });
    verb(nt, "isprime", "N: primality", 1, [&c](const Args& a) {
      const bool p = nt::is_prime(big(a[0]));
      emit(c, p ? "true" : "false", {{"result", p}});
    });
    verb(nt, "nextprime", "N: smallest prime above N", 1, [&c](const Args& a) {
      const BigInt r = nt::next_prime(big(a[0]));
      emit(c, r.str(), {{"result", jo::integer(r)}});
    });
    verb(nt, "divisible", "N D: digit-rule divisibility test", 2, [&c](const Args& a) {
      const bool r = nt::digit_divisibility(big(a[0]), static_cast<unsigned>(small(a[1])));
      emit(c, r ? "true" : "false", {{"result", r}});
    });
    verb(nt, "crt", "R:M ...: simultaneous congruences", -1, [&c](const Args& a) {
      std::vector<nt::Congruence> sys;
      for (const auto& tok : io::split_tokens(joined(a))) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) raise(ErrorKind::ParseError, "expected residue:modulus, got '" + tok + "'");
        sys.emplace_back(big(tok.substr(0, colon)), big(tok.substr(colon + 1)));
      }
      const auto r = nt::crt_solve(sys);
      if (!r) raise(ErrorKind::Inconsistent, "the congruences contradict each other");
      emit(c, r->residue.str() + " mod " + r->modulus.str(),
           {{"residue", jo::integer(r->residue)}, {"modulus", jo::integer(r->modulus)}});
    });
    auto* table = verb(nt, "table", "M: composition table of Z_M", 1, [this](const Args& a) {
      if (o.op != "add" && o.op != "mul") raise(ErrorKind::InvalidInput, "--op must be add or mul");
      const BigInt m = big(a[0]);
      if (m < 2 || m > 10000) raise(ErrorKind::InvalidModulus, "modulus must lie in 2..10000");
      const auto t = nt::cayley_table(m.convert_to<std::int64_t>(), o.op == "add" ? nt::TableOp::Add : nt::TableOp::Mul);
      std::string s;
      json rows = json::array();
      for (Eigen::Index i = 0; i < t.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < t.cols(); ++j) {
          s += (j ? " " : "") + std::to_string(t(i, j));
          row.push_back(t(i, j));
        }
        s += '\n';
        rows.push_back(row);
      }
      emit(ctx, s, {{"table", rows}});
    });
    table->add_option("--op", o.op, "add or mul")->capture_default_str();
    verb(nt, "isbn", "FIRST9: ISBN-10 check digit", 1, [&c](const Args& a) {
      const char d = nt::isbn10_check_digit(a[0]);
      emit(c, std::string(1, d), {{"check_digit", std::string(1, d)}});
    });
    verb(nt, "isbn-valid", "ISBN: validate an ISBN-10", 1, [&c](const Args& a) {
      const bool ok = nt::isbn10_validate(a[0]);
      emit(c, ok ? "true" : "false", {{"valid", ok}});
    });
  }

  void combinatorics(CLI::App& app) const {
    auto* cm = app.add_subcommand("comb", "counting");
    cm->require_subcommand(1);
    const Ctx& c = ctx;
    const auto count = [&c](const BigInt& r) { emit(c, r.str(), {{"result", jo::integer(r)}}); };
    verb(cm, "fact", "N: N!", 1, [count](const Args& a) { count(comb::factorial(small(a[0]))); });
    verb(cm, "binom", "P Q: binomial coefficient", 2,
         [count](const Args& a) { count(comb::binomial(small(a[0]), small(a[1]))); });
    verb(cm, "perm", "N K: ordered selections without repetition", 2,
         [count](const Args& a) { count(comb::perm(small(a[0]), small(a[1]))); });
    verb(cm, "permrep", "N K: ordered selections with repetition", 2,
         [count](const Args& a) { count(comb::perm_rep(small(a[0]), small(a[1]))); });
    verb(cm, "combrep", "N K: multisets", 2,
         [count](const Args& a) { count(comb::comb_rep(small(a[0]), small(a[1]))); });
    verb(cm, "pascal", "N: row N of Pascal's triangle", 1, [&c](const Args& a) {
      const auto row = comb::pascal_row(small(a[0]));
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + row[i].str();
      emit(c, s, {{"row", jo::array(row, [](const BigInt& z) { return jo::integer(z); })}});
    });
    verb(cm, "pmf", "N P X: binomial probability P(X = x)", 3, [&c](const Args& a) {
      const Rational exact = comb::binomial_pmf_exact(small(a[0]), rat(a[1]), small(a[2]));
      const double v = to_double(exact);
      emit(c, fmt(v), {{"probability", v}, {"exact", jo::rational(exact)}});
    });
  }

  void information(CLI::App& app) const {
    auto* in = app.add_subcommand("info", "information measures");
    in->require_subcommand(1);
    const Ctx& c = ctx;
    verb(in, "uniform", "N: information of N equiprobable messages", 1, [&c](const Args& a) {
      const double h = info::uniform_information(small(a[0]));
      emit(c, fmt(h), {{"bits", h}});
    });
    auto* ent = verb(in, "entropy", "Shannon entropy of --probs", 0, [this](const Args&) {
      std::vector<double> p;
      for (const auto& tok : io::split_tokens(joined(o.probs))) p.push_back(real(tok));
      const double h = info::shannon_entropy(p);
      emit(ctx, fmt(h), {{"bits", h}});
    });
    ent->add_option("--probs", o.probs, "probabilities")->required()->delimiter(',');
    verb(in, "counts", "C ...: entropy of empirical counts", -1, [&c](const Args& a) {
      std::vector<std::uint64_t> counts;
      for (const auto& tok : io::split_tokens(joined(a))) counts.push_back(small(tok));
      const double h = info::entropy_from_counts(counts);
      emit(c, fmt(h), {{"bits", h}});
    });
    verb(in, "dna", "SEQ|FILE|-: overlapping codon counts and entropy", 1, [&c](const Args& a) {
      const std::string seq = info::strip_fasta(source_text(c, a[0]));
      const auto counts = info::sliding_codons(seq);
      const double h = info::sequence_entropy(seq);
      std::string s;
      json jc = json::object();
      for (const auto& [codon, n] : counts.counts) {
        s += codon + " " + std::to_string(n) + "\n";
        jc[codon] = n;
      }
      s += "windows " + std::to_string(counts.total) + "\nentropy " + fmt(h);
      emit(c, s, {{"counts", jc}, {"total", counts.total}, {"entropy", h}});
    });
  }

  void linear_algebra(CLI::App& app) const {
    auto* la_ = app.add_subcommand("la", "linear algebra");
    la_->require_subcommand(1);
    const Ctx& c = ctx;
    const auto show = [&c](const la::RationalMatrix& m) { emit(c, io::format_matrix(m), {{"matrix", jo::matrix(m)}}); };
    const auto show_int = [&c](const la::IntegerMatrix& m) { emit(c, io::format_matrix(m), {{"matrix", jo::matrix(m)}}); };
    verb(la_, "mul", "A B: matrix product", 2, [&c, show](const Args& a) {
      show(la::matmul(matrix_arg<Rational>(c, a[0]), matrix_arg<Rational>(c, a[1])));
    });
    verb(la_, "add", "A B: matrix sum", 2, [&c, show](const Args& a) {
      show(la::add(matrix_arg<Rational>(c, a[0]), matrix_arg<Rational>(c, a[1])));
    });
    verb(la_, "scale", "C A: scalar multiple", 2, [&c, show](const Args& a) {
      show(la::scale(rat(a[0]), matrix_arg<Rational>(c, a[1])));
    });
    verb(la_, "hadamard", "A B: entrywise product", 2, [&c, show](const Args& a) {
      show(la::hadamard(matrix_arg<Rational>(c, a[0]), matrix_arg<Rational>(c, a[1])));
    });
    verb(la_, "transpose", "A: transpose", 1,
         [&c, show](const Args& a) { show(la::transpose(matrix_arg<Rational>(c, a[0]))); });
    verb(la_, "det", "A: determinant", 1, [&c](const Args& a) {
      const Rational d = la::determinant(matrix_arg<Rational>(c, a[0]));
      emit(c, to_string(d), {{"determinant", jo::rational(d)}});
    });
    verb(la_, "inv", "A: inverse", 1, [&c, show](const Args& a) {
      const auto inv = la::invert(matrix_arg<Rational>(c, a[0]));
      if (!inv) raise(ErrorKind::Singular, "matrix is singular");
      show(*inv);
    });
    verb(la_, "solve", "A B: Gaussian elimination for A x = b", 2, [&c](const Args& a) {
      const auto A = matrix_arg<Rational>(c, a[0]);
      la::RationalMatrix b = matrix_arg<Rational>(c, a[1]);
      if (b.rows() == 1 && A.rows() != 1) b.transposeInPlace();
      const auto res = la::gauss_solve(A, la::Vector<Rational>(b));
      if (res.kind == la::SolveKind::Inconsistent) raise(ErrorKind::Inconsistent, "the system has no solution");
      if (res.kind == la::SolveKind::Underdetermined) raise(ErrorKind::Underdetermined, "the system has infinitely many solutions");
      std::vector<Rational> x(res.solution.begin(), res.solution.end());
      emit(c, list_text(x), {{"kind", solution_kind(res.kind)}, {"solution", rational_array(x)}});
    });
    verb(la_, "mod", "A M: entrywise residues", 2,
         [&c, show_int](const Args& a) { show_int(la::mat_mod(matrix_arg<BigInt>(c, a[0]), big(a[1]))); });
    verb(la_, "invmod", "A M: inverse modulo M", 2, [&c, show_int](const Args& a) {
      const auto inv = la::mat_inv_mod(matrix_arg<BigInt>(c, a[0]), big(a[1]));
      if (!inv) raise(ErrorKind::NotInvertible, "determinant shares a factor with the modulus");
      show_int(*inv);
    });
    verb(la_, "pow", "A P: matrix power", 2,
         [&c, show_int](const Args& a) { show_int(la::mat_pow(matrix_arg<BigInt>(c, a[0]), small(a[1]))); });
    verb(la_, "paths", "L I J P: walks of length P from I to J", 4, [&c](const Args& a) {
      const BigInt n = la::path_count(matrix_arg<BigInt>(c, a[0]), static_cast<Eigen::Index>(small(a[1])),
                                      static_cast<Eigen::Index>(small(a[2])), small(a[3]));
      emit(c, n.str(), {{"paths", jo::integer(n)}});
    });
    auto* fit = verb(la_, "fit", "[X:Y ...]: least-squares polynomial", 0, [this](const Args&) {});
    auto fit_points = std::make_shared<Args>();
    fit->add_option("points", *fit_points, "samples as x:y");
    fit->add_option("--csv", o.csv, "CSV file with x,y rows");
    fit->add_option("--degree", o.degree, "polynomial degree")->capture_default_str();
    fit->add_flag("--origin", o.origin, "no constant term");
    fit->add_flag("--ratio", o.ratio, "fit d/v = a v + b, i.e. d = a v^2 + b v");
    fit->add_flag("--kmh", o.kmh, "convert x from km/h to m/s");
    fit->add_option("--g", o.g_fit, "gravity for the friction coefficient")->capture_default_str();
    fit->callback([this, fit_points] {
      std::string text = o.csv.empty() ? joined(*fit_points) : io::read_file(o.csv);
      if (!o.csv.empty() && !fit_points->empty()) raise(ErrorKind::InvalidInput, "give points or --csv, not both");
      auto pts = io::parse_points<double>(text);
      if (o.kmh)
        for (auto& p : pts) p.x /= 3.6;
      if (o.ratio) {
        const auto rp = la::ratio_points(pts);
        const auto f = la::fit_poly(rp, 1, false);
        const double a = f.coefficients[1], b = f.coefficients[0];
        std::vector<double> quad{0.0, b, a};
        const double sse = la::sum_squared_errors(pts, quad);
        std::string s = "a " + fmt(a) + "\nb " + fmt(b) + "\nsse " + fmt(sse);
        json j = {{"a", a}, {"b", b}, {"sse", sse}};
        if (a > 0.0) {
          const double mu = la::friction_coefficient(a, o.g_fit);
          s += "\nmu " + fmt(mu);
          j["mu"] = mu;
        }
        emit(ctx, s, j);
        return;
      }
      const auto f = la::fit_poly(pts, o.degree, o.origin);
      std::string s = "coefficients";
      for (double x : f.coefficients) s += " " + fmt(x);
      s += "\nsse " + fmt(f.sse);
      emit(ctx, s, {{"coefficients", f.coefficients}, {"sse", f.sse}});
    });
    auto* fr = verb(la_, "friction", "A: friction coefficient from 1 / (2 mu g)", 1, [this](const Args& a) {
      const double mu = la::friction_coefficient(real(a[0]), o.g_fit);
      emit(ctx, fmt(mu), {{"mu", mu}});
    });
    fr->add_option("--g", o.g_fit, "gravity")->capture_default_str();
  }

  void polynomials(CLI::App& app) const {
    auto* pl = app.add_subcommand("poly", "polynomials");
    pl->require_subcommand(1);
    const Ctx& c = ctx;
    const auto show = [&c](const poly::Polynomial& p) { emit(c, poly::to_string(p), poly_json(p)); };
    const auto P = [](const std::string& s) { return poly::parse_polynomial(s); };
    verb(pl, "add", "P Q: sum", 2, [show, P](const Args& a) { show(poly::poly_add(P(a[0]), P(a[1]))); });
    verb(pl, "sub", "P Q: difference", 2, [show, P](const Args& a) { show(poly::poly_sub(P(a[0]), P(a[1]))); });
    verb(pl, "mul", "P Q: product", 2, [show, P](const Args& a) { show(poly::poly_mul(P(a[0]), P(a[1]))); });
    verb(pl, "divmod", "P D: quotient and remainder", 2, [&c, P](const Args& a) {
      const auto [q, r] = poly::poly_divmod(P(a[0]), P(a[1]));
      emit(c, "q " + poly::to_string(q) + "\nr " + poly::to_string(r),
           {{"quotient", jo::polynomial(q)}, {"remainder", jo::polynomial(r)}});
    });
    verb(pl, "gcd", "P Q: monic gcd", 2, [show, P](const Args& a) { show(poly::poly_gcd(P(a[0]), P(a[1]))); });
    verb(pl, "eval", "P X: value at X", 2, [&c, P](const Args& a) {
      const Rational v = poly::poly_eval(P(a[0]), rat(a[1]));
      emit(c, to_string(v), {{"value", jo::rational(v)}});
    });
    verb(pl, "deriv", "P: derivative", 1, [show, P](const Args& a) { show(poly::poly_derivative(P(a[0]))); });
    verb(pl, "roots", "A B C: roots of a x^2 + b x + c", 3, [&c](const Args& a) {
      const auto r = poly::quadratic_roots(rat(a[0]), rat(a[1]), rat(a[2]));
      std::string s = complex_text(r.plus) + "\n" + complex_text(r.minus);
      json j = {{"plus", jo::complex(r.plus)}, {"minus", jo::complex(r.minus)},
                {"discriminant", jo::rational(r.discriminant)}};
      if (r.exact) {
        s += "\nexact " + to_string(r.exact->first) + " " + to_string(r.exact->second);
        j["exact"] = {jo::rational(r.exact->first), jo::rational(r.exact->second)};
      }
      emit(c, s, j);
    });
    verb(pl, "vertex", "A B C: a (x - h)^2 - k", 3, [&c](const Args& a) {
      const auto v = poly::complete_square(rat(a[0]), rat(a[1]), rat(a[2]));
      emit(c, "a " + to_string(v.a) + "\nh " + to_string(v.h) + "\nk " + to_string(v.k),
           {{"a", jo::rational(v.a)}, {"h", jo::rational(v.h)}, {"k", jo::rational(v.k)}});
    });
    verb(pl, "interp", "X:Y ...: Lagrange interpolant", -1, [show](const Args& a) {
      const auto pts = io::parse_points<Rational>(joined(a));
      show(poly::lagrange_interpolate(pts));
    });
    verb(pl, "rs-encode", "V ...: append interpolated redundancy", -1, [&c](const Args& a) {
      const auto cw = poly::rs_encode(rational_list(a));
      emit(c, list_text(cw), {{"codeword", rational_array(cw)}});
    });
    verb(pl, "rs-verify", "V ...: degree test", -1, [&c](const Args& a) {
      const auto cw = rational_list(a);
      const bool ok = poly::rs_verify(cw);
      const auto p = poly::rs_interpolant(cw);
      emit(c, std::string(ok ? "true" : "false") + "\n" + poly::to_string(p),
           {{"valid", ok}, {"interpolant", jo::polynomial(p)}});
    });
    auto* fix = verb(pl, "rs-correct", "V ...: omission search", -1, [this](const Args& a) {
      const auto r = poly::rs_correct(rational_list(a), o.max_errors);
      if (!r) raise(ErrorKind::Uncorrectable, "no omission of at most " + std::to_string(o.max_errors) + " positions works");
      std::string pos;
      for (std::size_t i = 0; i < r->error_positions.size(); ++i) pos += (i ? " " : "") + std::to_string(r->error_positions[i]);
      emit(ctx, "positions " + pos + "\ndata " + list_text(r->data) + "\ncodeword " + list_text(r->codeword),
           {{"error_positions", r->error_positions}, {"data", rational_array(r->data)},
            {"codeword", rational_array(r->codeword)}});
    });
    fix->add_option("-t,--max-errors", o.max_errors, "largest omission tried")->capture_default_str();
  }

  static json poly_json(const poly::Polynomial& p) { return {{"polynomial", jo::polynomial(p)}}; }

  void ciphers(CLI::App& app) const {
    auto* cr = app.add_subcommand("crypto", "classical ciphers");
    cr->require_subcommand(1);
    const Ctx& c = ctx;
    verb(cr, "rsa-keygen", "P Q E: keypair", 3, [&c](const Args& a) {
      const auto k = crypto::rsa_keypair(big(a[0]), big(a[1]), big(a[2]));
      emit(c, "n " + k.n.str() + "\ne " + k.e.str() + "\nd " + k.d.str(),
           {{"n", jo::integer(k.n)}, {"e", jo::integer(k.e)}, {"d", jo::integer(k.d)},
            {"p", jo::integer(k.p)}, {"q", jo::integer(k.q)}});
    });
    auto* enc = verb(cr, "rsa-enc", "TEXT: encrypt byte by byte", 1, [this](const Args& a) {
      const BigInt n = big(o.n);
      const auto blocks = crypto::rsa_encrypt_text(a[0], n, big(o.e));
      std::string s;
      if (o.printable) {
        s = crypto::rsa_to_printable(blocks, n);
      } else {
        for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? " " : "") + blocks[i].str();
      }
      json j = {{"blocks", jo::array(blocks, [](const BigInt& z) { return jo::integer(z); })}};
      if (o.printable) j["printable"] = s;
      emit(ctx, s, j);
    });
    enc->add_option("--n", o.n, "modulus")->required();
    enc->add_option("--e", o.e, "public exponent")->required();
    enc->add_flag("--printable", o.printable, "write blocks as printable base-95 text");
    auto* dec = verb(cr, "rsa-dec", "BLOCK ...: decrypt", -1, [this](const Args& a) {
      const BigInt n = big(o.n);
      std::vector<BigInt> blocks;
      if (o.printable) {
        std::string text;
        for (std::size_t i = 0; i < a.size(); ++i) text += (i ? " " : "") + a[i];
        blocks = crypto::rsa_from_printable(text, n);
      } else {
        for (const auto& tok : io::split_tokens(joined(a))) blocks.push_back(big(tok));
      }
      const std::string m = crypto::rsa_decrypt_text(blocks, n, big(o.d));
      emit(ctx, m, {{"text", m}});
    });
    dec->add_option("--n", o.n, "modulus")->required();
    dec->add_option("--d", o.d, "private exponent")->required();
    dec->add_flag("--printable", o.printable, "blocks given as printable base-95 text");
    const auto key_opts = [this](CLI::App* v) {
      v->add_option("--a", o.a, "multiplier")->required();
      v->add_option("--b", o.b, "shift")->required();
    };
    key_opts(verb(cr, "affine-enc", "TEXT: x -> a x + b mod 26", 1, [this](const Args& a) {
      const std::string s = crypto::affine_encrypt(a[0], {o.a, o.b});
      emit(ctx, s, {{"text", s}});
    }));
    key_opts(verb(cr, "affine-dec", "TEXT: inverse affine map", 1, [this](const Args& a) {
      const std::string s = crypto::affine_decrypt(a[0], {o.a, o.b});
      emit(ctx, s, {{"text", s}});
    }));
    auto* crack = verb(cr, "affine-crack", "TEXT: frequency analysis", 1, [this](const Args& a) {
      if (o.plain_pair.size() != 2) raise(ErrorKind::InvalidInput, "--assume takes two letters");
      const auto cands = crypto::affine_crack(a[0], {o.plain_pair[0], o.plain_pair[1]});
      std::string s;
      json j = json::array();
      for (const auto& cand : cands) {
        const std::string plain = crypto::affine_decrypt(a[0], cand.key);
        s += "a " + std::to_string(cand.key.a) + " b " + std::to_string(cand.key.b) + " " + plain + "\n";
        j.push_back({{"a", cand.key.a}, {"b", cand.key.b}, {"score", cand.score}, {"plaintext", plain}});
      }
      emit(ctx, s.empty() ? "no candidates" : s, {{"candidates", j}});
    });
    crack->add_option("--assume", o.plain_pair, "plaintext letters for the top two")->capture_default_str();
    verb(cr, "freq", "TEXT: letter counts", 1, [&c](const Args& a) {
      const auto f = crypto::letter_frequencies(a[0]);
      std::string s;
      json j = json::array();
      for (const auto& [ch, n] : f) {
        s += std::string(1, ch) + " " + std::to_string(n) + "\n";
        j.push_back({{"letter", std::string(1, ch)}, {"count", n}});
      }
      emit(c, s, {{"frequencies", j}});
    });
    auto* he = verb(cr, "hill-enc", "TEXT: Hill cipher", 1, [this](const Args& a) {
      const std::string s = crypto::hill_encrypt(a[0], matrix_arg<BigInt>(ctx, o.key));
      emit(ctx, s, {{"text", s}});
    });
    he->add_option("--key", o.key, "key matrix, e.g. \"3 2;5 3\"")->required();
    auto* hd = verb(cr, "hill-dec", "TEXT: Hill decryption", 1, [this](const Args& a) {
      const std::string s = crypto::hill_decrypt(a[0], matrix_arg<BigInt>(ctx, o.key));
      emit(ctx, s, {{"text", s}});
    });
    hd->add_option("--key", o.key, "key matrix")->required();
  }

  void complex_numbers(CLI::App& app) const {
    auto* z = app.add_subcommand("cx", "complex numbers");
    z->require_subcommand(1);
    const Ctx& c = ctx;
    const auto show_exact = [&c](const cx::ComplexQ& v) {
      emit(c, complex_text(v), {{"result", jo::complex(v)}});
    };
    const auto show_polar = [&c](const cx::Polar& p) {
      emit(c, polar_text(p) + "\n" + complex_text(cx::to_rect(p)),
           {{"polar", jo::polar(p)}, {"rect", jo::complex(cx::to_rect(p))}});
    };
    const auto binary = [&c, show_exact, show_polar](const Args& a, bool divide) {
      if (is_polar_literal(a[0]) || is_polar_literal(a[1])) {
        const auto p = parse_phasor(c, a[0]), q = parse_phasor(c, a[1]);
        show_polar(divide ? cx::polar_div(p, q) : cx::polar_mul(p, q));
        return;
      }
      const auto x = parse_complex_exact(a[0]), y = parse_complex_exact(a[1]);
      show_exact(divide ? cx::c_div(x, y) : cx::c_mul(x, y));
    };
    verb(z, "mul", "Z W: product", 2, [binary](const Args& a) { binary(a, false); });
    verb(z, "div", "Z W: quotient", 2, [binary](const Args& a) { binary(a, true); });
    verb(z, "conj", "Z: conjugate", 1, [show_exact](const Args& a) { show_exact(cx::c_conj(parse_complex_exact(a[0]))); });
    verb(z, "inv", "Z: reciprocal", 1, [show_exact](const Args& a) { show_exact(cx::c_inv(parse_complex_exact(a[0]))); });
    verb(z, "polar", "Z: modulus and principal argument", 1,
         [&c, show_polar](const Args& a) { show_polar(cx::to_polar(parse_complex(c, a[0]))); });
    verb(z, "rect", "M@A: binomial form", 1, [&c](const Args& a) {
      const auto r = cx::to_rect(parse_phasor(c, a[0]));
      emit(c, complex_text(r), {{"rect", jo::complex(r)}});
    });
    verb(z, "pow", "Z N: De Moivre power", 2, [&c, show_polar](const Args& a) {
      const BigInt n = big(a[1]);
      if (abs(n) > 1000000) raise(ErrorKind::OutOfRange, "exponent too large");
      show_polar(cx::de_moivre_pow(parse_phasor(c, a[0]), n.convert_to<long long>()));
    });
    verb(z, "roots", "Z N: the N-th roots", 2, [&c](const Args& a) {
      const auto roots = cx::nth_roots(parse_complex(c, a[0]), static_cast<unsigned>(small(a[1])));
      std::string s;
      json j = json::array();
      for (const auto& r : roots) {
        s += polar_text(r) + "  " + complex_text(cx::to_rect(r)) + "\n";
        j.push_back({{"polar", jo::polar(r)}, {"rect", jo::complex(cx::to_rect(r))}});
      }
      emit(c, s, {{"roots", j}});
    });
    verb(z, "phasor-sum", "P ...: sum of phasors", -1, [&c, show_polar](const Args& a) {
      std::vector<cx::Polar> ps;
      for (const auto& s : a) ps.push_back(parse_phasor(c, s));
      show_polar(cx::phasor_sum(ps));
    });
    auto* rlc = verb(z, "rlc", "series RLC circuit", 0, [this](const Args&) {
      cx::CircuitSpec spec;
      spec.r = o.r;
      spec.l = o.l;
      spec.c = o.c;
      if (o.w) {
        spec.w = *o.w;
      } else if (o.freq) {
        spec.w = 2.0 * std::numbers::pi * *o.freq;
      } else {
        raise(ErrorKind::InvalidCircuit, "give --freq or --w");
      }
      if (o.v && o.i0) raise(ErrorKind::InvalidInput, "give --v or --i0, not both");
      spec.i0 = o.v ? cx::series_rlc_current(*o.v, spec) : o.i0.value_or(1.0);
      const auto r = cx::series_rlc_source(spec);
      const std::string s = "Z " + complex_text(r.impedance) + "\nI0 " + fmt(spec.i0) + "\nVs " +
                            polar_text(r.source) + "\nVR " + polar_text(r.v_r) + "\nVL " + polar_text(r.v_l) +
                            "\nVC " + polar_text(r.v_c) + "\nphase " + fmt(cx::rad_to_deg(r.phase)) + "deg (" +
                            fmt(r.phase) + " rad)";
      emit(ctx, s,
           {{"impedance", jo::complex(r.impedance)}, {"i0", spec.i0}, {"source", jo::polar(r.source)},
            {"v_r", jo::polar(r.v_r)}, {"v_l", jo::polar(r.v_l)}, {"v_c", jo::polar(r.v_c)},
            {"amplitude", r.amplitude}, {"phase", r.phase}});
    });
    rlc->add_option("--r", o.r, "resistance, ohm")->required();
    rlc->add_option("--l", o.l, "inductance, H")->capture_default_str();
    rlc->add_option("--c", o.c, "capacitance, F (omit for no capacitor)");
    rlc->add_option("--freq", o.freq, "frequency, Hz");
    rlc->add_option("--w", o.w, "angular frequency, rad/s");
    rlc->add_option("--v", o.v, "source amplitude, V");
    rlc->add_option("--i0", o.i0, "current amplitude, A");
  }

  void applications(CLI::App& app) const {
    const Ctx& c = ctx;
    auto* nav = app.add_subcommand("nav", "navigation");
    nav->require_subcommand(1);
    verb(nav, "wind", "COURSE TAS WIND_FROM WIND_SPEED: wind triangle", 4, [&c](const Args& a) {
      const auto s = applied::wind_triangle(real(a[0]), real(a[1]), real(a[2]), real(a[3]));
      emit(c,
           "ground_speed " + fmt(s.ground_speed) + "\ndrift " + fmt(s.drift_deg) + "deg (" +
               fmt(cx::deg_to_rad(s.drift_deg)) + " rad)\nheading " + fmt(s.heading_deg),
           {{"ground_speed", s.ground_speed}, {"drift_deg", s.drift_deg}, {"heading_deg", s.heading_deg}});
    });

    auto* geo = app.add_subcommand("geo", "geometry");
    geo->require_subcommand(1);
    verb(geo, "conic", "A C D E F: canonical form of A x^2 + C y^2 + D x + E y + F = 0", 5, [&c](const Args& a) {
      const auto k = applied::conic_canonical(rat(a[0]), rat(a[1]), rat(a[2]), rat(a[3]), rat(a[4]));
      const char* origin = k.kind == applied::ConicKind::Parabola ? "vertex" : "center";
      std::string s = "kind " + applied::name(k.kind) + "\n" + origin + " " + to_string(k.x0) + " " + to_string(k.y0);
      json foci = json::array();
      for (const auto& f : k.foci) foci.push_back({f.x, f.y});
      json j = {{"kind", applied::name(k.kind)},
                {origin, {jo::rational(k.x0), jo::rational(k.y0)}},
                {"canonical",
                 {{"alpha", jo::rational(k.alpha)}, {"beta", jo::rational(k.beta)}, {"lx", jo::rational(k.lx)},
                  {"ly", jo::rational(k.ly)}, {"gamma", jo::rational(k.gamma)}}},
                {"foci", foci}};
      switch (k.kind) {
        case applied::ConicKind::Circle:
        case applied::ConicKind::Ellipse:
        case applied::ConicKind::HyperbolaH:
        case applied::ConicKind::HyperbolaV:
          s += "\na " + fmt(k.a) + "\nb " + fmt(k.b) + "\ne " + fmt(k.e) + "\nfocal " + fmt(k.focal);
          j["a"] = k.a;
          j["b"] = k.b;
          j["e"] = k.e;
          j["focal"] = k.focal;
          break;
        case applied::ConicKind::Parabola:
          s += "\nfocal " + fmt(k.focal);
          j["focal"] = k.focal;
          break;
        default:
          break;
      }
      for (const auto& f : k.foci) s += "\nfocus " + fmt(f.x) + " " + fmt(f.y);
      emit(c, s, j);
    });
    verb(geo, "chimney", "R ALPHA: hole cut by a tube through a pitched roof", 2, [&c](const Args& a) {
      const auto e = applied::cylinder_ellipse(real(a[0]), real(a[1]));
      emit(c, "S " + fmt(e.semi_major) + "\nF " + fmt(e.focal) + "\nL " + fmt(e.string_length),
           {{"semi_major", e.semi_major}, {"focal", e.focal}, {"string_length", e.string_length}});
    });
    verb(geo, "cosines", "B C ALPHA: opposite side by the law of cosines", 3, [&c](const Args& a) {
      const double v = applied::law_of_cosines(real(a[0]), real(a[1]), real(a[2]));
      emit(c, fmt(v), {{"result", v}});
    });
    verb(geo, "sines", "A ALPHA BETA: side by the law of sines", 3, [&c](const Args& a) {
      const double v = applied::law_of_sines(real(a[0]), real(a[1]), real(a[2]));
      emit(c, fmt(v), {{"result", v}});
    });
    verb(geo, "deg2rad", "D: degrees to radians", 1, [&c](const Args& a) {
      const double v = cx::deg_to_rad(real(a[0]));
      emit(c, fmt(v), {{"result", v}});
    });
    verb(geo, "rad2deg", "R: radians to degrees", 1, [&c](const Args& a) {
      const double v = cx::rad_to_deg(real(a[0]));
      emit(c, fmt(v), {{"result", v}});
    });

    auto* phys = app.add_subcommand("phys", "physics");
    phys->require_subcommand(1);
    auto* proj = verb(phys, "projectile", "V0 ALPHA: range and flight time", 2, [this](const Args& a) {
      const auto p = applied::projectile(real(a[0]), real(a[1]), o.g_projectile);
      emit(ctx, "range " + fmt(p.range) + "\ntime " + fmt(p.flight_time),
           {{"range", p.range}, {"flight_time", p.flight_time}});
    });
    proj->add_option("--g", o.g_projectile, "gravity")->capture_default_str();
    verb(phys, "richter", "M1 M2: amplitude ratio", 2, [&c](const Args& a) {
      const double v = applied::richter_ratio(real(a[0]), real(a[1]));
      emit(c, fmt(v), {{"ratio", v}});
    });
    verb(phys, "aristarchus", "HALF CYCLE: Sun/Moon distance ratio", 2, [&c](const Args& a) {
      const double v = applied::aristarchus_ratio(real(a[0]), real(a[1]));
      emit(c, fmt(v), {{"ratio", v}});
    });
  }

  void imaging(CLI::App& app) const {
    auto* im = app.add_subcommand("img", "image transforms");
    im->require_subcommand(1);
    const auto with_pgm = [this](CLI::App* v) {
      v->add_flag("--pgm", o.pgm, "write PGM instead of matrix text");
      v->add_option("--maxval", o.maxval, "PGM maximum value")->capture_default_str();
      return v;
    };
    with_pgm(verb(im, "flip", "IMG: mirror left-right", 1,
                  [this](const Args& a) { emit_image(ctx, o, img::flip_horizontal(image_arg(ctx, a[0]))); }));
    with_pgm(verb(im, "transpose", "IMG: transpose", 1,
                  [this](const Args& a) { emit_image(ctx, o, img::transpose_image(image_arg(ctx, a[0]))); }));
    with_pgm(verb(im, "negate", "IMG: negative of a binary image", 1,
                  [this](const Args& a) { emit_image(ctx, o, img::negate(image_arg(ctx, a[0]))); }));
    with_pgm(verb(im, "window", "IMG TOP LEFT BOTTOM RIGHT: keep a rectangle", 5, [this](const Args& a) {
      const auto idx = [&](int i) { return static_cast<Eigen::Index>(small(a[i])); };
      emit_image(ctx, o, img::window(image_arg(ctx, a[0]), idx(1), idx(2), idx(3), idx(4)));
    }));
    auto* bl = with_pgm(verb(im, "blend", "A B: convex combination", 2, [this](const Args& a) {
      const auto A = image_arg(ctx, a[0]), B = image_arg(ctx, a[1]);
      if (o.steps > 0) {
        if (o.t) raise(ErrorKind::InvalidInput, "give --t or --steps, not both");
        const auto frames = img::blend_frames(A, B, o.steps);
        std::string s;
        for (std::size_t k = 0; k < frames.size(); ++k) {
          std::ostringstream name;
          name << o.prefix << "_" << std::setw(3) << std::setfill('0') << k << ".pgm";
          std::ofstream f(name.str(), std::ios::binary);
          if (!f) raise(ErrorKind::InvalidInput, "cannot write '" + name.str() + "'");
          f << img::pgm_write(frames[k], o.maxval);
          s += name.str() + "\n";
        }
        emit(ctx, s, {{"frames", frames.size()}});
        return;
      }
      if (!o.t) raise(ErrorKind::BadT, "give --t or --steps");
      emit_image(ctx, o, img::blend(A, B, *o.t));
    }));
    bl->add_option("--t", o.t, "weight of B in [0, 1]");
    bl->add_option("--steps", o.steps, "write this many PGM frames from A to B");
    bl->add_option("--prefix", o.prefix, "frame file prefix")->capture_default_str();
    auto* to = verb(im, "topgm", "IMG: write PGM", 1, [this](const Args& a) {
      const auto m = image_arg(ctx, a[0]);
      const std::string p = img::pgm_write(m, o.maxval);
      if (ctx.json) {
        emit(ctx, p, {{"pgm", p}});
      } else {
        *ctx.out << p;
      }
    });
    to->add_option("--maxval", o.maxval, "PGM maximum value")->capture_default_str();
    verb(im, "frompgm", "PGM: matrix text", 1, [this](const Args& a) {
      const auto m = img::pgm_read(source_text(ctx, a[0]));
      emit(ctx, io::format_matrix(m), image_json(m));
    });
  }
};

// Verb callbacks hold a pointer to `b`, so it must outlive parsing.
void build(CLI::App& app, const Builder& b) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", b.ctx.json, "machine-readable output");
  app.add_flag("--deg", b.ctx.deg, "bare polar angles are degrees");
  app.set_help_all_flag("--help-all", "show every subcommand");
  b.number_theory(app);
  b.combinatorics(app);
  b.information(app);
  b.linear_algebra(app);
  b.polynomials(app);
  b.ciphers(app);
  b.complex_numbers(app);
  b.applications(app);
  b.imaging(app);
  for (auto* noun : app.get_subcommands({})) {
    noun->fallthrough();
    for (auto* v : noun->get_subcommands({})) v->fallthrough();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Computational mathematics toolkit", "mathbook"};
  Ctx ctx;
  ctx.out = &out;
  ctx.in = &in;
  Opts o;
  const Builder builder{ctx, o};
  build(app, builder);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 0;
}

std::vector<std::string> subcommand_paths() {
  CLI::App app;
  Ctx ctx;
  Opts o;
  const Builder builder{ctx, o};
  build(app, builder);
  std::vector<std::string> out;
  for (const auto* noun : app.get_subcommands({}))
    for (const auto* v : noun->get_subcommands({})) out.push_back(noun->get_name() + " " + v->get_name());
  return out;
}

}  // namespace mathbook::cli
