#include "mathbook/imaging.hpp"

#include "mathbook/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace mathbook::img {

Image flip_horizontal(const Image& img) { return img.rowwise().reverse(); }

Image transpose_image(const Image& img) { return img.transpose(); }

bool is_binary(const Image& img) {
  return (img.array() == 0.0 || img.array() == 1.0).all();
}

Image negate(const Image& img) {
  if (!is_binary(img)) raise(ErrorKind::NonBinary, "negative needs a 0/1 image");
  return (1.0 - img.array()).matrix();
}

Image window_mask(Eigen::Index rows, Eigen::Index cols, Eigen::Index top, Eigen::Index left,
                  Eigen::Index bottom, Eigen::Index right) {
  if (top < 1 || left < 1 || top > bottom || left > right || bottom > rows || right > cols) {
    raise(ErrorKind::BadRectangle, "window outside the image or inverted");
  }
  Image mask = Image::Zero(rows, cols);
  mask.block(top - 1, left - 1, bottom - top + 1, right - left + 1).setOnes();
  return mask;
}

Image window(const Image& img, Eigen::Index top, Eigen::Index left, Eigen::Index bottom,
             Eigen::Index right) {
  return la::hadamard(img, window_mask(img.rows(), img.cols(), top, left, bottom, right));
}

Image blend(const Image& a, const Image& b, double t) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) raise(ErrorKind::DimensionMismatch, "images differ in shape");
  if (!(t >= 0.0 && t <= 1.0)) raise(ErrorKind::BadT, "t must lie in [0, 1]");
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  // a + t (b - a) stays monotone in t under rounding
  return (a + t * (b - a)).cwiseMax(0.0).cwiseMin(1.0);
}

std::vector<Image> blend_frames(const Image& a, const Image& b, unsigned n) {
  if (n < 2) raise(ErrorKind::InvalidCount, "need at least two frames");
  std::vector<Image> frames;
  frames.reserve(n);
  for (unsigned k = 0; k < n; ++k) frames.push_back(blend(a, b, double(k) / double(n - 1)));
  return frames;
}

void require_intensities(const Image& img) {
  if (!(img.array() >= 0.0 && img.array() <= 1.0).all()) {
    raise(ErrorKind::InvalidInput, "intensities must lie in [0, 1]");
  }
}

std::string pgm_write(const Image& img, unsigned maxval) {
  if (maxval < 1 || maxval > 65535) raise(ErrorKind::InvalidInput, "maxval must lie in 1..65535");
  require_intensities(img);
  std::string out = "P2\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n" +
                    std::to_string(maxval) + "\n";
  for (Eigen::Index i = 0; i < img.rows(); ++i) {
    for (Eigen::Index j = 0; j < img.cols(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(static_cast<unsigned>(std::floor(img(i, j) * maxval + 0.5)));
    }
    out += '\n';
  }
  return out;
}

namespace {

class PgmTokens {
 public:
  explicit PgmTokens(std::string_view s) : s_(s) {}

  std::string next() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= s_.size()) raise(ErrorKind::MalformedPgm, "stream ends early");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '#') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned long number() {
    const std::string t = next();
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      raise(ErrorKind::MalformedPgm, "expected a number, got '" + t + "'");
    }
    return std::stoul(t);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Image pgm_read(std::string_view bytes) {
  PgmTokens tok(bytes);
  if (tok.next() != "P2") raise(ErrorKind::MalformedPgm, "missing P2 magic");
  const unsigned long cols = tok.number();
  const unsigned long rows = tok.number();
  const unsigned long maxval = tok.number();
  if (cols == 0 || rows == 0 || maxval == 0 || maxval > 65535 || rows * cols > (1UL << 28)) {
    raise(ErrorKind::MalformedPgm, "bad header");
  }
  Image img(rows, cols);
  for (unsigned long i = 0; i < rows; ++i) {
    for (unsigned long j = 0; j < cols; ++j) {
      const unsigned long v = tok.number();
      if (v > maxval) raise(ErrorKind::MalformedPgm, "sample exceeds maxval");
      img(i, j) = double(v) / double(maxval);
    }
  }
  return img;
}

}  // namespace mathbook::img
