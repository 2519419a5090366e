#pragma once

// Grayscale images as matrices of intensities in [0, 1] with (0, 0) at the
// top-left, and PGM (P2) serialization. Window corners are 1-based and
// inclusive, matching pixel labels.

#include "mathbook/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mathbook::img {

using Image = la::RealMatrix;

/// out(i, j) = in(i, cols - 1 - j).
Image flip_horizontal(const Image& img);
Image transpose_image(const Image& img);

/// (x + 1) mod 2 on a binary image. NonBinary on any other value.
Image negate(const Image& img);

bool is_binary(const Image& img);

/// 0/1 mask that keeps rows top..bottom and columns left..right.
Image window_mask(Eigen::Index rows, Eigen::Index cols, Eigen::Index top, Eigen::Index left,
                  Eigen::Index bottom, Eigen::Index right);

/// Hadamard product with window_mask. BadRectangle unless
/// 1 <= top <= bottom <= rows and 1 <= left <= right <= cols.
Image window(const Image& img, Eigen::Index top, Eigen::Index left, Eigen::Index bottom,
             Eigen::Index right);

/// (1 - t) a + t b, clamped to [0, 1]. DimensionMismatch or BadT.
Image blend(const Image& a, const Image& b, double t);

/// n >= 2 frames at t = k / (n - 1).
std::vector<Image> blend_frames(const Image& a, const Image& b, unsigned n);

/// P2 with x stored as floor(x maxval + 1/2).
std::string pgm_write(const Image& img, unsigned maxval = 255);

/// Accepts '#' comments. MalformedPgm on anything that is not a complete P2
/// stream with samples in [0, maxval].
Image pgm_read(std::string_view bytes);

/// InvalidInput if some intensity lies outside [0, 1].
void require_intensities(const Image& img);

}  // namespace mathbook::img
