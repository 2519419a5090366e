#include "mathbook/information.hpp"

#include "mathbook/error.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace mathbook::info {

double uniform_information(std::uint64_t n_messages) {
  if (n_messages < 1) raise(ErrorKind::InvalidCount, "need at least one message");
  return std::log2(static_cast<double>(n_messages));
}

double shannon_entropy(std::span<const double> probabilities) {
  if (probabilities.empty()) raise(ErrorKind::InvalidDistribution, "empty distribution");
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p > 0.0 && p <= 1.0)) raise(ErrorKind::InvalidDistribution, "probabilities must lie in (0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) raise(ErrorKind::InvalidDistribution, "probabilities must sum to 1");
  double h = 0.0;
  for (double p : probabilities) h -= p * std::log2(p);
  return h < 0.0 ? 0.0 : h;
}

double entropy_from_counts(std::span<const std::uint64_t> counts) {
  if (counts.empty()) raise(ErrorKind::InvalidDistribution, "empty distribution");
  std::uint64_t total = 0;
  for (auto c : counts) {
    if (c == 0) raise(ErrorKind::InvalidDistribution, "counts must be positive");
    total += c;
  }
  // H = log2 T - (1/T) sum c log2 c; exact for uniform counts.
  const double t = static_cast<double>(total);
  double acc = 0.0;
  for (auto c : counts) acc += static_cast<double>(c) * std::log2(static_cast<double>(c));
  const double h = std::log2(t) - acc / t;
  return h < 0.0 ? 0.0 : h;
}

CodonCounts sliding_codons(std::string_view sequence) {
  std::string seq;
  seq.reserve(sequence.size());
  for (char c : sequence) {
    const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u != 'A' && u != 'C' && u != 'G' && u != 'T') {
      raise(ErrorKind::ParseError, std::string("not a base: '") + c + "'");
    }
    seq.push_back(u);
  }
  if (seq.size() < 3) raise(ErrorKind::ParseError, "sequence shorter than one codon");
  CodonCounts out;
  for (std::size_t i = 0; i + 3 <= seq.size(); ++i) ++out.counts[seq.substr(i, 3)];
  out.total = seq.size() - 2;
  return out;
}

double sequence_entropy(std::string_view sequence) {
  const auto codons = sliding_codons(sequence);
  std::vector<std::uint64_t> counts;
  for (const auto& [codon, c] : codons.counts) counts.push_back(c);
  return entropy_from_counts(counts);
}

std::string strip_fasta(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && (line.front() == '>' || line.front() == ';')) continue;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace mathbook::info
