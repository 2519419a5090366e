#pragma once

// Information measures in bits and the overlapping-codon analysis of DNA.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace mathbook::info {

/// log2(n) for n equiprobable messages. InvalidCount if n < 1.
double uniform_information(std::uint64_t n_messages);

/// -sum p_i log2 p_i. Every p_i must lie in (0, 1] and the sum must be 1
/// within 1e-9, otherwise InvalidDistribution.
double shannon_entropy(std::span<const double> probabilities);

/// Entropy of the empirical distribution given by positive counts.
double entropy_from_counts(std::span<const std::uint64_t> counts);

struct CodonCounts {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
};

/// Width-3 windows with stride 1, so "TTTT" holds TTT twice. Input must be at
/// least 3 letters over A, C, G, T (case-insensitive); otherwise ParseError.
CodonCounts sliding_codons(std::string_view sequence);

double sequence_entropy(std::string_view sequence);

/// Raw text or FASTA-like: lines starting with '>' or ';' are dropped and
/// whitespace is removed.
std::string strip_fasta(std::string_view text);

}  // namespace mathbook::info
