#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfke/embedding.hpp"
#include "surfke/text.hpp"

namespace surfke {

enum class CandidateMode {
  kSubNgrams,  // every n-gram (n <= max_phrase_len) inside each run
  kMaximal,    // only whole runs, when they fit within max_phrase_len
};

std::string_view to_string(CandidateMode mode);
CandidateMode parse_candidate_mode(std::string_view name);

struct CandidatePhrase {
  std::vector<std::string> words;  // normalized
  std::string stemmed_form;        // stems joined by single spaces
  std::size_t first_position = 0;
  std::size_t occurrences = 0;
  std::vector<double> feature;
  std::optional<bool> label;
  std::optional<double> score;
  std::optional<double> log_odds;  // log P(pos|x) - log P(neg|x), ranking tie-break

  std::string text() const;  // words joined by single spaces
};

/// Candidates from maximal runs of mask-true tokens, deduplicated by
/// stemmed form (earliest first_position kept, occurrences summed) and
/// returned in first_position order.
std::vector<CandidatePhrase> extract_candidates(std::span<const Token> tokens, const std::vector<bool>& mask,
                                                std::size_t max_phrase_len,
                                                CandidateMode mode = CandidateMode::kSubNgrams);

/// Coordinate-wise arithmetic mean of the word vectors. Throws LookupError
/// naming the first word missing from the embedding.
std::vector<double> phrase_vector(const EmbeddingMatrix& emb, const CandidatePhrase& phrase);

/// label = stemmed_form matches the stemmed form of some gold phrase.
/// Throws ScoringError for an empty gold set.
void label_candidates(std::span<CandidatePhrase> cands, std::span<const std::string> gold);

}  // namespace surfke
