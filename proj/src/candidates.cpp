#include <unordered_map>
#include <unordered_set>

#include "surfke/candidates.hpp"
#include "surfke/errors.hpp"

namespace surfke {

std::string_view to_string(CandidateMode mode) {
  return mode == CandidateMode::kSubNgrams ? "subngrams" : "maximal";
}

CandidateMode parse_candidate_mode(std::string_view name) {
  if (name == "subngrams") return CandidateMode::kSubNgrams;
  if (name == "maximal") return CandidateMode::kMaximal;
  throw ConfigError("unknown candidate mode '" + std::string(name) + "' (expected subngrams or maximal)");
}

std::string CandidatePhrase::text() const {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

std::vector<CandidatePhrase> extract_candidates(std::span<const Token> tokens, const std::vector<bool>& mask,
                                                std::size_t max_phrase_len, CandidateMode mode) {
  if (max_phrase_len < 1) throw ConfigError("max_phrase_len must be >= 1");
  if (mask.size() != tokens.size()) throw ConfigError("mask length does not match token count");

  std::vector<CandidatePhrase> out;
  std::unordered_map<std::string, std::size_t> by_stem;
  const auto add = [&](std::size_t begin, std::size_t end) {
    std::string key;
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin) key.push_back(' ');
      key += tokens[i].stem;
    }
    const auto [it, inserted] = by_stem.emplace(key, out.size());
    if (!inserted) {
      ++out[it->second].occurrences;
      return;
    }
    CandidatePhrase c;
    for (std::size_t i = begin; i < end; ++i) c.words.push_back(tokens[i].normalized);
    c.stemmed_form = std::move(key);
    c.first_position = tokens[begin].position;
    c.occurrences = 1;
    out.push_back(std::move(c));
  };

  // Runs are scanned left to right and n-grams are emitted by start index, so
  // the first time a stemmed form is seen is also its earliest position.
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!mask[i]) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < tokens.size() && mask[end]) ++end;
    if (mode == CandidateMode::kMaximal) {
      if (end - i <= max_phrase_len) add(i, end);
    } else {
      for (std::size_t s = i; s < end; ++s)
        for (std::size_t e = s + 1; e <= end && e - s <= max_phrase_len; ++e) add(s, e);
    }
    i = end;
  }
  return out;
}

std::vector<double> phrase_vector(const EmbeddingMatrix& emb, const CandidatePhrase& phrase) {
  std::vector<double> mean(emb.dim(), 0.0);
  if (phrase.words.empty()) return mean;
  for (const auto& w : phrase.words) {
    if (!emb.contains(w)) throw LookupError("phrase word '" + w + "' is not in the embedding vocabulary");
    const auto v = emb.vector(w);
    for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += v[j];
  }
  const auto n = static_cast<double>(phrase.words.size());
  for (double& x : mean) x /= n;
  return mean;
}

void label_candidates(std::span<CandidatePhrase> cands, std::span<const std::string> gold) {
  if (gold.empty()) throw ScoringError("gold keyphrase set is empty");
  std::unordered_set<std::string> keys;
  for (const auto& g : gold) keys.insert(stemmed_form(g));
  for (auto& c : cands) c.label = keys.contains(c.stemmed_form);
}

}  // namespace surfke
