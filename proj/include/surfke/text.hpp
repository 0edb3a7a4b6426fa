#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfke {

/// Closed part-of-speech tag set used by the built-in tagger and by
/// pre-tagged input.
enum class PosTag : std::uint8_t {
  kNoun,
  kAdj,
  kVerb,
  kAdv,
  kDet,
  kPrep,
  kConj,
  kPron,
  kNum,
  kOther,
};

inline constexpr std::size_t kPosTagCount = 10;

std::string_view to_string(PosTag tag);
/// Parses an upper-case tag name ("NOUN", "ADJ", ...). Throws ConfigError.
PosTag parse_pos_tag(std::string_view name);

struct Token {
  std::string surface;
  std::string normalized;  // ASCII case-folded surface
  std::string stem;        // Porter stem of normalized
  PosTag pos = PosTag::kNoun;
  std::size_t position = 0;
  std::size_t sentence = 0;
};

struct Document {
  std::string id;
  std::vector<Token> tokens;
  std::optional<std::vector<std::string>> gold;  // verbatim key-file lines
};

/// Set of tags that pass the candidate filter. Never empty.
class PosFilter {
 public:
  PosFilter();  // {NOUN, ADJ}
  explicit PosFilter(std::set<PosTag> allowed, bool remove_stopwords = true);

  bool allows(PosTag tag) const { return allowed_.contains(tag); }
  bool removes_stopwords() const { return remove_stopwords_; }
  const std::set<PosTag>& allowed() const { return allowed_; }

  static PosFilter all_tags(bool remove_stopwords);

 private:
  std::set<PosTag> allowed_;
  bool remove_stopwords_ = true;
};

/// Lower-cases ASCII letters; other bytes (including UTF-8 sequences) pass through.
std::string to_lower(std::string_view text);

/// Porter (1980) stemmer, reference ANSI C variant.
std::string stem(std::string_view word);

/// Splits raw text into word tokens. Punctuation separates and is dropped;
/// a hyphen or apostrophe between two word characters stays inside the token.
/// A new sentence starts after '.', '!' or '?' followed by whitespace and an
/// upper-case letter. Tokens come back with pos = NOUN (unset).
std::vector<Token> tokenize(std::string_view text);

/// Assigns a tag to every token: bundled lexicon, then suffix rules, then NOUN.
void pos_tag(std::span<Token> tokens);

/// Convenience: tokenize followed by pos_tag.
std::vector<Token> analyze(std::string_view text);

/// Parses pre-tagged text: whitespace-separated `surface_TAG` items, one
/// sentence per non-empty line. Throws CorpusError on malformed items.
std::vector<Token> parse_tagged(std::string_view text);

bool is_stopword(std::string_view normalized);

/// mask[i] is true iff tokens[i] has an allowed tag and is not a stopword.
std::vector<bool> candidate_word_mask(std::span<const Token> tokens,
                                      const PosFilter& filter);

/// Stemmed, lower-cased, single-space form of a free-text phrase; the key
/// used for gold matching.
std::string stemmed_form(std::string_view phrase);

}  // namespace surfke
