#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "surfke/errors.hpp"
#include "surfke/text.hpp"

namespace surfke {
namespace {

constexpr std::string_view kTagNames[kPosTagCount] = {
    "NOUN", "ADJ", "VERB", "ADV", "DET", "PREP", "CONJ", "PRON", "NUM", "OTHER"};

bool is_word_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

Token make_token(std::string surface, std::size_t position, std::size_t sentence) {
  Token t;
  t.normalized = to_lower(surface);
  t.stem = stem(t.normalized);
  t.surface = std::move(surface);
  t.position = position;
  t.sentence = sentence;
  return t;
}

}  // namespace

std::string_view to_string(PosTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

PosTag parse_pos_tag(std::string_view name) {
  for (std::size_t i = 0; i < kPosTagCount; ++i)
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  throw ConfigError("unknown POS tag '" + std::string(name) + "'");
}

PosFilter::PosFilter() : allowed_{PosTag::kNoun, PosTag::kAdj} {}

PosFilter::PosFilter(std::set<PosTag> allowed, bool remove_stopwords)
    : allowed_(std::move(allowed)), remove_stopwords_(remove_stopwords) {
  if (allowed_.empty()) throw ConfigError("POS filter must allow at least one tag");
}

PosFilter PosFilter::all_tags(bool remove_stopwords) {
  std::set<PosTag> all;
  for (std::size_t i = 0; i < kPosTagCount; ++i) all.insert(static_cast<PosTag>(i));
  return PosFilter(std::move(all), remove_stopwords);
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t sentence = 0;
  bool sentence_has_tokens = false;
  bool boundary_pending = false;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (is_word_byte(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        const auto cj = static_cast<unsigned char>(text[j]);
        if (is_word_byte(cj)) {
          ++j;
        } else if ((cj == '-' || cj == '\'') && j + 1 < n &&
                   is_word_byte(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;
        } else {
          break;
        }
      }
      if (boundary_pending && sentence_has_tokens) ++sentence;
      boundary_pending = false;
      tokens.push_back(make_token(std::string(text.substr(i, j - i)), tokens.size(), sentence));
      sentence_has_tokens = true;
      i = j;
      continue;
    }
    if (is_terminator(text[i])) {
      std::size_t j = i + 1;
      while (j < n && is_terminator(text[j])) ++j;
      std::size_t k = j;
      while (k < n && is_space_byte(static_cast<unsigned char>(text[k]))) ++k;
      if (k > j && k < n && std::isupper(static_cast<unsigned char>(text[k]))) boundary_pending = true;
      i = j;
      continue;
    }
    ++i;
  }
  return tokens;
}

std::vector<Token> analyze(std::string_view text) {
  auto tokens = tokenize(text);
  pos_tag(tokens);
  return tokens;
}

std::vector<Token> parse_tagged(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t sentence = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    bool line_has_tokens = false;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space_byte(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_space_byte(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) {
        const std::string_view item = line.substr(i, j - i);
        const std::size_t sep = item.rfind('_');
        if (sep == std::string_view::npos || sep == 0 || sep + 1 == item.size())
          throw CorpusError("malformed tagged item '" + std::string(item) + "'");
        const std::string_view surface = item.substr(0, sep);
        PosTag tag;
        try {
          tag = parse_pos_tag(item.substr(sep + 1));
        } catch (const ConfigError&) {
          throw CorpusError("unknown tag in tagged item '" + std::string(item) + "'");
        }
        bool has_word_byte = false;
        for (char c : surface) has_word_byte |= is_word_byte(static_cast<unsigned char>(c));
        if (has_word_byte) {
          Token t = make_token(std::string(surface), tokens.size(), sentence);
          t.pos = tag;
          tokens.push_back(std::move(t));
          line_has_tokens = true;
        }
      }
      i = j;
    }
    if (line_has_tokens) ++sentence;
    line_start = line_end + 1;
  }
  return tokens;
}

std::vector<bool> candidate_word_mask(std::span<const Token> tokens, const PosFilter& filter) {
  std::vector<bool> mask(tokens.size(), false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    mask[i] = filter.allows(t.pos) && !(filter.removes_stopwords() && is_stopword(t.normalized));
  }
  return mask;
}

std::string stemmed_form(std::string_view phrase) {
  std::string out;
  for (const Token& t : tokenize(phrase)) {
    if (!out.empty()) out.push_back(' ');
    out += t.stem;
  }
  return out;
}

}  // namespace surfke
