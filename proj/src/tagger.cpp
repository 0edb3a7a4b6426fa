#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "surfke/bundled_data.hpp"
#include "surfke/errors.hpp"
#include "surfke/text.hpp"

namespace surfke {
namespace {

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') fn(line);
    start = end + 1;
  }
}

const std::unordered_map<std::string, PosTag>& lexicon() {
  static const auto table = [] {
    std::unordered_map<std::string, PosTag> t;
    for_each_line(bundled::lexicon_text(), [&](std::string_view line) {
      const auto tab = line.find('\t');
      if (tab == std::string_view::npos) throw Error("bundled lexicon: missing tab in '" + std::string(line) + "'");
      t.emplace(std::string(line.substr(0, tab)), parse_pos_tag(line.substr(tab + 1)));
    });
    return t;
  }();
  return table;
}

const std::unordered_set<std::string>& stopwords() {
  static const auto set = [] {
    std::unordered_set<std::string> s;
    for_each_line(bundled::stopword_text(), [&](std::string_view line) { s.emplace(line); });
    return s;
  }();
  return set;
}

bool all_digits(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool has_suffix(std::string_view w, std::string_view suffix, std::size_t min_stem = 2) {
  return w.size() >= suffix.size() + min_stem && w.ends_with(suffix);
}

// Fallback for words missing from the lexicon. Gerunds (-ing) are left to
// the NOUN default: in technical text they mostly head noun phrases.
PosTag suffix_tag(std::string_view w) {
  if (all_digits(w)) return PosTag::kNum;
  if (has_suffix(w, "ly", 3)) return PosTag::kAdv;
  if (has_suffix(w, "ed", 3)) return PosTag::kVerb;
  if (has_suffix(w, "ize") || has_suffix(w, "ify")) return PosTag::kVerb;
  for (std::string_view s : {"ous", "ful", "ive", "able", "ible", "al", "ic", "less", "ish", "ical"})
    if (has_suffix(w, s)) return PosTag::kAdj;
  return PosTag::kNoun;
}

}  // namespace

bool is_stopword(std::string_view normalized) { return stopwords().contains(std::string(normalized)); }

void pos_tag(std::span<Token> tokens) {
  const auto& lex = lexicon();
  for (Token& t : tokens) {
    const auto it = lex.find(t.normalized);
    t.pos = it != lex.end() ? it->second : suffix_tag(t.normalized);
  }
}

}  // namespace surfke
