#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "surfke/corpus.hpp"
#include "surfke/errors.hpp"

namespace surfke {
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw CorpusError("error while reading '" + path.string() + "'");
  return ss.str();
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Document load_document(const fs::path& path) {
  Document doc;
  doc.id = path.stem().string();
  const std::string text = read_file(path);
  doc.tokens = path.extension() == ".tagged" ? parse_tagged(text) : analyze(text);
  return doc;
}

std::vector<std::string> load_keyphrases(const fs::path& path) {
  const std::string text = read_file(path);
  std::vector<std::string> keys;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    if (is_blank(line)) continue;
    const std::string key = stemmed_form(line);
    if (key.empty() || !seen.insert(key).second) continue;
    keys.push_back(std::move(line));
  }
  if (keys.empty()) throw CorpusError("key file '" + path.string() + "' contains no keyphrases");
  return keys;
}

std::vector<Document> load_corpus(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw CorpusError("corpus directory '" + dir.string() + "' not found");

  struct Entry {
    fs::path txt, key, tagged;
  };
  std::map<std::string, Entry> entries;  // ordered by id
  for (const auto& item : fs::directory_iterator(dir)) {
    if (!item.is_regular_file()) continue;
    const fs::path& p = item.path();
    const std::string ext = p.extension().string();
    auto& e = entries[p.stem().string()];
    if (ext == ".txt") e.txt = p;
    else if (ext == ".key") e.key = p;
    else if (ext == ".tagged") e.tagged = p;
  }

  std::vector<Document> docs;
  for (auto& [id, e] : entries) {
    if (e.txt.empty()) {
      if (!e.key.empty()) throw CorpusError("key file '" + e.key.string() + "' has no matching .txt");
      if (!e.tagged.empty()) throw CorpusError("tagged file '" + e.tagged.string() + "' has no matching .txt");
      continue;
    }
    Document doc = load_document(e.tagged.empty() ? e.txt : e.tagged);
    doc.id = id;
    if (!e.key.empty()) doc.gold = load_keyphrases(e.key);
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace surfke
