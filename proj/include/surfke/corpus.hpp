#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "surfke/text.hpp"

namespace surfke {

/// Reads one document from disk. `.tagged` files are parsed as pre-tagged
/// input; anything else goes through tokenize + pos_tag.
Document load_document(const std::filesystem::path& path);

/// Reads gold keyphrases: one per line, blank lines skipped, entries with a
/// stemmed form already seen are dropped. Throws CorpusError if none remain.
std::vector<std::string> load_keyphrases(const std::filesystem::path& path);

/// Loads `<id>.txt` documents (or `<id>.tagged` when present) with optional
/// `<id>.key` gold files, ordered by id. A `.key` or `.tagged` without a
/// matching `.txt` is an error.
std::vector<Document> load_corpus(const std::filesystem::path& dir);

}  // namespace surfke
