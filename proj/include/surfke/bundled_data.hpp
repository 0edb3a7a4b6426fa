#pragma once

#include <string_view>

namespace surfke::bundled {

/// Contents of data/lexicon.tsv (`word<TAB>TAG` per line).
std::string_view lexicon_text();
/// Contents of data/stopwords.txt (one word per line).
std::string_view stopword_text();

}  // namespace surfke::bundled
