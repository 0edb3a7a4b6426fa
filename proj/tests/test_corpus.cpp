#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "surfke/corpus.hpp"
#include "surfke/errors.hpp"

namespace fs = std::filesystem;
using namespace surfke;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("surfke_test_corpus_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& file, const std::string& text) const {
    std::ofstream(path / file, std::ios::binary) << text;
  }
};

}  // namespace

TEST_CASE("documents pair with their key files") {
  TempDir dir("pairs");
  dir.write("b.txt", "Another small document.");
  dir.write("a.txt", "Word graphs help keyphrase extraction.");
  dir.write("a.key", "word graph\nKeyphrase Extraction\n");
  const auto docs = load_corpus(dir.path);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].id == "a");
  REQUIRE(docs[0].gold.has_value());
  CHECK(*docs[0].gold == std::vector<std::string>{"word graph", "Keyphrase Extraction"});
  CHECK(docs[1].id == "b");
  CHECK_FALSE(docs[1].gold.has_value());
  CHECK(docs[0].tokens.size() == 5);
}

TEST_CASE("empty directory gives an empty corpus") {
  TempDir dir("empty");
  CHECK(load_corpus(dir.path).empty());
}

TEST_CASE("orphan key file is an error naming it") {
  TempDir dir("orphan");
  dir.write("a.txt", "text");
  dir.write("c.key", "phrase\n");
  try {
    load_corpus(dir.path);
    FAIL("expected CorpusError");
  } catch (const CorpusError& e) {
    CHECK(std::string(e.what()).find("c.key") != std::string::npos);
  }
}

TEST_CASE("missing directory is an error") {
  CHECK_THROWS_AS(load_corpus(fs::temp_directory_path() / "surfke_test_corpus_does_not_exist"), CorpusError);
}

TEST_CASE("key files: blank lines skipped, stem duplicates dropped, text kept verbatim") {
  TempDir dir("keys");
  dir.write("k.key", "Neural Networks\n\nneural network\r\nword  graph\n");
  const auto keys = load_keyphrases(dir.path / "k.key");
  REQUIRE(keys.size() == 2);
  CHECK(keys[0] == "Neural Networks");
  CHECK(keys[1] == "word  graph");

  dir.write("blank.key", "\n\n  \n");
  CHECK_THROWS_AS(load_keyphrases(dir.path / "blank.key"), CorpusError);
}

TEST_CASE("a .tagged file replaces the tokens of its .txt") {
  TempDir dir("tagged");
  dir.write("d.txt", "ignored raw text here");
  dir.write("d.tagged", "red_ADJ car_NOUN\n");
  const auto docs = load_corpus(dir.path);
  REQUIRE(docs.size() == 1);
  REQUIRE(docs[0].tokens.size() == 2);
  CHECK(docs[0].tokens[0].pos == PosTag::kAdj);

  TempDir orphan("tagged_orphan");
  orphan.write("e.tagged", "car_NOUN\n");
  CHECK_THROWS_AS(load_corpus(orphan.path), CorpusError);
}

TEST_CASE("load_document picks the parser by extension") {
  TempDir dir("single");
  dir.write("x.tagged", "fast_ADJ car_NOUN");
  dir.write("y.txt", "fast car");
  const auto x = load_document(dir.path / "x.tagged");
  const auto y = load_document(dir.path / "y.txt");
  CHECK(x.id == "x");
  CHECK(y.id == "y");
  CHECK(x.tokens.size() == 2);
  CHECK(y.tokens.size() == 2);
  CHECK_THROWS_AS(load_document(dir.path / "missing.txt"), CorpusError);
}
