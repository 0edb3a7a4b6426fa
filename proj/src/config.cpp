#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "surfke/config.hpp"
#include "surfke/errors.hpp"

namespace surfke {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string canonical_key(std::string_view key) {
  std::string k = trim(key);
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

template <typename T>
T parse_integer(std::string_view key, std::string_view value) {
  T x{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), x);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size())
    throw ConfigError("setting '" + std::string(key) + "': expected a non-negative integer, got '" +
                      std::string(value) + "'");
  return x;
}

double parse_real(std::string_view key, std::string_view value) {
  double x = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), x);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size())
    throw ConfigError("setting '" + std::string(key) + "': expected a number, got '" + std::string(value) + "'");
  return x;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("setting '" + std::string(key) + "': expected true or false, got '" + std::string(value) + "'");
}

std::vector<PosTag> parse_tag_list(std::string_view value) {
  std::vector<PosTag> tags;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(',', start);
    if (end == std::string_view::npos) end = value.size();
    const std::string item = trim(value.substr(start, end - start));
    if (!item.empty()) {
      std::string upper = item;
      std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
      const PosTag t = parse_pos_tag(upper);
      if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
    }
    start = end + 1;
  }
  if (tags.empty()) throw ConfigError("setting 'pos': at least one tag is required");
  return tags;
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

void PipelineConfig::validate() const {
  if (window < 2) throw ConfigError("window must be >= 2");
  if (pos_allowed.empty()) throw ConfigError("pos must list at least one tag");
  if (max_phrase_len < 1) throw ConfigError("max-phrase-len must be >= 1");
  if (walks_per_node < 1) throw ConfigError("walks-per-node must be >= 1");
  if (walk_length < 2) throw ConfigError("walk-length must be >= 2");
  if (dim < 1) throw ConfigError("dim must be >= 1");
  if (context_window < 1) throw ConfigError("context-window must be >= 1");
  if (!(learning_rate > 0.0)) throw ConfigError("lr must be > 0");
  if (!(var_smoothing > 0.0)) throw ConfigError("var-smoothing must be > 0");
  if (top_k < 1) throw ConfigError("top-k must be >= 1");
}

PosFilter PipelineConfig::pos_filter() const { return PosFilter(std::set<PosTag>(pos_allowed.begin(), pos_allowed.end())); }

WalkConfig PipelineConfig::walk_config() const { return {walks_per_node, walk_length, seed}; }

EmbeddingConfig PipelineConfig::embedding_config(int threads) const {
  EmbeddingConfig e;
  e.dim = dim;
  e.context_window = context_window;
  e.negatives = negatives;
  e.epochs = epochs;
  e.learning_rate = learning_rate;
  e.seed = seed;
  e.deterministic = deterministic;
  e.threads = threads;
  return e;
}

const std::vector<std::string_view>& setting_keys() {
  static const std::vector<std::string_view> keys = {
      "window", "pos", "max-phrase-len", "walks-per-node", "walk-length", "dim",
      "context-window", "negatives", "epochs", "lr", "var-smoothing", "top-k",
      "folds", "seed", "candidate-mode", "strict-at-k", "deterministic"};
  return keys;
}

void apply_setting(PipelineConfig& cfg, std::string_view raw_key, std::string_view raw_value) {
  const std::string key = canonical_key(raw_key);
  const std::string value = trim(raw_value);
  using Size = std::size_t;
  if (key == "window") cfg.window = parse_integer<Size>(key, value);
  else if (key == "pos") cfg.pos_allowed = parse_tag_list(value);
  else if (key == "max-phrase-len") cfg.max_phrase_len = parse_integer<Size>(key, value);
  else if (key == "walks-per-node") cfg.walks_per_node = parse_integer<Size>(key, value);
  else if (key == "walk-length") cfg.walk_length = parse_integer<Size>(key, value);
  else if (key == "dim") cfg.dim = parse_integer<Size>(key, value);
  else if (key == "context-window") cfg.context_window = parse_integer<Size>(key, value);
  else if (key == "negatives") cfg.negatives = parse_integer<Size>(key, value);
  else if (key == "epochs") cfg.epochs = parse_integer<Size>(key, value);
  else if (key == "lr" || key == "learning-rate") cfg.learning_rate = parse_real(key, value);
  else if (key == "var-smoothing") cfg.var_smoothing = parse_real(key, value);
  else if (key == "top-k") cfg.top_k = parse_integer<Size>(key, value);
  else if (key == "folds") cfg.folds = parse_integer<Size>(key, value);
  else if (key == "seed") cfg.seed = parse_integer<std::uint64_t>(key, value);
  else if (key == "candidate-mode") cfg.candidate_mode = parse_candidate_mode(value);
  else if (key == "strict-at-k") cfg.strict_at_k = parse_bool(key, value);
  else if (key == "deterministic") cfg.deterministic = parse_bool(key, value);
  else throw ConfigError("unknown setting '" + std::string(raw_key) + "'");
}

void apply_settings(PipelineConfig& cfg, const ConfigEcho& settings) {
  for (const auto& [k, v] : settings) apply_setting(cfg, k, v);
}

void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  if (trim(text).starts_with('{')) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file '" + path.string() + "': " + e.what());
    }
    const nlohmann::json& obj = doc.contains("config") ? doc.at("config") : doc;
    if (!obj.is_object()) throw ConfigError("config file '" + path.string() + "': expected a JSON object");
    for (const auto& [k, v] : obj.items()) {
      if (v.is_string()) apply_setting(cfg, k, v.get<std::string>());
      else if (v.is_boolean()) apply_setting(cfg, k, v.get<bool>() ? "true" : "false");
      else if (v.is_number_float()) apply_setting(cfg, k, format_real(v.get<double>()));
      else apply_setting(cfg, k, v.dump());
    }
    return;
  }

  std::size_t line_no = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config file '" + path.string() + "' line " + std::to_string(line_no) + ": expected key=value");
    apply_setting(cfg, std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1));
  }
}

ConfigEcho to_settings(const PipelineConfig& cfg) {
  std::string pos;
  for (PosTag t : cfg.pos_allowed) {
    if (!pos.empty()) pos.push_back(',');
    pos += to_string(t);
  }
  return {
      {"window", std::to_string(cfg.window)},
      {"pos", pos},
      {"max-phrase-len", std::to_string(cfg.max_phrase_len)},
      {"walks-per-node", std::to_string(cfg.walks_per_node)},
      {"walk-length", std::to_string(cfg.walk_length)},
      {"dim", std::to_string(cfg.dim)},
      {"context-window", std::to_string(cfg.context_window)},
      {"negatives", std::to_string(cfg.negatives)},
      {"epochs", std::to_string(cfg.epochs)},
      {"lr", format_real(cfg.learning_rate)},
      {"var-smoothing", format_real(cfg.var_smoothing)},
      {"top-k", std::to_string(cfg.top_k)},
      {"folds", std::to_string(cfg.folds)},
      {"seed", std::to_string(cfg.seed)},
      {"candidate-mode", std::string(to_string(cfg.candidate_mode))},
      {"strict-at-k", cfg.strict_at_k ? "true" : "false"},
      {"deterministic", cfg.deterministic ? "true" : "false"},
  };
}

}  // namespace surfke
