#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "surfke/errors.hpp"
#include "surfke/gnb.hpp"

namespace surfke {
namespace {

std::string hex(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::hex);
  return std::string(buf, res.ptr);
}

class Reader {
 public:
  Reader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ModelError("model file '" + source_ + "': " + what + " (line " + std::to_string(line_no_) + ")");
  }

  std::string line() {
    std::string s;
    if (!std::getline(in_, s)) fail("unexpected end of file");
    ++line_no_;
    return s;
  }

  void expect_eof() {
    std::string s;
    while (std::getline(in_, s)) {
      ++line_no_;
      if (s.find_first_not_of(" \t\r") != std::string::npos) fail("unexpected content after 'end'");
    }
  }

  // "<key> <v1> <v2> ..." with exactly `count` values.
  std::vector<std::string> field(std::string_view key, std::size_t count) {
    const std::string s = line();
    std::istringstream ss(s);
    std::string k;
    ss >> k;
    if (k != key) fail("expected '" + std::string(key) + "', found '" + k + "'");
    std::vector<std::string> values;
    std::string v;
    while (ss >> v) values.push_back(v);
    if (values.size() != count)
      fail("'" + std::string(key) + "' has " + std::to_string(values.size()) + " values, expected " +
           std::to_string(count));
    return values;
  }

  double real(const std::string& text) {
    double x = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x, std::chars_format::hex);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) fail("bad number '" + text + "'");
    return x;
  }

  std::size_t count(const std::string& text) {
    std::size_t x = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) fail("bad integer '" + text + "'");
    return x;
  }

  double real_field(std::string_view key) { return real(field(key, 1)[0]); }

  std::vector<double> vector_field(std::string_view key, std::size_t d) {
    std::vector<double> out;
    for (const auto& v : field(key, d)) out.push_back(real(v));
    return out;
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

void write_vector(std::ostream& out, std::string_view key, const std::vector<double>& v) {
  out << key;
  for (double x : v) out << ' ' << hex(x);
  out << '\n';
}

}  // namespace

void write_model(std::ostream& out, const GnbModel& m, const ConfigEcho& config) {
  out << kModelMagic << '\n';
  out << "version " << kModelFormatVersion << '\n';
  out << "dim " << m.dim() << '\n';
  out << "var_smoothing " << hex(m.var_smoothing) << '\n';
  out << "variance_floor " << hex(m.variance_floor) << '\n';
  out << "prior_pos " << hex(m.prior_pos) << '\n';
  out << "prior_neg " << hex(m.prior_neg) << '\n';
  write_vector(out, "mean_pos", m.mean_pos);
  write_vector(out, "mean_neg", m.mean_neg);
  write_vector(out, "var_pos", m.var_pos);
  write_vector(out, "var_neg", m.var_neg);
  out << "config " << config.size() << '\n';
  for (const auto& [k, v] : config) out << k << '=' << v << '\n';
  out << "end\n";
}

void save_model(const std::filesystem::path& path, const GnbModel& model, const ConfigEcho& config) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ModelError("cannot write model file '" + path.string() + "'");
  write_model(out, model, config);
  out.flush();
  if (!out) throw ModelError("error while writing model file '" + path.string() + "'");
}

StoredModel read_model(std::istream& in, const std::string& source) {
  Reader r(in, source);
  if (r.line() != kModelMagic) r.fail("bad magic, not a " + std::string(kModelMagic) + " file");
  const std::size_t version = r.count(r.field("version", 1)[0]);
  if (version != static_cast<std::size_t>(kModelFormatVersion))
    r.fail("unsupported format version " + std::to_string(version));
  const std::size_t d = r.count(r.field("dim", 1)[0]);

  StoredModel s;
  GnbModel& m = s.model;
  m.var_smoothing = r.real_field("var_smoothing");
  m.variance_floor = r.real_field("variance_floor");
  m.prior_pos = r.real_field("prior_pos");
  m.prior_neg = r.real_field("prior_neg");
  m.mean_pos = r.vector_field("mean_pos", d);
  m.mean_neg = r.vector_field("mean_neg", d);
  m.var_pos = r.vector_field("var_pos", d);
  m.var_neg = r.vector_field("var_neg", d);
  for (std::size_t j = 0; j < d; ++j)
    if (!(m.var_pos[j] > 0.0) || !(m.var_neg[j] > 0.0)) r.fail("non-positive variance");
  if (!(m.prior_pos > 0.0 && m.prior_neg > 0.0)) r.fail("non-positive class prior");

  const std::size_t n = r.count(r.field("config", 1)[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string kv = r.line();
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) r.fail("malformed config entry '" + kv + "'");
    s.config.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (r.line() != "end") r.fail("missing 'end' marker");
  r.expect_eof();
  return s;
}

StoredModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  return read_model(in, path.string());
}

}  // namespace surfke
