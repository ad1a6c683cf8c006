#include "e8kit/records.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace e8kit {

namespace {

std::map<std::string, std::string> split_fields(std::string_view line) {
  std::map<std::string, std::string> fields;
  std::istringstream ss{std::string(line)};
  std::string token;
  while (ss >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw RecordError("malformed field '" + token + "'");
    auto key = token.substr(0, eq);
    if (!fields.emplace(key, token.substr(eq + 1)).second) throw RecordError("duplicate field '" + key + "'");
  }
  return fields;
}

std::vector<std::int64_t> parse_list(const std::string& key, const std::string& text, std::size_t expected) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string_view tok(text.data() + pos, comma - pos);
    std::int64_t v = 0;
    const char* begin = tok.data();
    if (!tok.empty() && tok.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw RecordError("field " + key + ": malformed integer '" + std::string(tok) + "'");
    values.push_back(v);
    pos = comma + 1;
  }
  if (values.size() != expected)
    throw RecordError("field " + key + ": expected " + std::to_string(expected) + " entries");
  for (auto v : values)
    if (v == 0) throw RecordError("zero symbol entry in " + key);
  return values;
}

const std::string& require(const std::map<std::string, std::string>& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end()) throw RecordError("missing field " + key);
  return it->second;
}

void reject_unknown(const std::map<std::string, std::string>& f, std::initializer_list<std::string_view> known) {
  for (const auto& [k, v] : f) {
    bool ok = false;
    for (auto name : known) ok = ok || k == name;
    if (!ok) throw RecordError("unknown field " + k);
  }
}

std::string join(const std::int64_t* xs, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

bool skip_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

template <typename Input, typename Parser>
std::vector<BatchLine<Input>> read_batch(std::istream& in, Parser parse) {
  std::vector<BatchLine<Input>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skip_line(line)) continue;
    BatchLine<Input> b;
    b.line = number;
    try {
      b.value = parse(line);
    } catch (const std::invalid_argument& e) {
      b.value = "line " + std::to_string(number) + ": " + e.what();
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

Field parse_field(std::string_view text) {
  if (text == "Q") return Field::Q;
  if (text == "R") return Field::R;
  throw RecordError("field must be Q or R, got '" + std::string(text) + "'");
}

E8Input parse_e8_record(std::string_view line) {
  const auto f = split_fields(line);
  reject_unknown(f, {"q1", "q2", "q3", "q4", "c", "field"});
  const Field field = f.count("field") ? parse_field(f.at("field")) : Field::Q;
  std::array<std::pair<std::int64_t, std::int64_t>, 4> slots;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string key = "q" + std::to_string(i + 1);
    const auto v = parse_list(key, require(f, key), 2);
    slots[i] = {v[0], v[1]};
  }
  const auto c = parse_list("c", require(f, "c"), 1);
  return E8Input::make(field, slots, c[0]);
}

TitsInput parse_tits_record(std::string_view line) {
  const auto f = split_fields(line);
  reject_unknown(f, {"gamma3", "phi3", "phi5", "field"});
  TitsInput t;
  t.field = f.count("field") ? parse_field(f.at("field")) : Field::Q;
  const auto g = parse_list("gamma3", require(f, "gamma3"), 3);
  const auto p3 = parse_list("phi3", require(f, "phi3"), 3);
  const auto p5 = parse_list("phi5", require(f, "phi5"), 5);
  std::copy(g.begin(), g.end(), t.gamma3.begin());
  std::copy(p3.begin(), p3.end(), t.phi3.begin());
  std::copy(p5.begin(), p5.end(), t.phi5.begin());
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw RecordError(e.what());
  }
  return t;
}

std::string format_e8_record(const E8Input& in) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    s += "q" + std::to_string(i + 1) + "=" + std::to_string(in.q[i].a()) + "," + std::to_string(in.q[i].b()) + " ";
  }
  s += "c=" + std::to_string(in.c) + " field=" + std::string(to_string(in.field));
  return s;
}

std::string format_tits_record(const TitsInput& in) {
  return "gamma3=" + join(in.gamma3.data(), 3) + " phi3=" + join(in.phi3.data(), 3) +
         " phi5=" + join(in.phi5.data(), 5) + " field=" + std::string(to_string(in.field));
}

std::vector<BatchLine<E8Input>> read_e8_batch(std::istream& in) {
  return read_batch<E8Input>(in, [](const std::string& l) { return parse_e8_record(l); });
}

std::vector<BatchLine<TitsInput>> read_tits_batch(std::istream& in) {
  return read_batch<TitsInput>(in, [](const std::string& l) { return parse_tits_record(l); });
}

nlohmann::ordered_json to_json(const KillingReport& rep) {
  nlohmann::ordered_json j;
  j["redkill"] = to_string(rep.redkill);
  j["kappa"] = to_string(rep.kappa);
  j["kappa_i_level"] = rep.kappa_i_level;
  j["rost_zero"] = rep.rost_zero;
  j["signature"] = rep.signature;
  j["real_class"] = std::string(to_string(rep.real_class));
  j["index_hint"] = std::string(to_string(rep.index_hint));
  return j;
}

nlohmann::ordered_json to_json(const TitsReport& rep) {
  nlohmann::ordered_json j;
  j["redkill"] = to_string(rep.redkill);
  j["kappa"] = to_string(rep.kappa);
  j["kappa_i_level"] = i_level(rep.kappa);
  j["rost15_zero"] = rep.rost15_zero;
  j["signature"] = rep.redkill.positive_count() - rep.redkill.negative_count();
  return j;
}

}  // namespace e8kit
