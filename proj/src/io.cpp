#include "streamcode/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sc {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed descriptor: " + what); }

template <class T>
T get_uint(const ojson& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) malformed(std::string("missing or negative '") + key + "'");
  return j.at(key).get<T>();
}

std::vector<std::vector<std::uint32_t>> int_rows(const ojson& j, const FieldPtr& field, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a nested integer array");
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument(std::string(what) + " must be a nested integer array");
    auto& r = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || !field->contains(v.get<std::uint32_t>()))
        throw std::invalid_argument(std::string(what) + " entries must be field elements in [0, q-1]");
      r.push_back(v.get<std::uint32_t>());
    }
  }
  return rows;
}

}  // namespace

std::string code_to_json(const SystematicCode& code) {
  const Field& f = *code.field();
  ojson j;
  j["field"] = {{"p", f.characteristic()}, {"m", f.extension_degree()}, {"modulus", f.modulus()}};
  j["n"] = code.n();
  j["k"] = code.k();
  j["P"] = code.parity().to_rows();
  ojson params = ojson::object();
  for (const auto& [key, v] : code.construction().params) params[key] = v;
  j["construction"] = {{"tag", code.construction().tag}, {"params", params}};
  return j.dump(2) + "\n";
}

SystematicCode code_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  if (!j.is_object() || !j.contains("field") || !j.at("field").is_object()) malformed("missing 'field'");
  const auto& fj = j.at("field");
  FieldPtr field;
  try {
    field = Field::from_descriptor(get_uint<std::uint32_t>(fj, "p"), get_uint<unsigned>(fj, "m"),
                                   get_uint<std::uint32_t>(fj, "modulus"));
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  const auto n = get_uint<std::size_t>(j, "n");
  const auto k = get_uint<std::size_t>(j, "k");
  if (!j.contains("P")) malformed("missing 'P'");
  std::vector<std::vector<std::uint32_t>> rows;
  try {
    rows = int_rows(j.at("P"), field, "P");
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  if (k < 1 || k >= n) malformed("need 0 < k < n");
  if (rows.size() != k) malformed("P must have k rows");
  for (const auto& r : rows)
    if (r.size() != n - k) malformed("P rows must have n-k entries");
  FieldMatrix p(field, k, n - k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n - k; ++c) p(r, c) = rows[r][c];

  Construction construction;
  if (j.contains("construction")) {
    const auto& cj = j.at("construction");
    if (!cj.is_object() || !cj.contains("tag") || !cj.at("tag").is_string()) malformed("construction needs a tag");
    construction.tag = cj.at("tag").get<std::string>();
    if (cj.contains("params")) {
      if (!cj.at("params").is_object()) malformed("construction params must be an object");
      for (const auto& [key, v] : cj.at("params").items()) {
        if (!v.is_number_integer()) malformed("construction params must be integers");
        construction.params.emplace_back(key, v.get<std::int64_t>());
      }
    }
  }
  return SystematicCode(n, k, std::move(p), std::move(construction));
}

std::string report_to_json(const DecodeReport& r) {
  ojson j;
  j["params"] = {{"n", r.n},         {"k", r.k},           {"tau", r.tau},
                 {"field", r.field}, {"model", r.model},   {"payload", r.payload},
                 {"horizon", r.horizon}, {"admissible", r.admissible}};
  ojson packets = ojson::array();
  for (const auto& o : r.per_packet) {
    ojson p;
    p["t"] = o.t;
    p["recovered"] = o.recovered;
    p["time"] = o.time ? ojson(*o.time) : ojson(nullptr);
    p["deadline"] = o.deadline;
    packets.push_back(std::move(p));
  }
  j["per_packet"] = std::move(packets);
  j["success"] = r.success;
  ojson failures = ojson::array();
  for (const auto& f : r.failures) failures.push_back({{"t", f.t}, {"reason", f.reason}});
  j["failures"] = std::move(failures);
  j["ambiguities"] = r.ambiguities;
  return j.dump(2) + "\n";
}

std::string erasures_to_csv(const std::vector<ErasurePattern>& patterns) {
  std::string out;
  for (const auto& p : patterns) {
    for (std::size_t t = 0; t < p.horizon(); ++t) {
      if (t) out.push_back(',');
      out.push_back(p.erased(t) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<ErasurePattern> erasures_from_csv(const std::string& text) {
  std::vector<ErasurePattern> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::string bits;
    for (char c : line) {
      if (c == '0' || c == '1') bits.push_back(c);
      else if (c != ',' && c != ' ' && c != '\t' && c != '\r')
        throw std::invalid_argument("pattern CSV must hold 0/1 flags");
    }
    if (!bits.empty()) out.push_back(ErasurePattern::from_string(bits));
  }
  if (out.empty()) throw std::invalid_argument("pattern CSV holds no pattern");
  return out;
}

std::string errors_to_json(const ErrorPattern& errors) {
  ojson j = ojson::array();
  for (std::size_t t : errors.support()) {
    auto pk = errors.packet(t);
    j.push_back({{"t", t}, {"packet", std::vector<std::uint32_t>(pk.begin(), pk.end())}});
  }
  return j.dump() + "\n";
}

ErrorPattern errors_from_json(const std::string& text, const FieldPtr& field, std::size_t packet_size,
                              std::size_t horizon) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("error pattern JSON: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("error pattern JSON must be a list of {t, packet}");
  std::size_t needed = horizon;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("t") || !e.at("t").is_number_unsigned() || !e.contains("packet"))
      throw std::invalid_argument("error pattern entries need t and packet");
    needed = std::max(needed, e.at("t").get<std::size_t>() + 1);
  }
  ErrorPattern out(field, needed, packet_size);
  for (const auto& e : j) {
    const auto rows = int_rows(ojson::array({e.at("packet")}), field, "error packet");
    out.set_packet(e.at("t").get<std::size_t>(), rows.front());
  }
  return out;
}

FieldMatrix messages_from_json(const std::string& text, const FieldPtr& field, std::size_t k) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("messages JSON: ") + e.what());
  }
  const auto rows = int_rows(j, field, "messages");
  FieldMatrix m(field, rows.size(), k);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != k) throw std::invalid_argument("each message packet needs k symbols");
    for (std::size_t i = 0; i < k; ++i) m(t, i) = rows[t][i];
  }
  return m;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace sc
