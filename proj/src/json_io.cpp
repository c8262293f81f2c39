#include "achron/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "achron/algebra.hpp"

namespace achron {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad json: ") + e.what());
  }
}

void check_keys(const Json& obj, const std::vector<std::string>& allowed,
                const char* where) {
  if (!obj.is_object()) fail(ErrorCode::Parse, std::string(where) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const auto& k : allowed)
      if (k == key) { ok = true; break; }
    if (!ok) fail(ErrorCode::Parse, std::string("unknown key '") + key + "' in " + where);
  }
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& el : j) {
    if (!el.is_string()) fail(ErrorCode::Parse, std::string(what) + " must hold strings");
    out.push_back(el.get<std::string>());
  }
  return out;
}

int atom_key_index(const std::string& key) {
  if (key.size() < 2 || key[0] != 'p')
    fail(ErrorCode::Parse, "valuation key '" + key + "' is not of the form pN");
  for (std::size_t i = 1; i < key.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(key[i])))
      fail(ErrorCode::Parse, "valuation key '" + key + "' is not of the form pN");
  if (key.size() > 9) fail(ErrorCode::Parse, "atom index too large in '" + key + "'");
  return std::stoi(key.substr(1));
}

}  // namespace

std::pair<Frame, std::optional<Valuation>> frame_from_json(const std::string& text) {
  Json j = parse_json(text);
  check_keys(j, {"modalities", "worlds", "relations", "valuation"}, "frame file");
  if (!j.contains("modalities") || !j.contains("worlds") || !j.contains("relations"))
    fail(ErrorCode::Parse, "frame file needs modalities, worlds and relations");

  Signature sig(string_list(j["modalities"], "modalities"));
  std::vector<std::string> worlds = string_list(j["worlds"], "worlds");

  std::map<std::string, EdgeList> edges;
  const Json& rel = j["relations"];
  if (!rel.is_object()) fail(ErrorCode::Parse, "relations must be an object");
  for (const auto& [m, pairs] : rel.items()) {
    if (!sig.contains(m)) fail(ErrorCode::Parse, "unknown modality '" + m + "' in relations");
    if (!pairs.is_array()) fail(ErrorCode::Parse, "relation for '" + m + "' must be an array");
    EdgeList list;
    for (const auto& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        fail(ErrorCode::Parse, "relation pairs must be [world, world]");
      list.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    edges[m] = std::move(list);
  }
  Frame frame(std::move(sig), std::move(worlds), std::move(edges));

  std::optional<Valuation> val;
  if (j.contains("valuation")) {
    const Json& jv = j["valuation"];
    if (!jv.is_object()) fail(ErrorCode::Parse, "valuation must be an object");
    Valuation v;
    for (const auto& [key, worlds_json] : jv.items()) {
      WorldSet set = frame.empty_set();
      for (const auto& name : string_list(worlds_json, "valuation entry"))
        set.set(frame.world_index(name));
      v.emplace(atom_key_index(key), std::move(set));
    }
    val = std::move(v);
  }
  return {std::move(frame), std::move(val)};
}

std::string frame_to_json(const Frame& f, const std::optional<Valuation>& val) {
  Json j;
  j["modalities"] = f.sig().modalities();
  j["worlds"] = f.worlds();
  Json rel = Json::object();
  for (std::size_t mi = 0; mi < f.sig().size(); ++mi) {
    Json pairs = Json::array();
    for (std::size_t x = 0; x < f.world_count(); ++x) {
      const WorldSet& row = f.future(mi, x);
      for (auto y = row.find_first(); y != WorldSet::npos; y = row.find_next(y))
        pairs.push_back(Json::array({f.world_name(x), f.world_name(y)}));
    }
    rel[f.sig().name(mi)] = std::move(pairs);
  }
  j["relations"] = std::move(rel);
  if (val) {
    Json jv = Json::object();
    for (const auto& [idx, set] : *val) {
      Json names = Json::array();
      for (auto w = set.find_first(); w != WorldSet::npos; w = set.find_next(w))
        names.push_back(f.world_name(w));
      jv["p" + std::to_string(idx)] = std::move(names);
    }
    j["valuation"] = std::move(jv);
  }
  return j.dump(2) + "\n";
}

FiniteBao algebra_from_json(const std::string& text) {
  Json j = parse_json(text);
  check_keys(j, {"modalities", "atoms", "op"}, "algebra file");
  if (!j.contains("modalities") || !j.contains("atoms") || !j.contains("op"))
    fail(ErrorCode::Parse, "algebra file needs modalities, atoms and op");

  Signature sig(string_list(j["modalities"], "modalities"));
  std::vector<std::string> atoms = string_list(j["atoms"], "atoms");
  if (atoms.size() > 64) fail(ErrorCode::Parse, "atom count capped at 64");

  auto atom_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == name) return i;
    fail(ErrorCode::Parse, "unknown atom '" + name + "' in op");
  };

  std::vector<std::vector<AlgElement>> op(sig.size(),
                                          std::vector<AlgElement>(atoms.size(), 0));
  const Json& jop = j["op"];
  if (!jop.is_object()) fail(ErrorCode::Parse, "op must be an object");
  for (const auto& [m, table] : jop.items()) {
    if (!sig.contains(m)) fail(ErrorCode::Parse, "unknown modality '" + m + "' in op");
    if (!table.is_object())
      fail(ErrorCode::Parse, "op table for '" + m + "' must be an object");
    std::size_t mi = sig.index(m);
    for (const auto& [atom_name, value] : table.items()) {
      AlgElement e = 0;
      for (const auto& member : string_list(value, "op value"))
        e |= AlgElement(1) << atom_index(member);
      op[mi][atom_index(atom_name)] = e;
    }
  }
  return FiniteBao(std::move(sig), std::move(atoms), std::move(op));
}

std::string algebra_to_json(const FiniteBao& a) {
  Json j;
  j["modalities"] = a.sig().modalities();
  j["atoms"] = a.atoms();
  Json jop = Json::object();
  for (std::size_t mi = 0; mi < a.sig().size(); ++mi) {
    Json table = Json::object();
    for (std::size_t at = 0; at < a.atom_count(); ++at) {
      Json members = Json::array();
      AlgElement e = a.op_on_atom(mi, at);
      for (std::size_t i = 0; i < a.atom_count(); ++i)
        if ((e >> i) & 1) members.push_back(a.atoms()[i]);
      table[a.atoms()[at]] = std::move(members);
    }
    jop[a.sig().name(mi)] = std::move(table);
  }
  j["op"] = std::move(jop);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "cannot read '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(ErrorCode::Io, "cannot write '" + path + "'");
}

}  // namespace achron
