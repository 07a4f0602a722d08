#include "biheyt/io.hpp"

#include <charconv>
#include <fstream>

namespace biheyt {

namespace {

template <class T>
T field(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

unsigned parse_size(std::string_view text, std::string_view builtin) {
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "bad builtin '" + std::string(builtin) + "'");
  }
  return n;
}

}  // namespace

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

OrthoStructure parse_structure(const nlohmann::json& doc, const Limits& limits) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "structure must be a JSON object");
  auto format = field<std::string>(doc, "format");
  if (format == "greechie") {
    return from_greechie(field<std::vector<std::vector<std::string>>>(doc, "blocks"), limits);
  }
  if (format == "oml-explicit") {
    RawStructure raw;
    raw.elements = field<std::vector<std::string>>(doc, "elements");
    for (const auto& pair : field<std::vector<std::vector<std::string>>>(doc, "leq")) {
      if (pair.size() != 2) throw Error(ErrorCode::ParseError, "leq entries must be pairs");
      raw.leq.emplace_back(pair[0], pair[1]);
    }
    for (const auto& [a, b] : field<std::map<std::string, std::string>>(doc, "ortho")) {
      raw.ortho.emplace_back(a, b);
    }
    return validate(raw, limits);
  }
  throw Error(ErrorCode::ParseError, "unknown format '" + format + "'");
}

OrthoStructure load_structure(const std::filesystem::path& path, const Limits& limits) {
  return parse_structure(read_json_file(path), limits);
}

OrthoStructure builtin_structure(std::string_view builtin, const Limits& limits) {
  if (builtin == "cabello18") return generate("cabello18", 0, limits);
  auto colon = builtin.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "bad builtin '" + std::string(builtin) + "'");
  }
  auto name = builtin.substr(0, colon);
  if (name != "boolean" && name != "mo") {
    throw Error(ErrorCode::ParseError, "unknown builtin '" + std::string(builtin) + "'");
  }
  return generate(name, parse_size(builtin.substr(colon + 1), builtin), limits);
}

Json structure_to_json(const OrthoStructure& s) {
  Json out;
  out["format"] = "oml-explicit";
  out["kind"] = kind_name(s.kind());
  out["elements"] = s.labels();
  Json leq = Json::array();
  for (ElementId a = 0; a < s.size(); ++a) {
    const auto& up = s.up_set(a);
    for (auto b = up.find_next(a); b != ElementSet::npos; b = up.find_next(b)) {
      if ((up & s.down_set(static_cast<ElementId>(b))).count() == 2) {
        leq.push_back({s.label(a), s.label(static_cast<ElementId>(b))});
      }
    }
  }
  out["leq"] = std::move(leq);
  Json ortho = Json::object();
  for (ElementId a = 0; a < s.size(); ++a) ortho[s.label(a)] = s.label(s.ortho(a));
  out["ortho"] = std::move(ortho);
  Json blocks = Json::array();
  for (const auto& b : s.blocks()) blocks.push_back(b.id);
  out["blocks"] = std::move(blocks);
  return out;
}

Json contexts_to_json(const ContextPoset& poset) {
  const auto& s = poset.structure();
  Json list = Json::array();
  for (ContextIndex v = 0; v < poset.size(); ++v) {
    const auto& c = poset.context(v);
    Json entry;
    entry["id"] = c.id;
    Json atoms = Json::array();
    for (auto a : c.atoms) atoms.push_back(s.label(a));
    entry["atoms"] = std::move(atoms);
    Json elements = Json::array();
    for (auto e : c.elements) elements.push_back(s.label(e));
    entry["elements"] = std::move(elements);
    Json below = Json::array();
    for (auto w : poset.minimal_below(v)) below.push_back(poset.context(w).id);
    entry["minimal_below"] = std::move(below);
    Json above = Json::array();
    for (auto u : poset.maximal_above(v)) above.push_back(poset.context(u).id);
    entry["maximal_above"] = std::move(above);
    list.push_back(std::move(entry));
  }
  Json out;
  out["count"] = poset.size();
  out["contexts"] = std::move(list);
  return out;
}

Json spectrum_to_json(const ContextPoset& poset) {
  Json out = Json::object();
  for (ContextIndex v = 0; v < poset.size(); ++v) {
    Json points = Json::array();
    for (const auto& point : spectrum(poset, v)) points.push_back(poset.structure().label(point.atom));
    out[poset.context(v).id] = std::move(points);
  }
  return out;
}

Json subobject_to_json(const ClopenSubobject& s) {
  Json out = Json::object();
  for (ContextIndex v = 0; v < s.poset().size(); ++v) {
    out[s.poset().context(v).id] = s.poset().structure().label(s.projection(v));
  }
  return out;
}

ClopenSubobject subobject_from_json(const PosetPtr& poset, const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "subobject must be a JSON object");
  std::map<std::string, ElementId> by_context;
  for (const auto& [id, label] : doc.items()) {
    if (!label.is_string()) throw Error(ErrorCode::ParseError, "projection for " + id + " must be a label");
    by_context[id] = poset->structure().at(label.get<std::string>());
  }
  return make_subobject(poset, by_context);
}

Json sections_to_json(const ContextPoset& poset, const SectionSearch& search, bool list) {
  Json out;
  out["count"] = search.sections.size();
  if (list) {
    Json sections = Json::array();
    for (const auto& section : search.sections) {
      Json entry = Json::object();
      for (ContextIndex v = 0; v < poset.size(); ++v) {
        entry[poset.context(v).id] = poset.structure().label(section.atoms[v]);
      }
      sections.push_back(std::move(entry));
    }
    out["sections"] = std::move(sections);
  }
  return out;
}

}  // namespace biheyt
