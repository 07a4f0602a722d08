#ifndef BIHEYT_IO_HPP
#define BIHEYT_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "biheyt/presheaf.hpp"

namespace biheyt {

using Json = nlohmann::ordered_json;

/// Accepts {"format":"oml-explicit",...} and {"format":"greechie",...}.
OrthoStructure parse_structure(const nlohmann::json& doc, const Limits& limits = {});
OrthoStructure load_structure(const std::filesystem::path& path, const Limits& limits = {});

/// "boolean:n", "mo:n" or "cabello18".
OrthoStructure builtin_structure(std::string_view builtin, const Limits& limits = {});

/// Canonical oml-explicit description (covering pairs as `leq`) plus kind and
/// block ids.
Json structure_to_json(const OrthoStructure& s);

Json contexts_to_json(const ContextPoset& poset);
Json spectrum_to_json(const ContextPoset& poset);

/// Context id → element label, in context order.
Json subobject_to_json(const ClopenSubobject& s);
ClopenSubobject subobject_from_json(const PosetPtr& poset, const nlohmann::json& doc);

Json sections_to_json(const ContextPoset& poset, const SectionSearch& search, bool list);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace biheyt

#endif
