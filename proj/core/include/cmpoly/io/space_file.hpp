#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cmpoly/liegroup/presentation.hpp"

namespace cmpoly::io {

/// {"name", "dim", "brackets": [[i, j, ["p/q", ...]]], "metric": [["p/q"...]],
///  "positive_definite"} with 1-based indices. Throws UsageError on bad input.
lie::LiePresentation parse_space(const nlohmann::json& doc);
nlohmann::json space_to_json(const lie::LiePresentation& pres);

lie::LiePresentation load_space_file(const std::filesystem::path& path);

/// A path to an existing file is read as a space file; anything else is
/// looked up in the catalog.
lie::LiePresentation load_space(const std::string& spec);

}  // namespace cmpoly::io
