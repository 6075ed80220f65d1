// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"
#include "occsim/chain.hpp"

namespace occsim {

using Json = nlohmann::ordered_json;

inline constexpr const char* kModelSchema = "occsim.model.v1";

// Canonical JSON form of a model: fixed field order, reals emitted with
// shortest exact round-trip formatting, so serialize(parse(x)) == x.
Json model_to_json(const InhomogeneousModel& model);
InhomogeneousModel model_from_json(const Json& doc);

void save_model(const InhomogeneousModel& model, const std::string& path, const Json& config_echo);
InhomogeneousModel load_model(const std::string& path);

// Shared helpers for the file-based artifacts.
Json read_json_file(const std::string& path);
void write_json_file(const Json& doc, const std::string& path);  // atomic: temp + rename

}  // namespace occsim
