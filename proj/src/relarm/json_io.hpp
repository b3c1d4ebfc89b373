//
// Copyright (C) 2026 The relarm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "relarm/dataset.hpp"
#include "relarm/matrix.hpp"

namespace relarm::json_io {

using nlohmann::json;

json read(const std::filesystem::path& path);
void write(const std::filesystem::path& path, const json& doc);

/// Parses [{"name":..., "direction":..., "pre_normalized": bool?}, ...].
std::vector<IndicatorSpec> indicators_from_json(const json& doc, const std::string& source);
json indicators_to_json(const std::vector<IndicatorSpec>& specs);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& what);
std::vector<double> vector_from_json(const json& j, const std::string& what);

} // namespace relarm::json_io
