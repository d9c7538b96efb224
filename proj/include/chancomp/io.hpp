// Copyright 2026 chancomp contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "chancomp/channel.hpp"
#include "chancomp/estimate.hpp"
#include "chancomp/groups.hpp"
#include "chancomp/resources.hpp"

namespace chancomp {

// Matrix encoding shared by every file format: an array of rows, each row an
// array of [re, im] entry pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Channel files: {"dim": d, "kraus": [matrix, ...]}; loading revalidates CPTP.
nlohmann::json channel_to_json(const QuantumChannel& phi);
QuantumChannel channel_from_json(const nlohmann::json& j);
QuantumChannel load_channel(const std::filesystem::path& path);
void save_channel(const std::filesystem::path& path, const QuantumChannel& phi);

// Resource files: {"kind": "discrete"|"continuous", "dim": d, "elements": [matrix, ...]}.
nlohmann::json resource_to_json(const ResourceSet& r);
ResourceSet resource_from_json(const nlohmann::json& j);
ResourceSet load_resource(const std::filesystem::path& path);
void save_resource(const std::filesystem::path& path, const ResourceSet& r);

// Estimate files: {lower, upper, witness, certificates: [{name, value}], seed, iterations}.
nlohmann::json estimate_to_json(const ComplexityEstimate& e);
void save_estimate(const std::filesystem::path& path, const ComplexityEstimate& e);

// Group reports: {order, diameter, mean_length, histogram}.
nlohmann::json group_report_to_json(const GroupTable& g);

// Shortest-round-trip formatting for doubles (17 significant digits).
std::string format_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace chancomp
