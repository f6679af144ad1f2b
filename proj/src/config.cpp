// Copyright 2026 The specred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "specred/experiment.hpp"

namespace specred {

using nlohmann::json;

void validate(const ExperimentConfig& c) {
    auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw std::invalid_argument("config: " + msg);
    };
    require(!c.categories.empty(), "categories must not be empty");
    std::set<Category> seen;
    for (Category cat : c.categories) {
        require(cat != Category::CUSTOM, "categories may only contain GROV, GS and QWALK");
        require(seen.insert(cat).second, "categories lists " + to_string(cat) + " twice");
        const auto it = c.qubit_ranges.find(cat);
        require(it != c.qubit_ranges.end(), "qubit_ranges has no entry for " + to_string(cat));
        const QubitRange r = it->second;
        const int floor = cat == Category::GROV ? 2 : cat == Category::GS ? 3 : 2;
        // QWALK sizes count position qubits; the coin adds one.
        const int ceiling = cat == Category::QWALK ? kMaxExhaustiveQubits - 1 : kMaxExhaustiveQubits;
        require(r.min <= r.max, "qubit_ranges." + to_string(cat) + " has min > max");
        require(r.min >= floor && r.max <= ceiling, "qubit_ranges." + to_string(cat) + " must lie within [" +
                                                         std::to_string(floor) + ", " + std::to_string(ceiling) +
                                                         "]");
    }
    require(c.programs_per_size >= 1, "programs_per_size must be >= 1");
    require(c.r1 >= 1, "r1 must be >= 1");
    require(c.r2 >= 1, "r2 must be >= 1");
    require(c.gamma >= 1, "gamma must be >= 1");
    require(c.alpha > 0.0 && c.alpha < 1.0, "alpha must lie in (0, 1)");
    require(c.per_op >= 1, "per_op must be >= 1");
    require(c.workers >= 1, "workers must be >= 1");
    require(c.grover_max_iterations >= 1, "grover_max_iterations must be >= 1");
}

namespace {

template <typename T>
T get_as(const json& j, const char* key) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw std::invalid_argument(std::string("config: field '") + key + "' has the wrong type");
    }
}

int get_int(const json& j, const char* key) {
    if (!j.is_number_integer()) throw std::invalid_argument(std::string("config: field '") + key + "' must be an integer");
    return get_as<int>(j, key);
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!root.is_object()) throw std::invalid_argument("config: top level must be a JSON object");

    ExperimentConfig c;
    for (const auto& [key, value] : root.items()) {
        if (key == "categories") {
            if (!value.is_array()) throw std::invalid_argument("config: field 'categories' must be an array");
            c.categories.clear();
            for (const auto& v : value) c.categories.push_back(parse_category(get_as<std::string>(v, "categories")));
        } else if (key == "qubit_ranges") {
            if (!value.is_object()) throw std::invalid_argument("config: field 'qubit_ranges' must be an object");
            for (const auto& [name, range] : value.items()) {
                if (!range.is_array() || range.size() != 2) {
                    throw std::invalid_argument("config: qubit_ranges." + name + " must be [min, max]");
                }
                c.qubit_ranges[parse_category(name)] = {get_int(range[0], "qubit_ranges"),
                                                        get_int(range[1], "qubit_ranges")};
            }
        } else if (key == "programs_per_size") {
            c.programs_per_size = get_int(value, "programs_per_size");
        } else if (key == "r1") {
            c.r1 = get_int(value, "r1");
        } else if (key == "r2") {
            c.r2 = get_int(value, "r2");
        } else if (key == "gamma") {
            c.gamma = get_int(value, "gamma");
        } else if (key == "alpha") {
            if (!value.is_number()) throw std::invalid_argument("config: field 'alpha' must be a number");
            c.alpha = value.get<double>();
        } else if (key == "per_op") {
            c.per_op = get_int(value, "per_op");
        } else if (key == "base_seed") {
            if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
                throw std::invalid_argument("config: field 'base_seed' must be a nonnegative integer");
            }
            c.base_seed = value.get<std::uint64_t>();
        } else if (key == "output_dir") {
            c.output_dir = get_as<std::string>(value, "output_dir");
        } else if (key == "workers") {
            c.workers = get_int(value, "workers");
        } else if (key == "record_timing") {
            c.record_timing = get_as<bool>(value, "record_timing");
        } else if (key == "grover_max_iterations") {
            c.grover_max_iterations = get_int(value, "grover_max_iterations");
        } else {
            throw std::invalid_argument("config: unknown field '" + key + "'");
        }
    }
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& c) {
    json root;
    root["categories"] = json::array();
    for (Category cat : c.categories) root["categories"].push_back(to_string(cat));
    root["qubit_ranges"] = json::object();
    for (const auto& [cat, r] : c.qubit_ranges) root["qubit_ranges"][to_string(cat)] = {r.min, r.max};
    root["programs_per_size"] = c.programs_per_size;
    root["r1"] = c.r1;
    root["r2"] = c.r2;
    root["gamma"] = c.gamma;
    root["alpha"] = c.alpha;
    root["per_op"] = c.per_op;
    root["base_seed"] = c.base_seed;
    root["output_dir"] = c.output_dir;
    root["workers"] = c.workers;
    root["record_timing"] = c.record_timing;
    root["grover_max_iterations"] = c.grover_max_iterations;
    return root.dump(2) + "\n";
}

}  // namespace specred
