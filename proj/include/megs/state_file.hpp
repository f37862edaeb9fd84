// Copyright 2026 The megs Authors
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
/**
 * @file
 * State files: a JSON document with "dims" (integer list), "amps" (list of
 * [re, im] pairs, last subsystem fastest) and an optional "label" string.
 * Doubles are written in shortest round-trip form, so a write/read cycle
 * reproduces every amplitude bit for bit.
 */
#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "megs/errors.hpp"
#include "megs/multilinear.hpp"

namespace megs {

struct StateFile {
    MultiState state;
    std::optional<std::string> label;
};

/// Keys in the order label, dims, amps.
inline nlohmann::ordered_json state_to_json(const MultiState &psi,
                                            const std::optional<std::string> &label = std::nullopt) {
    nlohmann::ordered_json doc;
    if (label) {
        doc["label"] = *label;
    }
    doc["dims"] = std::vector<std::size_t>(psi.dims().begin(), psi.dims().end());
    auto amps = nlohmann::ordered_json::array();
    for (const cplx &z : psi.amps()) {
        amps.push_back({z.real(), z.imag()});
    }
    doc["amps"] = std::move(amps);
    return doc;
}

/// Serialized state document, newline terminated.
inline std::string format_state(const MultiState &psi,
                                const std::optional<std::string> &label = std::nullopt) {
    return state_to_json(psi, label).dump() + "\n";
}

/// Parses a state document. Unnormalized amplitudes are a DomainError unless
/// `normalize` is set, in which case they are rescaled.
inline StateFile parse_state(const std::string &text, bool normalize = false) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw DomainError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("amps")) {
        throw DomainError("state file needs \"dims\" and \"amps\" keys");
    }
    const auto &jdims = doc["dims"];
    const auto &jamps = doc["amps"];
    if (!jdims.is_array() || !jamps.is_array()) {
        throw DomainError("state file: \"dims\" and \"amps\" must be lists");
    }
    std::vector<std::size_t> dims;
    for (const auto &d : jdims) {
        if (!d.is_number_unsigned()) {
            throw DomainError("state file: dims must be non-negative integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    std::vector<cplx> amps;
    amps.reserve(jamps.size());
    for (const auto &a : jamps) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw DomainError("state file: every amplitude must be a [re, im] number pair");
        }
        amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    std::optional<std::string> label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw DomainError("state file: label must be a string");
        }
        label = doc["label"].get<std::string>();
    }
    if (normalize) {
        return {MultiState::normalized(std::move(dims), std::move(amps)), std::move(label)};
    }
    return {MultiState(std::move(dims), std::move(amps)), std::move(label)};
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading '" + path + "'");
    }
    return buf.str();
}

inline void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path + "'");
    }
}

inline StateFile read_state_file(const std::string &path, bool normalize = false) {
    return parse_state(read_text_file(path), normalize);
}

inline void write_state_file(const std::string &path, const MultiState &psi,
                             const std::optional<std::string> &label = std::nullopt) {
    write_text_file(path, format_state(psi, label));
}

} // namespace megs
