// Copyright 2026 The duality-lab Authors
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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "duality/config.hpp"
#include "duality/qmat.hpp"

namespace duality::detail {

inline nlohmann::json real_part_json(const CMatrix& m, bool imag) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(imag ? m(i, k).imag() : m(i, k).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline CMatrix matrix_from_json(const nlohmann::json& re, const nlohmann::json& im, std::size_t dim,
                                const char* what) {
    const auto check_shape = [&](const nlohmann::json& part) {
        if (!part.is_array() || part.size() != dim) {
            throw ContractError(std::string(what) + ": expected " + std::to_string(dim) + " rows");
        }
        for (const auto& row : part) {
            if (!row.is_array() || row.size() != dim) {
                throw ContractError(std::string(what) + ": expected " + std::to_string(dim) +
                                    " columns per row");
            }
        }
    };
    check_shape(re);
    check_shape(im);
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto& r = re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            const auto& c = im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (!r.is_number() || !c.is_number()) {
                throw ContractError(std::string(what) + ": non-numeric matrix entry");
            }
            m(i, k) = Complex(r.get<double>(), c.get<double>());
        }
    }
    return m;
}

inline nlohmann::json parse_object(const std::string& text, const char* what) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ContractError(std::string(what) + ": " + e.what());
    }
    if (!j.is_object()) throw ContractError(std::string(what) + ": expected a JSON object");
    return j;
}

inline std::size_t positive_count(const nlohmann::json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
        throw ContractError(std::string(what) + ": '" + key + "' must be a positive integer");
    }
    return static_cast<std::size_t>(j[key].get<long long>());
}

}  // namespace duality::detail
