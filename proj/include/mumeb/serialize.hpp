// Copyright 2026 The mumeb Authors
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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mumeb/construct.hpp"
#include "mumeb/finite_field.hpp"
#include "mumeb/product_ring.hpp"

namespace mumeb {

/// Input does not follow the family / descriptor schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"p": 3, "a": 2, "modulus": [1, 0, 1]}, coefficients low to high.
nlohmann::json field_to_json(const FiniteField& f);
FiniteField field_from_json(const nlohmann::json& j);

/// {"d": 15, "factors": [field, ...]}.
nlohmann::json ring_to_json(const ProductRing& ring);
ProductRing ring_from_json(const nlohmann::json& j);

/// [re, im].
nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// {"d", "k", "ring", "generators": [{"label", "matrix"}], "metadata"}.
nlohmann::json family_to_json(const MEBFamily& family);
MEBFamily family_from_json(const nlohmann::json& j);

MEBFamily read_family(const std::string& path);

}  // namespace mumeb
