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

#include "mumeb/serialize.hpp"

#include <fstream>
#include <set>
#include <utility>

namespace mumeb {
namespace {

const nlohmann::json& member(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::uint64_t unsigned_field(const nlohmann::json& j, const char* key) {
    const auto& v = member(j, key);
    if (!v.is_number_unsigned()) {
        throw SchemaError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

}  // namespace

nlohmann::json field_to_json(const FiniteField& f) {
    return {{"p", f.characteristic()}, {"a", f.degree()}, {"modulus", f.modulus()}};
}

FiniteField field_from_json(const nlohmann::json& j) {
    const auto p = unsigned_field(j, "p");
    const auto a = unsigned_field(j, "a");
    const auto& m = member(j, "modulus");
    if (!m.is_array() || m.size() != a + 1) {
        throw SchemaError("field modulus must list a + 1 coefficients");
    }
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : m) {
        if (!c.is_number_unsigned()) throw SchemaError("modulus coefficients must be integers");
        coeffs.push_back(c.get<std::uint32_t>());
    }
    try {
        return FiniteField(static_cast<std::uint32_t>(p), std::move(coeffs));
    } catch (const PreconditionError& e) {
        throw SchemaError(std::string("invalid field descriptor: ") + e.what());
    }
}

nlohmann::json ring_to_json(const ProductRing& ring) {
    auto fs = nlohmann::json::array();
    for (const auto& f : ring.factors()) fs.push_back(field_to_json(f));
    return {{"d", ring.size()}, {"factors", fs}};
}

ProductRing ring_from_json(const nlohmann::json& j) {
    const auto& fs = member(j, "factors");
    if (!fs.is_array() || fs.empty()) throw SchemaError("ring factors must be a non-empty array");
    std::vector<FiniteField> fields;
    for (const auto& f : fs) fields.push_back(field_from_json(f));
    try {
        ProductRing ring(std::move(fields));
        if (j.contains("d") && unsigned_field(j, "d") != ring.size()) {
            throw SchemaError("ring d does not match its factors");
        }
        return ring;
    } catch (const PreconditionError& e) {
        throw SchemaError(std::string("invalid ring descriptor: ") + e.what());
    }
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw SchemaError("complex numbers must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (const auto& z : m.row(i)) row.push_back(complex_to_json(z));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        throw SchemaError("matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) throw SchemaError("matrix rows differ in length");
        for (const auto& z : row) entries.push_back(complex_from_json(z));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

nlohmann::json family_to_json(const MEBFamily& family) {
    auto gens = nlohmann::json::array();
    for (const auto& g : family.generators) {
        gens.push_back({{"label", g.label}, {"matrix", matrix_to_json(g.matrix)}});
    }
    return {{"d", family.d},
            {"k", family.k},
            {"ring", ring_to_json(family.ring)},
            {"generators", gens},
            {"metadata", family.metadata}};
}

MEBFamily family_from_json(const nlohmann::json& j) {
    const auto d = unsigned_field(j, "d");
    const auto k = unsigned_field(j, "k");
    if (k == 0) throw SchemaError("k must be positive");
    ProductRing ring = ring_from_json(member(j, "ring"));
    if (ring.size() != d) throw SchemaError("ring size does not match d");
    MEBFamily fam{static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(k), std::move(ring), {},
                  nlohmann::json::object()};
    const auto& gens = member(j, "generators");
    if (!gens.is_array()) throw SchemaError("generators must be an array");
    std::set<std::string> labels;
    for (const auto& g : gens) {
        const auto& label = member(g, "label");
        if (!label.is_string()) throw SchemaError("generator label must be a string");
        auto name = label.get<std::string>();
        if (!labels.insert(name).second) throw SchemaError("duplicate generator label " + name);
        auto m = matrix_from_json(member(g, "matrix"));
        if (m.rows() != k * d || m.cols() != k * d) {
            throw SchemaError("generator " + name + " must be " + std::to_string(k * d) + "x" +
                              std::to_string(k * d));
        }
        fam.generators.push_back({std::move(name), std::move(m)});
    }
    if (j.contains("metadata")) fam.metadata = j.at("metadata");
    return fam;
}

MEBFamily read_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return family_from_json(j);
}

}  // namespace mumeb
