/*
 *   Copyright 2026 The hyperlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <string>

#include <json.hpp>

#include "hyperlab/harness.hpp"

namespace hyperlab::harness {

namespace {

RingPtr parse_zn(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("ring argument needs z<n>:<c1>,<c2>,...");
    unsigned long n = 0;
    std::vector<long long> phi;
    try {
        std::size_t used = 0;
        n = std::stoul(spec.substr(1, colon - 1), &used);
        if (used != colon - 1) throw std::invalid_argument("modulus");
        std::string rest = spec.substr(colon + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            const auto comma = rest.find(',', start);
            const std::string item =
                rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            phi.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument("residue");
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse ring argument '" + spec + "'");
    }
    if (n < 1 || n > kMaxCarrier) throw UsageError("modulus out of range in '" + spec + "'");
    return std::make_shared<const FiniteHyperring>(
        FiniteHyperring::zn_phi(static_cast<unsigned>(n), phi));
}

RingPtr parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("'" + path + "' is neither z<n>:... nor a readable file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("bad JSON in " + path + ": " + e.what());
    }
    RawTables raw;
    try {
        raw.n = j.at("n").get<std::size_t>();
        raw.add = j.at("add").get<std::vector<std::vector<long long>>>();
        raw.hmul = j.at("hmul").get<std::vector<std::vector<std::vector<long long>>>>();
        if (j.contains("zero")) raw.zero = j.at("zero").get<long long>();
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("bad table layout in " + path + ": " + e.what());
    }
    return std::make_shared<const FiniteHyperring>(FiniteHyperring::from_tables(raw, path));
}

std::string table_key(const FiniteHyperring& r) {
    std::string key;
    const auto n = static_cast<Element>(r.size());
    for (Element a = 0; a < n; ++a)
        for (Element b = a; b < n; ++b) key += to_list(r.mul(a, b)) + ';';
    return key;
}

}  // namespace

RingPtr parse_ring(const std::string& spec) {
    const bool zn = spec.size() > 1 && (spec[0] == 'z' || spec[0] == 'Z') &&
                    std::isdigit(static_cast<unsigned char>(spec[1]));
    if (zn) return parse_zn(spec);
    return parse_file(spec);
}

void RingFamilySpec::check() const {
    if (moduli.empty()) throw ParameterError("no moduli");
    for (unsigned n : moduli)
        if (n < 2 || n > kMaxCarrier) throw ParameterError("moduli must lie in [2, 256]");
    for (unsigned s : phi_sizes)
        if (s < 2) throw ParameterError("Phi sizes must be at least 2");
    if (u_max < 2 || u_max > 8) throw ParameterError("u_max must lie in [2, 8]");
    if (tuple_budget == 0) throw ParameterError("tuple budget must be positive");
}

std::vector<FamilyMember> enumerate_family(const RingFamilySpec& spec) {
    spec.check();
    std::vector<FamilyMember> out;
    for (unsigned n : spec.moduli) {
        std::vector<long long> universe;
        if (spec.phi_universe.empty()) {
            for (unsigned r = 0; r < n; ++r) universe.push_back(r);
        } else {
            for (long long c : spec.phi_universe) {
                const long long r = ((c % n) + n) % n;
                if (std::find(universe.begin(), universe.end(), r) == universe.end())
                    universe.push_back(r);
            }
            std::sort(universe.begin(), universe.end());
        }
        std::map<std::string, std::size_t> seen;
        for (unsigned size : spec.phi_sizes) {
            if (size > universe.size()) continue;
            // Subsets of `universe` of this size in lexicographic order.
            std::vector<std::size_t> idx(size);
            for (std::size_t i = 0; i < size; ++i) idx[i] = i;
            while (true) {
                std::vector<long long> phi;
                for (std::size_t i : idx) phi.push_back(universe[i]);
                auto ring = std::make_shared<const FiniteHyperring>(FiniteHyperring::zn_phi(n, phi));
                const std::string key = table_key(*ring);
                if (auto it = seen.find(key); it != seen.end()) {
                    out[it->second].aliases.push_back(ring->label());
                } else {
                    seen.emplace(key, out.size());
                    out.push_back({ring, {ring->label()}});
                }
                std::size_t pos = size;
                while (pos > 0 && idx[pos - 1] == universe.size() - size + pos - 1) --pos;
                if (pos == 0) break;
                ++idx[pos - 1];
                for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    return out;
}

}  // namespace hyperlab::harness
