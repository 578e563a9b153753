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

#ifndef HYPERLAB_VERDICT_HPP
#define HYPERLAB_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlab/element_set.hpp"

namespace hyperlab {

enum class Status { holds, fails, inconclusive };

std::string_view to_string(Status s);

/// A failing instance. `parts` groups the tuple the way the violated clause
/// reads it, e.g. {v-part, remainder} for the absorbing properties.
template <typename T>
struct BasicWitness {
    std::vector<std::vector<T>> parts;
    std::string clause;

    [[nodiscard]] std::vector<T> flat() const {
        std::vector<T> out;
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }
};

template <typename T>
struct BasicVerdict {
    Status status = Status::holds;
    std::optional<BasicWitness<T>> witness;
    /// What was enumerated, e.g. "multisets of 3 over 4 nonunits".
    std::string space;
    /// Instances whose hypothesis held and were therefore actually checked.
    std::uint64_t tested = 0;

    [[nodiscard]] bool holds() const { return status == Status::holds; }
    [[nodiscard]] bool fails() const { return status == Status::fails; }
    [[nodiscard]] bool vacuous() const { return status == Status::holds && tested == 0; }

    static BasicVerdict pass(std::string space, std::uint64_t tested) {
        return {Status::holds, std::nullopt, std::move(space), tested};
    }
    static BasicVerdict fail(BasicWitness<T> w, std::string space, std::uint64_t tested = 0) {
        return {Status::fails, std::move(w), std::move(space), tested};
    }
    static BasicVerdict inconclusive(std::string space) {
        return {Status::inconclusive, std::nullopt, std::move(space), 0};
    }
};

using Witness = BasicWitness<Element>;
using Verdict = BasicVerdict<Element>;

/// "2,2|3" style rendering of a witness, parts separated by '|'.
template <typename T>
std::string render_witness(const BasicWitness<T>& w) {
    std::string out;
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        if (i) out += '|';
        for (std::size_t j = 0; j < w.parts[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(w.parts[i][j]);
        }
    }
    return out;
}

}  // namespace hyperlab

#endif  // HYPERLAB_VERDICT_HPP
