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

#include "hyperlab/element_set.hpp"

#include <cctype>
#include <sstream>

#include "hyperlab/errors.hpp"

namespace hyperlab {

std::string to_list(const ElementSet& s) {
    std::ostringstream out;
    bool first = true;
    for (Element x : s) {
        if (!first) out << ',';
        out << x;
        first = false;
    }
    return out.str();
}

std::string to_string(const ElementSet& s) { return "{" + to_list(s) + "}"; }

ElementSet parse_element_set(const std::string& text) {
    ElementSet out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        unsigned long value = 0;
        try {
            std::size_t used = 0;
            value = std::stoul(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError("bad element '" + token + "' in set '" + text + "'");
        }
        if (value >= kMaxCarrier) throw UsageError("element " + token + " exceeds carrier cap");
        out.insert(static_cast<Element>(value));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return out;
}

}  // namespace hyperlab
