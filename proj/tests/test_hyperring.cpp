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

#include <doctest.h>

#include <algorithm>
#include <array>

#include "hyperlab/errors.hpp"
#include "hyperlab/hyperring.hpp"
#include "oracles.hpp"

using namespace hyperlab;

namespace {

FiniteHyperring zphi(unsigned n, std::vector<long long> phi) { return FiniteHyperring::zn_phi(n, phi); }

}  // namespace

TEST_CASE("Z_6 with Phi {2,3} is a hyperring") {
    const auto r = zphi(6, {2, 3});
    CHECK(r.mul(1, 3) == parse_element_set("0,3"));
    CHECK(validate(r).ok());
}

TEST_CASE("Z_8 with Phi {1,3}") {
    const auto r = zphi(8, {1, 3});
    const ValidationReport rep = validate(r);
    CHECK(rep.ok());
    CHECK(rep.commutative);
    // Exhaustive decision of the flag.
    bool strong = true;
    for (Element x = 0; x < 8; ++x)
        for (Element y = 0; y < 8; ++y)
            for (Element z = 0; z < 8; ++z)
                strong = strong && r.mul(r.add(y, z), x) == r.sum(r.mul(y, x), r.mul(z, x));
    CHECK(rep.strongly_distributive == strong);
    const std::array<Element, 2> two{2, 2};
    const std::array<Element, 3> three{2, 2, 2};
    CHECK(r.hyperproduct(two) == ElementSet::singleton(4));
    CHECK(r.hyperproduct(three) == ElementSet::singleton(0));
    CHECK_THROWS_AS(static_cast<void>(r.hyperproduct(std::span<const Element>{})), UsageError);
}

TEST_CASE("zero annihilates in Phi rings") {
    for (unsigned n = 2; n <= 9; ++n) {
        const auto r = zphi(n, {1, 2});
        for (Element a = 0; a < n; ++a) {
            const std::array<Element, 2> xs{0, a};
            CHECK(r.hyperproduct(xs) == ElementSet::singleton(0));
        }
    }
}

TEST_CASE("malformed tables are structural errors") {
    RawTables raw;
    raw.n = 2;
    raw.add = {{0, 1}, {1, 0}};
    raw.hmul = {{{0}, {0}}, {{0}, {}}};
    CHECK_THROWS_AS(FiniteHyperring::from_tables(raw), StructuralError);
    raw.hmul = {{{0}, {0}}, {{0}, {1}}};
    CHECK_NOTHROW(FiniteHyperring::from_tables(raw));
    raw.add = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(FiniteHyperring::from_tables(raw), StructuralError);
    raw.add = {{0, 1}};
    CHECK_THROWS_AS(FiniteHyperring::from_tables(raw), StructuralError);
}

TEST_CASE("axiom failures are reported, not thrown") {
    RawTables raw;
    raw.n = 2;
    raw.add = {{0, 1}, {1, 0}};
    raw.hmul = {{{0}, {1}}, {{0}, {1}}};  // 0 o 1 = {1} != 1 o 0
    const ValidationReport rep = validate_hyperring(raw);
    CHECK_FALSE(rep.ok());
    const bool named = std::any_of(rep.violations.begin(), rep.violations.end(),
                                   [](const AxiomViolation& v) { return v.axiom == "commutativity"; });
    CHECK(named);
}

TEST_CASE("hyperproduct is associative and order free on the family") {
    for (unsigned n = 2; n <= 8; ++n)
        for (const auto& phi : std::vector<std::vector<long long>>{{1, 3}, {2, 3}, {0, 1, 5}}) {
            if (n == 2 && phi.size() == 2) continue;
            const auto r = zphi(n, phi);
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b)
                    for (Element c = 0; c < n; ++c) {
                        std::array<Element, 3> xs{a, b, c};
                        const ElementSet ref = r.hyperproduct(xs);
                        CHECK(ref == oracle::fold(r, {a, b, c}));
                        std::sort(xs.begin(), xs.end());
                        do {
                            CHECK(r.hyperproduct(xs) == ref);
                        } while (std::next_permutation(xs.begin(), xs.end()));
                    }
        }
}

TEST_CASE("unit report invariants") {
    for (unsigned n = 2; n <= 10; ++n)
        for (const auto& phi : std::vector<std::vector<long long>>{{1, 2}, {2, 3}, {0, 1}, {1, 5, 7}}) {
            if (n == 2 && phi.size() == 3) continue;
            const auto r = zphi(n, phi);
            const UnitReport u = unit_report(r);
            CHECK(u.identities == oracle::identities(r));
            CHECK(u.nonunits == oracle::nonunits(r));
            if (!u.has_identity()) CHECK(u.units.empty());
            for (Element x : u.units) {
                bool closed = false;
                for (Element y = 0; y < n; ++y) closed = closed || r.mul(y, x).intersects(u.identities);
                CHECK(closed);
            }
        }
}

TEST_CASE("zn_phi arguments") {
    CHECK_THROWS_AS(zphi(0, {1, 2}), UsageError);
    CHECK_THROWS_AS(zphi(4, {1, 5}), UsageError);
    CHECK(zphi(5, {1, 2}).label() == "z5:1,2");
}
