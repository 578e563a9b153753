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

#include <sstream>

#include "hyperlab/harness.hpp"
#include "hyperlab/zphi.hpp"

namespace hyperlab::harness {

namespace {

using namespace hyperlab::zphi;

std::string render(const IntProductSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const BigInt& x : s) {
        if (!first) out << ',';
        out << x;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string render(const IntVerdict& v) {
    std::string out(to_string(v.status));
    if (v.witness) out += " " + render_witness(*v.witness);
    return out;
}

std::string flat(const IntWitness& w) {
    std::string out;
    for (const auto& part : w.parts)
        for (long long x : part) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

}  // namespace

std::vector<GoldenRow> run_golden_examples(long long window) {
    std::vector<GoldenRow> rows;
    const ZPhiRing ring({2, 3});
    constexpr long long d = 12;

    struct ProductCase {
        const char* example;
        std::vector<long long> xs;
        const char* expected;
        Membership membership;
    };
    const ProductCase products[] = {
        {"12Z, Phi {2,3}", {2, 3}, "{12,18}", Membership::mixed},
        {"12Z, Phi {2,3}", {2, 2}, "{8,12}", Membership::mixed},
        {"12Z, Phi {2,3}", {2, 2, 3}, "{48,72,108}", Membership::subset},
        {"12Z, Phi {2,3}", {2, 2, 2, 3}, "{192,288,432,648}", Membership::subset},
    };
    for (const auto& c : products) {
        const IntProductSet s = int_product(ring, c.xs);
        std::string args;
        for (long long x : c.xs) args += (args.empty() ? "" : ",") + std::to_string(x);
        const std::string actual = render(s);
        rows.push_back({c.example, "product " + args, c.expected, actual, actual == c.expected, ""});
        const std::string m(to_string(principal_membership(d, s)));
        rows.push_back({c.example, "membership " + actual + " in 12Z", std::string(to_string(c.membership)),
                        m, m == to_string(c.membership), ""});
    }

    for (long long a : {2LL, 3LL}) {
        const bool in = radical_membership(ring, d, a);
        const bool oracle = radical_membership_by_powers(ring, d, a);
        rows.push_back({"12Z, Phi {2,3}", std::to_string(a) + " in rad(12Z)", "false", in ? "true" : "false",
                        !in && !oracle, oracle == in ? "" : "power oracle disagrees"});
    }

    {
        const IntVerdict v = bounded_uv_check(ring, d, {4, 2}, window, Absorbing::prime);
        const bool ok = v.fails() && replay(ring, d, Absorbing::prime, *v.witness);
        rows.push_back({"12Z, Phi {2,3}", "(4,2)-absorbing prime, W=" + std::to_string(window),
                        "fails 2,2,2,3", render(v), ok && flat(*v.witness) == "2,2,2,3", ""});
    }
    {
        const IntVerdict v = bounded_uv_check(ring, d, {4, 2}, window, Absorbing::primary);
        GoldenRow row{"12Z, Phi {2,3}", "(4,2)-absorbing primary, W=" + std::to_string(window),
                      "no counterexample", render(v), v.status == Status::inconclusive, ""};
        if (v.fails() && replay(ring, d, Absorbing::primary, *v.witness))
            row.note = "counterexample replays: the product lies in 12Z, the first part does not "
                       "and the rest is outside rad(12Z) = 6Z";
        rows.push_back(row);
    }
    for (long long w : {3LL, 10LL}) {
        const IntVerdict v = bounded_uv_check(ring, d, {3, 2}, w, Absorbing::primary);
        const bool ok = v.fails() && replay(ring, d, Absorbing::primary, *v.witness);
        rows.push_back({"12Z, Phi {2,3}", "(3,2)-absorbing primary, W=" + std::to_string(w), "fails 2,2,3",
                        render(v), ok && flat(*v.witness) == "2,2,3", ""});
    }

    {
        const std::vector<long long> gens{3, 5, 7};
        const long long g = ideal_intersection(gens);
        rows.push_back({"3Z, 5Z, 7Z, Phi {2,4}", "generator of <3> meet <5> meet <7>", "105", std::to_string(g), g == 105,
                        g == 150 ? "" : "printed text says <150>; the intersection is <" +
                                            std::to_string(g) + ">"});
        const ZPhiRing ring24({2, 4});
        for (long long p : gens) {
            const IntVerdict v = bounded_uv_check(ring24, p, {3, 2}, 30, Absorbing::primary);
            rows.push_back({"3Z, 5Z, 7Z, Phi {2,4}", "<" + std::to_string(p) + "> (3,2)-absorbing primary, W=30",
                            "no counterexample", render(v), v.status == Status::inconclusive,
                            "bounded search; nothing is claimed beyond the window"});
        }
        const IntVerdict v = bounded_uv_check(ring24, g, {3, 2}, 30, Absorbing::primary);
        const bool ok = v.fails() && replay(ring24, g, Absorbing::primary, *v.witness);
        rows.push_back({"3Z, 5Z, 7Z, Phi {2,4}", "<" + std::to_string(g) + "> (3,2)-absorbing primary, W=30",
                        "fails with witness", render(v), ok, ""});
    }

    {
        const ZPhiRing strict({2, 3}, UnitConvention::definition);
        const IntVerdict v = bounded_uv_check(strict, d, {4, 2}, 10, Absorbing::primary);
        rows.push_back({"12Z, Phi {2,3}", "(4,2)-absorbing primary, W=10, +1 and -1 as nonunits",
                        "fails", render(v), v.fails() && replay(strict, d, Absorbing::primary, *v.witness),
                        "informational: without an identity in Phi, 1 may appear as a factor"});
    }
    return rows;
}

}  // namespace hyperlab::harness
