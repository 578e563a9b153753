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
#include <functional>
#include <numeric>
#include <random>

#include "hyperlab/hyperring.hpp"
#include "hyperlab/ideals.hpp"
#include "hyperlab/zphi.hpp"

using namespace hyperlab;
using namespace hyperlab::zphi;

namespace {

IntProductSet ints(std::initializer_list<long long> xs) {
    IntProductSet s;
    for (long long x : xs) s.insert(BigInt(x));
    return s;
}

/// Ordered tuples over [2, W], checked against every choice of v positions.
/// Units follow the integer convention. Returns true if a counterexample exists.
bool brute_counterexample(const ZPhiRing& ring, long long d, unsigned u, unsigned v, long long w,
                          bool prime) {
    std::vector<long long> t(u);
    auto in_ideal = [&](const IntProductSet& s) {
        return principal_membership(d, s) == Membership::subset;
    };
    auto in_rad = [&](const std::vector<long long>& xs) {
        // Some power of the product lies in dZ: all products share valuations.
        for (long long n = 1; n <= 12; ++n) {
            std::vector<long long> rep;
            for (int k = 0; k < n; ++k) rep.insert(rep.end(), xs.begin(), xs.end());
            if (rep.size() > 24) break;
            if (in_ideal(int_product(ring, rep))) return true;
        }
        return false;
    };
    std::function<bool(unsigned)> rec = [&](unsigned i) -> bool {
        if (i == u) {
            if (!in_ideal(int_product(ring, t))) return false;
            for (unsigned mask = 0; mask < (1U << u); ++mask) {
                if (static_cast<unsigned>(std::popcount(mask)) != v) continue;
                std::vector<long long> in, out;
                for (unsigned j = 0; j < u; ++j) ((mask >> j) & 1U ? in : out).push_back(t[j]);
                if (!in_ideal(int_product(ring, in)) &&
                    !(prime ? in_ideal(int_product(ring, out)) : in_rad(out)))
                    return true;
            }
            return false;
        }
        for (long long x = 2; x <= w; ++x) {
            t[i] = x;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("products of the worked examples") {
    const ZPhiRing r({2, 3});
    CHECK(int_product(r, std::vector<long long>{2, 3}) == ints({12, 18}));
    CHECK(int_product(r, std::vector<long long>{2, 2}) == ints({8, 12}));
    CHECK(int_product(r, std::vector<long long>{2, 2, 3}) == ints({48, 72, 108}));
    CHECK(int_product(r, std::vector<long long>{2, 2, 2, 3}) == ints({192, 288, 432, 648}));
    CHECK_THROWS_AS(int_product(r, std::vector<long long>{}), UsageError);
    CHECK(principal_membership(12, ints({192, 288, 432, 648})) == Membership::subset);
    CHECK(principal_membership(12, ints({8, 12})) == Membership::mixed);
    CHECK(principal_membership(12, ints({48, 72, 108})) == Membership::subset);
    CHECK(principal_membership(12, ints({8, 9})) == Membership::disjoint);
}

TEST_CASE("radical membership examples") {
    const ZPhiRing r({2, 3});
    CHECK(radical_membership(r, 12, 6));
    CHECK_FALSE(radical_membership(r, 12, 2));
    CHECK_FALSE(radical_membership(r, 12, 3));
    CHECK(radical_profile(r, 12).radical_generator() == 6);
    CHECK_THROWS_AS(radical_profile(r, 0), UsageError);
}

TEST_CASE("ring arguments") {
    CHECK_THROWS_AS(ZPhiRing({2}), ParameterError);
    CHECK_THROWS_AS(ZPhiRing({2, 0}), ParameterError);
    CHECK_THROWS_AS(ZPhiRing({2, 2}), ParameterError);
    CHECK_FALSE(ZPhiRing({2, 3}).identity());
    CHECK(ZPhiRing({1, 3}).identity() == 1);
    CHECK(ZPhiRing({2, 3}).is_unit(-1));
    CHECK_FALSE(ZPhiRing({2, 3}, UnitConvention::definition).is_unit(1));
    CHECK(ZPhiRing({-1, 3}, UnitConvention::definition).is_unit(1));
}

TEST_CASE("ideal intersection") {
    CHECK(ideal_intersection(std::vector<long long>{3, 5, 7}) == 105);
    CHECK(ideal_intersection(std::vector<long long>{12}) == 12);
    CHECK(ideal_intersection(std::vector<long long>{4, 6}) == 12);
    CHECK_THROWS_AS(ideal_intersection(std::vector<long long>{}), UsageError);
}

TEST_CASE("product set properties") {
    std::mt19937_64 rng(7);
    const std::vector<long long> pool{-3, -2, 2, 3, 4, 5, 6, 7};
    for (int it = 0; it < 300; ++it) {
        std::vector<long long> phi{2, 3};
        if (it % 3 == 1) phi = {2, 5, 7};
        if (it % 3 == 2) phi = {-1, 4};
        const ZPhiRing r(phi);
        std::vector<long long> xs(1 + rng() % 4);
        for (auto& x : xs) x = pool[rng() % pool.size()];
        const IntProductSet base = int_product(r, xs);
        std::size_t bound = 1;
        for (std::size_t k = 1; k < xs.size(); ++k) bound *= phi.size();
        CHECK(base.size() <= bound);
        CHECK_FALSE(base.empty());
        auto perm = xs;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(int_product(r, perm) == base);
        const long long d = 1 + static_cast<long long>(rng() % 40);
        const Membership m = principal_membership(d, base);
        auto scaled = xs;
        scaled[rng() % scaled.size()] *= d;
        CHECK(principal_membership(d, int_product(r, scaled)) == Membership::subset);
        if (m == Membership::subset) CHECK(principal_membership(d, int_product(r, scaled)) == m);
    }
}

TEST_CASE("valuation criterion matches the power oracle") {
    std::mt19937_64 rng(11);
    const std::vector<long long> primes{2, 3, 5, 7};
    for (int it = 0; it < 2000; ++it) {
        std::vector<long long> phi;
        while (phi.size() < 2) {
            long long x = 1;
            for (int k = 0; k < 3; ++k) x *= (rng() % 2) ? primes[rng() % 4] : 1;
            if (std::find(phi.begin(), phi.end(), x) == phi.end()) phi.push_back(x);
        }
        const ZPhiRing r(phi);
        const long long d = 1 + static_cast<long long>(rng() % 1000);
        long long a = static_cast<long long>(rng() % 201) - 100;
        if (a == 0) a = 1;
        CAPTURE(d);
        CAPTURE(a);
        CHECK(radical_membership(r, d, a) == radical_membership_by_powers(r, d, a));
    }
}

TEST_CASE("the closure of d is dZ inside a window and matches generate mod m") {
    for (const auto& phi : std::vector<std::vector<long long>>{{2, 3}, {2, 4}, {3, 5}}) {
        const ZPhiRing r(phi);
        for (long long d = 1; d <= 12; ++d) {
            const auto closure = windowed_closure(r, d, 60);
            std::vector<long long> want;
            for (long long x = -60; x <= 60; ++x)
                if (x % d == 0) want.push_back(x);
            CHECK(closure == want);
            for (long long k = 1; k <= 3; ++k) {
                const auto m = static_cast<unsigned>(d * k * 2);
                if (m > 48 || m == 2) continue;
                const auto ring = FiniteHyperring::zn_phi(m, phi);
                ElementSet multiples;
                for (unsigned x = 0; x < m; x += static_cast<unsigned>(d)) multiples.insert(x);
                CHECK(generate(ring, ElementSet::singleton(static_cast<Element>(d % m))).members ==
                      multiples);
            }
        }
    }
}

TEST_CASE("bounded checks of the worked examples") {
    const ZPhiRing r({2, 3});
    for (long long w : {3, 5, 10, 20}) {
        const IntVerdict v = bounded_uv_check(r, 12, {3, 2}, w, Absorbing::primary);
        REQUIRE(v.fails());
        CHECK(v.witness->flat() == std::vector<long long>{2, 2, 3});
        CHECK(replay(r, 12, Absorbing::primary, *v.witness));
    }
    const IntVerdict p = bounded_uv_check(r, 12, {4, 2}, 10, Absorbing::prime);
    REQUIRE(p.fails());
    CHECK(p.witness->flat() == std::vector<long long>{2, 2, 2, 3});
    CHECK(replay(r, 12, Absorbing::prime, *p.witness));

    const ZPhiRing r24({2, 4});
    for (long long d : {3, 5, 7}) CHECK(bounded_uv_check(r24, d, {3, 2}, 30, Absorbing::primary).status ==
                                        Status::inconclusive);
    const IntVerdict f = bounded_uv_check(r24, 105, {3, 2}, 30, Absorbing::primary);
    REQUIRE(f.fails());
    CHECK(replay(r24, 105, Absorbing::primary, *f.witness));
    CHECK_THROWS_AS(bounded_uv_check(r, 12, {2, 2}, 10, Absorbing::primary), ParameterError);
}

TEST_CASE("twelve Z under Phi {2,3} is not (4,2)-absorbing primary") {
    const ZPhiRing r({2, 3});
    const IntVerdict v = bounded_uv_check(r, 12, {4, 2}, 50, Absorbing::primary);
    REQUIRE(v.fails());
    CHECK(replay(r, 12, Absorbing::primary, *v.witness));
    // 2 o 3 = {12,18} escapes 12Z and 2 o 2 = {8,12} escapes 6Z; every other
    // split of (2,3,2,2) fails the same way.
    CHECK(int_product(r, std::vector<long long>{2, 3, 2, 2}) == ints({192, 288, 432, 648}));
    CHECK(principal_membership(12, ints({192, 288, 432, 648})) == Membership::subset);
}

TEST_CASE("bounded checks agree with the tuple oracle") {
    for (const auto& phi : std::vector<std::vector<long long>>{{2, 3}, {2, 4}, {3, 5}})
        for (long long d : {4, 6, 8, 9, 12, 18, 30}) {
            const ZPhiRing r(phi);
            for (unsigned u = 2; u <= 3; ++u)
                for (unsigned v = 1; v < u; ++v)
                    for (bool prime : {false, true}) {
                        CAPTURE(d);
                        CAPTURE(u);
                        CAPTURE(v);
                        CAPTURE(prime);
                        const IntVerdict got = bounded_uv_check(
                            r, d, {u, v}, 8, prime ? Absorbing::prime : Absorbing::primary);
                        CHECK(got.fails() == brute_counterexample(r, d, u, v, 8, prime));
                        if (got.fails())
                            CHECK(replay(r, d, prime ? Absorbing::prime : Absorbing::primary,
                                         *got.witness));
                    }
        }
}

TEST_CASE("a tiny budget is reported as such") {
    const ZPhiRing r({2, 3});
    const IntVerdict v = bounded_uv_check(r, 35, {4, 2}, 40, Absorbing::primary, 5);
    CHECK(v.status == Status::inconclusive);
    CHECK(v.space.find("budget") != std::string::npos);
}
