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

#include <array>
#include <memory>
#include <set>

#include "hyperlab/construct.hpp"
#include "hyperlab/harness.hpp"

using namespace hyperlab;

namespace {

RingPtr zphi(unsigned n, std::vector<long long> phi) {
    return std::make_shared<const FiniteHyperring>(FiniteHyperring::zn_phi(n, phi));
}
ElementSet S(const char* text) { return parse_element_set(text); }

std::vector<RingPtr> family(unsigned max_n) {
    harness::RingFamilySpec spec;
    spec.moduli.clear();
    for (unsigned n = 2; n <= max_n; ++n) spec.moduli.push_back(n);
    std::vector<RingPtr> out;
    for (auto& m : harness::enumerate_family(spec)) out.push_back(m.ring);
    return out;
}

}  // namespace

TEST_CASE("quotient of Z_8 by {0,4}") {
    const RingPtr a = zphi(8, {1, 3});
    const Quotient q = quotient(a, HyperIdeal::checked(*a, S("0,4")));
    CHECK(q.ring->size() == 4);
    CHECK(q.cosets.size() == 4);
    CHECK(validate(*q.ring).ok());
    CHECK(check_good_hom(q.projection).empty());
    CHECK(q.projection.kernel() == S("0,4"));
    CHECK(q.projection.surjective());
    CHECK_THROWS_AS(quotient(a, HyperIdeal::checked(*a, a->carrier())), UsageError);
}

TEST_CASE("every quotient in the family is a hyperring with a good projection") {
    for (const RingPtr& a : family(9)) {
        const IdealLattice l = enumerate_hyperideals(*a);
        for (const HyperIdeal& p : l.all) {
            if (!p.proper(*a)) continue;
            CAPTURE(a->label());
            CAPTURE(to_string(p.members));
            const Quotient q = quotient(a, p);
            CHECK(validate(*q.ring).ok());
            CHECK(check_good_hom(q.projection).empty());
            ElementSet covered;
            for (const auto& c : q.cosets) {
                CHECK_FALSE(c.intersects(covered));
                covered |= c;
            }
            CHECK(covered == a->carrier());
        }
    }
}

TEST_CASE("identity homomorphism") {
    const RingPtr a = zphi(8, {1, 3});
    const GoodHom id = identity_hom(a);
    CHECK(check_good_hom(id).empty());
    const HyperIdeal p = HyperIdeal::checked(*a, S("0,4"));
    const TransferResult pre = transfer_preimage(id, p, {3, 2});
    const TransferResult img = transfer_image(id, p, {3, 2});
    CHECK_FALSE(pre.skipped);
    CHECK_FALSE(img.skipped);
    CHECK(pre.transported == p.members);
    CHECK(img.transported == p.members);
    CHECK(pre.hypothesis == pre.conclusion);
    CHECK(img.hypothesis == img.conclusion);
}

TEST_CASE("a map sending a nonunit to a unit is skipped") {
    const RingPtr a = zphi(6, {0, 1});
    const Quotient q = quotient(a, HyperIdeal::checked(*a, S("0,3")));
    const TransferResult r = transfer_image(q.projection, HyperIdeal::checked(*a, S("0,3")), {3, 2});
    REQUIRE(r.skipped);
    CHECK_FALSE(r.violated());
}

TEST_CASE("transfer along projections is never violated") {
    for (const RingPtr& a : family(8)) {
        const IdealLattice l = enumerate_hyperideals(*a);
        for (const HyperIdeal& k : l.all) {
            if (!k.proper(*a)) continue;
            const Quotient q = quotient(a, k);
            for (const HyperIdeal& p : l.all) {
                if (!p.proper(*a)) continue;
                CAPTURE(a->label());
                CAPTURE(to_string(k.members));
                CAPTURE(to_string(p.members));
                CHECK_FALSE(transfer_image(q.projection, p, {3, 2}).violated());
            }
            for (const HyperIdeal& p2 : enumerate_hyperideals(*q.ring).all)
                if (p2.proper(*q.ring)) CHECK_FALSE(transfer_preimage(q.projection, p2, {3, 2}).violated());
        }
    }
}

TEST_CASE("matrix hyperrings") {
    const RingPtr z2 = zphi(2, {0, 1});
    const FiniteHyperring m1 = matrix_hyperring(*z2, 1);
    CHECK(m1.same_tables(*z2));
    const RingPtr z8 = zphi(8, {1, 3});
    CHECK(matrix_hyperring(*z8, 1).same_tables(*z8));

    const FiniteHyperring m2 = matrix_hyperring(*z2, 2);
    CHECK(m2.size() == 16);
    CHECK(validate(m2, false).ok());

    CHECK_THROWS_AS(matrix_hyperring(*z8, 3), ResourceError);
    CHECK_THROWS_AS(matrix_hyperring(*z8, 2), ResourceError);
    CHECK_THROWS_AS(matrix_hyperring(*z8, 0), ParameterError);
    CHECK_THROWS_AS(matrix_hyperring(*zphi(3, {1, 2}), 2, 81), ConstructionError);

    for (Element x = 0; x < 16; ++x) {
        const auto d = decode_matrix(2, 2, x);
        CHECK(encode_matrix(2, d) == x);
    }
    for (Element a = 0; a < 2; ++a)
        for (Element b = 0; b < 2; ++b) {
            ElementSet want;
            for (Element c : z2->mul(a, b)) want.insert(corner_matrix(*z2, 2, c));
            CHECK(m2.mul(corner_matrix(*z2, 2, a), corner_matrix(*z2, 2, b)) == want);
        }

    const HyperIdeal zero = embed_diagonal_ideal(*z2, m2, HyperIdeal::checked(*z2, S("0")), 2);
    CHECK(zero.members == ElementSet::singleton(m2.zero()));
    const HyperIdeal all = embed_diagonal_ideal(*z2, m2, HyperIdeal::checked(*z2, z2->carrier()), 2);
    CHECK(all.members == m2.carrier());
}

TEST_CASE("localization") {
    const RingPtr z8 = zphi(8, {1, 3});
    // S = {1} is not closed here (1 o 1 = {1,3}); its closure is {1,3}.
    CHECK_FALSE(is_mcs(*z8, S("1")));
    CHECK(mcs_closure(*z8, 1, S("1")) == S("1,3"));

    // Ordinary Z_6 (singleton products): S = {1} gives back the ring.
    RawTables raw;
    raw.n = 6;
    raw.add.assign(6, std::vector<long long>(6));
    raw.hmul.assign(6, std::vector<std::vector<long long>>(6));
    for (long long x = 0; x < 6; ++x)
        for (long long y = 0; y < 6; ++y) {
            raw.add[x][y] = (x + y) % 6;
            raw.hmul[x][y] = {x * y % 6};
        }
    const RingPtr z6 = std::make_shared<const FiniteHyperring>(FiniteHyperring::from_tables(raw));
    const LocalizedRing same = localize(z6, S("1"));
    CHECK(same.ring->size() == 6);
    CHECK(check_good_hom(same.pi).empty());
    CHECK(same.pi.surjective());
    CHECK(same.pi.kernel() == S("0"));

    const RingPtr z6b = zphi(6, {1, 4});
    const LocalizedRing loc = localize(z6b, S("1,4"));
    CHECK(loc.ring->size() == 3);
    CHECK(validate(*loc.ring).ok());
    CHECK(check_good_hom(loc.pi).empty());

    // Set-valued sums: units of Z_6 under Phi {1,5}.
    const RingPtr z6c = zphi(6, {1, 5});
    CHECK_THROWS_AS(localize(z6c, S("1,5")), ConstructionError);

    const RingPtr z5 = zphi(5, {1, 4});
    const LocalizedRing trivial = localize(z5, S("0,1,4"));
    CHECK(trivial.ring->size() == 1);
    CHECK_THROWS_AS(localize(z5, S("2")), UsageError);
}

TEST_CASE("every candidate localization is built or explained") {
    for (const RingPtr& a : family(9)) {
        if (!unit_report(*a).has_identity()) continue;
        const IdealLattice l = enumerate_hyperideals(*a);
        for (const ElementSet& s : candidate_mcs(*a, l)) {
            CAPTURE(a->label());
            CAPTURE(to_string(s));
            CHECK(is_mcs(*a, s));
            try {
                const LocalizedRing loc = localize(a, s);
                CHECK(validate(*loc.ring).ok());
                CHECK(check_good_hom(loc.pi).empty());
                CHECK(loc.localize_set(s).contains(loc.fraction(loc.one, loc.one)));
            } catch (const ConstructionError& e) {
                const std::string what = e.what();
                const bool explained = what.find("spans") != std::string::npos ||
                                       what.find("transitive") != std::string::npos ||
                                       what.find("depend") != std::string::npos;
                CHECK(explained);
            }
        }
    }
}

TEST_CASE("matrices over Z_3 with Phi {1,2} are not associative") {
    // Entries of a product are chosen independently from sums of hyperproducts.
    using M = std::array<long long, 4>;
    const std::vector<long long> phi{1, 2};
    auto entry = [&](long long a, long long b, long long c, long long d) {
        std::set<long long> out;
        for (long long x : phi)
            for (long long y : phi) out.insert(((a * x * b) + (c * y * d)) % 3);
        return out;
    };
    auto product = [&](const std::set<M>& xs, const M& y) {
        std::set<M> out;
        for (const M& x : xs) {
            const auto e00 = entry(x[0], y[0], x[1], y[2]);
            const auto e01 = entry(x[0], y[1], x[1], y[3]);
            const auto e10 = entry(x[2], y[0], x[3], y[2]);
            const auto e11 = entry(x[2], y[1], x[3], y[3]);
            for (long long a : e00)
                for (long long b : e01)
                    for (long long c : e10)
                        for (long long d : e11) out.insert({a, b, c, d});
        }
        return out;
    };
    auto product_left = [&](const M& x, const std::set<M>& ys) {
        std::set<M> out;
        for (const M& y : ys)
            for (const M& z : product({x}, y)) out.insert(z);
        return out;
    };
    // 4 = [[1,1],[0,0]] and 10 = [[1,0],[1,0]], least significant digit first.
    const M x{1, 1, 0, 0};
    const M y{1, 0, 1, 0};
    CHECK(decode_matrix(3, 2, 4) == std::vector<Element>{1, 1, 0, 0});
    CHECK(decode_matrix(3, 2, 10) == std::vector<Element>{1, 0, 1, 0});
    const std::set<M> left = product(product({x}, y), x);
    const std::set<M> right = product_left(x, product({y}, x));
    // (x o y) o x has first rows 00 and ab with a, b nonzero; x o (y o x)
    // reaches every first row, e.g. 10.
    CHECK(left.size() == 5);
    CHECK(right.size() == 9);
    CHECK(right.count(M{1, 0, 0, 0}) == 1);
    CHECK(left.count(M{1, 0, 0, 0}) == 0);
    const FiniteHyperring mz = matrix_hyperring(*zphi(3, {1, 2}), 2, 81, false);
    CHECK(mz.mul(mz.mul(ElementSet::singleton(4), 10), 4).size() == left.size());
}
