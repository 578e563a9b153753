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

#include "hyperlab/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hyperlab {

namespace {

std::string pair_text(Element x, Element r) {
    return "(" + std::to_string(x) + "," + std::to_string(r) + ")";
}

void require_valid(const FiniteHyperring& ring, bool commutative, const std::string& what) {
    const ValidationReport report = validate(ring, commutative);
    if (report.ok()) return;
    const AxiomViolation& v = report.violations.front();
    std::string w;
    for (Element x : v.witness) w += (w.empty() ? "" : ",") + std::to_string(x);
    throw ConstructionError(what + " fails " + v.axiom + " at (" + w + "): " + v.detail);
}

}  // namespace

ElementSet GoodHom::image(const ElementSet& s) const {
    ElementSet out;
    for (Element x : s) out.insert(map[x]);
    return out;
}

ElementSet GoodHom::preimage(const ElementSet& s) const {
    ElementSet out;
    for (Element x = 0; x < map.size(); ++x)
        if (s.contains(map[x])) out.insert(x);
    return out;
}

ElementSet GoodHom::kernel() const { return preimage(ElementSet::singleton(target->zero())); }

bool GoodHom::surjective() const { return image(source->carrier()) == target->carrier(); }

std::vector<AxiomViolation> check_good_hom(const GoodHom& h) {
    std::vector<AxiomViolation> out;
    const auto n = static_cast<Element>(h.source->size());
    if (h.map.size() != n) {
        out.push_back({"totality", {}, "map size differs from the source carrier"});
        return out;
    }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (h(h.source->add(x, y)) != h.target->add(h(x), h(y))) {
                out.push_back({"additive", {x, y}, "eta(x+y) != eta(x)+eta(y)"});
                return out;
            }
            if (h.image(h.source->mul(x, y)) != h.target->mul(h(x), h(y))) {
                out.push_back({"multiplicative", {x, y}, "eta(x o y) != eta(x) o eta(y)"});
                return out;
            }
        }
    return out;
}

GoodHom identity_hom(const RingPtr& ring) {
    std::vector<Element> map(ring->size());
    std::iota(map.begin(), map.end(), Element{0});
    return {ring, ring, std::move(map)};
}

Quotient quotient(const RingPtr& a, const HyperIdeal& p) {
    if (!p.proper(*a)) throw UsageError("cannot take the quotient by the whole ring");
    const auto n = static_cast<Element>(a->size());
    std::vector<Element> cls(n, n);
    std::vector<Element> rep;
    Quotient q;
    for (Element x = 0; x < n; ++x) {
        if (cls[x] != n) continue;
        const auto id = static_cast<Element>(rep.size());
        ElementSet coset;
        for (Element m : p.members) coset.insert(a->add(x, m));
        for (Element y : coset) cls[y] = id;
        rep.push_back(x);
        q.cosets.push_back(coset);
    }
    const std::size_t k = rep.size();
    auto image = [&](const ElementSet& s) {
        ElementSet out;
        for (Element y : s) out.insert(cls[y]);
        return out;
    };
    std::vector<Element> add(k * k);
    std::vector<ElementSet> mul(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            add[i * k + j] = cls[a->add(rep[i], rep[j])];
            mul[i * k + j] = image(a->mul(rep[i], rep[j]));
        }
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (add[cls[x] * k + cls[y]] != cls[a->add(x, y)] ||
                mul[cls[x] * k + cls[y]] != image(a->mul(x, y)))
                throw ConstructionError("quotient by " + to_string(p.members) +
                                        " depends on representatives at " + pair_text(x, y));
        }
    auto ring = std::make_shared<const FiniteHyperring>(k, cls[a->zero()], std::move(add),
                                                        std::move(mul),
                                                        a->label() + "/" + to_string(p.members));
    require_valid(*ring, true, ring->label());
    q.ring = ring;
    q.projection = {a, ring, cls};
    return q;
}

Element encode_matrix(std::size_t n, std::span<const Element> entries) {
    std::size_t x = 0;
    for (std::size_t i = entries.size(); i-- > 0;) x = x * n + entries[i];
    return static_cast<Element>(x);
}

std::vector<Element> decode_matrix(std::size_t n, unsigned m, Element x) {
    std::vector<Element> out(std::size_t{m} * m);
    for (auto& e : out) {
        e = static_cast<Element>(x % n);
        x = static_cast<Element>(x / n);
    }
    return out;
}

Element corner_matrix(const FiniteHyperring& a, unsigned m, Element x) {
    std::vector<Element> entries(std::size_t{m} * m, a.zero());
    entries[0] = x;
    return encode_matrix(a.size(), entries);
}

FiniteHyperring matrix_hyperring(const FiniteHyperring& a, unsigned m, std::size_t cap,
                                 bool validate_result) {
    if (m < 1) throw ParameterError("matrix size must be at least 1");
    const std::size_t n = a.size();
    const std::size_t cells = std::size_t{m} * m;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        total *= n;
        if (total > cap || total > kMaxCarrier)
            throw ResourceError("M_" + std::to_string(m) + " over " + std::to_string(n) +
                                " elements exceeds the cap of " + std::to_string(cap));
    }
    std::vector<std::vector<Element>> dec(total);
    for (std::size_t x = 0; x < total; ++x) dec[x] = decode_matrix(n, m, static_cast<Element>(x));

    std::vector<Element> add(total * total);
    std::vector<ElementSet> mul(total * total);
    std::vector<Element> entries(cells);
    std::vector<std::vector<Element>> choices(cells);
    for (std::size_t x = 0; x < total; ++x)
        for (std::size_t y = 0; y < total; ++y) {
            for (std::size_t c = 0; c < cells; ++c) entries[c] = a.add(dec[x][c], dec[y][c]);
            add[x * total + y] = encode_matrix(n, entries);

            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) {
                    ElementSet acc = a.mul(dec[x][i * m], dec[y][j]);
                    for (unsigned k = 1; k < m; ++k)
                        acc = a.sum(acc, a.mul(dec[x][i * m + k], dec[y][k * m + j]));
                    choices[i * m + j] = acc.to_vector();
                }
            // Every combination of entry choices.
            ElementSet product;
            std::vector<std::size_t> pos(cells, 0);
            while (true) {
                for (std::size_t c = 0; c < cells; ++c) entries[c] = choices[c][pos[c]];
                product.insert(encode_matrix(n, entries));
                std::size_t c = 0;
                while (c < cells && ++pos[c] == choices[c].size()) pos[c++] = 0;
                if (c == cells) break;
            }
            mul[x * total + y] = product;
        }
    std::vector<Element> zeros(cells, a.zero());
    FiniteHyperring ring(total, encode_matrix(n, zeros), std::move(add), std::move(mul),
                         "M" + std::to_string(m) + "(" + a.label() + ")");
    if (validate_result) require_valid(ring, false, ring.label());
    return ring;
}

HyperIdeal embed_diagonal_ideal(const FiniteHyperring& a, const FiniteHyperring& ma,
                                const HyperIdeal& p, unsigned m) {
    ElementSet members;
    const auto total = static_cast<Element>(ma.size());
    for (Element x = 0; x < total; ++x) {
        const std::vector<Element> e = decode_matrix(a.size(), m, x);
        if (std::all_of(e.begin(), e.end(), [&](Element v) { return p.members.contains(v); }))
            members.insert(x);
    }
    if (!is_hyperideal(ma, members))
        throw ConstructionError("M_" + std::to_string(m) + "(" + to_string(p.members) +
                                ") is not a hyperideal");
    for (Element r = 0; r < total; ++r)
        for (Element x : members)
            if (!ma.mul(x, r).subset_of(members))
                throw ConstructionError("M_" + std::to_string(m) + "(" + to_string(p.members) +
                                        ") does not absorb on the right at " + pair_text(x, r));
    return HyperIdeal{members};
}

bool is_mcs(const FiniteHyperring& ring, const ElementSet& s) {
    if (!s.intersects(unit_report(ring).identities)) return false;
    for (Element a : s)
        for (Element b : s)
            if (!ring.mul(a, b).subset_of(s)) return false;
    return true;
}

ElementSet mcs_closure(const FiniteHyperring& ring, Element e, const ElementSet& s) {
    ElementSet out = s;
    out.insert(e);
    while (true) {
        ElementSet next = out;
        for (Element a : out)
            for (Element b : out) next |= ring.mul(a, b);
        if (next == out) return out;
        out = next;
    }
}

std::vector<ElementSet> candidate_mcs(const FiniteHyperring& ring, const IdealLattice& lattice) {
    const UnitReport units = unit_report(ring);
    std::vector<ElementSet> out;
    auto push = [&](const ElementSet& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    const auto n = static_cast<Element>(ring.size());
    for (Element e : units.identities) {
        push(mcs_closure(ring, e, {}));
        for (Element g = 0; g < n; ++g) push(mcs_closure(ring, e, ElementSet::singleton(g)));
        push(mcs_closure(ring, e, units.units));
        for (std::size_t qi : lattice.primes) {
            const ElementSet rest = ring.carrier() - lattice.all[qi].members;
            if (rest.contains(e) && is_mcs(ring, rest)) push(rest);
        }
    }
    return out;
}

Element LocalizedRing::fraction(Element x, Element r) const {
    return class_of[x * pi.source->size() + r];
}

ElementSet LocalizedRing::localize_set(const ElementSet& b) const {
    ElementSet out;
    for (Element x : b)
        for (Element r : s) out.insert(fraction(x, r));
    return out;
}

LocalizedRing localize(const RingPtr& a, const ElementSet& s) {
    if (!s.subset_of(a->carrier()) || !is_mcs(*a, s))
        throw UsageError(to_string(s) + " is not a multiplicative closed subset of " + a->label());
    const FiniteHyperring& A = *a;
    const auto n = static_cast<Element>(A.size());
    const std::vector<Element> sv = s.to_vector();
    const std::size_t k = sv.size();
    const Element one = (s & unit_report(A).identities).first();

    // t o a o b for t, a in S and b in A.
    std::vector<ElementSet> tab(k * k * n);
    for (std::size_t ti = 0; ti < k; ++ti)
        for (std::size_t ai = 0; ai < k; ++ai)
            for (Element b = 0; b < n; ++b)
                tab[(ti * k + ai) * n + b] = A.mul(A.mul(sv[ti], sv[ai]), b);

    // Pairs (x, S[ri]) indexed x * k + ri.
    const std::size_t np = std::size_t{n} * k;
    std::vector<char> rel(np * np, 0);
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t q = p; q < np; ++q) {
            const Element x = static_cast<Element>(p / k), y = static_cast<Element>(q / k);
            const std::size_t ri = p % k, si = q % k;
            bool related = false;
            for (std::size_t ti = 0; ti < k && !related; ++ti)
                related = tab[(ti * k + ri) * n + y] == tab[(ti * k + si) * n + x];
            rel[p * np + q] = rel[q * np + p] = related ? 1 : 0;
        }
    auto text = [&](std::size_t p) { return pair_text(static_cast<Element>(p / k), sv[p % k]); };
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t q = 0; q < np; ++q) {
            if (!rel[p * np + q]) continue;
            for (std::size_t r = 0; r < np; ++r)
                if (rel[q * np + r] && !rel[p * np + r])
                    throw ConstructionError("fraction relation is not transitive: " + text(p) +
                                            " ~ " + text(q) + " ~ " + text(r) + " but " +
                                            text(p) + " !~ " + text(r));
        }

    std::vector<Element> cls(np, kMaxCarrier);
    Element classes = 0;
    for (std::size_t p = 0; p < np; ++p) {
        if (cls[p] != kMaxCarrier) continue;
        if (classes == kMaxCarrier) throw ResourceError("too many fraction classes");
        for (std::size_t q = p; q < np; ++q)
            if (rel[p * np + q]) cls[q] = classes;
        ++classes;
    }
    std::vector<std::size_t> index_of(n, k);
    for (std::size_t i = 0; i < k; ++i) index_of[sv[i]] = i;
    auto frac = [&](Element x, Element r) { return cls[x * k + index_of[r]]; };

    std::vector<Element> add(std::size_t{classes} * classes, kMaxCarrier);
    std::vector<ElementSet> mul(std::size_t{classes} * classes);
    std::vector<char> seen(std::size_t{classes} * classes, 0);
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t q = 0; q < np; ++q) {
            const Element x = static_cast<Element>(p / k), y = static_cast<Element>(q / k);
            const Element r = sv[p % k], t = sv[q % k];
            const ElementSet denominators = A.mul(r, t);
            ElementSet sum;
            for (Element a1 : A.mul(r, y))
                for (Element b1 : A.mul(t, x))
                    for (Element c : denominators) sum.insert(frac(A.add(a1, b1), c));
            ElementSet product;
            for (Element a1 : A.mul(x, y))
                for (Element c : denominators) product.insert(frac(a1, c));
            if (sum.size() != 1)
                throw ConstructionError("sum of fractions " + text(p) + " + " + text(q) + " spans " +
                                        std::to_string(sum.size()) + " classes");
            const std::size_t cell = std::size_t{cls[p]} * classes + cls[q];
            if (!seen[cell]) {
                seen[cell] = 1;
                add[cell] = sum.first();
                mul[cell] = product;
            } else if (add[cell] != sum.first() || mul[cell] != product) {
                throw ConstructionError("fraction operations depend on representatives at " +
                                        text(p) + ", " + text(q));
            }
        }

    LocalizedRing loc;
    loc.s = s;
    loc.one = one;
    loc.class_of.assign(std::size_t{n} * n, kMaxCarrier);
    for (Element x = 0; x < n; ++x)
        for (Element r : s) loc.class_of[x * n + r] = frac(x, r);
    auto ring = std::make_shared<const FiniteHyperring>(classes, frac(A.zero(), one), std::move(add),
                                                        std::move(mul),
                                                        A.label() + "[S=" + to_list(s) + "]");
    require_valid(*ring, true, ring->label());
    std::vector<Element> map(n);
    for (Element x = 0; x < n; ++x) map[x] = frac(x, one);
    loc.ring = ring;
    loc.pi = {a, ring, std::move(map)};
    return loc;
}

ElementSet gamma_set(const FiniteHyperring& ring, const ElementSet& p) {
    ElementSet out;
    const auto n = static_cast<Element>(ring.size());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (!p.contains(b) && ring.mul(a, b).subset_of(p)) {
                out.insert(a);
                break;
            }
    return out;
}

namespace {

struct IdealFacts {
    bool c = false;
    bool uv = false;
    bool inconclusive = false;
    std::string detail;
};

IdealFacts facts(const FiniteHyperring& ring, const ElementSet& members, UVParams uv) {
    IdealFacts f;
    if (!is_hyperideal(ring, members)) {
        f.detail = to_string(members) + " is not a hyperideal";
        return f;
    }
    const HyperIdeal ideal{members};
    if (!ideal.proper(ring)) {
        f.detail = "the whole ring";
        return f;
    }
    const IdealLattice lattice = enumerate_hyperideals(ring);
    const ElementSet rad = radical_prime_intersection(ring, lattice, ideal);
    const Verdict c = is_C_hyperideal(ring, members);
    const Verdict a = is_uv_absorbing_primary(ring, ideal, rad, uv);
    f.c = c.holds();
    f.uv = a.holds();
    f.inconclusive = c.status == Status::inconclusive || a.status == Status::inconclusive;
    if (c.fails()) f.detail = "not C: " + render_witness(*c.witness);
    else if (a.fails()) f.detail = "not absorbing primary: " + render_witness(*a.witness);
    return f;
}

std::optional<std::string> nonunit_gate(const GoodHom& h) {
    const ElementSet source_nonunits = unit_report(*h.source).nonunits;
    const ElementSet target_units = unit_report(*h.target).units;
    for (Element x : source_nonunits)
        if (target_units.contains(h(x)))
            return "nonunit " + std::to_string(x) + " maps to the unit " + std::to_string(h(x));
    return std::nullopt;
}

TransferResult transfer(const ElementSet& from_members, const FiniteHyperring& from,
                        const ElementSet& to_members, const FiniteHyperring& to, UVParams uv) {
    TransferResult r;
    r.transported = to_members;
    const IdealFacts before = facts(from, from_members, uv);
    r.hypothesis = before.c && before.uv;
    if (!r.hypothesis) {
        r.inconclusive = before.inconclusive;
        r.detail = before.detail;
        return r;
    }
    const IdealFacts after = facts(to, to_members, uv);
    r.conclusion = after.c && after.uv;
    r.inconclusive = after.inconclusive;
    r.detail = after.detail;
    return r;
}

}  // namespace

TransferResult transfer_preimage(const GoodHom& h, const HyperIdeal& p2, UVParams uv) {
    uv.check();
    if (auto gate = nonunit_gate(h)) {
        TransferResult r;
        r.skipped = *gate;
        return r;
    }
    return transfer(p2.members, *h.target, h.preimage(p2.members), *h.source, uv);
}

TransferResult transfer_image(const GoodHom& h, const HyperIdeal& p1, UVParams uv) {
    uv.check();
    TransferResult r;
    if (auto gate = nonunit_gate(h)) r.skipped = *gate;
    else if (!h.surjective()) r.skipped = "not surjective";
    else if (!h.kernel().subset_of(p1.members)) r.skipped = "kernel not inside P";
    if (r.skipped) return r;
    return transfer(p1.members, *h.source, h.image(p1.members), *h.target, uv);
}

}  // namespace hyperlab
