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

#include "hyperlab/ideals.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace hyperlab {

namespace {

/// Union of r o x over all r.
ElementSet absorb(const FiniteHyperring& ring, const ElementSet& s) {
    ElementSet out;
    const auto n = static_cast<Element>(ring.size());
    for (Element x : s)
        for (Element r = 0; r < n; ++r) out |= ring.mul(r, x);
    return out;
}

/// Additive subgroup generated by `s` (finite, so closing under + suffices
/// once zero and negatives are added).
ElementSet additive_closure(const FiniteHyperring& ring, ElementSet s) {
    s.insert(ring.zero());
    std::vector<Element> members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
        const Element a = members[i];
        if (!s.contains(ring.neg(a))) {
            s.insert(ring.neg(a));
            members.push_back(ring.neg(a));
        }
        for (std::size_t j = 0; j <= i; ++j) {
            const Element c = ring.add(a, members[j]);
            if (!s.contains(c)) {
                s.insert(c);
                members.push_back(c);
            }
        }
    }
    return s;
}

}  // namespace

bool is_hyperideal(const FiniteHyperring& ring, const ElementSet& s) {
    if (s.empty() || !s.subset_of(ring.carrier())) return false;
    for (Element a : s)
        for (Element b : s)
            if (!s.contains(ring.sub(a, b))) return false;
    return absorb(ring, s).subset_of(s);
}

HyperIdeal HyperIdeal::checked(const FiniteHyperring& ring, const ElementSet& members) {
    if (!is_hyperideal(ring, members))
        throw UsageError(to_string(members) + " is not a hyperideal of " + ring.label());
    return HyperIdeal{members};
}

HyperIdeal generate(const FiniteHyperring& ring, const ElementSet& s) {
    ElementSet current = additive_closure(ring, s);
    while (true) {
        ElementSet next = additive_closure(ring, current | absorb(ring, current));
        if (next == current) return HyperIdeal{current};
        current = next;
    }
}

std::optional<std::size_t> IdealLattice::index_of(const ElementSet& members) const {
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].members == members) return i;
    return std::nullopt;
}

bool IdealLattice::is_prime(std::size_t i) const {
    return std::find(primes.begin(), primes.end(), i) != primes.end();
}

bool IdealLattice::is_maximal(std::size_t i) const {
    return std::find(maximals.begin(), maximals.end(), i) != maximals.end();
}

bool is_prime_ideal(const FiniteHyperring& ring, const ElementSet& p) {
    if (p == ring.carrier()) return false;
    const auto n = static_cast<Element>(ring.size());
    for (Element x = 0; x < n; ++x) {
        if (p.contains(x)) continue;
        for (Element y = x; y < n; ++y)
            if (!p.contains(y) && ring.mul(x, y).subset_of(p)) return false;
    }
    return true;
}

IdealLattice enumerate_hyperideals(const FiniteHyperring& ring) {
    IdealLattice lattice;
    const auto n = static_cast<Element>(ring.size());

    // Every hyperideal is generated by finitely many elements, so adding one
    // generator at a time from <0> reaches all of them.
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::deque<ElementSet> queue;
    ElementSet bottom = generate(ring, {}).members;
    seen.insert(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
        ElementSet cur = queue.front();
        queue.pop_front();
        for (Element g = 0; g < n; ++g) {
            if (cur.contains(g)) continue;
            ElementSet with = cur;
            with.insert(g);
            ElementSet next = generate(ring, with).members;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }

    std::vector<ElementSet> sets(seen.begin(), seen.end());
    std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto& s : sets) lattice.all.push_back(HyperIdeal{s});

    const ElementSet carrier = ring.carrier();
    for (std::size_t i = 0; i < lattice.all.size(); ++i) {
        const ElementSet& p = lattice.all[i].members;
        if (p == carrier) continue;
        if (is_prime_ideal(ring, p)) lattice.primes.push_back(i);
        bool maximal = true;
        for (std::size_t j = 0; j < lattice.all.size() && maximal; ++j) {
            const ElementSet& q = lattice.all[j].members;
            if (q != carrier && q != p && p.subset_of(q)) maximal = false;
        }
        if (maximal) lattice.maximals.push_back(i);
    }
    lattice.jacobson = carrier;
    for (std::size_t i : lattice.maximals) lattice.jacobson &= lattice.all[i].members;
    lattice.local = lattice.maximals.size() == 1;
    return lattice;
}

HyperIdeal colon(const FiniteHyperring& ring, const HyperIdeal& b2, const ElementSet& b1) {
    ElementSet out;
    const auto n = static_cast<Element>(ring.size());
    for (Element a = 0; a < n; ++a) {
        bool inside = true;
        for (Element b : b1) {
            if (!ring.mul(a, b).subset_of(b2.members)) {
                inside = false;
                break;
            }
        }
        if (inside) out.insert(a);
    }
    return HyperIdeal{out};
}

ElementSet radical_prime_intersection(const FiniteHyperring& ring, const IdealLattice& lattice,
                                      const HyperIdeal& b) {
    ElementSet out = ring.carrier();
    for (std::size_t i : lattice.primes)
        if (b.members.subset_of(lattice.all[i].members)) out &= lattice.all[i].members;
    return out;
}

ElementSet radical_nilpotent(const FiniteHyperring& ring, const ElementSet& b) {
    ElementSet out;
    const auto n = static_cast<Element>(ring.size());
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Element a = 0; a < n; ++a) {
        seen.clear();
        ElementSet power = ElementSet::singleton(a);
        // a^(k+1) depends only on a^k, so a repeated power closes the orbit.
        while (seen.insert(power).second) {
            if (power.subset_of(b)) {
                out.insert(a);
                break;
            }
            power = ring.mul(power, a);
        }
    }
    return out;
}

std::vector<Element> ProductFamily::tuple(std::size_t index) const {
    std::vector<Element> out;
    auto i = static_cast<std::int64_t>(index);
    while (i >= 0) {
        out.push_back(nodes[static_cast<std::size_t>(i)].factor);
        i = nodes[static_cast<std::size_t>(i)].parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

ProductFamily product_family(const FiniteHyperring& ring, std::size_t budget) {
    ProductFamily fam;
    const auto n = static_cast<Element>(ring.size());
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    for (Element a = 0; a < n; ++a) {
        ElementSet s = ElementSet::singleton(a);
        index.emplace(s, fam.nodes.size());
        fam.nodes.push_back({s, -1, a});
    }
    for (std::size_t i = 0; i < fam.nodes.size(); ++i) {
        for (Element a = 0; a < n; ++a) {
            ElementSet next = ring.mul(fam.nodes[i].set, a);
            if (index.contains(next)) continue;
            if (fam.nodes.size() >= budget) {
                fam.complete = false;
                return fam;
            }
            index.emplace(next, fam.nodes.size());
            fam.nodes.push_back({next, static_cast<std::int64_t>(i), a});
        }
    }
    return fam;
}

Verdict is_C_hyperideal(const ProductFamily& family, const ElementSet& b) {
    const std::string space = "product family of " + std::to_string(family.nodes.size()) +
                              (family.complete ? " sets (closed)" : " sets (budget hit)");
    std::uint64_t tested = 0;
    for (std::size_t i = 0; i < family.nodes.size(); ++i) {
        const ElementSet& s = family.nodes[i].set;
        if (!s.intersects(b)) continue;
        ++tested;
        if (!s.subset_of(b))
            return Verdict::fail({{family.tuple(i)}, "product meets the ideal but is not inside it"},
                                 space, tested);
    }
    if (!family.complete) return Verdict::inconclusive(space);
    return Verdict::pass(space, tested);
}

Verdict is_C_hyperideal(const FiniteHyperring& ring, const ElementSet& b) {
    return is_C_hyperideal(product_family(ring), b);
}

Verdict is_strong_C_hyperideal(const FiniteHyperring& ring, const ProductFamily& family,
                               const ElementSet& b) {
    // If some product set X has g, h in different cosets of B, then either X
    // already mixes B with its complement, or k copies of X (k the order of
    // g + B) sum to a set holding k*g in B and (k-1)*g + h outside B.
    // Conversely, single-coset products only ever sum to single cosets.
    const std::string space = "product family of " + std::to_string(family.nodes.size()) +
                              " sets, coset criterion";
    std::uint64_t tested = 0;
    for (std::size_t i = 0; i < family.nodes.size(); ++i) {
        const ElementSet& s = family.nodes[i].set;
        ++tested;
        const Element g = s.first();
        for (Element h : s) {
            if (b.contains(ring.sub(h, g))) continue;
            std::vector<Element> tuple = family.tuple(i);
            if (b.contains(g) || b.contains(h))
                return Verdict::fail({{tuple}, "product meets the ideal but is not inside it"},
                                     space, tested);
            std::size_t k = 1;
            for (Element multiple = g; !b.contains(multiple); multiple = ring.add(multiple, g)) ++k;
            Witness w;
            w.parts.assign(k, tuple);
            w.clause = "sum of " + std::to_string(k) + " copies meets the ideal but is not inside it";
            return Verdict::fail(std::move(w), space, tested);
        }
    }
    if (!family.complete) return Verdict::inconclusive(space);
    return Verdict::pass(space, tested);
}

Verdict is_strong_C_hyperideal(const FiniteHyperring& ring, const ElementSet& b) {
    return is_strong_C_hyperideal(ring, product_family(ring), b);
}

ElementSet witness_sum(const FiniteHyperring& ring, const Witness& w) {
    ElementSet acc = ElementSet::singleton(ring.zero());
    for (const auto& part : w.parts) acc = ring.sum(acc, ring.hyperproduct(part));
    return acc;
}

HyperIdeal ideal_product(const FiniteHyperring& ring, const HyperIdeal& p, const HyperIdeal& q) {
    return generate(ring, ring.mul(p.members, q.members));
}

}  // namespace hyperlab
