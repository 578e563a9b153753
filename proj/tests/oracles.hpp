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

// Brute-force reference implementations. They follow the definitions
// directly and share no code with the library beyond the ring tables.

#ifndef HYPERLAB_TESTS_ORACLES_HPP
#define HYPERLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <functional>
#include <vector>

#include "hyperlab/hyperring.hpp"

namespace oracle {

using hyperlab::Element;
using hyperlab::ElementSet;
using hyperlab::FiniteHyperring;

inline ElementSet fold(const FiniteHyperring& r, const std::vector<Element>& xs) {
    ElementSet acc = ElementSet::singleton(xs.at(0));
    for (std::size_t i = 1; i < xs.size(); ++i) {
        ElementSet next;
        for (Element a : acc) next |= r.mul(a, xs[i]);
        acc = next;
    }
    return acc;
}

inline bool is_ideal(const FiniteHyperring& r, const ElementSet& s) {
    if (s.empty()) return false;
    const auto n = static_cast<Element>(r.size());
    for (Element a : s)
        for (Element b : s) {
            // a - b: the c with b + c = a.
            bool found = false;
            for (Element c = 0; c < n; ++c)
                if (r.add(b, c) == a) found = found || s.contains(c);
            if (!found) return false;
        }
    for (Element x : s)
        for (Element y = 0; y < n; ++y)
            if (!r.mul(y, x).subset_of(s)) return false;
    return true;
}

inline std::vector<ElementSet> all_ideals(const FiniteHyperring& r) {
    std::vector<ElementSet> out;
    const std::size_t n = r.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        ElementSet s;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) s.insert(static_cast<Element>(i));
        if (is_ideal(r, s)) out.push_back(s);
    }
    return out;
}

inline bool is_prime(const FiniteHyperring& r, const ElementSet& p) {
    if (p == r.carrier()) return false;
    const auto n = static_cast<Element>(r.size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (r.mul(x, y).subset_of(p) && !p.contains(x) && !p.contains(y)) return false;
    return true;
}

inline ElementSet rad_prime(const FiniteHyperring& r, const ElementSet& b) {
    ElementSet out = r.carrier();
    for (const ElementSet& p : all_ideals(r))
        if (b.subset_of(p) && is_prime(r, p)) out &= p;
    return out;
}

inline ElementSet rad_nil(const FiniteHyperring& r, const ElementSet& b) {
    ElementSet out;
    for (Element a : r.carrier()) {
        ElementSet pw = ElementSet::singleton(a);
        for (int k = 0; k < 300; ++k) {
            if (pw.subset_of(b)) {
                out.insert(a);
                break;
            }
            ElementSet next;
            for (Element x : pw) next |= r.mul(x, a);
            pw = next;
        }
    }
    return out;
}

inline ElementSet identities(const FiniteHyperring& r) {
    ElementSet out;
    for (Element e : r.carrier()) {
        bool ok = true;
        for (Element a : r.carrier()) ok = ok && r.mul(e, a).contains(a);
        if (ok) out.insert(e);
    }
    return out;
}

inline ElementSet nonunits(const FiniteHyperring& r) {
    const ElementSet ids = identities(r);
    ElementSet out;
    for (Element x : r.carrier()) {
        bool unit = false;
        for (Element y : r.carrier()) unit = unit || r.mul(y, x).intersects(ids);
        if (!unit) out.insert(x);
    }
    return out;
}

/// For every ordered u-tuple of nonunits with product inside P, the first v
/// factors multiply into P or the other u - v into `rad` (into P for the
/// prime variant). Ranging over all orderings makes that every choice of v
/// positions.
inline bool uv_absorbing(const FiniteHyperring& r, const ElementSet& p, const ElementSet& rad,
                         unsigned u, unsigned v, bool prime, const ElementSet& avoid = {}) {
    const std::vector<Element> dom = nonunits(r).to_vector();
    if (dom.empty()) return true;
    std::vector<Element> t(u);
    std::function<bool(unsigned)> rec = [&](unsigned i) -> bool {
        if (i == u) {
            const ElementSet prod = fold(r, t);
            if (!prod.subset_of(p) || (!avoid.empty() && prod.subset_of(avoid))) return true;
            for (unsigned mask = 0; mask < (1U << u); ++mask) {
                if (static_cast<unsigned>(std::popcount(mask)) != v) continue;
                std::vector<Element> in, out;
                for (unsigned j = 0; j < u; ++j) ((mask >> j) & 1U ? in : out).push_back(t[j]);
                if (!fold(r, in).subset_of(p) && !fold(r, out).subset_of(prime ? p : rad))
                    return false;
            }
            return true;
        }
        for (Element x : dom) {
            t[i] = x;
            if (!rec(i + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

/// Products of at most `len` factors that meet B without lying inside it.
inline bool c_bounded(const FiniteHyperring& r, const ElementSet& b, unsigned len) {
    std::vector<Element> t;
    std::function<bool(unsigned)> rec = [&](unsigned k) -> bool {
        if (k > 0) {
            const ElementSet e = fold(r, t);
            if (e.intersects(b) && !e.subset_of(b)) return false;
        }
        if (k == len) return true;
        for (Element x : r.carrier()) {
            t.push_back(x);
            const bool ok = rec(k + 1);
            t.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(0);
}

/// Sums of two products of at most `len` factors each.
inline bool strong_c_bounded(const FiniteHyperring& r, const ElementSet& b, unsigned len) {
    std::vector<ElementSet> prods;
    std::vector<Element> t;
    std::function<void(unsigned)> rec = [&](unsigned k) {
        if (k > 0) prods.push_back(fold(r, t));
        if (k == len) return;
        for (Element x : r.carrier()) {
            t.push_back(x);
            rec(k + 1);
            t.pop_back();
        }
    };
    rec(0);
    std::sort(prods.begin(), prods.end());
    prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
    for (const ElementSet& e : prods) {
        if (e.intersects(b) && !e.subset_of(b)) return false;
        for (const ElementSet& f : prods) {
            const ElementSet s = r.sum(e, f);
            if (s.intersects(b) && !s.subset_of(b)) return false;
        }
    }
    return true;
}

}  // namespace oracle

#endif  // HYPERLAB_TESTS_ORACLES_HPP
