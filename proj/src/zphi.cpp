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

#include "hyperlab/zphi.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace hyperlab::zphi {

namespace {

unsigned valuation(long long x, long long p) {
    unsigned v = 0;
    if (x == 0) return 64;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::vector<std::pair<long long, unsigned>> factorize(long long d) {
    std::vector<std::pair<long long, unsigned>> out;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        unsigned e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (d > 1) out.emplace_back(d, 1);
    return out;
}

std::uint64_t residue(long long x, long long d) {
    const long long r = x % d;
    return static_cast<std::uint64_t>(r < 0 ? r + d : r);
}

}  // namespace

ZPhiRing::ZPhiRing(std::vector<long long> phi, UnitConvention units)
    : phi_(std::move(phi)), units_(units) {
    if (phi_.size() < 2) throw ParameterError("Phi needs at least two entries");
    std::vector<long long> sorted = phi_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParameterError("Phi has a duplicate entry");
    if (sorted.front() <= 0 && sorted.back() >= 0 &&
        std::binary_search(sorted.begin(), sorted.end(), 0LL))
        throw ParameterError("Phi entries must be nonzero");
}

std::optional<long long> ZPhiRing::identity() const {
    // a in e o a for a = 1 needs e*x = 1 for some x in Phi.
    for (long long x : phi_)
        if (x == 1 || x == -1) return x;
    return std::nullopt;
}

bool ZPhiRing::is_unit(long long a) const {
    if (units_ == UnitConvention::integer) return a == 1 || a == -1;
    const auto e = identity();
    if (!e) return false;
    // y*x*a = e forces |a| = 1; y = e*a*x then works for x = e.
    return a == 1 || a == -1;
}

IntProductSet int_product(const ZPhiRing& ring, std::span<const long long> xs) {
    if (xs.empty()) throw UsageError("empty product");
    IntProductSet current{BigInt(xs[0])};
    for (std::size_t i = 1; i < xs.size(); ++i) {
        IntProductSet next;
        for (const BigInt& c : current)
            for (long long x : ring.phi()) next.insert(c * x * xs[i]);
        current = std::move(next);
    }
    return current;
}

std::string_view to_string(Membership m) {
    switch (m) {
        case Membership::subset: return "subset";
        case Membership::disjoint: return "disjoint";
        case Membership::mixed: return "mixed";
    }
    return "unknown";
}

Membership principal_membership(long long d, const IntProductSet& s) {
    if (d < 1) throw UsageError("generator must be positive");
    std::size_t inside = 0;
    for (const BigInt& x : s)
        if (x % d == 0) ++inside;
    if (inside == s.size()) return Membership::subset;
    return inside == 0 ? Membership::disjoint : Membership::mixed;
}

long long RadicalProfile::radical_generator() const {
    long long r = 1;
    for (const auto& entry : primes)
        if (entry.m == 0) r *= entry.p;
    return r;
}

RadicalProfile radical_profile(const ZPhiRing& ring, long long d) {
    if (d < 1) throw UsageError("generator must be positive");
    RadicalProfile prof;
    for (const auto& [p, e] : factorize(d)) {
        unsigned m = 64;
        for (long long x : ring.phi()) m = std::min(m, valuation(x, p));
        prof.primes.push_back({p, e, m});
    }
    return prof;
}

bool radical_membership(const ZPhiRing& ring, long long d, long long a) {
    if (a == 0) return true;
    for (const auto& entry : radical_profile(ring, d).primes)
        if (valuation(a, entry.p) + entry.m < 1) return false;
    return true;
}

bool radical_membership_by_powers(const ZPhiRing& ring, long long d, long long a,
                                  unsigned n_max) {
    if (d < 1) throw UsageError("generator must be positive");
    IntProductSet power{BigInt(a)};
    for (unsigned n = 1; n <= n_max; ++n) {
        if (principal_membership(d, power) == Membership::subset) return true;
        IntProductSet next;
        for (const BigInt& c : power)
            for (long long x : ring.phi()) next.insert(c * x * a);
        power = std::move(next);
    }
    return false;
}

IntVerdict bounded_uv_check(const ZPhiRing& ring, long long d, UVParams uv, long long window,
                            Absorbing kind, std::uint64_t budget) {
    uv.check();
    if (d < 1) throw UsageError("generator must be positive");
    if (d == 1) throw UsageError("the ideal must be proper");
    if (window < 2) throw ParameterError("window must be at least 2");
    if (uv.u > 16) throw ParameterError("u above 16 is not supported");

    std::vector<long long> dom;
    for (long long x = 1; x <= window; ++x)
        if (!ring.is_unit(x)) dom.push_back(x);
    const std::size_t k = dom.size();
    const unsigned u = uv.u;
    const std::string space = "nonunit multisets of " + std::to_string(u) + " over [1, " +
                              std::to_string(window) + "]";

    // Residues mod d of the Phi-products that pad a k-fold product.
    std::vector<std::vector<std::uint64_t>> pads(u + 1);
    {
        std::set<std::uint64_t> level{1};
        for (unsigned len = 1; len <= u; ++len) {
            pads[len].assign(level.begin(), level.end());
            std::set<std::uint64_t> next;
            for (std::uint64_t w : level)
                for (long long x : ring.phi())
                    next.insert(static_cast<std::uint64_t>(
                        (static_cast<unsigned __int128>(w) * residue(x, d)) %
                        static_cast<std::uint64_t>(d)));
            level = std::move(next);
        }
    }
    const auto ud = static_cast<std::uint64_t>(d);
    const auto rad = static_cast<std::uint64_t>(radical_profile(ring, d).radical_generator());
    const std::uint64_t bound = kind == Absorbing::primary ? rad : ud;
    // Every value of the product (residue r, len factors) lies in qZ.
    auto inside = [&](std::uint64_t r, unsigned len, std::uint64_t q) {
        for (std::uint64_t w : pads[len])
            if (static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * w) % ud) % q != 0)
                return false;
        return true;
    };

    std::vector<unsigned> masks;
    for (unsigned m = 1; m + 1 < (1U << u); ++m)
        if (static_cast<unsigned>(std::popcount(m)) == uv.v) masks.push_back(m);

    std::vector<std::size_t> idx(u);
    std::vector<std::uint64_t> prod(std::size_t{1} << u);
    std::uint64_t visited = 0;
    std::uint64_t tested = 0;
    std::optional<IntWitness> found;

    // Prefix positions 0..u-2 range over entries up to the largest, which sits
    // at position u-1.
    std::function<bool(unsigned, std::size_t, std::size_t)> descend =
        [&](unsigned depth, std::size_t start, std::size_t top) -> bool {
        const unsigned bit = 1U << depth;
        const std::size_t first = depth + 1 == u ? top : start;
        for (std::size_t i = first; i <= top; ++i) {
            idx[depth] = i;
            prod[bit] = residue(dom[i], d);
            for (unsigned m = 1; m < bit; ++m)
                prod[m | bit] = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(prod[m]) * prod[bit]) % ud);
            if (depth + 1 < u) {
                if (descend(depth + 1, i, top)) return true;
                continue;
            }
            if (++visited > budget) return true;
            const unsigned full = (1U << u) - 1;
            if (!inside(prod[full], u, ud)) continue;
            ++tested;
            for (unsigned mask : masks) {
                if (inside(prod[mask], uv.v, ud)) continue;
                if (inside(prod[full ^ mask], u - uv.v, bound)) continue;
                IntWitness w;
                w.parts.resize(2);
                for (unsigned j = 0; j < u; ++j)
                    w.parts[(mask >> j) & 1U ? 0 : 1].push_back(dom[idx[j]]);
                w.clause = kind == Absorbing::primary
                               ? "leading product escapes P, remainder escapes rad(P)"
                               : "leading product escapes P, remainder escapes P";
                found = std::move(w);
                return true;
            }
        }
        return false;
    };
    for (std::size_t top = 0; top < k && !found && visited <= budget; ++top)
        descend(0, 0, top);

    if (found) return IntVerdict::fail(std::move(*found), space, tested);
    IntVerdict out = IntVerdict::inconclusive(
        visited > budget ? space + ", over budget" : space + ", no counterexample");
    out.tested = tested;
    return out;
}

bool replay(const ZPhiRing& ring, long long d, Absorbing kind, const IntWitness& w) {
    if (w.parts.size() != 2 || w.parts[0].empty() || w.parts[1].empty()) return false;
    for (long long x : w.flat())
        if (ring.is_unit(x)) return false;
    const std::vector<long long> all = w.flat();
    if (principal_membership(d, int_product(ring, all)) != Membership::subset) return false;
    if (principal_membership(d, int_product(ring, w.parts[0])) == Membership::subset) return false;
    const IntProductSet rest = int_product(ring, w.parts[1]);
    if (kind == Absorbing::prime) return principal_membership(d, rest) != Membership::subset;
    for (const BigInt& x : rest) {
        // x lies in rad(dZ) iff some power of x does; test with the power oracle.
        if (x > BigInt(std::numeric_limits<long long>::max()) ||
            x < BigInt(std::numeric_limits<long long>::min() + 1))
            return false;
        if (!radical_membership_by_powers(ring, d, x.convert_to<long long>())) return true;
    }
    return false;
}

long long ideal_intersection(std::span<const long long> ds) {
    if (ds.empty()) throw UsageError("empty generator list");
    long long out = 1;
    for (long long d : ds) {
        if (d < 1) throw UsageError("generators must be positive");
        out = std::lcm(out, d);
    }
    return out;
}

std::vector<long long> windowed_closure(const ZPhiRing& ring, long long d, long long window) {
    std::set<long long> s{0, d};
    auto in_window = [&](const BigInt& x) { return x >= -window && x <= window; };
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<long long> cur(s.begin(), s.end());
        for (long long a : cur)
            for (long long b : cur)
                if (in_window(BigInt(a) - b) && s.insert(a - b).second) grew = true;
        for (long long x : cur)
            for (long long r = -window; r <= window; ++r)
                for (long long f : ring.phi()) {
                    const BigInt y = BigInt(r) * f * x;
                    if (in_window(y) && s.insert(y.convert_to<long long>()).second) grew = true;
                }
    }
    return {s.begin(), s.end()};
}

}  // namespace hyperlab::zphi
