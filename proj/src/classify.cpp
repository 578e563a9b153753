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

#include "hyperlab/classify.hpp"

#include <bit>
#include <functional>

namespace hyperlab {

namespace {

void require_proper(const FiniteHyperring& ring, const HyperIdeal& p) {
    if (!p.proper(ring)) throw UsageError("the ideal must be proper");
}

/// Calls `fn` with every nondecreasing index sequence of length `len` over [0, k).
void for_each_multiset(std::size_t k, std::size_t len,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (len == 0 || k == 0) return;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
        fn(idx);
        std::size_t pos = len;
        while (pos > 0 && idx[pos - 1] == k - 1) --pos;
        if (pos == 0) return;
        const std::size_t next = idx[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < len; ++i) idx[i] = next;
    }
}

std::uint64_t multiset_count(std::uint64_t k, std::uint64_t len) {
    // C(k + len - 1, len), saturating.
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= len; ++i) {
        c = c * (k + i - 1) / i;
        if (c > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(c);
}

std::string multiset_space(std::size_t u, std::size_t k) {
    return "multisets of " + std::to_string(u) + " over " + std::to_string(k) + " elements";
}

}  // namespace

void UVParams::check() const {
    if (v < 1 || u <= v)
        throw ParameterError("need u > v >= 1, got u=" + std::to_string(u) +
                             " v=" + std::to_string(v));
}

const Verdict& AbsorbingProfile::at(std::size_t target, UVParams uv, Absorbing kind) const {
    uv.check();
    if (uv.u > u_max) throw ParameterError("u exceeds the profiled u_max");
    const auto& table = kind == Absorbing::primary ? primary : prime;
    return table.at(target).at(uv.u).at(uv.v);
}

AbsorbingProfile absorbing_profile(const FiniteHyperring& ring, const ElementSet& domain,
                                   std::span<const AbsorbingTarget> targets, unsigned u_max,
                                   std::uint64_t budget) {
    if (u_max < 2) throw ParameterError("u_max must be at least 2");
    if (u_max > 8) throw ParameterError("u_max above 8 is not supported");
    const std::vector<Element> dom = domain.to_vector();
    const std::size_t k = dom.size();

    AbsorbingProfile prof;
    prof.u_max = u_max;
    prof.primary.assign(targets.size(), std::vector<std::vector<Verdict>>(u_max + 1));
    prof.prime = prof.primary;
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (unsigned u = 2; u <= u_max; ++u) {
            prof.primary[t][u].assign(u, Verdict::pass(multiset_space(u, k), 0));
            prof.prime[t][u].assign(u, Verdict::pass(multiset_space(u, k), 0));
        }

    std::uint64_t total = 0;
    for (unsigned u = 1; u <= u_max; ++u) {
        const std::uint64_t c = multiset_count(k, u);
        total = (c > budget || total + c > budget) ? budget + 1 : total + c;
    }
    if (total > budget) {
        for (auto* table : {&prof.primary, &prof.prime})
            for (auto& per_t : *table)
                for (unsigned u = 2; u <= u_max; ++u)
                    for (auto& verdict : per_t[u])
                        verdict = Verdict::inconclusive(multiset_space(u, k) + ", over budget");
        return prof;
    }

    // masks[u][v]: position subsets of size v, leading positions first.
    std::vector<std::vector<std::vector<unsigned>>> masks(u_max + 1);
    for (unsigned u = 2; u <= u_max; ++u) {
        masks[u].resize(u);
        for (unsigned m = 1; m + 1 < (1U << u); ++m) {
            const auto v = static_cast<unsigned>(std::popcount(m));
            if (v < u) masks[u][v].push_back(m);
        }
    }

    std::vector<std::vector<std::uint64_t>> tested(targets.size(),
                                                   std::vector<std::uint64_t>(u_max + 1, 0));
    std::vector<ElementSet> prod(std::size_t{1} << u_max);
    std::vector<Element> seq(u_max);

    auto witness_of = [&](unsigned u, unsigned mask, const char* clause) {
        Witness w;
        w.parts.resize(2);
        for (unsigned i = 0; i < u; ++i) w.parts[(mask >> i) & 1U ? 0 : 1].push_back(seq[i]);
        w.clause = clause;
        return w;
    };

    auto evaluate = [&](unsigned u) {
        const unsigned full = (1U << u) - 1;
        const ElementSet& product = prod[full];
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const AbsorbingTarget& tg = targets[t];
            if (!product.subset_of(tg.ideal) || product.intersects(tg.avoid)) continue;
            ++tested[t][u];
            for (unsigned v = 1; v < u; ++v) {
                Verdict& primary = prof.primary[t][u][v];
                Verdict& prime = prof.prime[t][u][v];
                if (primary.fails() && prime.fails()) continue;
                for (unsigned mask : masks[u][v]) {
                    if (prod[mask].subset_of(tg.ideal)) continue;
                    const ElementSet& rest = prod[full ^ mask];
                    if (!primary.fails() && !rest.subset_of(tg.rad))
                        primary = Verdict::fail(
                            witness_of(u, mask, "leading product escapes P, remainder escapes rad(P)"),
                            primary.space);
                    if (!prime.fails() && !rest.subset_of(tg.ideal))
                        prime = Verdict::fail(
                            witness_of(u, mask, "leading product escapes P, remainder escapes P"),
                            prime.space);
                    if (primary.fails() && prime.fails()) break;
                }
            }
        }
    };

    std::function<void(unsigned, std::size_t)> descend = [&](unsigned depth, std::size_t start) {
        const unsigned bit = 1U << depth;
        for (std::size_t i = start; i < k; ++i) {
            seq[depth] = dom[i];
            prod[bit] = ElementSet::singleton(dom[i]);
            for (unsigned m = 1; m < bit; ++m) prod[m | bit] = ring.mul(prod[m], dom[i]);
            if (depth + 1 >= 2) evaluate(depth + 1);
            if (depth + 1 < u_max) descend(depth + 1, i);
        }
    };
    descend(0, 0);

    for (std::size_t t = 0; t < targets.size(); ++t)
        for (unsigned u = 2; u <= u_max; ++u)
            for (unsigned v = 1; v < u; ++v) {
                prof.primary[t][u][v].tested = tested[t][u];
                prof.prime[t][u][v].tested = tested[t][u];
            }
    return prof;
}

bool replay_absorbing(const FiniteHyperring& ring, const ElementSet& domain,
                      const AbsorbingTarget& target, Absorbing kind, const Witness& w) {
    if (w.parts.size() != 2 || w.parts[0].empty() || w.parts[1].empty()) return false;
    const std::vector<Element> all = w.flat();
    for (Element x : all)
        if (x >= ring.size() || !domain.contains(x)) return false;
    const ElementSet total = ring.hyperproduct(all);
    if (!total.subset_of(target.ideal) || total.intersects(target.avoid)) return false;
    if (ring.hyperproduct(w.parts[0]).subset_of(target.ideal)) return false;
    const ElementSet& bound = kind == Absorbing::primary ? target.rad : target.ideal;
    return !ring.hyperproduct(w.parts[1]).subset_of(bound);
}

bool replay_pair(const FiniteHyperring& ring, const ElementSet& p, const ElementSet& rad,
                 const Witness& w) {
    if (w.parts.size() != 2 || w.parts[0].size() != 1 || w.parts[1].size() != 1) return false;
    const Element x = w.parts[0][0];
    const Element y = w.parts[1][0];
    if (x >= ring.size() || y >= ring.size()) return false;
    return ring.mul(x, y).subset_of(p) && !p.contains(x) && !rad.contains(y);
}

Verdict is_prime(const FiniteHyperring& ring, const HyperIdeal& p) {
    require_proper(ring, p);
    const auto n = static_cast<Element>(ring.size());
    const std::string space = "unordered pairs over " + std::to_string(n) + " elements";
    std::uint64_t tested = 0;
    for (Element x = 0; x < n; ++x)
        for (Element y = x; y < n; ++y) {
            if (!ring.mul(x, y).subset_of(p.members)) continue;
            ++tested;
            if (!p.members.contains(x) && !p.members.contains(y))
                return Verdict::fail({{{x}, {y}}, "x o y inside P with x, y outside P"}, space,
                                     tested);
        }
    return Verdict::pass(space, tested);
}

Verdict is_primary(const FiniteHyperring& ring, const HyperIdeal& p, const ElementSet& rad) {
    require_proper(ring, p);
    const auto n = static_cast<Element>(ring.size());
    const std::string space = "ordered pairs over " + std::to_string(n) + " elements";
    std::uint64_t tested = 0;
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (!ring.mul(x, y).subset_of(p.members)) continue;
            ++tested;
            if (!p.members.contains(x) && !rad.contains(y))
                return Verdict::fail({{{x}, {y}}, "x o y inside P, x outside P, y outside rad(P)"},
                                     space, tested);
        }
    return Verdict::pass(space, tested);
}

namespace {

Verdict single_absorbing(const FiniteHyperring& ring, const HyperIdeal& p, AbsorbingTarget target,
                         UVParams uv, Absorbing kind) {
    uv.check();
    require_proper(ring, p);
    const ElementSet nonunits = unit_report(ring).nonunits;
    const AbsorbingProfile prof =
        absorbing_profile(ring, nonunits, std::span<const AbsorbingTarget>(&target, 1), uv.u);
    return prof.at(0, uv, kind);
}

}  // namespace

Verdict is_uv_absorbing_prime(const FiniteHyperring& ring, const HyperIdeal& p, UVParams uv) {
    return single_absorbing(ring, p, {p.members, p.members, {}}, uv, Absorbing::prime);
}

Verdict is_uv_absorbing_primary(const FiniteHyperring& ring, const HyperIdeal& p,
                                const ElementSet& rad, UVParams uv) {
    return single_absorbing(ring, p, {p.members, rad, {}}, uv, Absorbing::primary);
}

Verdict is_uv_absorbing_I_primary(const FiniteHyperring& ring, const HyperIdeal& p,
                                  const HyperIdeal& i, const ElementSet& rad, UVParams uv) {
    if (!i.proper(ring)) throw UsageError("I must be a proper hyperideal");
    const ElementSet ip = ideal_product(ring, i, p).members;
    return single_absorbing(ring, p, {p.members, rad, ip}, uv, Absorbing::primary);
}

Verdict is_1_absorbing_primary(const FiniteHyperring& ring, const HyperIdeal& p,
                               const ElementSet& rad) {
    require_proper(ring, p);
    const std::vector<Element> dom = unit_report(ring).nonunits.to_vector();
    const std::string space = "nonunit triples over " + std::to_string(dom.size()) + " elements";
    std::uint64_t tested = 0;
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i; j < dom.size(); ++j) {
            const ElementSet xy = ring.mul(dom[i], dom[j]);
            const bool pair_inside = xy.subset_of(p.members);
            for (Element z : dom) {
                if (!ring.mul(xy, z).subset_of(p.members)) continue;
                ++tested;
                if (!pair_inside && !rad.contains(z))
                    return Verdict::fail({{{dom[i], dom[j]}, {z}},
                                          "x o y o z inside P, x o y outside P, z outside rad(P)"},
                                         space, tested);
            }
        }
    return Verdict::pass(space, tested);
}

V1VReport check_v1v_characterization(const FiniteHyperring& ring, const IdealLattice& lattice,
                                     const HyperIdeal& p, const ElementSet& rad, unsigned v) {
    if (v < 1) throw ParameterError("v must be at least 1");
    require_proper(ring, p);
    V1VReport report;
    const std::vector<Element> dom = unit_report(ring).nonunits.to_vector();

    const Verdict first = is_uv_absorbing_primary(ring, p, rad, {v + 1, v});
    report.absorbing = first.holds();
    if (first.fails()) report.failures.push_back("(v+1,v)-absorbing: " + render_witness(*first.witness));

    // Products of v nonunits, deduplicated as sets.
    std::vector<std::pair<ElementSet, std::vector<Element>>> products;
    for_each_multiset(dom.size(), v, [&](const std::vector<std::size_t>& idx) {
        std::vector<Element> xs;
        for (std::size_t i : idx) xs.push_back(dom[i]);
        products.emplace_back(ring.hyperproduct(xs), std::move(xs));
    });

    report.colon = true;
    for (const auto& [s, xs] : products) {
        if (s.subset_of(p.members)) continue;
        if (!colon(ring, p, s).members.subset_of(rad)) {
            report.colon = false;
            report.failures.push_back("colon clause at " + to_list(ElementSet(xs)));
            break;
        }
    }

    report.ideal_factor = true;
    for (const auto& q : lattice.all) {
        for (const auto& [s, xs] : products) {
            if (ring.mul(s, q.members).subset_of(p.members) && !s.subset_of(p.members) &&
                !q.members.subset_of(rad)) {
                report.ideal_factor = false;
                report.failures.push_back("ideal-factor clause at " + to_list(ElementSet(xs)) +
                                          " with Q=" + to_string(q.members));
                break;
            }
        }
        if (!report.ideal_factor) break;
    }

    std::vector<std::size_t> proper;
    for (std::size_t i = 0; i < lattice.all.size(); ++i)
        if (lattice.all[i].proper(ring)) proper.push_back(i);
    report.ideal_product = true;
    for_each_multiset(proper.size(), v + 1, [&](const std::vector<std::size_t>& idx) {
        if (!report.ideal_product) return;
        for (std::size_t last = 0; last <= v; ++last) {
            ElementSet lead;
            bool started = false;
            for (std::size_t j = 0; j <= v; ++j) {
                if (j == last) continue;
                const ElementSet& m = lattice.all[proper[idx[j]]].members;
                lead = started ? ring.mul(lead, m) : m;
                started = true;
            }
            const ElementSet& tail = lattice.all[proper[idx[last]]].members;
            if (ring.mul(lead, tail).subset_of(p.members) && !lead.subset_of(p.members) &&
                !tail.subset_of(rad)) {
                report.ideal_product = false;
                report.failures.push_back("ideal-product clause with last factor " + to_string(tail));
                return;
            }
        }
    });
    return report;
}

Verdict is_divided(const FiniteHyperring& ring, const IdealLattice& lattice) {
    const auto n = static_cast<Element>(ring.size());
    const std::string space = std::to_string(lattice.primes.size()) + " primes x outside elements";
    std::uint64_t tested = 0;
    for (std::size_t qi : lattice.primes) {
        const ElementSet& q = lattice.all[qi].members;
        for (Element a = 0; a < n; ++a) {
            if (q.contains(a)) continue;
            ++tested;
            if (!q.subset_of(generate(ring, ElementSet::singleton(a)).members))
                return Verdict::fail({{q.to_vector(), {a}}, "prime Q not inside <a> for a outside Q"},
                                     space, tested);
        }
    }
    return Verdict::pass(space, tested);
}

}  // namespace hyperlab
