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

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "hyperlab/harness.hpp"

namespace hyperlab::harness {

namespace {

enum TallyId : std::size_t {
    kPrimeToPrimary,
    kShift,
    kWiden,
    kPrimaryToAbsorbing,
    kOneAbsorbing,
    kRadicalPrime,
    kProductWithMaximal,
    kColonDrop,
    kStrongCRadical,
    kAllFactors,
    kLocality,
    kNonlocalPrimary,
    kRaiseU,
    kIntersection,
    kV1V,
    kDivided,
    kRadicalConsistency,
    kRadicalComparison,
    kQuotientEquivalence,
    kHomImage,
    kHomPreimage,
    kMatrixCorner,
    kMatrixTransfer,
    kLocalizationForward,
    kLocalizationReverse,
    kLocalizationRadical,
    kBuildQuotient,
    kBuildMatrix,
    kBuildLocalization,
    kTallyCount
};

constexpr const char* kTallyNames[kTallyCount] = {
    "absorbing-prime-implies-primary",
    "shift-u-and-v",
    "widen-u",
    "primary-implies-absorbing",
    "one-absorbing-matches-3-2",
    "radical-is-prime",
    "prime-times-maximal",
    "colon-lowers-u-and-v",
    "strong-c-radical",
    "all-factors-equivalence",
    "non-absorbing-forces-local",
    "nonlocal-primary-equivalence",
    "raise-u-forces-local",
    "intersection-equal-radicals",
    "v-plus-one-characterization",
    "divided-primary-equivalence",
    "radical-consistency-c",
    "radical-comparison-non-c",
    "quotient-equivalence",
    "good-hom-image",
    "good-hom-preimage",
    "matrix-corner-products",
    "matrix-ideal-transfer",
    "localization-forward",
    "localization-reverse",
    "localization-radical",
    "construction-quotient",
    "construction-matrix",
    "construction-localization",
};

constexpr std::size_t kMaxExamples = 5;

using Tallies = std::vector<Tally>;

bool inconclusive(const Verdict& v) { return v.status == Status::inconclusive; }

void note(std::vector<std::string>& list, const std::string& text) {
    if (list.size() < kMaxExamples) list.push_back(text);
}

/// Records one instance of an implication.
void observe(Tally& t, bool identity, bool hypothesis, bool conclusion, const std::string& where,
             bool unknown = false) {
    if (unknown) {
        ++t.inconclusive;
        return;
    }
    if (!hypothesis) {
        ++t.vacuous;
        return;
    }
    if (identity) {
        ++t.checked;
        if (!conclusion) {
            ++t.violations;
            note(t.examples, where);
        }
    } else {
        ++t.outside;
        if (!conclusion) {
            ++t.outside_failures;
            note(t.notes, where);
        }
    }
}

void skip(Tally& t, const std::string& why) {
    ++t.skipped;
    note(t.notes, why);
}

std::string uv_text(unsigned u, unsigned v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

bool absorbing_c(const RingAnalysis& an, std::size_t i, UVParams uv) {
    return an.ideals[i].c.holds() && an.absorbing(i, uv).holds();
}

bool absorbing_c_unknown(const RingAnalysis& an, std::size_t i, UVParams uv) {
    return inconclusive(an.ideals[i].c) || inconclusive(an.absorbing(i, uv));
}

std::vector<std::size_t> proper_indices(const RingAnalysis& an) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < an.ideals.size(); ++i)
        if (an.ideals[i].proper) out.push_back(i);
    return out;
}

class RingSuite {
public:
    RingSuite(const RingPtr& ring, const RingFamilySpec& spec, const Deciders& deciders, Tallies& t)
        : ring_(ring), spec_(spec), deciders_(deciders), t_(t),
          an_(analyze(ring, spec.u_max, spec.tuple_budget, deciders)),
          id_(an_.units.has_identity()), U_(spec.u_max) {}

    void run() {
        per_ideal();
        ring_level();
        if (!spec_.constructions) return;
        quotients();
        matrices();
        if (id_) localizations();
    }

    [[nodiscard]] std::size_t ideal_count() const { return an_.ideals.size(); }

private:
    std::string at(std::size_t i) const {
        return ring_->label() + " P=" + to_string(an_.ideals[i].ideal.members);
    }

    void per_ideal() {
        const FiniteHyperring& A = *ring_;
        const bool local = an_.lattice.local;
        const bool divided = is_divided(A, an_.lattice).holds();
        std::optional<AbsorbingProfile> all_profile;

        for (std::size_t i : proper_indices(an_)) {
            const IdealFacts& f = an_.ideals[i];
            const ElementSet& P = f.ideal.members;
            const std::string where = at(i);

            // Radical comparisons.
            if (f.c.holds()) {
                observe(t_[kRadicalConsistency], true, true, f.rad_nil == f.rad_prime,
                        where + " rad_nil=" + to_string(f.rad_nil) + " rad_prime=" +
                            to_string(f.rad_prime));
            } else if (f.c.fails()) {
                Tally& t = t_[kRadicalComparison];
                ++t.checked;
                if (f.rad_nil != f.rad_prime) {
                    ++t.differences;
                    note(t.notes, where + " rad_nil=" + to_string(f.rad_nil) + " rad_prime=" +
                                      to_string(f.rad_prime));
                }
            }

            if (U_ >= 3) {
                const Verdict one = is_1_absorbing_primary(A, f.ideal, f.rad_prime);
                const Verdict& ap = an_.absorbing(i, {3, 2});
                observe(t_[kOneAbsorbing], true, true, one.status == ap.status,
                        where + " triples=" + std::string(to_string(one.status)) + " (3,2)=" +
                            std::string(to_string(ap.status)),
                        inconclusive(ap));
            }

            if (f.strong_c.holds() || inconclusive(f.strong_c)) {
                bool conclusion = false;
                bool unknown = inconclusive(f.strong_c);
                if (is_hyperideal(A, f.rad_nil)) {
                    const Verdict r = is_strong_C_hyperideal(A, an_.family, f.rad_nil);
                    conclusion = r.holds();
                    unknown = unknown || inconclusive(r);
                }
                observe(t_[kStrongCRadical], id_, true, conclusion,
                        where + " rad=" + to_string(f.rad_nil), unknown);
            }

            if (f.c.holds()) {
                for (unsigned v = 1; v < U_; ++v) {
                    const V1VReport rep = check_v1v_characterization(A, an_.lattice, f.ideal,
                                                                     f.rad_prime, v);
                    std::string fails;
                    for (const auto& s : rep.failures) fails += "; " + s;
                    observe(t_[kV1V], id_, true, rep.agree(), where + " v=" + std::to_string(v) + fails);
                }
            }

            // Gate for the all-factors equivalence: a + e is a nonunit for
            // some a in P and identity e.
            bool shifted_nonunit = false;
            for (Element e : an_.units.identities)
                for (Element a : P)
                    if (an_.units.nonunits.contains(A.add(a, e))) shifted_nonunit = true;
            const bool all_factor_gate = f.strong_c.holds() && shifted_nonunit;
            if (all_factor_gate && !all_profile) {
                std::vector<AbsorbingTarget> targets;
                for (std::size_t j : proper_indices(an_))
                    targets.push_back({an_.ideals[j].ideal.members, an_.ideals[j].rad_prime, {}});
                all_profile = deciders_.profile(A, A.carrier(), targets, U_, spec_.tuple_budget);
            }

            for (unsigned u = 2; u <= U_; ++u)
                for (unsigned v = 1; v < u; ++v) {
                    const Verdict& ap = an_.absorbing(i, {u, v});
                    const Verdict& apr = an_.absorbing(i, {u, v}, Absorbing::prime);
                    const std::string w = where + " " + uv_text(u, v);
                    const bool unk = inconclusive(ap);

                    observe(t_[kPrimeToPrimary], true, apr.holds(), ap.holds(), w,
                            unk || inconclusive(apr));
                    if (u + 1 <= U_) {
                        const Verdict& up = an_.absorbing(i, {u + 1, v + 1});
                        observe(t_[kShift], true, ap.holds(), up.holds(),
                                w + " -> " + uv_text(u + 1, v + 1), unk || inconclusive(up));
                    }
                    for (unsigned wu = u + 1; wu <= std::min(u + 3, U_); ++wu) {
                        const Verdict& wide = an_.absorbing(i, {wu, v});
                        observe(t_[kWiden], true, ap.holds(), wide.holds(),
                                w + " -> " + uv_text(wu, v), unk || inconclusive(wide));
                    }
                    observe(t_[kPrimaryToAbsorbing], true, f.primary.holds(), ap.holds(), w,
                            unk || inconclusive(f.primary));

                    observe(t_[kRadicalPrime], id_, ap.holds() && f.c.holds(),
                            is_hyperideal(A, f.rad_nil) && is_prime_ideal(A, f.rad_nil),
                            w + " rad=" + to_string(f.rad_nil), unk || inconclusive(f.c));

                    if (v >= 2 && ap.holds()) {
                        for (Element x : an_.units.nonunits - P) {
                            const HyperIdeal col = colon(A, f.ideal, ElementSet::singleton(x));
                            const auto ci = an_.lattice.index_of(col.members);
                            bool conclusion = false;
                            bool unknown = false;
                            if (ci && an_.ideals[*ci].proper) {
                                const Verdict& cv = an_.absorbing(*ci, {u - 1, v - 1});
                                conclusion = cv.holds();
                                unknown = inconclusive(cv);
                            }
                            observe(t_[kColonDrop], id_, true, conclusion,
                                    w + " x=" + std::to_string(x) + " (P:x)=" + to_string(col.members),
                                    unknown);
                        }
                    }

                    if (all_factor_gate) {
                        const Verdict& all = all_profile->at(*f.target, {u, v}, Absorbing::primary);
                        observe(t_[kAllFactors], id_, true, all.holds() == ap.holds(),
                                w + " nonunits=" + std::string(to_string(ap.status)) +
                                    " all=" + std::string(to_string(all.status)),
                                unk || inconclusive(all));
                    }

                    if (f.strong_c.holds() && !local && v >= 2)
                        observe(t_[kNonlocalPrimary], id_, true, ap.holds() == f.primary.holds(), w,
                                unk || inconclusive(f.primary));

                    if (u + 1 <= U_ && f.strong_c.holds()) {
                        const Verdict& up1 = an_.absorbing(i, {u + 1, v + 1});
                        const Verdict& up0 = an_.absorbing(i, {u + 1, v});
                        const bool unknown = unk || inconclusive(up1) || inconclusive(up0);
                        observe(t_[kLocality], id_, (up1.holds() || up0.holds()) && ap.fails(), local,
                                w, unknown);
                        bool rad_is_max = false;
                        if (local) {
                            const ElementSet& m =
                                an_.lattice.all[an_.lattice.maximals.front()].members;
                            rad_is_max = f.rad_prime == m;
                        }
                        observe(t_[kRaiseU], id_, up0.holds() && ap.fails(), local && rad_is_max,
                                w + " rad=" + to_string(f.rad_prime), unknown);
                    }

                    if (divided && f.c.holds())
                        observe(t_[kDivided], id_, true, ap.holds() == f.primary.holds(), w,
                                unk || inconclusive(f.primary));
                }
        }
    }

    void ring_level() {
        const FiniteHyperring& A = *ring_;
        // Prime times the unique maximal, when every hyperideal is C.
        if (an_.all_ideals_c && an_.lattice.local) {
            const HyperIdeal& m = an_.lattice.all[an_.lattice.maximals.front()];
            for (std::size_t pi : an_.lattice.primes) {
                const HyperIdeal pm = ideal_product(A, an_.lattice.all[pi], m);
                const auto idx = an_.lattice.index_of(pm.members);
                for (unsigned u = 2; u <= U_; ++u)
                    for (unsigned v = 1; v < u; ++v) {
                        const std::string w = ring_->label() + " P=" +
                                              to_string(an_.lattice.all[pi].members) + " PM=" +
                                              to_string(pm.members) + " " + uv_text(u, v);
                        if (!idx || !an_.ideals[*idx].proper) {
                            observe(t_[kProductWithMaximal], id_, true, false, w);
                            continue;
                        }
                        const Verdict& ap = an_.absorbing(*idx, {u, v});
                        observe(t_[kProductWithMaximal], id_, true, ap.holds(), w, inconclusive(ap));
                    }
            }
        }

        // Intersections of absorbing primary C-hyperideals sharing a radical.
        for (unsigned u = 2; u <= U_; ++u)
            for (unsigned v = 1; v < u; ++v) {
                std::vector<std::vector<std::size_t>> groups;
                std::vector<ElementSet> rads;
                for (std::size_t i : proper_indices(an_)) {
                    if (!absorbing_c(an_, i, {u, v})) continue;
                    const ElementSet& r = an_.ideals[i].rad_prime;
                    auto it = std::find(rads.begin(), rads.end(), r);
                    if (it == rads.end()) {
                        rads.push_back(r);
                        groups.push_back({i});
                    } else {
                        groups[static_cast<std::size_t>(it - rads.begin())].push_back(i);
                    }
                }
                for (const auto& g : groups) {
                    if (g.size() < 2) continue;
                    const std::size_t k = std::min<std::size_t>(g.size(), 10);
                    for (unsigned mask = 1; mask < (1U << k); ++mask) {
                        if (std::popcount(mask) < 2) continue;
                        ElementSet inter = ring_->carrier();
                        for (std::size_t j = 0; j < k; ++j)
                            if ((mask >> j) & 1U) inter &= an_.ideals[g[j]].ideal.members;
                        const auto idx = an_.lattice.index_of(inter);
                        const std::string w =
                            ring_->label() + " meet=" + to_string(inter) + " " + uv_text(u, v);
                        if (!idx) {
                            observe(t_[kIntersection], id_, true, false, w + " not a hyperideal");
                            continue;
                        }
                        const Verdict& ap = an_.absorbing(*idx, {u, v});
                        observe(t_[kIntersection], id_, true, ap.holds(), w, inconclusive(ap));
                    }
                }
            }
    }

    /// Transfer along a good homomorphism h: A -> B with analyses of both sides.
    void transfer(const GoodHom& h, const RingAnalysis& src, const RingAnalysis& dst,
                  const std::string& label) {
        bool preserves = true;
        for (Element x : src.units.nonunits)
            if (dst.units.units.contains(h(x))) preserves = false;
        if (!preserves) {
            skip(t_[kHomImage], label + " maps a nonunit to a unit");
            skip(t_[kHomPreimage], label + " maps a nonunit to a unit");
            return;
        }
        for (std::size_t j : proper_indices(dst)) {
            const ElementSet pre = h.preimage(dst.ideals[j].ideal.members);
            const auto idx = src.lattice.index_of(pre);
            for (unsigned u = 2; u <= U_; ++u)
                for (unsigned v = 1; v < u; ++v) {
                    const bool ok = idx && src.ideals[*idx].proper && absorbing_c(src, *idx, {u, v});
                    const bool unknown = absorbing_c_unknown(dst, j, {u, v}) ||
                                         (idx && src.ideals[*idx].proper &&
                                          absorbing_c_unknown(src, *idx, {u, v}));
                    observe(t_[kHomPreimage], id_, absorbing_c(dst, j, {u, v}), ok,
                            label + " P2=" + to_string(dst.ideals[j].ideal.members) + " " +
                                uv_text(u, v),
                            unknown);
                }
        }
        const bool surjective = h.surjective();
        const ElementSet ker = h.kernel();
        for (std::size_t i : proper_indices(src)) {
            const ElementSet& p1 = src.ideals[i].ideal.members;
            if (!surjective || !ker.subset_of(p1)) {
                ++t_[kHomImage].skipped;
                continue;
            }
            const ElementSet img = h.image(p1);
            const auto idx = dst.lattice.index_of(img);
            for (unsigned u = 2; u <= U_; ++u)
                for (unsigned v = 1; v < u; ++v) {
                    const bool ok = idx && dst.ideals[*idx].proper && absorbing_c(dst, *idx, {u, v});
                    const bool unknown = absorbing_c_unknown(src, i, {u, v}) ||
                                         (idx && dst.ideals[*idx].proper &&
                                          absorbing_c_unknown(dst, *idx, {u, v}));
                    observe(t_[kHomImage], id_, absorbing_c(src, i, {u, v}), ok,
                            label + " P1=" + to_string(p1) + " " + uv_text(u, v), unknown);
                }
        }
    }

    void quotients() {
        for (std::size_t k : proper_indices(an_)) {
            const ElementSet& kernel = an_.ideals[k].ideal.members;
            const std::string label = ring_->label() + "/" + to_string(kernel);
            Quotient q;
            try {
                q = quotient(ring_, an_.ideals[k].ideal);
                observe(t_[kBuildQuotient], true, true, true, label);
            } catch (const ConstructionError& e) {
                observe(t_[kBuildQuotient], true, true, false, e.what());
                continue;
            }
            const RingAnalysis qa = analyze(q.ring, U_, spec_.tuple_budget, deciders_);
            transfer(q.projection, an_, qa, label);

            bool gate = true;
            for (Element x : an_.units.nonunits)
                if (qa.units.units.contains(q.projection(x))) gate = false;
            if (!gate) {
                skip(t_[kQuotientEquivalence], label + " maps a nonunit to a unit");
                continue;
            }
            for (std::size_t i : proper_indices(an_)) {
                const IdealFacts& f = an_.ideals[i];
                if (!kernel.subset_of(f.ideal.members) || !f.c.holds()) continue;
                const ElementSet img = q.projection.image(f.ideal.members);
                const auto idx = qa.lattice.index_of(img);
                for (unsigned u = 2; u <= U_; ++u)
                    for (unsigned v = 1; v < u; ++v) {
                        const std::string w = label + " Q=" + to_string(f.ideal.members) + " " +
                                              uv_text(u, v);
                        if (!idx || !qa.ideals[*idx].proper) {
                            observe(t_[kQuotientEquivalence], id_, true, false, w + " image not proper");
                            continue;
                        }
                        const Verdict& a = an_.absorbing(i, {u, v});
                        const Verdict& b = qa.absorbing(*idx, {u, v});
                        observe(t_[kQuotientEquivalence], id_, true, a.holds() == b.holds(), w,
                                inconclusive(a) || inconclusive(b));
                    }
            }
        }
    }

    void matrices() {
        const FiniteHyperring& A = *ring_;
        const std::size_t n = A.size();
        if (n * n * n * n > spec_.matrix_cap) return;
        const FiniteHyperring M = matrix_hyperring(A, 2, spec_.matrix_cap, false);
        const ValidationReport rep = validate(M, false);
        std::string detail = M.label();
        if (!rep.ok()) {
            const AxiomViolation& v = rep.violations.front();
            detail += " fails " + v.axiom + " at";
            for (Element x : v.witness) detail += " " + std::to_string(x);
        }
        observe(t_[kBuildMatrix], true, true, rep.ok(), detail);

        const auto na = static_cast<Element>(n);
        auto corner = [&](Element x) { return corner_matrix(A, 2, x); };
        auto corners = [&](const ElementSet& s) {
            ElementSet out;
            for (Element x : s) out.insert(corner(x));
            return out;
        };
        for (Element a = 0; a < na; ++a)
            for (Element b = 0; b < na; ++b)
                observe(t_[kMatrixCorner], true, true,
                        M.mul(corner(a), corner(b)) == corners(A.mul(a, b)),
                        M.label() + " corners " + std::to_string(a) + "," + std::to_string(b));

        const ElementSet m_nonunits = unit_report(M).nonunits;
        for (std::size_t i : proper_indices(an_)) {
            const IdealFacts& f = an_.ideals[i];
            HyperIdeal mp;
            try {
                mp = embed_diagonal_ideal(A, M, f.ideal, 2);
            } catch (const ConstructionError& e) {
                skip(t_[kMatrixTransfer], e.what());
                continue;
            }
            const ElementSet m_rad = radical_nilpotent(M, mp.members);
            auto lift = [&](const std::vector<Element>& xs) {
                std::vector<Element> out;
                for (Element x : xs) out.push_back(corner(x));
                return out;
            };
            for (unsigned u = 2; u <= U_; ++u)
                for (unsigned v = 1; v < u; ++v) {
                    const Verdict& ap = an_.absorbing(i, {u, v});
                    const std::string w = M.label() + " P=" + to_string(f.ideal.members) + " " +
                                          uv_text(u, v);
                    if (inconclusive(ap) || inconclusive(f.c)) {
                        ++t_[kMatrixTransfer].inconclusive;
                        continue;
                    }
                    if (f.c.holds() && ap.holds()) {
                        observe(t_[kMatrixTransfer], id_, true, true, w);
                        continue;
                    }
                    // P fails, so M_2(P) must fail too: replay the lifted witness.
                    bool refuted = false;
                    if (f.c.fails()) {
                        const ElementSet prod = M.hyperproduct(lift(f.c.witness->flat()));
                        refuted = prod.intersects(mp.members) && !prod.subset_of(mp.members);
                    } else {
                        const Witness& wit = *ap.witness;
                        const std::vector<Element> all = lift(wit.flat());
                        const bool nonunits = std::all_of(all.begin(), all.end(), [&](Element x) {
                            return m_nonunits.contains(x);
                        });
                        refuted = nonunits && M.hyperproduct(all).subset_of(mp.members) &&
                                  !M.hyperproduct(lift(wit.parts[0])).subset_of(mp.members) &&
                                  !M.hyperproduct(lift(wit.parts[1])).subset_of(m_rad);
                    }
                    if (refuted)
                        ++t_[kMatrixTransfer].vacuous;
                    else
                        ++t_[kMatrixTransfer].inconclusive;
                }
        }
    }

    void localizations() {
        const FiniteHyperring& A = *ring_;
        for (const ElementSet& s : candidate_mcs(A, an_.lattice)) {
            const std::string label = A.label() + " S=" + to_string(s);
            LocalizedRing loc;
            try {
                loc = localize(ring_, s);
                observe(t_[kBuildLocalization], true, true, true, label);
            } catch (const ConstructionError& e) {
                // Reported with its witness; not an unexplained failure.
                skip(t_[kBuildLocalization], label + ": " + e.what());
                continue;
            }
            const RingAnalysis la = analyze(loc.ring, U_, spec_.tuple_budget, deciders_);
            transfer(loc.pi, an_, la, label);

            for (std::size_t i : proper_indices(an_)) {
                const IdealFacts& f = an_.ideals[i];
                if (!f.c.holds() || f.ideal.members.intersects(s)) continue;
                const ElementSet sp = loc.localize_set(f.ideal.members);
                const auto si = la.lattice.index_of(sp);
                const bool proper = si && la.ideals[*si].proper;
                const std::string where = label + " P=" + to_string(f.ideal.members) +
                                          " S^-1P=" + to_string(sp);
                observe(t_[kLocalizationRadical], id_, proper,
                        proper && loc.localize_set(f.rad_prime) == la.ideals[*si].rad_prime,
                        where);
                const bool gamma_ok = !gamma_set(A, f.ideal.members).intersects(s);
                if (!gamma_ok) ++t_[kLocalizationReverse].skipped;
                for (unsigned u = 2; u <= U_; ++u)
                    for (unsigned v = 1; v < u; ++v) {
                        const Verdict& ap = an_.absorbing(i, {u, v});
                        const std::string w = where + " " + uv_text(u, v);
                        if (v >= 2) {
                            bool conclusion = false;
                            bool unknown = inconclusive(ap);
                            if (proper) {
                                const Verdict& lv = la.absorbing(*si, {u - 1, v - 1});
                                conclusion = lv.holds();
                                unknown = unknown || inconclusive(lv);
                            }
                            observe(t_[kLocalizationForward], id_, ap.holds(), conclusion, w, unknown);
                        }
                        if (gamma_ok && proper) {
                            const Verdict& lv = la.absorbing(*si, {u, v});
                            observe(t_[kLocalizationReverse], id_, lv.holds(), ap.holds(), w,
                                    inconclusive(ap) || inconclusive(lv));
                        }
                    }
            }
        }
    }

    RingPtr ring_;
    const RingFamilySpec& spec_;
    const Deciders& deciders_;
    Tallies& t_;
    RingAnalysis an_;
    bool id_;
    unsigned U_;
};

Tallies empty_tallies() {
    Tallies t(kTallyCount);
    for (std::size_t i = 0; i < kTallyCount; ++i) t[i].name = kTallyNames[i];
    return t;
}

void merge(Tallies& into, const Tallies& from) {
    for (std::size_t i = 0; i < kTallyCount; ++i) {
        Tally& a = into[i];
        const Tally& b = from[i];
        a.checked += b.checked;
        a.vacuous += b.vacuous;
        a.violations += b.violations;
        a.skipped += b.skipped;
        a.inconclusive += b.inconclusive;
        a.outside += b.outside;
        a.outside_failures += b.outside_failures;
        a.differences += b.differences;
        for (const auto& e : b.examples) note(a.examples, e);
        for (const auto& e : b.notes) note(a.notes, e);
    }
}

bool is_construction(const Tally& t) { return t.name.rfind("construction-", 0) == 0; }

}  // namespace

const Verdict& RingAnalysis::absorbing(std::size_t ideal, UVParams uv, Absorbing kind) const {
    const IdealFacts& f = ideals.at(ideal);
    if (!f.target) throw UsageError("the whole ring has no absorbing verdicts");
    return profile.at(*f.target, uv, kind);
}

RingAnalysis analyze(const RingPtr& ring, unsigned u_max, std::uint64_t budget,
                     const Deciders& deciders) {
    RingAnalysis an;
    an.ring = ring;
    const FiniteHyperring& A = *ring;
    an.units = unit_report(A);
    an.lattice = enumerate_hyperideals(A);
    an.family = product_family(A);
    std::vector<AbsorbingTarget> targets;
    for (const HyperIdeal& ideal : an.lattice.all) {
        IdealFacts f;
        f.ideal = ideal;
        f.proper = ideal.proper(A);
        f.rad_prime = radical_prime_intersection(A, an.lattice, ideal);
        f.rad_nil = radical_nilpotent(A, ideal.members);
        f.c = is_C_hyperideal(an.family, ideal.members);
        f.strong_c = is_strong_C_hyperideal(A, an.family, ideal.members);
        if (!f.c.holds()) an.all_ideals_c = false;
        if (f.proper) {
            f.prime = is_prime(A, ideal);
            f.primary = is_primary(A, ideal, f.rad_prime);
            f.target = targets.size();
            targets.push_back({ideal.members, f.rad_prime, {}});
        }
        an.ideals.push_back(std::move(f));
    }
    an.profile = deciders.profile(A, an.units.nonunits, targets, u_max, budget);
    return an;
}

std::uint64_t SuiteReport::violations() const {
    std::uint64_t v = 0;
    for (const auto& t : tallies)
        if (!is_construction(t)) v += t.violations;
    return v;
}

std::uint64_t SuiteReport::construction_failures() const {
    std::uint64_t v = 0;
    for (const auto& t : tallies)
        if (is_construction(t)) v += t.violations;
    return v;
}

const Tally* SuiteReport::find(const std::string& name) const {
    for (const auto& t : tallies)
        if (t.name == name) return &t;
    return nullptr;
}

SuiteReport run_theorem_suite(const RingFamilySpec& spec, const Deciders& deciders,
                              unsigned workers) {
    std::vector<RingPtr> rings;
    for (auto& m : enumerate_family(spec)) rings.push_back(m.ring);
    return run_theorem_suite(rings, spec, deciders, workers);
}

SuiteReport run_theorem_suite(const std::vector<RingPtr>& rings, const RingFamilySpec& spec,
                              const Deciders& deciders, unsigned workers) {
    spec.check();
    std::vector<Tallies> per_ring(rings.size());
    std::vector<std::size_t> ideal_counts(rings.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rings.size()) return;
            try {
                per_ring[i] = empty_tallies();
                RingSuite suite(rings[i], spec, deciders, per_ring[i]);
                suite.run();
                ideal_counts[i] = suite.ideal_count();
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    workers = std::max(1U, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    SuiteReport report;
    report.tallies = empty_tallies();
    for (std::size_t i = 0; i < rings.size(); ++i) {
        merge(report.tallies, per_ring[i]);
        report.ideals += ideal_counts[i];
    }
    report.rings = rings.size();
    for (const auto& t : report.tallies)
        if (t.inconclusive > 0) report.complete = false;
    return report;
}

}  // namespace hyperlab::harness
