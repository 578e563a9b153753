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

/**
 * @file
 *
 * Certificate-producing deciders for prime, primary and the (u,v)-absorbing
 * hyperideal classes.
 *
 * The absorbing deciders enumerate multisets of u factors (commutativity makes
 * order irrelevant) and, for each multiset whose product lies in P, test every
 * way of choosing v of the factors as the leading part. A multiset fails when
 * some choice has the leading product outside P and the remaining product
 * outside rad(P) (or outside P for the "prime" variant).
 */

#ifndef HYPERLAB_CLASSIFY_HPP
#define HYPERLAB_CLASSIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperlab/ideals.hpp"

namespace hyperlab {

struct UVParams {
    unsigned u = 2;
    unsigned v = 1;

    /// Throws ParameterError unless u > v >= 1.
    void check() const;
};

/// Both variants of the absorbing condition.
enum class Absorbing { primary, prime };

Verdict is_prime(const FiniteHyperring& ring, const HyperIdeal& p);
Verdict is_primary(const FiniteHyperring& ring, const HyperIdeal& p, const ElementSet& rad);

Verdict is_uv_absorbing_prime(const FiniteHyperring& ring, const HyperIdeal& p, UVParams uv);
Verdict is_uv_absorbing_primary(const FiniteHyperring& ring, const HyperIdeal& p,
                                const ElementSet& rad, UVParams uv);
/// Hypothesis narrowed to products inside P and disjoint from I*P.
Verdict is_uv_absorbing_I_primary(const FiniteHyperring& ring, const HyperIdeal& p,
                                  const HyperIdeal& i, const ElementSet& rad, UVParams uv);
/// x o y o z within P forces x o y within P or z in rad(P), over nonunit triples.
Verdict is_1_absorbing_primary(const FiniteHyperring& ring, const HyperIdeal& p,
                               const ElementSet& rad);

/// One ideal to be profiled by absorbing_profile().
struct AbsorbingTarget {
    ElementSet ideal;
    ElementSet rad;
    /// Products meeting this set do not satisfy the hypothesis (I*P for the
    /// I-primary variant; empty otherwise).
    ElementSet avoid;
};

/// Verdicts for every target, every u in [2, u_max] and every v in [1, u).
struct AbsorbingProfile {
    unsigned u_max = 0;
    /// Indexed [target][u][v]; entries with v >= u are unused.
    std::vector<std::vector<std::vector<Verdict>>> primary;
    std::vector<std::vector<std::vector<Verdict>>> prime;

    [[nodiscard]] const Verdict& at(std::size_t target, UVParams uv, Absorbing kind) const;
};

inline constexpr std::uint64_t kDefaultTupleBudget = 50'000'000;

/// Single enumeration pass shared by all targets and all (u, v) up to u_max.
/// `domain` is the set factors are drawn from (normally the nonunits).
/// Beyond `budget` multisets every verdict is inconclusive.
AbsorbingProfile absorbing_profile(const FiniteHyperring& ring, const ElementSet& domain,
                                   std::span<const AbsorbingTarget> targets, unsigned u_max,
                                   std::uint64_t budget = kDefaultTupleBudget);

/// Re-checks a failing absorbing witness {v-part, remainder} from scratch.
bool replay_absorbing(const FiniteHyperring& ring, const ElementSet& domain,
                      const AbsorbingTarget& target, Absorbing kind, const Witness& w);
/// Re-checks a failing prime/primary witness {{x}, {y}}; pass rad = P for prime.
bool replay_pair(const FiniteHyperring& ring, const ElementSet& p, const ElementSet& rad,
                 const Witness& w);

/// The four clauses of the (v+1, v) characterization.
struct V1VReport {
    bool absorbing = false;   ///< (v+1, v)-absorbing primary
    bool colon = false;       ///< (P : a1 o ... o av) within rad(P) whenever the product escapes P
    bool ideal_factor = false;///< a1 o ... o av o Q within P forces the product in P or Q in rad(P)
    bool ideal_product = false;///< P1 o ... o Pv o Pv+1 within P forces P1..Pv in P or Pv+1 in rad(P)
    std::vector<std::string> failures;

    [[nodiscard]] bool agree() const {
        return absorbing == colon && colon == ideal_factor && ideal_factor == ideal_product;
    }
};

V1VReport check_v1v_characterization(const FiniteHyperring& ring, const IdealLattice& lattice,
                                     const HyperIdeal& p, const ElementSet& rad, unsigned v);

/// Every prime Q lies inside <a> for every a outside Q. A failing witness is
/// {Q members, {a}}.
Verdict is_divided(const FiniteHyperring& ring, const IdealLattice& lattice);

}  // namespace hyperlab

#endif  // HYPERLAB_CLASSIFY_HPP
