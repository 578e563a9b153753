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
 * Hyperideals of a finite hyperring: generation, the full lattice, colon
 * ideals, both radicals, and the C / strong C conditions.
 */

#ifndef HYPERLAB_IDEALS_HPP
#define HYPERLAB_IDEALS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlab/hyperring.hpp"
#include "hyperlab/verdict.hpp"

namespace hyperlab {

/// A subset closed under subtraction and absorbing r o x for every r.
struct HyperIdeal {
    ElementSet members;

    /// Throws UsageError unless `members` is a hyperideal of `ring`.
    static HyperIdeal checked(const FiniteHyperring& ring, const ElementSet& members);

    [[nodiscard]] bool proper(const FiniteHyperring& ring) const { return members != ring.carrier(); }

    friend bool operator==(const HyperIdeal&, const HyperIdeal&) = default;
};

[[nodiscard]] bool is_hyperideal(const FiniteHyperring& ring, const ElementSet& s);

/// Least hyperideal containing `s`.
HyperIdeal generate(const FiniteHyperring& ring, const ElementSet& s);

struct IdealLattice {
    /// Every hyperideal, ordered by size and then by member bits.
    std::vector<HyperIdeal> all;
    std::vector<std::size_t> primes;
    std::vector<std::size_t> maximals;
    ElementSet jacobson;
    bool local = false;

    [[nodiscard]] std::optional<std::size_t> index_of(const ElementSet& members) const;
    [[nodiscard]] bool is_prime(std::size_t i) const;
    [[nodiscard]] bool is_maximal(std::size_t i) const;
};

IdealLattice enumerate_hyperideals(const FiniteHyperring& ring);

/// Proper and x o y within P forces x or y into P.
[[nodiscard]] bool is_prime_ideal(const FiniteHyperring& ring, const ElementSet& p);

/// (B2 : B1) = {a : a o b within B2 for every b in B1}.
HyperIdeal colon(const FiniteHyperring& ring, const HyperIdeal& b2, const ElementSet& b1);

/// Intersection of the primes containing B, or the whole carrier if none do.
ElementSet radical_prime_intersection(const FiniteHyperring& ring, const IdealLattice& lattice,
                                      const HyperIdeal& b);

/// {a : a^k within B for some k}. Each power sequence is followed until it
/// repeats, so the answer is exact rather than bounded.
ElementSet radical_nilpotent(const FiniteHyperring& ring, const ElementSet& b);

/// Every distinct product set a1 o ... o ak (k >= 1) reachable in the ring,
/// with back-pointers to recover a generating tuple.
struct ProductFamily {
    struct Node {
        ElementSet set;
        std::int64_t parent = -1;
        Element factor = 0;
    };
    std::vector<Node> nodes;
    /// False when the budget stopped the closure before a fixed point.
    bool complete = true;

    [[nodiscard]] std::vector<Element> tuple(std::size_t index) const;
};

inline constexpr std::size_t kDefaultFamilyBudget = std::size_t{1} << 20;

ProductFamily product_family(const FiniteHyperring& ring,
                             std::size_t budget = kDefaultFamilyBudget);

/// A product meeting B lies inside B.
Verdict is_C_hyperideal(const FiniteHyperring& ring, const ElementSet& b);
Verdict is_C_hyperideal(const ProductFamily& family, const ElementSet& b);

/// A finite sum of products meeting B lies inside B. Decided exactly: this
/// holds iff every product set sits inside a single additive coset of B.
/// A failing witness lists the summands (one product tuple per part).
Verdict is_strong_C_hyperideal(const FiniteHyperring& ring, const ElementSet& b);
Verdict is_strong_C_hyperideal(const FiniteHyperring& ring, const ProductFamily& family,
                               const ElementSet& b);

/// Sum of the product sets named by the witness parts.
ElementSet witness_sum(const FiniteHyperring& ring, const Witness& w);

/// Hyperideal generated by all p o q, p in P, q in Q.
HyperIdeal ideal_product(const FiniteHyperring& ring, const HyperIdeal& p, const HyperIdeal& q);

}  // namespace hyperlab

#endif  // HYPERLAB_IDEALS_HPP
