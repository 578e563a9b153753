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
 * Derived hyperrings: quotients A/P, 2x2 hypermatrices M_m(A) and
 * localizations S^-1 A, plus good homomorphisms between finite hyperrings.
 * Every construction validates its result and throws ConstructionError
 * (with the offending elements in the message) instead of returning a
 * structure that breaks the axioms.
 */

#ifndef HYPERLAB_CONSTRUCT_HPP
#define HYPERLAB_CONSTRUCT_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/classify.hpp"

namespace hyperlab {

using RingPtr = std::shared_ptr<const FiniteHyperring>;

/// A map with eta(x + y) = eta(x) + eta(y) and eta(x o y) = eta(x) o eta(y) as sets.
struct GoodHom {
    RingPtr source;
    RingPtr target;
    std::vector<Element> map;

    Element operator()(Element x) const { return map[x]; }
    [[nodiscard]] ElementSet image(const ElementSet& s) const;
    [[nodiscard]] ElementSet preimage(const ElementSet& s) const;
    [[nodiscard]] ElementSet kernel() const;
    [[nodiscard]] bool surjective() const;
};

/// Exhaustive check of both homomorphism laws.
std::vector<AxiomViolation> check_good_hom(const GoodHom& h);

GoodHom identity_hom(const RingPtr& ring);

struct Quotient {
    RingPtr ring;
    GoodHom projection;
    /// Coset of each quotient element, indexed by that element.
    std::vector<ElementSet> cosets;
};

/// A/P with (a+P) o (b+P) = {c+P : c in a o b}. Throws UsageError for an
/// improper P and ConstructionError when the product depends on the
/// representatives or the result fails validation.
Quotient quotient(const RingPtr& a, const HyperIdeal& p);

inline constexpr std::size_t kDefaultMatrixCap = kMaxCarrier;

/// m x m matrices over A, encoded as base-n digits in row-major order. The
/// product of X and Y is every matrix whose (i,j) entry lies in the setwise
/// sum of x_ik o y_kj over k. Throws ParameterError for m = 0,
/// ResourceError past `cap` elements and ConstructionError when validation
/// fails (skipped when `validate_result` is false). Commutativity is not
/// required.
FiniteHyperring matrix_hyperring(const FiniteHyperring& a, unsigned m,
                                 std::size_t cap = kDefaultMatrixCap,
                                 bool validate_result = true);

Element encode_matrix(std::size_t n, std::span<const Element> entries);
std::vector<Element> decode_matrix(std::size_t n, unsigned m, Element x);
/// x in the (0,0) corner, zero elsewhere.
Element corner_matrix(const FiniteHyperring& a, unsigned m, Element x);

/// M_m(P): matrices with every entry in P. Throws ConstructionError unless
/// the result absorbs products from both sides in `ma`.
HyperIdeal embed_diagonal_ideal(const FiniteHyperring& a, const FiniteHyperring& ma,
                                const HyperIdeal& p, unsigned m);

/// Contains an identity and s o t within S for all s, t in S.
[[nodiscard]] bool is_mcs(const FiniteHyperring& ring, const ElementSet& s);

/// Least MCS containing `s` and the identity `e`.
ElementSet mcs_closure(const FiniteHyperring& ring, Element e, const ElementSet& s);

/// {e}, the closure of {e, g} for every g, the units, and A minus each prime
/// that misses e, for every identity e; deduplicated, in a fixed order.
std::vector<ElementSet> candidate_mcs(const FiniteHyperring& ring, const IdealLattice& lattice);

struct LocalizedRing {
    RingPtr ring;
    /// a -> a/1.
    GoodHom pi;
    ElementSet s;
    Element one = 0;
    /// Class of the fraction x/r, indexed by x * |A| + r (only r in S used).
    std::vector<Element> class_of;

    [[nodiscard]] Element fraction(Element x, Element r) const;
    /// S^-1 B = {x/r : x in B, r in S}.
    [[nodiscard]] ElementSet localize_set(const ElementSet& b) const;
};

/// S^-1 A with (x,r) ~ (y,s) iff t o r o y = t o s o x for some t in S.
/// Throws UsageError when S is not an MCS, and ConstructionError when ~ is
/// not transitive, a sum of fractions is not a single class, an operation
/// depends on representatives, or the result fails validation.
LocalizedRing localize(const RingPtr& a, const ElementSet& s);

/// {a : a o b within P for some b outside P}.
ElementSet gamma_set(const FiniteHyperring& ring, const ElementSet& p);

/// Outcome of one transfer implication along a good homomorphism.
struct TransferResult {
    /// Set when a gate of the implication (nonunit preservation, surjectivity,
    /// kernel inside P) does not hold.
    std::optional<std::string> skipped;
    /// The starting ideal is a (u,v)-absorbing primary C-hyperideal.
    bool hypothesis = false;
    /// The transported set is a (u,v)-absorbing primary C-hyperideal.
    bool conclusion = false;
    bool inconclusive = false;
    ElementSet transported;
    std::string detail;

    [[nodiscard]] bool violated() const {
        return !skipped && !inconclusive && hypothesis && !conclusion;
    }
};

/// eta^-1(P2) for a hyperideal P2 of the target.
TransferResult transfer_preimage(const GoodHom& h, const HyperIdeal& p2, UVParams uv);
/// eta(P1) for a hyperideal P1 of the source.
TransferResult transfer_image(const GoodHom& h, const HyperIdeal& p1, UVParams uv);

}  // namespace hyperlab

#endif  // HYPERLAB_CONSTRUCT_HPP
