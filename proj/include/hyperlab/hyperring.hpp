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
 * Finite commutative multiplicative hyperrings: an abelian group (A, +)
 * together with a set-valued multiplication. Tables are fully materialized
 * (n*n product sets) since every checker in the library is read-heavy.
 */

#ifndef HYPERLAB_HYPERRING_HPP
#define HYPERLAB_HYPERRING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlab/element_set.hpp"
#include "hyperlab/errors.hpp"

namespace hyperlab {

/// Untrusted tables as read from a config file.
struct RawTables {
    std::size_t n = 0;
    std::vector<std::vector<long long>> add;
    std::vector<std::vector<std::vector<long long>>> hmul;
    std::optional<long long> zero;
};

class FiniteHyperring {
public:
    /// Checks shape and ranges only; axioms are checked by validate().
    /// Throws StructuralError.
    static FiniteHyperring from_tables(const RawTables& raw, std::string label = {});

    /// Z_n with a o b = { a*x*b mod n : x in phi }. Residues are reduced mod n
    /// and deduplicated; at least two distinct residues are required.
    static FiniteHyperring zn_phi(unsigned n, std::span<const long long> phi);

    /// Builds directly from validated-shape tables (used by constructions).
    FiniteHyperring(std::size_t n, Element zero, std::vector<Element> add,
                    std::vector<ElementSet> mul, std::string label);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] Element zero() const { return zero_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    [[nodiscard]] Element add(Element a, Element b) const { return add_[a * n_ + b]; }
    /// Additive inverse; equals `a` itself when the table has no inverse for it
    /// (validate() reports that case).
    [[nodiscard]] Element neg(Element a) const { return neg_[a]; }
    [[nodiscard]] Element sub(Element a, Element b) const { return add(a, neg(b)); }

    [[nodiscard]] const ElementSet& mul(Element a, Element b) const { return mul_[a * n_ + b]; }
    /// Set-extended product S o b.
    [[nodiscard]] ElementSet mul(const ElementSet& s, Element b) const;
    [[nodiscard]] ElementSet mul(const ElementSet& s, const ElementSet& t) const;
    /// Setwise sum S + T.
    [[nodiscard]] ElementSet sum(const ElementSet& s, const ElementSet& t) const;
    [[nodiscard]] ElementSet negate(const ElementSet& s) const;
    [[nodiscard]] ElementSet carrier() const { return ElementSet::range(n_); }

    /// Left fold x1 o x2 o ... o xk. Throws UsageError on an empty sequence.
    [[nodiscard]] ElementSet hyperproduct(std::span<const Element> xs) const;
    /// a^k as a k-fold hyperproduct.
    [[nodiscard]] ElementSet power(Element a, std::size_t k) const;

    /// Equality of the raw tables (labels ignored).
    [[nodiscard]] bool same_tables(const FiniteHyperring& o) const;

private:
    void compute_negation();

    std::size_t n_ = 0;
    Element zero_ = 0;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    std::vector<ElementSet> mul_;
    std::string label_;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<Element> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool strongly_distributive = false;
    bool commutative = false;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Additive group laws, commutativity, associativity, sign rule and weak
/// distributivity, each failure with its violating triple.
/// With `require_commutative` false a noncommutative product is recorded in
/// the report instead of counted as a violation, and both distributive laws
/// are checked.
ValidationReport validate(const FiniteHyperring& ring, bool require_commutative = true);
/// Structural check followed by validate(). Throws StructuralError.
ValidationReport validate_hyperring(const RawTables& raw);

struct UnitReport {
    ElementSet identities;
    ElementSet units;
    ElementSet nonunits;

    [[nodiscard]] bool has_identity() const { return !identities.empty(); }
};

/// identities = {e : a in e o a for all a}; x is a unit when y o x meets the
/// identities for some y.
UnitReport unit_report(const FiniteHyperring& ring);

}  // namespace hyperlab

#endif  // HYPERLAB_HYPERRING_HPP
