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

#include "hyperlab/hyperring.hpp"

#include <algorithm>
#include <sstream>

namespace hyperlab {

namespace {

std::string phi_label(unsigned n, const std::vector<long long>& residues) {
    std::ostringstream out;
    out << 'z' << n << ':';
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (i) out << ',';
        out << residues[i];
    }
    return out.str();
}

}  // namespace

FiniteHyperring::FiniteHyperring(std::size_t n, Element zero, std::vector<Element> add,
                                 std::vector<ElementSet> mul, std::string label)
    : n_(n), zero_(zero), add_(std::move(add)), mul_(std::move(mul)), label_(std::move(label)) {
    if (n_ == 0 || n_ > kMaxCarrier)
        throw StructuralError("carrier size " + std::to_string(n_) + " outside 1.." +
                              std::to_string(kMaxCarrier));
    if (add_.size() != n_ * n_ || mul_.size() != n_ * n_)
        throw StructuralError("table size does not match carrier size");
    compute_negation();
}

void FiniteHyperring::compute_negation() {
    neg_.assign(n_, 0);
    for (Element a = 0; a < n_; ++a) {
        neg_[a] = a;
        for (Element b = 0; b < n_; ++b) {
            if (add(a, b) == zero_) {
                neg_[a] = b;
                break;
            }
        }
    }
}

FiniteHyperring FiniteHyperring::from_tables(const RawTables& raw, std::string label) {
    const std::size_t n = raw.n;
    if (n == 0 || n > kMaxCarrier)
        throw StructuralError("n must be in 1.." + std::to_string(kMaxCarrier));
    auto in_range = [n](long long x) { return x >= 0 && static_cast<std::size_t>(x) < n; };

    if (raw.add.size() != n) throw StructuralError("add table must have n rows");
    if (raw.hmul.size() != n) throw StructuralError("hmul table must have n rows");
    std::vector<Element> add(n * n);
    std::vector<ElementSet> mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (raw.add[a].size() != n)
            throw StructuralError("add row " + std::to_string(a) + " must have n entries");
        if (raw.hmul[a].size() != n)
            throw StructuralError("hmul row " + std::to_string(a) + " must have n entries");
        for (std::size_t b = 0; b < n; ++b) {
            if (!in_range(raw.add[a][b]))
                throw StructuralError("add(" + std::to_string(a) + "," + std::to_string(b) +
                                      ") out of range");
            add[a * n + b] = static_cast<Element>(raw.add[a][b]);
            const auto& cell = raw.hmul[a][b];
            if (cell.empty())
                throw StructuralError("hmul(" + std::to_string(a) + "," + std::to_string(b) +
                                      ") is empty");
            for (long long c : cell) {
                if (!in_range(c))
                    throw StructuralError("hmul(" + std::to_string(a) + "," + std::to_string(b) +
                                          ") has out-of-range element");
                mul[a * n + b].insert(static_cast<Element>(c));
            }
        }
    }

    Element zero = 0;
    if (raw.zero) {
        if (!in_range(*raw.zero)) throw StructuralError("zero out of range");
        zero = static_cast<Element>(*raw.zero);
    } else {
        for (Element e = 0; e < n; ++e) {
            bool identity = true;
            for (Element a = 0; a < n && identity; ++a) identity = add[e * n + a] == a;
            if (identity) {
                zero = e;
                break;
            }
        }
    }
    return FiniteHyperring(n, zero, std::move(add), std::move(mul), std::move(label));
}

FiniteHyperring FiniteHyperring::zn_phi(unsigned n, std::span<const long long> phi) {
    if (n == 0 || n > kMaxCarrier)
        throw UsageError("modulus must be in 1.." + std::to_string(kMaxCarrier));
    std::vector<long long> residues;
    for (long long x : phi) residues.push_back(((x % n) + n) % n);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    if (residues.size() < 2)
        throw UsageError("phi needs at least two distinct residues mod " + std::to_string(n));

    std::vector<Element> add(std::size_t{n} * n);
    std::vector<ElementSet> mul(std::size_t{n} * n);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            add[a * n + b] = (a + b) % n;
            for (long long x : residues) {
                auto c = static_cast<unsigned long long>(a) * static_cast<unsigned long long>(x) % n;
                mul[a * n + b].insert(static_cast<Element>(c * b % n));
            }
        }
    }
    return FiniteHyperring(n, 0, std::move(add), std::move(mul), phi_label(n, residues));
}

ElementSet FiniteHyperring::mul(const ElementSet& s, Element b) const {
    ElementSet out;
    for (Element a : s) out |= mul(a, b);
    return out;
}

ElementSet FiniteHyperring::mul(const ElementSet& s, const ElementSet& t) const {
    ElementSet out;
    for (Element b : t) out |= mul(s, b);
    return out;
}

ElementSet FiniteHyperring::sum(const ElementSet& s, const ElementSet& t) const {
    ElementSet out;
    for (Element a : s)
        for (Element b : t) out.insert(add(a, b));
    return out;
}

ElementSet FiniteHyperring::negate(const ElementSet& s) const {
    ElementSet out;
    for (Element a : s) out.insert(neg(a));
    return out;
}

ElementSet FiniteHyperring::hyperproduct(std::span<const Element> xs) const {
    if (xs.empty()) throw UsageError("hyperproduct of an empty sequence");
    for (Element x : xs)
        if (x >= n_) throw UsageError("element " + std::to_string(x) + " outside carrier");
    ElementSet acc = ElementSet::singleton(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) acc = mul(acc, xs[i]);
    return acc;
}

ElementSet FiniteHyperring::power(Element a, std::size_t k) const {
    if (k == 0) throw UsageError("power exponent must be positive");
    ElementSet acc = ElementSet::singleton(a);
    for (std::size_t i = 1; i < k; ++i) acc = mul(acc, a);
    return acc;
}

bool FiniteHyperring::same_tables(const FiniteHyperring& o) const {
    return n_ == o.n_ && zero_ == o.zero_ && add_ == o.add_ && mul_ == o.mul_;
}

ValidationReport validate(const FiniteHyperring& ring, bool require_commutative) {
    ValidationReport report;
    const auto n = static_cast<Element>(ring.size());
    const Element zero = ring.zero();
    auto fail = [&](std::string axiom, std::vector<Element> w, std::string detail) {
        report.violations.push_back({std::move(axiom), std::move(w), std::move(detail)});
    };

    for (Element a = 0; a < n; ++a) {
        if (ring.add(zero, a) != a || ring.add(a, zero) != a) {
            fail("additive-identity", {a}, "zero + a != a");
            break;
        }
    }

    [&] {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) {
                        fail("additive-associativity", {a, b, c}, "(a+b)+c != a+(b+c)");
                        return;
                    }
    }();

    [&] {
        for (Element a = 0; a < n; ++a)
            for (Element b = a + 1; b < n; ++b)
                if (ring.add(a, b) != ring.add(b, a)) {
                    fail("additive-commutativity", {a, b}, "a+b != b+a");
                    return;
                }
    }();

    bool inverses = true;
    for (Element a = 0; a < n && inverses; ++a) {
        if (ring.add(a, ring.neg(a)) != zero) {
            inverses = false;
            fail("additive-inverse", {a}, "no b with a+b = zero");
        }
    }

    bool commutative = true;
    [&] {
        for (Element a = 0; a < n; ++a)
            for (Element b = a + 1; b < n; ++b)
                if (ring.mul(a, b) != ring.mul(b, a)) {
                    commutative = false;
                    if (require_commutative) fail("commutativity", {a, b}, "a o b != b o a");
                    return;
                }
    }();

    [&] {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const ElementSet& ab = ring.mul(a, b);
                for (Element c = 0; c < n; ++c) {
                    ElementSet left = ring.mul(ab, c);
                    ElementSet right;
                    for (Element d : ring.mul(b, c)) right |= ring.mul(a, d);
                    if (left != right) {
                        fail("associativity", {a, b, c}, "(a o b) o c != a o (b o c)");
                        return;
                    }
                }
            }
    }();

    if (inverses) {
        [&] {
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b) {
                    ElementSet negated = ring.negate(ring.mul(a, b));
                    if (ring.mul(ring.neg(a), b) != negated || ring.mul(a, ring.neg(b)) != negated) {
                        fail("sign-rule", {a, b}, "(-a) o b != -(a o b)");
                        return;
                    }
                }
        }();
    }

    // (y+z) o x against y o x + z o x; the mirrored law coincides under
    // commutativity and is only checked separately when that fails.
    bool strong = true;
    [&] {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = y; z < n; ++z) {
                    ElementSet left = ring.mul(ring.add(y, z), x);
                    ElementSet right = ring.sum(ring.mul(y, x), ring.mul(z, x));
                    if (!left.subset_of(right)) {
                        strong = false;
                        fail("distributivity", {y, z, x}, "(y+z) o x not within y o x + z o x");
                        return;
                    }
                    if (left != right) strong = false;
                    if (!commutative) {
                        ElementSet left2 = ring.mul(x, ring.add(y, z));
                        ElementSet right2 = ring.sum(ring.mul(x, y), ring.mul(x, z));
                        if (!left2.subset_of(right2)) {
                            strong = false;
                            fail("distributivity", {x, y, z}, "x o (y+z) not within x o y + x o z");
                            return;
                        }
                        if (left2 != right2) strong = false;
                    }
                }
    }();
    report.strongly_distributive = strong && report.violations.empty();
    report.commutative = commutative;
    return report;
}

ValidationReport validate_hyperring(const RawTables& raw) {
    return validate(FiniteHyperring::from_tables(raw));
}

UnitReport unit_report(const FiniteHyperring& ring) {
    UnitReport r;
    const auto n = static_cast<Element>(ring.size());
    for (Element e = 0; e < n; ++e) {
        bool identity = true;
        for (Element a = 0; a < n && identity; ++a) identity = ring.mul(e, a).contains(a);
        if (identity) r.identities.insert(e);
    }
    if (r.has_identity()) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (ring.mul(y, x).intersects(r.identities)) {
                    r.units.insert(x);
                    break;
                }
    }
    r.nonunits = ring.carrier() - r.units;
    return r;
}

}  // namespace hyperlab
