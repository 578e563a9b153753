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
 * The integer hyperring Z_Phi: a o b = { a*x*b : x in Phi } over Z, with
 * principal hyperideals dZ. Decisions over Z are bounded by a window W.
 */

#ifndef HYPERLAB_ZPHI_HPP
#define HYPERLAB_ZPHI_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperlab/classify.hpp"

namespace hyperlab::zphi {

using BigInt = boost::multiprecision::cpp_int;
using IntProductSet = std::set<BigInt>;
using IntWitness = BasicWitness<long long>;
using IntVerdict = BasicVerdict<long long>;

/// Which integers count as units when deciding the absorbing properties.
enum class UnitConvention {
    /// +1 and -1 are units, as in Z itself.
    integer,
    /// Units per the hyperring definition: none unless 1 or -1 is in Phi.
    definition,
};

class ZPhiRing {
public:
    /// Throws ParameterError on fewer than two entries, a zero entry or a duplicate.
    explicit ZPhiRing(std::vector<long long> phi,
                      UnitConvention units = UnitConvention::integer);

    [[nodiscard]] const std::vector<long long>& phi() const { return phi_; }
    /// e with a in e o a for every a; exists only when 1 or -1 is in Phi.
    [[nodiscard]] std::optional<long long> identity() const;
    [[nodiscard]] bool is_unit(long long a) const;
    [[nodiscard]] UnitConvention units() const { return units_; }

private:
    std::vector<long long> phi_;
    UnitConvention units_;
};

/// x1*...*xk * w for every product w of k-1 entries of Phi. Throws UsageError
/// on an empty sequence.
IntProductSet int_product(const ZPhiRing& ring, std::span<const long long> xs);

enum class Membership { subset, disjoint, mixed };

std::string_view to_string(Membership m);

/// Classifies `s` against dZ.
Membership principal_membership(long long d, const IntProductSet& s);

struct RadicalProfile {
    struct Entry {
        long long p = 0;
        unsigned e = 0;  ///< valuation of d at p
        unsigned m = 0;  ///< least valuation at p over Phi
    };
    std::vector<Entry> primes;

    /// Product of the primes of d that every Phi entry misses; rad(dZ) = rZ.
    [[nodiscard]] long long radical_generator() const;
};

/// Throws UsageError unless d >= 1.
RadicalProfile radical_profile(const ZPhiRing& ring, long long d);

/// Some power a^n lies inside dZ. Decided by valuations: v_p(a) + m_p >= 1
/// for every prime p dividing d.
bool radical_membership(const ZPhiRing& ring, long long d, long long a);

/// Reference answer computed from explicit power sets a^1 .. a^n_max.
bool radical_membership_by_powers(const ZPhiRing& ring, long long d, long long a,
                                  unsigned n_max = 20);

inline constexpr std::uint64_t kDefaultWindowBudget = 200'000'000;

/// Searches nonunit multisets with entries in [1, W] (signs and zero cannot
/// produce a counterexample) in order of largest entry, then lexicographically.
/// A witness is {v-part, remainder}. With no counterexample the status is
/// inconclusive: the search says nothing about entries beyond W.
IntVerdict bounded_uv_check(const ZPhiRing& ring, long long d, UVParams uv, long long window,
                            Absorbing kind, std::uint64_t budget = kDefaultWindowBudget);

/// Re-checks an integer witness with exact product sets.
bool replay(const ZPhiRing& ring, long long d, Absorbing kind, const IntWitness& w);

/// Generator of d1Z intersected with d2Z ...: the least common multiple.
/// Throws UsageError on an empty list or a generator below 1.
long long ideal_intersection(std::span<const long long> ds);

/// Hyperideal generated by d inside [-window, window], computed by closing
/// {d} under subtraction and absorption of r o x for |r| <= window.
std::vector<long long> windowed_closure(const ZPhiRing& ring, long long d, long long window);

}  // namespace hyperlab::zphi

#endif  // HYPERLAB_ZPHI_HPP
