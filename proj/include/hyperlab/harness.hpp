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
 * Batch verification: ring families, per-ring analysis, the theorem suite,
 * the golden integer examples, and report records.
 */

#ifndef HYPERLAB_HARNESS_HPP
#define HYPERLAB_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/construct.hpp"

namespace hyperlab::harness {

/// Parses `z<n>:<c1>,<c2>,...` or, failing that, reads a JSON file with
/// fields n, add, hmul and optionally zero. Throws UsageError or
/// StructuralError.
RingPtr parse_ring(const std::string& spec);

struct RingFamilySpec {
    std::vector<unsigned> moduli{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<unsigned> phi_sizes{2, 3};
    /// Residues Phi is drawn from; all of 0..n-1 when empty.
    std::vector<long long> phi_universe;
    unsigned u_max = 5;
    std::uint64_t tuple_budget = kDefaultTupleBudget;
    /// Largest M_2(A) built for the matrix checks.
    std::size_t matrix_cap = 81;
    bool constructions = true;

    /// Throws ParameterError.
    void check() const;
};

struct FamilyMember {
    RingPtr ring;
    /// Labels of every Phi that induced the same tables.
    std::vector<std::string> aliases;
};

/// Z_n/Phi rings of the family, deduplicated by their tables, in order of n
/// and then of Phi.
std::vector<FamilyMember> enumerate_family(const RingFamilySpec& spec);

/// Replaceable deciders, so tests can check that the suite notices a broken one.
struct Deciders {
    std::function<AbsorbingProfile(const FiniteHyperring&, const ElementSet&,
                                   std::span<const AbsorbingTarget>, unsigned, std::uint64_t)>
        profile = [](const FiniteHyperring& r, const ElementSet& d,
                     std::span<const AbsorbingTarget> t, unsigned u, std::uint64_t b) {
            return absorbing_profile(r, d, t, u, b);
        };
};

struct IdealFacts {
    HyperIdeal ideal;
    bool proper = false;
    ElementSet rad_prime;
    ElementSet rad_nil;
    Verdict c;
    Verdict strong_c;
    /// Only for proper ideals.
    Verdict prime;
    Verdict primary;
    /// Row in the absorbing profiles, for proper ideals.
    std::optional<std::size_t> target;
};

struct RingAnalysis {
    RingPtr ring;
    UnitReport units;
    IdealLattice lattice;
    ProductFamily family;
    std::vector<IdealFacts> ideals;  ///< parallel to lattice.all
    /// Factors drawn from the nonunits, rad = prime-intersection radical.
    AbsorbingProfile profile;
    bool all_ideals_c = true;

    [[nodiscard]] const Verdict& absorbing(std::size_t ideal, UVParams uv,
                                           Absorbing kind = Absorbing::primary) const;
};

RingAnalysis analyze(const RingPtr& ring, unsigned u_max, std::uint64_t budget,
                     const Deciders& deciders = {});

struct Tally {
    std::string name;
    std::uint64_t checked = 0;      ///< instances whose hypothesis held
    std::uint64_t vacuous = 0;      ///< instances where the hypothesis failed
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;      ///< gate of the statement not met
    std::uint64_t inconclusive = 0;
    std::uint64_t outside = 0;      ///< hypothesis held on a ring without identity
    std::uint64_t outside_failures = 0;
    /// Comparisons that are recorded without an asserted outcome and came out unequal.
    std::uint64_t differences = 0;
    std::vector<std::string> examples;  ///< first few violations
    std::vector<std::string> notes;     ///< first few skips or outside failures
};

struct SuiteReport {
    std::vector<Tally> tallies;
    std::uint64_t rings = 0;
    std::uint64_t ideals = 0;
    bool complete = true;

    /// Violations of theorem statements; construction tallies excluded.
    [[nodiscard]] std::uint64_t violations() const;
    /// Constructions that failed validation (tallies named construction-*).
    [[nodiscard]] std::uint64_t construction_failures() const;
    [[nodiscard]] const Tally* find(const std::string& name) const;
};

SuiteReport run_theorem_suite(const RingFamilySpec& spec, const Deciders& deciders = {},
                              unsigned workers = 1);
/// Suite over explicitly given rings.
SuiteReport run_theorem_suite(const std::vector<RingPtr>& rings, const RingFamilySpec& spec,
                              const Deciders& deciders = {}, unsigned workers = 1);

struct GoldenRow {
    std::string example;
    std::string check;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string note;
};

std::vector<GoldenRow> run_golden_examples(long long window = 50);

}  // namespace hyperlab::harness

#endif  // HYPERLAB_HARNESS_HPP
