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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hyperlab/harness.hpp"
#include "hyperlab/zphi.hpp"

using namespace hyperlab;
using namespace hyperlab::zphi;

namespace {

int failures = 0;

class Timer {
public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int id, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
    if (!pass) ++failures;
}

std::string seconds(double s) {
    std::ostringstream out;
    out.precision(3);
    out << s << " s";
    return out.str();
}

std::string tuple(const IntWitness& w) {
    std::string out;
    for (long long x : w.flat()) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

IntProductSet ints(std::initializer_list<long long> xs) {
    IntProductSet s;
    for (long long x : xs) s.insert(BigInt(x));
    return s;
}

void golden_products() {
    Timer t;
    const ZPhiRing r({2, 3});
    bool ok = int_product(r, std::vector<long long>{2, 3}) == ints({12, 18}) &&
              int_product(r, std::vector<long long>{2, 2}) == ints({8, 12}) &&
              int_product(r, std::vector<long long>{2, 2, 3}) == ints({48, 72, 108}) &&
              int_product(r, std::vector<long long>{2, 2, 2, 3}) == ints({192, 288, 432, 648});
    ok = ok && principal_membership(12, ints({192, 288, 432, 648})) == Membership::subset &&
         principal_membership(12, ints({8, 12})) == Membership::mixed &&
         principal_membership(12, ints({48, 72, 108})) == Membership::subset &&
         principal_membership(12, ints({12, 18})) == Membership::mixed;
    ok = ok && !radical_membership(r, 12, 2) && !radical_membership(r, 12, 3);
    const double s = t.seconds();
    report(1, ok && s < 1.0, "four product sets, four memberships against 12Z, 2 and 3 outside rad(12Z) in " +
                                 seconds(s));
}

void four_two_status() {
    Timer t;
    const ZPhiRing r({2, 3});
    const IntVerdict primary = bounded_uv_check(r, 12, {4, 2}, 50, Absorbing::primary);
    const IntVerdict prime = bounded_uv_check(r, 12, {4, 2}, 50, Absorbing::prime);
    const double s = t.seconds();
    const bool prime_ok = prime.fails() && tuple(*prime.witness) == "2,2,2,3" &&
                          replay(r, 12, Absorbing::prime, *prime.witness);
    const bool primary_ok = primary.status == Status::inconclusive;
    std::string detail = "prime variant " + std::string(to_string(prime.status));
    if (prime.witness) detail += " with " + render_witness(*prime.witness);
    detail += "; (4,2)-absorbing primary at W=50 ";
    if (primary.fails())
        detail += "found counterexample " + render_witness(*primary.witness) +
                  (replay(r, 12, Absorbing::primary, *primary.witness) ? " (replays)" : " (does not replay)");
    else
        detail += "found no counterexample (" + primary.space + ")";
    report(2, prime_ok && primary_ok && s < 300, detail + " in " + seconds(s));
}

void three_two_status() {
    Timer t;
    const ZPhiRing r({2, 3});
    bool ok = true;
    for (long long w = 3; w <= 30; ++w) {
        const IntVerdict v = bounded_uv_check(r, 12, {3, 2}, w, Absorbing::primary);
        ok = ok && v.fails() && tuple(*v.witness) == "2,2,3" && replay(r, 12, Absorbing::primary, *v.witness);
    }
    const double s = t.seconds();
    report(3, ok && s < 1.0, "(3,2)-absorbing primary fails with 2,2,3 for every W in [3, 30] in " + seconds(s));
}

void intersection() {
    const long long g = ideal_intersection(std::vector<long long>{3, 5, 7});
    const auto rows = harness::run_golden_examples(30);
    bool flagged = false;
    for (const auto& row : rows) flagged = flagged || (row.example == "3Z, 5Z, 7Z, Phi {2,4}" && row.note.find("150") != std::string::npos);
    const ZPhiRing r({2, 4});
    bool primes_ok = true;
    for (long long p : {3, 5, 7})
        primes_ok = primes_ok && bounded_uv_check(r, p, {3, 2}, 30, Absorbing::primary).status == Status::inconclusive;
    const IntVerdict v = bounded_uv_check(r, g, {3, 2}, 30, Absorbing::primary);
    const bool fails = v.fails() && replay(r, g, Absorbing::primary, *v.witness);
    std::string detail = "intersection generator " + std::to_string(g) + (flagged ? ", flagged against printed 150" : ", not flagged") +
                         "; <3>,<5>,<7> " + (primes_ok ? "no counterexample" : "refuted") + " at W=30; <" +
                         std::to_string(g) + "> " + std::string(to_string(v.status));
    if (v.witness) detail += " with " + render_witness(*v.witness);
    report(4, g == 105 && flagged && primes_ok && fails, detail);
}

void oracle_validation() {
    std::mt19937_64 rng(20260101);
    const long long primes[] = {2, 3, 5, 7};
    std::uniform_int_distribution<long long> a_dist(-100, 100);
    std::uniform_int_distribution<long long> d_dist(1, 1000);
    int instances = 0;
    int disagreements = 0;
    std::string first;
    while (instances < 10000) {
        std::vector<long long> phi;
        const std::size_t size = 2 + rng() % 2;
        while (phi.size() < size) {
            long long x = (rng() % 4 == 0) ? -1 : 1;
            const unsigned factors = rng() % 4;
            for (unsigned k = 0; k < factors; ++k) x *= primes[rng() % 4];
            if (std::find(phi.begin(), phi.end(), x) == phi.end()) phi.push_back(x);
        }
        const long long a = a_dist(rng);
        if (a == 0) continue;
        const long long d = d_dist(rng);
        const ZPhiRing r(phi);
        ++instances;
        if (radical_membership(r, d, a) != radical_membership_by_powers(r, d, a, 20)) {
            ++disagreements;
            if (first.empty()) first = " (first at a=" + std::to_string(a) + ", d=" + std::to_string(d) + ")";
        }
    }
    report(7, disagreements == 0,
           std::to_string(instances) + " random instances, " + std::to_string(disagreements) + " disagreements" + first);
}

void suite_criteria(const harness::SuiteReport& rep, double s) {
    std::uint64_t checked = 0;
    std::uint64_t vacuous = 0;
    for (const auto& tally : rep.tallies) {
        if (tally.name.rfind("construction-", 0) == 0) continue;
        checked += tally.checked;
        vacuous += tally.vacuous;
    }
    report(5, rep.violations() == 0 && rep.complete && s < 1800,
           std::to_string(rep.rings) + " rings, " + std::to_string(rep.ideals) + " hyperideals, " +
               std::to_string(checked) + " checked, " + std::to_string(vacuous) + " vacuous, " +
               std::to_string(rep.violations()) + " violations" + (rep.complete ? "" : ", incomplete") + " in " +
               seconds(s));

    const harness::Tally* c = rep.find("radical-consistency-c");
    const harness::Tally* non_c = rep.find("radical-comparison-non-c");
    report(6, c && non_c && c->checked > 0 && c->violations == 0 && non_c->checked > 0,
           std::to_string(c ? c->checked : 0) + " C-hyperideals with equal radicals, " +
               std::to_string(c ? c->violations : 0) + " unequal; " + std::to_string(non_c ? non_c->checked : 0) +
               " non-C hyperideals compared, " + std::to_string(non_c ? non_c->differences : 0) + " differ");
}

void construction_soundness(const harness::SuiteReport& rep) {
    std::string detail;
    bool ok = true;
    for (const char* name : {"construction-quotient", "construction-matrix", "construction-localization"}) {
        const harness::Tally* tally = rep.find(name);
        if (!tally) {
            ok = false;
            continue;
        }
        detail += std::string(detail.empty() ? "" : "; ") + name + " " + std::to_string(tally->checked) +
                  " instances, " + std::to_string(tally->violations) + " invalid";
        if (tally->skipped) detail += ", " + std::to_string(tally->skipped) + " construction errors with witness";
        for (const auto& e : tally->examples) detail += " [" + e + "]";
        ok = ok && tally->violations == 0;
    }
    report(8, ok, detail);
}

}  // namespace

int main() {
    golden_products();
    four_two_status();
    three_two_status();
    intersection();
    unsigned workers = 1;
    if (const char* env = std::getenv("HYPERLAB_WORKERS")) workers = static_cast<unsigned>(std::stoul(env));
    Timer t;
    const harness::SuiteReport rep = harness::run_theorem_suite(harness::RingFamilySpec{}, {}, workers);
    suite_criteria(rep, t.seconds());
    oracle_validation();
    construction_soundness(rep);
    return failures == 0 ? 0 : 1;
}
