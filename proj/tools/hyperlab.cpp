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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlab/harness.hpp"
#include "hyperlab/zphi.hpp"

namespace {

using namespace hyperlab;
using Json = nlohmann::ordered_json;

enum class Format { text, jsonl };

struct Options {
    Format format = Format::text;
    std::string out;
    bool timing = false;
};

/// One output line: a verdict in text or as a JSON record.
struct Record {
    std::string ring;
    std::string ideal;
    std::string property;
    Json params = Json::object();
    std::string status;
    std::string witness;
    std::string clause;
    std::string space;
    std::uint64_t tested = 0;
    std::optional<double> millis;
    Json extra = Json::object();
};

class Emitter {
public:
    explicit Emitter(const Options& o) : opts_(o) {
        if (!o.out.empty()) {
            file_ = std::make_unique<std::ofstream>(o.out);
            if (!*file_) throw UsageError("cannot open " + o.out);
        }
    }

    std::ostream& os() { return file_ ? *file_ : std::cout; }
    [[nodiscard]] bool text() const { return opts_.format == Format::text; }
    [[nodiscard]] bool timing() const { return opts_.timing; }

    void emit(const Record& r) {
        if (text()) {
            os() << r.property;
            if (!r.params.empty()) os() << ' ' << r.params.dump();
            if (!r.ring.empty()) os() << " ring=" << r.ring;
            if (!r.ideal.empty()) os() << " ideal=" << r.ideal;
            os() << ": " << r.status;
            if (!r.witness.empty()) os() << " witness " << r.witness;
            if (!r.clause.empty()) os() << " (" << r.clause << ')';
            if (!r.space.empty()) os() << " [" << r.space << ", tested " << r.tested << ']';
            if (r.millis) os() << ' ' << *r.millis << " ms";
            os() << '\n';
            return;
        }
        Json j;
        j["ring"] = r.ring;
        j["ideal"] = r.ideal;
        j["property"] = r.property;
        j["params"] = r.params;
        j["status"] = r.status;
        j["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
        j["clause"] = r.clause.empty() ? Json(nullptr) : Json(r.clause);
        j["space"] = r.space;
        j["tested"] = r.tested;
        j["millis"] = r.millis ? Json(*r.millis) : Json(nullptr);
        for (auto& [k, v] : r.extra.items()) j[k] = v;
        os() << j.dump() << '\n';
    }

    void line(const std::string& s) {
        if (text()) os() << s << '\n';
    }

private:
    Options opts_;
    std::unique_ptr<std::ofstream> file_;
};

class Stopwatch {
public:
    [[nodiscard]] double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <typename T>
void fill(Record& r, const BasicVerdict<T>& v) {
    r.status = std::string(to_string(v.status));
    if (v.witness) {
        r.witness = render_witness(*v.witness);
        r.clause = v.witness->clause;
    }
    r.space = v.space;
    r.tested = v.tested;
}

Witness parse_witness(const std::string& text) {
    Witness w;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = text.find('|', start);
        const std::string part = text.substr(start, bar == std::string::npos ? bar : bar - start);
        std::vector<Element> xs;
        std::size_t pos = 0;
        while (pos < part.size()) {
            std::size_t used = 0;
            unsigned long x = 0;
            try {
                x = std::stoul(part.substr(pos), &used);
            } catch (const std::logic_error&) {
                throw UsageError("bad witness '" + text + "'");
            }
            xs.push_back(static_cast<Element>(x));
            pos += used;
            while (pos < part.size() && (part[pos] == ',' || part[pos] == ' ')) ++pos;
        }
        if (xs.empty()) throw UsageError("empty part in witness '" + text + "'");
        w.parts.push_back(std::move(xs));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return w;
}

// --- subcommands ---------------------------------------------------------

int run_validate(Emitter& out, const std::string& ring_spec) {
    Stopwatch sw;
    const RingPtr ring = harness::parse_ring(ring_spec);
    const ValidationReport rep = validate(*ring);
    Record r{ring->label(), "", "validate"};
    r.status = rep.ok() ? "holds" : "fails";
    if (!rep.ok()) {
        const AxiomViolation& v = rep.violations.front();
        for (Element x : v.witness) r.witness += (r.witness.empty() ? "" : ",") + std::to_string(x);
        r.clause = v.axiom + ": " + v.detail;
    }
    r.space = "all axioms over " + std::to_string(ring->size()) + " elements";
    r.extra["strongly_distributive"] = rep.strongly_distributive;
    r.extra["violations"] = rep.violations.size();
    if (out.timing()) r.millis = sw.millis();
    out.emit(r);
    for (std::size_t i = 1; i < rep.violations.size(); ++i)
        out.line("  also " + rep.violations[i].axiom + ": " + rep.violations[i].detail);
    return rep.ok() ? 0 : 1;
}

int run_ideals(Emitter& out, const std::string& ring_spec) {
    const RingPtr ring = harness::parse_ring(ring_spec);
    const FiniteHyperring& A = *ring;
    const IdealLattice lattice = enumerate_hyperideals(A);
    const ProductFamily family = product_family(A);
    const UnitReport units = unit_report(A);
    out.line(A.label() + ": " + std::to_string(lattice.all.size()) + " hyperideals, identities " +
             to_string(units.identities) + ", units " + to_string(units.units) +
             (lattice.local ? ", local" : ""));
    for (std::size_t i = 0; i < lattice.all.size(); ++i) {
        const HyperIdeal& I = lattice.all[i];
        Record r{A.label(), to_list(I.members), "hyperideal"};
        r.status = "holds";
        r.extra["proper"] = I.proper(A);
        r.extra["prime"] = lattice.is_prime(i);
        r.extra["maximal"] = lattice.is_maximal(i);
        r.extra["c"] = std::string(to_string(is_C_hyperideal(family, I.members).status));
        r.extra["strong_c"] =
            std::string(to_string(is_strong_C_hyperideal(A, family, I.members).status));
        r.extra["rad"] = to_list(radical_prime_intersection(A, lattice, I));
        if (out.text()) {
            out.os() << "  " << to_string(I.members);
            for (auto& [k, v] : r.extra.items()) out.os() << ' ' << k << '=' << v.dump();
            out.os() << '\n';
        } else {
            out.emit(r);
        }
    }
    return 0;
}

struct CheckArgs {
    std::string ring;
    std::string ideal;
    std::string prop;
    unsigned u = 2;
    unsigned v = 1;
    std::string i_ideal;
    std::string rad = "prime";
    std::string replay;
};

int run_check(Emitter& out, const CheckArgs& a) {
    Stopwatch sw;
    const RingPtr ring = harness::parse_ring(a.ring);
    const FiniteHyperring& A = *ring;
    const HyperIdeal P = HyperIdeal::checked(A, parse_element_set(a.ideal));
    const IdealLattice lattice = enumerate_hyperideals(A);
    const ElementSet rad = a.rad == "prime" ? radical_prime_intersection(A, lattice, P)
                                            : radical_nilpotent(A, P.members);
    const UVParams uv{a.u, a.v};
    const ElementSet nonunits = unit_report(A).nonunits;

    Record r{A.label(), to_list(P.members), a.prop};
    Verdict verdict;
    std::optional<AbsorbingTarget> target;
    Absorbing kind = Absorbing::primary;
    bool pair = false;
    const bool needs_proper = a.prop != "c" && a.prop != "strong-c" && a.prop != "divided";
    if (needs_proper && !P.proper(A)) throw UsageError("property " + a.prop + " needs a proper hyperideal");

    if (a.prop == "prime") {
        verdict = is_prime(A, P);
        pair = true;
    } else if (a.prop == "primary") {
        verdict = is_primary(A, P, rad);
        pair = true;
    } else if (a.prop == "c") {
        verdict = is_C_hyperideal(A, P.members);
    } else if (a.prop == "strong-c") {
        verdict = is_strong_C_hyperideal(A, P.members);
    } else if (a.prop == "uv-prime") {
        uv.check();
        r.params = {{"u", a.u}, {"v", a.v}};
        verdict = is_uv_absorbing_prime(A, P, uv);
        target = AbsorbingTarget{P.members, P.members, {}};
        kind = Absorbing::prime;
    } else if (a.prop == "uv-primary") {
        uv.check();
        r.params = {{"u", a.u}, {"v", a.v}, {"rad", a.rad}};
        verdict = is_uv_absorbing_primary(A, P, rad, uv);
        target = AbsorbingTarget{P.members, rad, {}};
    } else if (a.prop == "uv-i-primary") {
        uv.check();
        if (a.i_ideal.empty()) throw UsageError("uv-i-primary needs --i");
        const HyperIdeal I = HyperIdeal::checked(A, parse_element_set(a.i_ideal));
        r.params = {{"u", a.u}, {"v", a.v}, {"rad", a.rad}, {"i", to_list(I.members)}};
        verdict = is_uv_absorbing_I_primary(A, P, I, rad, uv);
        target = AbsorbingTarget{P.members, rad, ideal_product(A, I, P).members};
    } else if (a.prop == "1-absorbing") {
        r.params = {{"rad", a.rad}};
        verdict = is_1_absorbing_primary(A, P, rad);
        target = AbsorbingTarget{P.members, rad, {}};
    } else if (a.prop == "divided") {
        verdict = is_divided(A, lattice);
    } else if (a.prop == "v1v") {
        r.params = {{"v", a.v}, {"rad", a.rad}};
        const V1VReport rep = check_v1v_characterization(A, lattice, P, rad, a.v);
        r.status = rep.agree() ? "holds" : "fails";
        r.space = "four equivalent conditions";
        r.extra["absorbing"] = rep.absorbing;
        r.extra["colon"] = rep.colon;
        r.extra["ideal_factor"] = rep.ideal_factor;
        r.extra["ideal_product"] = rep.ideal_product;
        for (const auto& f : rep.failures) r.clause += (r.clause.empty() ? "" : "; ") + f;
        if (out.timing()) r.millis = sw.millis();
        out.emit(r);
        return rep.agree() ? 0 : 1;
    } else {
        throw UsageError("unknown property '" + a.prop + "'");
    }
    fill(r, verdict);

    if (!a.replay.empty()) {
        const Witness w = parse_witness(a.replay);
        bool ok = false;
        if (target)
            ok = replay_absorbing(A, nonunits, *target, kind, w);
        else if (pair)
            ok = replay_pair(A, P.members, a.prop == "prime" ? P.members : rad, w);
        else
            throw UsageError("--replay is not available for " + a.prop);
        r.extra["replay"] = ok;
        if (out.timing()) r.millis = sw.millis();
        out.emit(r);
        out.line(std::string("replay ") + a.replay + ": " + (ok ? "valid counterexample" : "not a counterexample"));
        return ok ? 1 : 0;
    }
    if (out.timing()) r.millis = sw.millis();
    out.emit(r);
    return verdict.fails() ? 1 : 0;
}

struct SweepArgs {
    unsigned min_n = 2;
    unsigned max_n = 12;
    unsigned u_max = 5;
    std::vector<unsigned> phi_sizes{2, 3};
    std::size_t matrix_cap = 81;
    bool no_constructions = false;
    unsigned workers = 0;
    std::uint64_t budget = kDefaultTupleBudget;
};

int run_sweep(Emitter& out, const SweepArgs& a) {
    Stopwatch sw;
    harness::RingFamilySpec spec;
    spec.moduli.clear();
    for (unsigned n = a.min_n; n <= a.max_n; ++n) spec.moduli.push_back(n);
    spec.phi_sizes = a.phi_sizes;
    spec.u_max = a.u_max;
    spec.matrix_cap = a.matrix_cap;
    spec.constructions = !a.no_constructions;
    spec.tuple_budget = a.budget;
    unsigned workers = a.workers;
    if (workers == 0) {
        if (const char* env = std::getenv("HYPERLAB_WORKERS")) workers = static_cast<unsigned>(std::stoul(env));
    }
    const harness::SuiteReport rep = harness::run_theorem_suite(spec, {}, std::max(1U, workers));
    const double ms = sw.millis();

    for (const auto& t : rep.tallies) {
        Record r{"", "", t.name};
        r.status = t.violations ? "fails" : (t.inconclusive ? "inconclusive" : "holds");
        r.space = "sweep";
        r.tested = t.checked;
        if (!t.examples.empty()) r.witness = t.examples.front();
        r.extra = {{"vacuous", t.vacuous},     {"violations", t.violations},
                   {"skipped", t.skipped},     {"inconclusive", t.inconclusive},
                   {"outside", t.outside},     {"outside_failures", t.outside_failures},
                   {"differences", t.differences}};
        if (out.text()) {
            out.os() << t.name << ": " << r.status << " checked=" << t.checked
                     << " vacuous=" << t.vacuous << " violations=" << t.violations
                     << " skipped=" << t.skipped << " inconclusive=" << t.inconclusive
                     << " outside=" << t.outside << '/' << t.outside_failures;
            if (t.differences) out.os() << " differences=" << t.differences;
            out.os() << '\n';
            for (const auto& e : t.examples) out.os() << "  violation: " << e << '\n';
            for (const auto& e : t.notes) out.os() << "  note: " << e << '\n';
        } else {
            out.emit(r);
        }
    }
    Record s{"", "", "sweep-summary"};
    s.status = rep.violations() || rep.construction_failures() ? "fails"
                                                               : (rep.complete ? "holds" : "inconclusive");
    s.space = std::to_string(rep.rings) + " rings, " + std::to_string(rep.ideals) + " hyperideals";
    s.tested = rep.rings;
    s.params = {{"min_n", a.min_n}, {"max_n", a.max_n}, {"u_max", a.u_max}};
    s.extra = {{"violations", rep.violations()},
               {"construction_failures", rep.construction_failures()},
               {"complete", rep.complete}};
    if (out.timing()) s.millis = ms;
    out.emit(s);
    return s.status == "fails" ? 1 : 0;
}

struct ZphiArgs {
    std::vector<long long> phi;
    long long d = 0;
    std::string prop = "uv-primary";
    unsigned u = 2;
    unsigned v = 1;
    long long window = 10;
    std::string units = "integer";
    std::uint64_t budget = zphi::kDefaultWindowBudget;
};

int run_zphi(Emitter& out, const ZphiArgs& a) {
    Stopwatch sw;
    const zphi::ZPhiRing ring(a.phi, a.units == "integer" ? zphi::UnitConvention::integer
                                                          : zphi::UnitConvention::definition);
    const Absorbing kind = a.prop == "uv-prime" ? Absorbing::prime : Absorbing::primary;
    const UVParams uv{a.u, a.v};
    uv.check();
    const zphi::IntVerdict v = zphi::bounded_uv_check(ring, a.d, uv, a.window, kind, a.budget);
    std::string phi;
    for (long long x : a.phi) phi += (phi.empty() ? "" : ",") + std::to_string(x);
    Record r{"Z_{" + phi + "}", std::to_string(a.d) + "Z", a.prop};
    r.params = {{"u", a.u}, {"v", a.v}, {"window", a.window}, {"units", a.units}};
    fill(r, v);
    if (v.witness) {
        r.extra["replay"] = zphi::replay(ring, a.d, kind, *v.witness);
        std::string flat;
        for (long long x : v.witness->flat()) flat += (flat.empty() ? "" : ",") + std::to_string(x);
        r.extra["tuple"] = flat;
    }
    if (out.timing()) r.millis = sw.millis();
    out.emit(r);
    return v.fails() ? 1 : 0;
}

int run_golden(Emitter& out, long long window) {
    Stopwatch sw;
    const auto rows = harness::run_golden_examples(window);
    bool all = true;
    for (const auto& row : rows) {
        all = all && row.pass;
        if (out.text()) {
            out.os() << (row.pass ? "PASS " : "FAIL ") << row.example << ": " << row.check
                     << " expected " << row.expected << ", got " << row.actual;
            if (!row.note.empty()) out.os() << " (" << row.note << ')';
            out.os() << '\n';
        } else {
            Record r{"Z_{2,3}", "", "golden:" + row.check};
            r.status = row.pass ? "holds" : "fails";
            r.space = row.example;
            r.extra = {{"expected", row.expected}, {"actual", row.actual}, {"note", row.note}};
            out.emit(r);
        }
    }
    if (out.timing()) out.line("golden: " + std::to_string(sw.millis()) + " ms");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperlab: hyperideals of finite and integer multiplicative hyperrings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    std::string format = "text";
    app.add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
    app.add_option("--out", opts.out, "write records to a file");
    app.add_flag("--timing", opts.timing, "report elapsed milliseconds");

    std::string ring_spec;
    auto* validate_cmd = app.add_subcommand("validate", "check the hyperring axioms");
    validate_cmd->add_option("--ring", ring_spec, "z<n>:<phi> or a JSON file")->required();

    auto* ideals_cmd = app.add_subcommand("ideals", "list the hyperideal lattice");
    ideals_cmd->add_option("--ring", ring_spec, "z<n>:<phi> or a JSON file")->required();

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "decide one property of one hyperideal");
    check_cmd->add_option("--ring", check.ring, "z<n>:<phi> or a JSON file")->required();
    check_cmd->add_option("--ideal", check.ideal, "members, e.g. 0,4")->required();
    check_cmd->add_option("--prop", check.prop, "property")
        ->required()
        ->check(CLI::IsMember({"prime", "primary", "c", "strong-c", "uv-prime", "uv-primary",
                               "uv-i-primary", "1-absorbing", "divided", "v1v"}));
    check_cmd->add_option("--u", check.u, "u");
    check_cmd->add_option("--v", check.v, "v");
    check_cmd->add_option("--i", check.i_ideal, "the hyperideal I for uv-i-primary");
    check_cmd->add_option("--rad", check.rad, "radical: prime or nilpotent")
        ->check(CLI::IsMember({"prime", "nilpotent"}));
    check_cmd->add_option("--replay", check.replay, "replay a witness such as 2,2|3");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "run the theorem suite over Z_n/Phi rings");
    sweep_cmd->add_option("--min-n", sweep.min_n)->check(CLI::Range(1U, 256U));
    sweep_cmd->add_option("--max-n", sweep.max_n)->check(CLI::Range(1U, 256U));
    sweep_cmd->add_option("--u-max", sweep.u_max)->check(CLI::Range(2U, 8U));
    sweep_cmd->add_option("--phi-sizes", sweep.phi_sizes)->delimiter(',');
    sweep_cmd->add_option("--matrix-cap", sweep.matrix_cap);
    sweep_cmd->add_flag("--no-constructions", sweep.no_constructions);
    sweep_cmd->add_option("--workers", sweep.workers, "threads (default HYPERLAB_WORKERS or 1)");
    sweep_cmd->add_option("--budget", sweep.budget, "tuple budget per ring");

    ZphiArgs z;
    auto* zphi_cmd = app.add_subcommand("zphi", "bounded absorbing checks of dZ in Z_Phi");
    zphi_cmd->add_option("--phi", z.phi, "Phi entries, e.g. 2,3")->required()->delimiter(',');
    zphi_cmd->add_option("--d", z.d, "generator d >= 1")->required();
    zphi_cmd->add_option("--prop", z.prop)->check(CLI::IsMember({"uv-primary", "uv-prime"}));
    zphi_cmd->add_option("--u", z.u);
    zphi_cmd->add_option("--v", z.v);
    zphi_cmd->add_option("--window", z.window, "largest factor searched");
    zphi_cmd->add_option("--units", z.units, "integer or definition")
        ->check(CLI::IsMember({"integer", "definition"}));
    zphi_cmd->add_option("--budget", z.budget, "products examined before giving up");

    long long golden_window = 50;
    auto* golden_cmd = app.add_subcommand("golden", "replay the worked integer examples");
    golden_cmd->add_option("--window", golden_window);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opts.format = format == "jsonl" ? Format::jsonl : Format::text;

    try {
        Emitter out(opts);
        if (*validate_cmd) return run_validate(out, ring_spec);
        if (*ideals_cmd) return run_ideals(out, ring_spec);
        if (*check_cmd) return run_check(out, check);
        if (*sweep_cmd) return run_sweep(out, sweep);
        if (*zphi_cmd) return run_zphi(out, z);
        if (*golden_cmd) return run_golden(out, golden_window);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
