// Copyright 2026 The QAM Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qam: command-line front end.
//
// Exit codes: 0 success / recognized, 1 not recognized, 2 invalid input or
// capacity, 3 scan grid does not bracket the crossover, 4 tuning target
// infeasible, 5 invariant failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qam/errors.hpp"
#include "qam/memory/memory_model.hpp"
#include "qam/memory/storage.hpp"
#include "qam/qsim/measurement.hpp"
#include "qam/qsim/serialization.hpp"
#include "qam/recall/distance.hpp"
#include "qam/recall/outcome_json.hpp"
#include "qam/recall/recall.hpp"
#include "qam/thermo/scan.hpp"
#include "qam/thermo/tune.hpp"
#include "verify.hpp"

namespace {

using namespace qam;

enum Exit : int {
    kOk = 0,
    kNotRecognized = 1,
    kInvalid = 2,
    kNoBracket = 3,
    kInfeasible = 4,
    kInvariantFailed = 5,
};

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw ValidationError("failed writing " + path);
    }
}

thermo::AverageMode parse_mode(const std::string &name, std::uint64_t n) {
    if (name == "sum") {
        return thermo::AverageMode::kSum;
    }
    if (name == "integral") {
        return thermo::AverageMode::kIntegral;
    }
    return thermo::default_mode(n);
}

// --- store ----------------------------------------------------------------

struct StoreArgs {
    std::string patterns;
    std::string out;
    std::string method = "sequential";
};

int cmd_store(const StoreArgs &a) {
    const auto model = memory::read_pattern_file(a.patterns);
    const std::size_t n = model.width();
    qsim::StateVector state = memory::memory_state_analytic(model);
    std::uint64_t gates = 0;
    if (a.method == "sequential") {
        auto r = memory::store_sequential(model);
        gates = r.gates.total;
        state = qsim::condition_and_drop(r.state, "u", 0);
    } else if (a.method == "operator") {
        const auto full = memory::memory_state_from_operator(model);
        gates = full.gates().total;
        state = qsim::condition_and_drop(full, "u", 0);
    }
    write_file(a.out, qsim::to_json(state) + "\n");
    std::printf("p=%zu n=%zu method=%s gates=%llu\n", model.size(), n, a.method.c_str(),
                static_cast<unsigned long long>(gates));
    return kOk;
}

// --- recall ---------------------------------------------------------------

struct RecallArgs {
    std::string patterns;
    std::string input;
    std::size_t b = 1;
    std::size_t T = 1;
    std::string mode = "measured";
    std::uint64_t seed = 0;
    std::string mask;
    std::size_t trials = 0;
    std::string circuit = "operator";
    std::string mask_policy = "masked";
};

int cmd_recall(const RecallArgs &a) {
    const auto model = memory::read_pattern_file(a.patterns);
    recall::RetrievalParams params;
    params.input = memory::Pattern::parse(a.input);
    params.b = a.b;
    params.threshold = a.T;
    params.mode = a.mode == "amplified" ? recall::RecallMode::kAmplified
                                        : recall::RecallMode::kMeasured;
    params.encoding = a.circuit == "aux" ? recall::InputEncoding::kAuxRegister
                                         : recall::InputEncoding::kOperator;
    params.mask_policy = a.mask_policy == "random-fill" ? recall::MaskPolicy::kRandomFill
                                                        : recall::MaskPolicy::kMasked;
    if (!a.mask.empty()) {
        params.known_mask = recall::KnownMask::parse(a.mask, params.input.width());
    }
    recall::validate(model, params);
    qsim::Rng rng(a.seed);

    if (a.trials == 0) {
        const auto out = recall::recall(model, params, rng);
        std::printf("%s\n", recall::to_json(out, model).c_str());
        return out.recognized ? kOk : kNotRecognized;
    }

    std::optional<recall::MeasuredRecall> measured;
    if (params.mode == recall::RecallMode::kMeasured) {
        measured.emplace(model, params);
    }
    std::map<memory::Pattern, std::uint64_t> counts;
    std::uint64_t recognized = 0;
    recall::RetrievalOutcome last;
    for (std::size_t t = 0; t < a.trials; ++t) {
        last = measured ? measured->run(rng) : recall::recall(model, params, rng);
        if (last.recognized) {
            ++recognized;
            ++counts[*last.output];
        }
    }
    std::printf("trials=%zu recognized=%llu rate=%s analytic_rate=%s p_rec=%s\n", a.trials,
                static_cast<unsigned long long>(recognized),
                qsim::format_real(double(recognized) / double(a.trials)).c_str(),
                qsim::format_real(last.success_probability_analytic).c_str(),
                qsim::format_real(last.p_rec).c_str());
    std::printf("pattern,count,empirical,analytic\n");
    for (std::size_t k = 0; k < model.size(); ++k) {
        const auto &p = model.pattern(k);
        const std::uint64_t c = counts.count(p) ? counts[p] : 0;
        const double emp = recognized ? double(c) / double(recognized) : 0.0;
        const double ana = last.distribution.empty() ? 0.0 : last.distribution[k];
        std::printf("%s,%llu,%s,%s\n", p.to_string().c_str(),
                    static_cast<unsigned long long>(c), qsim::format_real(emp).c_str(),
                    qsim::format_real(ana).c_str());
    }
    return kOk;
}

// --- analyze --------------------------------------------------------------

struct AnalyzeArgs {
    std::uint64_t n = 0;
    double d_over_n = 0.0;
    double b_min = 1e-3;
    double b_max = 1e6;
    std::size_t points = 181;
    std::string out;
    std::string integration = "auto";
};

int cmd_analyze(const AnalyzeArgs &a) {
    if (!(a.d_over_n >= 0.0 && a.d_over_n < 1.0)) {
        throw ValidationError("--d-over-n must lie in [0, 1)");
    }
    const auto d = static_cast<std::uint64_t>(std::llround(a.d_over_n * double(a.n)));
    const auto grid = thermo::log_grid(a.b_min, a.b_max, a.points);
    const auto scan =
        thermo::scan_phase_transition(a.n, d, grid, parse_mode(a.integration, a.n));
    write_file(a.out, thermo::scan_csv(scan));
    std::printf("b_cr=%.6g b_mid=%.6g d_inf=%.6g points=%zu\n", scan.b_cr, scan.b_mid,
                scan.d_inf, scan.points.size());
    return kOk;
}

// --- tune -----------------------------------------------------------------

struct TuneArgs {
    std::uint64_t n = 0;
    double epsilon = 0.0;
    double nu = 0.0;
    std::string integration = "auto";
};

int cmd_tune(const TuneArgs &a) {
    const auto r = thermo::tune(a.n, a.epsilon, a.nu, parse_mode(a.integration, a.n));
    std::printf("%s\n", thermo::to_json(r).c_str());
    return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string level = "quick";
    std::uint64_t seed = 0;
    std::vector<std::string> faults;
};

int cmd_verify(const VerifyArgs &a) {
    tools::VerifyOptions opt;
    opt.level = a.level == "full" ? tools::VerifyLevel::kFull : tools::VerifyLevel::kQuick;
    opt.seed = a.seed;
    opt.faults = a.faults;
    const auto results = tools::run_invariants(opt);
    std::string failed;
    for (const auto &r : results) {
        std::printf("%-28s %s cases=%llu max_error=%.6e\n", r.name.c_str(),
                    r.holds ? "ok" : "FAILED", static_cast<unsigned long long>(r.cases),
                    r.max_error);
        if (!r.holds) {
            failed += (failed.empty() ? "" : ",") + r.name;
        }
    }
    if (!failed.empty()) {
        std::printf("verify level=%s seed=%llu: invariant failure: %s\n", a.level.c_str(),
                    static_cast<unsigned long long>(a.seed), failed.c_str());
        return kInvariantFailed;
    }
    std::printf("verify level=%s seed=%llu: all %zu invariants hold\n", a.level.c_str(),
                static_cast<unsigned long long>(a.seed), results.size());
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum associative memory: storage, recall and thermodynamics"};
    app.require_subcommand(1);

    StoreArgs store;
    auto *s = app.add_subcommand("store", "Build the memory state from a pattern file");
    s->add_option("patterns", store.patterns, "Pattern file, one 0/1 string per line")
        ->required();
    s->add_option("out", store.out, "Output state JSON")->required();
    s->add_option("--method", store.method)
        ->check(CLI::IsMember({"analytic", "sequential", "operator"}))
        ->capture_default_str();

    RecallArgs rec;
    auto *r = app.add_subcommand("recall", "Retrieve a stored pattern from an input");
    r->add_option("patterns", rec.patterns, "Pattern file")->required();
    r->add_option("--input", rec.input, "Input bits, e.g. 0101")->required();
    r->add_option("--b", rec.b, "Number of control qubits")->required();
    r->add_option("--T", rec.T, "Repetition threshold / amplification iterations")
        ->required();
    r->add_option("--mode", rec.mode)
        ->check(CLI::IsMember({"measured", "amplified"}))
        ->capture_default_str();
    r->add_option("--seed", rec.seed, "RNG seed")->required();
    r->add_option("--mask", rec.mask, "Known input positions, e.g. 0,1,5");
    r->add_option("--trials", rec.trials, "Repeat N times and tabulate outcomes");
    r->add_option("--circuit", rec.circuit, "Input encoding")
        ->check(CLI::IsMember({"operator", "aux"}))
        ->capture_default_str();
    r->add_option("--mask-policy", rec.mask_policy)
        ->check(CLI::IsMember({"masked", "random-fill"}))
        ->capture_default_str();

    AnalyzeArgs an;
    auto *z = app.add_subcommand("analyze", "Scan the average memory over b and write CSV");
    z->add_option("--n", an.n, "Pattern width")->required();
    z->add_option("--d-over-n", an.d_over_n, "Minimal input distance ratio")->required();
    z->add_option("--b-min", an.b_min)->capture_default_str();
    z->add_option("--b-max", an.b_max)->capture_default_str();
    z->add_option("--points", an.points)->capture_default_str();
    z->add_option("out", an.out, "Output CSV")->required();
    z->add_option("--integration", an.integration)
        ->check(CLI::IsMember({"auto", "sum", "integral"}))
        ->capture_default_str();

    TuneArgs tu;
    auto *t = app.add_subcommand("tune", "Choose b for a target accuracy");
    t->add_option("--n", tu.n, "Pattern width")->required();
    t->add_option("--epsilon", tu.epsilon, "Minimal input distance ratio")->required();
    t->add_option("--nu", tu.nu, "Target accuracy, D - epsilon <= 1 - nu")->required();
    t->add_option("--integration", tu.integration)
        ->check(CLI::IsMember({"auto", "sum", "integral"}))
        ->capture_default_str();

    VerifyArgs ver;
    auto *v = app.add_subcommand("verify", "Run the invariant suites");
    v->add_option("--level", ver.level)
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    v->add_option("--seed", ver.seed, "RNG seed")->required();
    v->add_option("--inject-fault", ver.faults, "Deliberately break a component (s2)")
        ->check(CLI::IsMember({"s2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        (void)app.exit(e);
        return kInvalid;
    }

    try {
        if (*s) {
            return cmd_store(store);
        }
        if (*r) {
            return cmd_recall(rec);
        }
        if (*z) {
            return cmd_analyze(an);
        }
        if (*t) {
            return cmd_tune(tu);
        }
        return cmd_verify(ver);
    } catch (const BracketError &e) {
        std::fprintf(stderr, "qam: %s\n", e.what());
        return kNoBracket;
    } catch (const InfeasibleError &e) {
        std::fprintf(stderr, "qam: %s\n", e.what());
        return kInfeasible;
    } catch (const Error &e) {
        std::fprintf(stderr, "qam: %s\n", e.what());
        return kInvalid;
    }
}
