#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reserve/generate.hpp"
#include "reserve/io.hpp"
#include "reserve/verify.hpp"

namespace {

using reserve::io::Json;

struct Options {
    std::string instance_path;
    std::string mechanism;
    std::string precedence;
    std::string profile_path;
    int n = 0;
    std::string verify;
    bool trace = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string format = "json";
};

void emit(const Json& report, const Options& opts) {
    if (opts.format == "text")
        std::cout << reserve::io::to_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

int run_mechanism(const Options& opts) {
    const auto loaded = reserve::io::load_instance(opts.instance_path);

    if (opts.mechanism == "sequential") {
        const reserve::Instance inst = loaded.general();
        const auto order = reserve::io::parse_precedence(inst, opts.precedence);
        reserve::StepTrace trace;
        const auto mu = reserve::sequential_reserve_matching(inst, order, &trace);
        Json mechanism;
        mechanism["name"] = "sequential";
        Json names = Json::array();
        for (reserve::CategoryId c : order.sequence)
            names.push_back(inst.category_names[static_cast<size_t>(c.value)]);
        mechanism["precedence"] = std::move(names);
        emit(reserve::io::result_report(inst, mu, std::move(mechanism),
                                        opts.trace ? &trace : nullptr),
             opts);
        return 0;
    }
    if (opts.mechanism == "da") {
        const reserve::Instance inst = loaded.general();
        if (opts.profile_path.empty())
            reserve::fail(reserve::Errc::ParseError, "--mechanism da requires --profile");
        const auto prefs = reserve::io::load_profile(opts.profile_path, inst);
        const auto mu = reserve::deferred_acceptance(inst, prefs);
        Json mechanism;
        mechanism["name"] = "da";
        emit(reserve::io::result_report(inst, mu, std::move(mechanism)), opts);
        return 0;
    }
    if (opts.mechanism == "smart-poly" || opts.mechanism == "smart-exhaustive") {
        if (!loaded.is_baseline())
            reserve::fail(reserve::Errc::PreconditionViolated,
                          "smart reserve matching requires a baseline instance file");
        const auto& b = loaded.baseline();
        const reserve::Instance inst = reserve::lower_instance(b);
        const reserve::SmartConfig cfg{opts.n};
        Json mechanism;
        mechanism["name"] = opts.mechanism;
        mechanism["n"] = opts.n;
        if (opts.mechanism == "smart-poly") {
            const auto mu = reserve::smart_reserve_matching_poly(b, cfg);
            emit(reserve::io::result_report(inst, mu, std::move(mechanism)), opts);
        } else {
            const auto all = reserve::smart_reserve_matching_exhaustive(b, cfg);
            mechanism["members"] = static_cast<int>(all.size());
            Json report = reserve::io::result_report(inst, all.front(), std::move(mechanism));
            Json members = Json::array();
            for (const auto& sigma : all)
                members.push_back(reserve::io::serialize_matching(inst, sigma));
            report["matchings"] = std::move(members);
            emit(report, opts);
        }
        return 0;
    }
    reserve::fail(reserve::Errc::ParseError, "unknown mechanism '" + opts.mechanism + "'");
}

struct VerifyMode {
    bool needs_baseline = false;
    // Generates one random instance of the family this check applies to.
    std::function<reserve::io::LoadedInstance(std::mt19937_64&)> generate;
    std::function<std::optional<std::string>(const reserve::io::LoadedInstance&)> run;
};

reserve::io::LoadedInstance wrap(reserve::Instance inst) {
    return reserve::io::LoadedInstance{std::move(inst)};
}
reserve::io::LoadedInstance wrap(reserve::BaselineInstance b) {
    return reserve::io::LoadedInstance{std::move(b)};
}

const reserve::BaselineInstance& as_baseline(const reserve::io::LoadedInstance& loaded) {
    if (!loaded.is_baseline())
        reserve::fail(reserve::Errc::PreconditionViolated,
                      "this verification requires a baseline instance");
    return loaded.baseline();
}

std::map<std::string, VerifyMode> verify_modes() {
    using reserve::io::LoadedInstance;
    std::map<std::string, VerifyMode> modes;

    modes["axioms"] = {false,
                       [](std::mt19937_64& rng) { return wrap(reserve::random_instance(rng)); },
                       [](const LoadedInstance& loaded) {
                           return reserve::verify_mechanism_axioms(loaded.general());
                       }};
    modes["theorem1"] = {false,
                         [](std::mt19937_64& rng) { return wrap(reserve::random_instance(rng)); },
                         [](const LoadedInstance& loaded) {
                             return reserve::verify_cutoff_support(loaded.general());
                         }};
    modes["theorem2"] = {false,
                         [](std::mt19937_64& rng) { return wrap(reserve::random_instance(rng)); },
                         [](const LoadedInstance& loaded) {
                             return reserve::verify_da_characterization(loaded.general());
                         }};
    modes["prop1"] = {false,
                      [](std::mt19937_64& rng) {
                          reserve::RawInstanceParams params;
                          params.max_categories = 4;
                          return wrap(reserve::random_instance(rng, params));
                      },
                      [](const LoadedInstance& loaded) {
                          return reserve::verify_sequential_da_equivalence(loaded.general());
                      }};
    modes["prop2"] = {false,
                      [](std::mt19937_64& rng) { return wrap(reserve::random_instance(rng)); },
                      [](const LoadedInstance& loaded) {
                          return reserve::verify_swap_selectivity(loaded.general());
                      }};
    modes["prop3"] = {true,
                      [](std::mt19937_64& rng) {
                          reserve::BaselineInstanceParams params;
                          params.max_reserves = 4;
                          params.disjoint_beneficiaries = true;
                          params.soft_only = true;
                          return wrap(reserve::random_baseline(rng, params));
                      },
                      [](const LoadedInstance& loaded) {
                          return reserve::verify_swap_beneficiary_inclusion(as_baseline(loaded));
                      }};
    modes["lemma2"] = {true,
                       [](std::mt19937_64& rng) { return wrap(reserve::random_baseline(rng)); },
                       [](const LoadedInstance& loaded) {
                           return reserve::verify_smart_set_invariance(as_baseline(loaded));
                       }};
    modes["prop4"] = {true,
                      [](std::mt19937_64& rng) { return wrap(reserve::random_baseline(rng)); },
                      [](const LoadedInstance& loaded) {
                          return reserve::verify_smart_axioms(as_baseline(loaded));
                      }};
    modes["theorem3"] = {true,
                         [](std::mt19937_64& rng) {
                             reserve::BaselineInstanceParams params;
                             params.disjoint_beneficiaries = true;
                             return wrap(reserve::random_baseline(rng, params));
                         },
                         [](const LoadedInstance& loaded) {
                             return reserve::verify_smart_cutoff_extremes(as_baseline(loaded));
                         }};
    return modes;
}

int run_verify(const Options& opts) {
    const auto modes = verify_modes();
    const auto mode = modes.find(opts.verify);
    if (mode == modes.end())
        reserve::fail(reserve::Errc::ParseError, "unknown verification '" + opts.verify + "'");

    Json report;
    report["verify"] = opts.verify;

    if (!opts.instance_path.empty()) {
        const auto loaded = reserve::io::load_instance(opts.instance_path);
        report["instances"] = 1;
        if (const auto failure = mode->second.run(loaded)) {
            report["failures"] = 1;
            report["detail"] = *failure;
            report["counterexample"] = reserve::io::serialize_loaded(loaded);
            emit(report, opts);
            return 2;
        }
        report["failures"] = 0;
        emit(report, opts);
        return 0;
    }

    constexpr int kInstances = 100;
    std::mt19937_64 rng(opts.seed);
    report["seed"] = opts.seed;
    report["instances"] = kInstances;
    for (int k = 0; k < kInstances; ++k) {
        const auto loaded = mode->second.generate(rng);
        if (const auto failure = mode->second.run(loaded)) {
            report["failures"] = 1;
            report["instance_index"] = k;
            report["detail"] = *failure;
            report["counterexample"] = reserve::io::serialize_loaded(loaded);
            emit(report, opts);
            return 2;
        }
    }
    report["failures"] = 0;
    emit(report, opts);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reserve-system matching engine"};
    Options opts;

    app.add_option("--instance", opts.instance_path, "Instance file (JSON)");
    app.add_option("--mechanism", opts.mechanism,
                   "sequential|da|smart-poly|smart-exhaustive");
    app.add_option("--precedence", opts.precedence,
                   "Comma-separated category order (sequential)");
    app.add_option("--profile", opts.profile_path, "Preference profile file (da)");
    app.add_option("--n", opts.n, "Unreserved units processed first (smart)");
    app.add_option("--verify", opts.verify,
                   "axioms|theorem1|theorem2|prop1|prop2|prop3|lemma2|prop4|theorem3");
    app.add_flag("--trace", opts.trace, "Record per-step assignments");
    auto* seed_opt = app.add_option("--seed", opts.seed, "Seed for random-instance verification");
    app.add_option("--format", opts.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    opts.seed_given = seed_opt->count() > 0;

    try {
        if (!opts.verify.empty())
            return run_verify(opts);
        if (!opts.mechanism.empty()) {
            if (opts.instance_path.empty())
                reserve::fail(reserve::Errc::ParseError, "--mechanism requires --instance");
            return run_mechanism(opts);
        }
        std::cerr << "nothing to do: pass --mechanism or --verify (see --help)\n";
        return 1;
    } catch (const reserve::ReserveError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
