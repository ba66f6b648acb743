// Copyright 2026 The aqml Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file cli.hpp
 * Command-line front end.
 *
 *   find-model --task T --data FILE [--target COL] [--trials 20] [--seeds 3]
 *              [--epochs 10] [--threshold 0.8] [--seed 0] [--cores 1]
 *              [--store study.jsonl] [--out model.json]
 *   tune       --model FILE --data FILE [--target COL] [--trials 20]
 *              [--seeds 3] [--seed 0] [--cores 1] [--store tune.jsonl] [--out FILE]
 *   report     --store FILE [--out report.csv]
 *   predict    --model FILE --data FILE [--out predictions.csv]
 *
 * --target defaults to the last CSV column. Exit codes: 0 success, 1 usage
 * error, 2 data error, 3 study failure.
 */
#pragma once

#include <filesystem>
#include <iostream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "aqml/finder/finder.hpp"
#include "aqml/finder/tuner.hpp"
#include "aqml/store/csv.hpp"
#include "aqml/store/model_io.hpp"
#include "aqml/store/report.hpp"
#include "aqml/store/study_store.hpp"

namespace aqml {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitStudy = 3 };

namespace detail {

inline std::string resolve_target(const CsvTable& t, const std::string& target) {
    if (!target.empty()) return target;
    if (t.header.size() < 2) throw DataError("need at least one feature column and a target column");
    return t.header.back();
}

inline void fresh_store(const std::filesystem::path& p, std::ostream& err) {
    if (std::filesystem::exists(p)) {
        err << "note: replacing existing study store " << p.string() << "\n";
        std::filesystem::remove(p);
    }
}

inline void print_best(std::ostream& out, const TrialRecord& r, bool feasible) {
    out << "best trial " << r.trial_id << ": mean_score=" << format_real(r.mean_score)
        << " total_calls=" << r.total_calls << (feasible ? "" : " (infeasible)") << " " << r.sampled.dump() << "\n";
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
    CLI::App app{"Automatic search over variational quantum models"};
    app.require_subcommand(1);

    std::string task, data, target, store = "study.jsonl", model_out = "model.json";
    std::size_t trials = 20, seeds = 3, epochs = 10, cores = 1;
    double threshold = 0.8;
    std::uint64_t seed = 0;
    std::string device = "simulator";

    auto* find = app.add_subcommand("find-model", "search for the cheapest model meeting the threshold");
    find->add_option("--task", task, "classification | regression | clustering")
        ->required()
        ->check(CLI::IsMember({"classification", "regression", "clustering"}));
    find->add_option("--data", data, "CSV file with a header row")->required();
    find->add_option("--target", target, "target column (default: last column)");
    find->add_option("--trials", trials, "number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    find->add_option("--seeds", seeds, "training seeds per trial")->capture_default_str()->check(CLI::PositiveNumber);
    find->add_option("--epochs", epochs, "maximum training epochs")->capture_default_str();
    find->add_option("--threshold", threshold, "quality threshold")->capture_default_str();
    find->add_option("--seed", seed, "base seed")->capture_default_str();
    find->add_option("--cores", cores, "trials run concurrently")->capture_default_str()->check(CLI::PositiveNumber);
    find->add_option("--store", store, "study store (JSON lines)")->capture_default_str();
    find->add_option("--out", model_out, "model file to write")->capture_default_str();
    find->add_option("--device", device, "quantum backend; only the built-in simulator is available")
        ->capture_default_str()
        ->check(CLI::IsMember({"simulator"}));

    std::string model_in, tune_store = "tune.jsonl", tune_out;
    std::size_t tune_trials = 20, tune_seeds = 3, tune_cores = 1;
    std::uint64_t tune_seed = 0;
    std::string tune_data, tune_target;
    auto* tune = app.add_subcommand("tune", "compare optimizers for a found model's architecture");
    tune->add_option("--model", model_in, "model file")->required();
    tune->add_option("--data", tune_data, "CSV file with a header row")->required();
    tune->add_option("--target", tune_target, "target column (default: last column)");
    tune->add_option("--trials", tune_trials)->capture_default_str()->check(CLI::PositiveNumber);
    tune->add_option("--seeds", tune_seeds)->capture_default_str()->check(CLI::PositiveNumber);
    tune->add_option("--seed", tune_seed)->capture_default_str();
    tune->add_option("--cores", tune_cores)->capture_default_str()->check(CLI::PositiveNumber);
    tune->add_option("--store", tune_store)->capture_default_str();
    tune->add_option("--out", tune_out, "write the best optimizer configuration as JSON");

    std::string report_store, report_out = "report.csv";
    auto* report = app.add_subcommand("report", "export a study store as CSV");
    report->add_option("--store", report_store)->required();
    report->add_option("--out", report_out)->capture_default_str();

    std::string predict_model_path, predict_data, predict_out = "predictions.csv";
    auto* predict = app.add_subcommand("predict", "apply a model file to a CSV");
    predict->add_option("--model", predict_model_path)->required();
    predict->add_option("--data", predict_data)->required();
    predict->add_option("--out", predict_out)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*find) {
            const TaskType t = parse_task(task);
            const CsvTable table = read_csv(data);
            Dataset ds;
            if (t == TaskType::Clustering) {
                if (!target.empty()) err << "warning: --target is ignored for clustering\n";
                ds = to_dataset(table, t, "");
            } else {
                ds = to_dataset(table, t, detail::resolve_target(table, target));
            }
            FinderConfig cfg{t, trials, seeds, epochs, cores, threshold, seed};
            detail::fresh_store(store, err);
            StudyStore study(store);
            ModelFinder finder(cfg, default_registry(), std::move(ds));
            const FindResult result = finder.find_model(study);
            write_model_file(model_out, result.model);
            detail::print_best(out, result.records[result.selection.index], result.selection.feasible);
            out << "model written to " << model_out << "\n";
            return kExitOk;
        }
        if (*tune) {
            const ModelSpec spec = read_model_file(model_in);
            const CsvTable table = read_csv(tune_data);
            Dataset ds = to_dataset(table, spec.options.task, detail::resolve_target(table, tune_target));
            if (ds.feature_names != spec.feature_names) {
                ds.features = select_columns(table, spec.feature_names);
                ds.feature_names = spec.feature_names;
            }
            detail::fresh_store(tune_store, err);
            StudyStore study(tune_store);
            HyperparameterTuner tuner(spec.options, default_registry(), std::move(ds),
                                      {tune_trials, tune_seeds, tune_cores, tune_seed});
            const TunerResult result = tuner.find_hyperparameters(study);
            const std::string cfg = detail::optimizer_to_json(result.best).dump(2) + "\n";
            out << cfg;
            if (!tune_out.empty()) {
                std::ofstream f(tune_out, std::ios::binary | std::ios::trunc);
                f << cfg;
                if (!f) throw std::runtime_error("cannot write " + tune_out);
            }
            return kExitOk;
        }
        if (*report) {
            if (!std::filesystem::exists(report_store)) {
                throw DataError("study store " + report_store + " does not exist");
            }
            const ReportSummary s = export_report(StudyStore(report_store), report_out);
            out << s.n_trials << " trial(s), " << s.n_complete << " complete, " << s.n_feasible << " feasible\n";
            if (!s.warning.empty()) err << "warning: " << s.warning << "\n";
            if (s.best) detail::print_best(out, *s.best, s.best_feasible);
            return kExitOk;
        }
        if (*predict) {
            const ModelSpec spec = read_model_file(predict_model_path);
            const CsvTable table = read_csv(predict_data);
            FeatureMatrix x;
            try {
                x = select_columns(table, spec.feature_names);
            } catch (const DataError& e) {
                std::string expected;
                for (const auto& n : spec.feature_names) expected += (expected.empty() ? "" : ",") + n;
                throw DataError(std::string(e.what()) + "; model expects " + std::to_string(spec.feature_names.size()) +
                                " feature column(s): " + expected);
            }
            CallCounter counter;
            const auto pred = aqml::predict_model(spec.model, x, counter);
            std::ofstream f(predict_out, std::ios::binary | std::ios::trunc);
            f << "prediction\n";
            for (double v : pred) f << format_real(v) << "\n";
            if (!f) throw std::runtime_error("cannot write " + predict_out);
            out << pred.size() << " prediction(s) written to " << predict_out << " (" << counter.total()
                << " device calls)\n";
            return kExitOk;
        }
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const CorruptDataError& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const ShapeError& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const nlohmann::json::exception& e) {
        err << "data error: malformed model file: " << e.what() << "\n";
        return kExitData;
    } catch (const StudyError& e) {
        err << "study failure: " << e.what() << "\n";
        return kExitStudy;
    } catch (const std::system_error& e) {
        err << "study failure: " << e.what() << "\n";
        return kExitStudy;
    } catch (const UnsupportedModelError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitStudy;
    }
    return kExitUsage;
}

inline int cli_main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return cli_main(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace aqml
