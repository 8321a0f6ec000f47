// Batch front door: load action files, dispatch one subcommand, emit exactly
// one JSON (or CSV) document on stdout. Diagnostics go to stderr.
// Exit codes: 0 success, 1 input error, 2 budget refusal, 3 probe failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "weakeq/coloring.hpp"
#include "weakeq/errors.hpp"
#include "weakeq/group_window.hpp"
#include "weakeq/moment.hpp"
#include "weakeq/parallel.hpp"
#include "weakeq/probes.hpp"
#include "weakeq/random_partition.hpp"
#include "weakeq/schreier.hpp"

using json = nlohmann::ordered_json;
using namespace weakeq;

namespace {

std::uint64_t env_budget(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoull(v);
    } catch (...) {
        throw input_error(std::string("environment variable ") + name + " must be an integer");
    }
}

struct CommonOpts {
    std::uint64_t seed = 0;
    int threads = 1;
    std::string strategy = "exhaustive";
    std::uint64_t samples = 1000;
    std::uint64_t starts = 8;
    std::uint64_t budget_partitions = kDefaultPartitionBudget;
    int budget_canon = kDefaultCanonBudget;

    CloudStrategy cloud_strategy() const {
        if (strategy == "exhaustive") return CloudStrategy::exhaustive();
        if (strategy == "random") return CloudStrategy::random(samples, seed);
        if (strategy == "local_search") return CloudStrategy::local_search(starts, seed);
        throw input_error("unknown strategy: " + strategy);
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "random seed (always recorded in the output)");
    cmd->add_option("--threads", o.threads, "worker threads (output is identical for any value)");
    cmd->add_option("--strategy", o.strategy, "exhaustive | random | local_search")
        ->check(CLI::IsMember({"exhaustive", "random", "local_search"}));
    cmd->add_option("--samples", o.samples, "sample count for the random strategy");
    cmd->add_option("--starts", o.starts, "start count for the local_search strategy");
    cmd->add_option("--budget-partitions", o.budget_partitions,
                    "labeling budget for exhaustive enumeration");
    cmd->add_option("--budget-canon", o.budget_canon, "orbit size budget for canonicalization");
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json probe_json(const ProbeReport& r, std::uint64_t seed) {
    json doc;
    doc["command"] = "probe";
    doc["name"] = r.name;
    doc["instances"] = r.instances;
    doc["max_violation"] = r.max_violation;
    doc["tolerance"] = r.tolerance;
    doc["pass"] = r.pass;
    json details = json::array();
    for (const auto& d : r.details) details.push_back({{"what", d.what}, {"violation", d.violation}});
    doc["details"] = details;
    doc["seed"] = seed;
    return doc;
}

json type_json(const TypeDistribution& type) {
    json forms = json::array();
    for (const auto& [form, weight] : type.weights) {
        json perms = json::array();
        for (const auto& p : form.perms) perms.push_back(p.images());
        forms.push_back({{"size", form.size}, {"perms", perms}, {"weight", rat_to_string(weight)}});
    }
    return forms;
}

std::vector<Word> parse_words(const std::string& csv) {
    std::vector<Word> words;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (cur == "e") cur.clear(); // explicit identity
            words.push_back(Word::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return words;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakeq: finite measure-preserving actions, partition-statistic clouds, "
                 "weak-equivalence pseudometrics and property probes"};
    app.require_subcommand(1);

    CommonOpts opts;
    opts.budget_partitions = env_budget("WEAKEQ_BUDGET_PARTITIONS", kDefaultPartitionBudget);
    opts.budget_canon = static_cast<int>(env_budget("WEAKEQ_BUDGET_CANON", kDefaultCanonBudget));

    std::string path_a, path_b, path_c;
    std::vector<std::string> rep_paths;
    std::vector<std::string> term_specs;
    int cut = 4, n = 2, k = 2, g_radius = 1, trials = 200, grid_den = 8;
    double delta = 0.05;
    std::string mode = "points", format = "json", t_text = "1/2", base_labels, g_words, csv_path;

    auto* distance = app.add_subcommand("distance", "truncated series pseudometric (points mode)");
    distance->add_option("--a", path_a)->required();
    distance->add_option("--b", path_b)->required();
    distance->add_option("--cut", cut, "series cut: sum over n+k <= cut");
    add_common(distance, opts);

    auto* sdistance = app.add_subcommand("sdistance", "stable pseudometric (hulls mode)");
    sdistance->add_option("--a", path_a)->required();
    sdistance->add_option("--b", path_b)->required();
    sdistance->add_option("--cut", cut);
    add_common(sdistance, opts);

    auto* type_cmd = app.add_subcommand("type", "canonical transitive forms with weights");
    type_cmd->add_option("--a", path_a)->required();
    add_common(type_cmd, opts);

    auto* contain = app.add_subcommand("contain", "one-sided containment defect with witness");
    contain->add_option("--a", path_a)->required();
    contain->add_option("--b", path_b)->required();
    contain->add_option("--n", n);
    contain->add_option("--k", k);
    contain->add_option("--mode", mode)->check(CLI::IsMember({"points", "hulls"}));
    add_common(contain, opts);

    auto* cloud_cmd = app.add_subcommand("cloud", "moment cloud of an action");
    cloud_cmd->add_option("--a", path_a)->required();
    cloud_cmd->add_option("--n", n);
    cloud_cmd->add_option("--k", k);
    cloud_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    add_common(cloud_cmd, opts);

    auto* claim1 = app.add_subcommand("claim1", "randomized two-coloring partition experiment");
    claim1->add_option("--a", path_a)->required();
    claim1->add_option("--g-radius", g_radius, "G = ball of this radius");
    claim1->add_option("--g-words", g_words, "G as comma-separated words (overrides --g-radius)");
    claim1->add_option("--base", base_labels,
                       "base partition as comma-separated labels (default: one class)");
    claim1->add_option("--delta", delta, "deviation threshold");
    claim1->add_option("--trials", trials);
    claim1->add_option("--csv", csv_path, "also write per-trial deviations as CSV to this path");
    add_common(claim1, opts);

    auto* probe = app.add_subcommand("probe", "property suites; exit 3 when the probe fails");
    std::string suite = "contraction";
    probe->add_option("--suite", suite)
        ->check(CLI::IsMember({"axioms", "self-combination", "contraction", "distance-convexity",
                               "mixture-hull"}));
    probe->add_option("--a", path_a);
    probe->add_option("--b", path_b);
    probe->add_option("--c", path_c);
    probe->add_option("--k-rep", rep_paths, "representative action files (distance-convexity)");
    probe->add_option("--term", term_specs, "mixture term coeff:file (mixture-hull)");
    probe->add_option("--t", t_text, "combination coefficient(s), comma separated rationals");
    probe->add_option("--cut", cut);
    probe->add_option("--n", n);
    probe->add_option("--k", k);
    probe->add_option("--grid-den", grid_den, "coefficient grid denominator (distance-convexity)");
    add_common(probe, opts);

    auto* axioms = app.add_subcommand("axioms", "weak-convex axiom suite over input actions");
    std::vector<std::string> axiom_paths;
    axioms->add_option("--input", axiom_paths, "action files (two or more)")->required();
    axioms->add_option("--t", t_text, "comma separated coefficients");
    axioms->add_option("--cut", cut);
    add_common(axioms, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        set_worker_threads(opts.threads);

        auto parse_ts = [&]() {
            std::vector<Rat> ts;
            std::string cur;
            for (char c : t_text + ",") {
                if (c == ',') {
                    if (!cur.empty()) ts.push_back(rat_from_string(cur));
                    cur.clear();
                } else
                    cur += c;
            }
            if (ts.empty()) throw input_error("no coefficients given in --t");
            return ts;
        };

        if (*distance || *sdistance) {
            const FiniteAction a = load_action_file(path_a);
            const FiniteAction b = load_action_file(path_b);
            const bool stable = static_cast<bool>(*sdistance);
            const MetricResult r =
                stable ? metric_d_stable(a, b, cut, opts.cloud_strategy(), opts.budget_partitions)
                       : metric_d(a, b, cut, opts.cloud_strategy(), opts.budget_partitions);
            json doc;
            doc["command"] = stable ? "sdistance" : "distance";
            doc["value"] = r.value;
            doc["truncation_bound"] = r.truncation_bound;
            doc["n_max"] = cut - 1;
            doc["k_max"] = cut - 1;
            doc["strategy"] = opts.cloud_strategy().note();
            doc["seed"] = opts.seed;
            emit(doc);
        } else if (*type_cmd) {
            const FiniteAction a = load_action_file(path_a);
            json doc;
            doc["command"] = "type";
            doc["label"] = a.label();
            doc["type"] = type_json(type_of(a, opts.budget_canon));
            doc["seed"] = opts.seed;
            emit(doc);
        } else if (*contain) {
            const FiniteAction a = load_action_file(path_a);
            const FiniteAction b = load_action_file(path_b);
            const GroupWindow window =
                build_window(std::max(1, a.generator_count()), radius_for_words(std::max(1, a.generator_count()), n));
            const ContainmentResult r = containment_defect(
                a, b, window, n, k, mode == "hulls" ? HausdorffMode::Hulls : HausdorffMode::Points,
                opts.cloud_strategy(), opts.budget_partitions);
            json doc;
            doc["command"] = "contain";
            doc["defect"] = r.defect;
            doc["witness"] = r.witness.labels;
            doc["n"] = n;
            doc["k"] = k;
            doc["mode"] = mode;
            doc["strategy"] = opts.cloud_strategy().note();
            doc["seed"] = opts.seed;
            emit(doc);
        } else if (*cloud_cmd) {
            const FiniteAction a = load_action_file(path_a);
            const GroupWindow window =
                build_window(std::max(1, a.generator_count()), radius_for_words(std::max(1, a.generator_count()), n));
            const MomentCloud cloud =
                moment_cloud(a, window, n, k, opts.cloud_strategy(), opts.budget_partitions);
            if (format == "csv") {
                std::cout << "# moment cloud action=" << cloud.action_label << " n=" << n
                          << " k=" << k << " strategy=" << cloud.strategy_note
                          << " seed=" << opts.seed << "\n";
                std::cout << "# columns: entries flattened in (p,q,r) row-major order, p the "
                             "window-word index, q,r partition classes\n";
                for (const auto& pt : cloud.points_d) {
                    for (std::size_t i = 0; i < pt.size(); ++i)
                        std::cout << (i ? "," : "") << pt[i];
                    std::cout << "\n";
                }
            } else {
                json doc;
                doc["command"] = "cloud";
                doc["n"] = n;
                doc["k"] = k;
                doc["exhaustive"] = cloud.exhaustive;
                doc["strategy"] = cloud.strategy_note;
                doc["point_count"] = cloud.points.size();
                json pts = json::array();
                for (const auto& p : cloud.points) {
                    json row = json::array();
                    for (const auto& e : p.entries) row.push_back(rat_to_string(e));
                    pts.push_back(row);
                }
                doc["points"] = pts;
                doc["seed"] = opts.seed;
                emit(doc);
            }
        } else if (*claim1) {
            const FiniteAction a = load_action_file(path_a);
            std::vector<Word> G =
                g_words.empty() ? ball(std::max(1, a.generator_count()), g_radius)
                                : parse_words(g_words);
            Partition base(std::vector<int>(a.atom_count(), 0), 1);
            if (!base_labels.empty()) {
                std::vector<int> labels;
                std::string cur;
                for (char c : base_labels + ",") {
                    if (c == ',') {
                        labels.push_back(std::stoi(cur));
                        cur.clear();
                    } else
                        cur += c;
                }
                int classes = 1;
                for (int l : labels) classes = std::max(classes, l + 1);
                base = Partition(labels, classes);
            }
            const PartitionStats stats =
                run_partition_experiment(a, G, base, delta, trials, opts.seed);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                csv << "# per-trial max deviation, seed=" << opts.seed << "\n";
                for (int t = 0; t < stats.trials; ++t)
                    csv << t << "," << stats.max_deviation_per_trial[t] << "\n";
            }
            json doc;
            doc["command"] = "claim1";
            doc["delta"] = stats.delta;
            doc["window_size"] = stats.window_size;
            doc["target"] = stats.target;
            doc["trials"] = stats.trials;
            doc["empirical_failure_rate"] = stats.empirical_failure_rate;
            doc["chebyshev_bound"] = stats.chebyshev_bound;
            doc["freeness_defect"] = stats.freeness_defect;
            doc["cell_count"] = stats.cell_count;
            doc["analytic_variance_bound"] = stats.analytic_variance_bound;
            doc["first_success_trial"] = stats.first_success_trial;
            doc["max_deviation_per_trial"] = stats.max_deviation_per_trial;
            doc["seed"] = stats.seed;
            emit(doc);
        } else if (*probe) {
            const auto ts = parse_ts();
            ProbeReport report;
            if (suite == "axioms") {
                std::vector<FiniteAction> samples;
                for (const std::string& p : {path_a, path_b, path_c})
                    if (!p.empty()) samples.push_back(load_action_file(p));
                report = axiom_suite(samples, ts, cut);
            } else if (suite == "self-combination") {
                const FiniteAction a = load_action_file(path_a);
                const SelfCombinationDefect d = self_combination_defect(a, ts.front(), cut);
                json doc;
                doc["command"] = "probe";
                doc["name"] = "self-combination";
                doc["atomic_defect"] = d.atomic_defect;
                doc["stable_defect"] = d.stable_defect;
                doc["cut"] = cut;
                doc["seed"] = opts.seed;
                emit(doc);
                return 0;
            } else if (suite == "contraction") {
                report = contraction_check(load_action_file(path_a), load_action_file(path_b),
                                           load_action_file(path_c), ts.front(), cut);
            } else if (suite == "distance-convexity") {
                std::vector<FiniteAction> reps;
                for (const std::string& p : rep_paths) reps.push_back(load_action_file(p));
                report = distance_convexity_check(load_action_file(path_a),
                                                  load_action_file(path_b), reps, ts.front(), cut,
                                                  grid_den);
            } else if (suite == "mixture-hull") {
                std::vector<std::pair<Rat, FiniteAction>> terms;
                for (const std::string& spec : term_specs) {
                    const auto colon = spec.find(':');
                    if (colon == std::string::npos)
                        throw input_error("mixture term must look like coeff:file");
                    terms.emplace_back(rat_from_string(spec.substr(0, colon)),
                                       load_action_file(spec.substr(colon + 1)));
                }
                if (terms.empty()) throw input_error("mixture-hull needs at least one --term");
                const int gens = std::max(1, terms.front().second.generator_count());
                const GroupWindow window = build_window(gens, radius_for_words(gens, n));
                report = mixture_hull_check(terms, window, n, k);
            }
            emit(probe_json(report, opts.seed));
            return report.pass ? 0 : 3;
        } else if (*axioms) {
            std::vector<FiniteAction> samples;
            for (const std::string& p : axiom_paths) samples.push_back(load_action_file(p));
            const ProbeReport report = axiom_suite(samples, parse_ts(), cut);
            emit(probe_json(report, opts.seed));
            return report.pass ? 0 : 3;
        }
        return 0;
    } catch (const budget_error& e) {
        std::cerr << "budget refused: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
}
