#include "concord/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "concord/dataset.hpp"
#include "concord/frequency.hpp"
#include "concord/math.hpp"
#include "concord/severity.hpp"
#include "concord/synthetic.hpp"
#include "concord/version.hpp"

namespace concord {

namespace {

using nlohmann::ordered_json;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct EngineOptions {
    std::string method = "exact";
    std::uint64_t sample_size = 20000;
    double alpha = 0.05;
    std::uint32_t k = 50;
    std::uint32_t bins = 1;
    std::uint32_t reruns = 5;
    bool kmeans_dp = false;
    bool kmeans_half_ties = false;
    std::uint64_t seed = 0;

    Engine build() const {
        if (method == "exact") return ExactEngine{};
        if (method == "sample") return SampledEngine{SamplingConfig{sample_size, seed, alpha}};
        KMeansConfig config;
        config.k = k;
        config.exposure_bins = bins;
        config.reruns = reruns;
        config.seed = seed;
        config.exact_dp = kmeans_dp;
        config.half_credit_ties = kmeans_half_ties;
        return ClusteredEngine{config};
    }

    void add_flags(CLI::App* cmd, bool severity) {
        if (severity) sample_size = 5000;
        cmd->add_option("--method", method, "estimator: exact, sample or kmeans")
            ->check(CLI::IsMember({"exact", "sample", "kmeans"}));
        cmd->add_option("--S", sample_size, "sample size for --method sample")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--alpha", alpha, "CI level for --method sample (default 0.05)")
            ->check(CLI::Range(1e-9, 0.999999));
        cmd->add_option("--seed", seed, "random seed");
        if (!severity) {
            cmd->add_option("--k", k, "clusters per group for --method kmeans")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--bins", bins, "exposure splits for --method kmeans")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--reruns", reruns, "k-means restarts per group")
                ->check(CLI::PositiveNumber);
            cmd->add_flag("--kmeans-dp", kmeans_dp, "use the exact 1-D k-means solver");
            cmd->add_flag("--kmeans-half-ties", kmeans_half_ties,
                          "give centroid ties half credit instead of zero");
        }
    }

    ordered_json echo(bool severity) const {
        ordered_json j;
        j["method"] = method;
        j["seed"] = seed;
        if (method == "sample") {
            j["S"] = sample_size;
            j["alpha"] = alpha;
        }
        if (method == "kmeans" && !severity) {
            j["k"] = k;
            j["bins"] = bins;
            j["reruns"] = reruns;
            if (kmeans_dp) j["kmeans_dp"] = true;
            if (kmeans_half_ties) j["kmeans_half_ties"] = true;
        }
        return j;
    }
};

struct IoOptions {
    std::string input;
    std::string output = "json";
    std::string out_file;
    ColumnMap columns;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--input", input, "CSV file with a header row")->required();
        cmd->add_option("--output", output, "report format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out-file", out_file, "write the report here instead of stdout");
        cmd->add_option("--col-claim-count", columns.claim_count, "claim count column name");
        cmd->add_option("--col-exposure", columns.exposure, "exposure column name");
        cmd->add_option("--col-prediction", columns.prediction, "prediction column name");
        cmd->add_option("--col-claim-size", columns.claim_size, "claim size column name");
    }
};

ordered_json input_section(const Dataset& dataset) {
    ordered_json j;
    j["path"] = dataset.source_path;
    j["rows"] = dataset.input_rows;
    j["accepted"] = dataset.size();
    j["rejected"] = dataset.rejected.size();
    if (!dataset.rejected.empty()) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < std::min<std::size_t>(20, dataset.rejected.size()); ++i)
            rows.push_back({{"row", dataset.rejected[i].row_number},
                            {"reason", dataset.rejected[i].reason}});
        j["rejected_rows"] = rows;
    }
    j["digest"] = to_hex(dataset.digest());
    return j;
}

ordered_json estimate_to_json(const ConcordanceEstimate& est) {
    ordered_json j;
    j["value"] = est.value;
    j["method"] = to_string(est.method);
    if (const auto* counts = std::get_if<PairCounts>(&est.counts)) {
        j["counts"] = {{"concordant", counts->concordant},
                       {"discordant", counts->discordant},
                       {"tied", counts->tied},
                       {"comparable", counts->comparable}};
    } else {
        const auto& mass = std::get<ClusterMass>(est.counts);
        j["counts"] = {{"concordant_mass", mass.concordant_mass},
                       {"admissible_pairs", mass.admissible_pairs}};
    }
    if (est.ci) {
        j["ci"] = {{"lower", est.ci->lower}, {"upper", est.ci->upper}, {"alpha", est.ci->alpha}};
    }
    if (!est.meta.empty()) j["meta"] = est.meta;
    return j;
}

const char* status_name(CurvePointStatus status) {
    switch (status) {
        case CurvePointStatus::Ok:
            return "ok";
        case CurvePointStatus::InsufficientPairs:
            return "insufficient-pairs";
        case CurvePointStatus::NoComparablePairs:
            return "no-comparable-pairs";
    }
    return "?";
}

ordered_json curve_to_json(const std::vector<CurvePoint>& curve) {
    ordered_json points = ordered_json::array();
    for (const CurvePoint& p : curve) {
        ordered_json j;
        j["x"] = p.x;
        j["status"] = status_name(p.status);
        j["value"] = p.estimate ? ordered_json(p.estimate->value) : ordered_json(nullptr);
        if (p.estimate && p.estimate->ci) {
            j["ci_lower"] = p.estimate->ci->lower;
            j["ci_upper"] = p.estimate->ci->upper;
        } else {
            j["ci_lower"] = nullptr;
            j["ci_upper"] = nullptr;
        }
        j["n_pairs"] = p.comparable_pairs;
        points.push_back(std::move(j));
    }
    return points;
}

std::string estimate_to_csv(const ConcordanceEstimate& est) {
    std::ostringstream out;
    out << "value,method,concordant,discordant,tied,comparable,ci_lower,ci_upper\n";
    out << format_double(est.value) << ',' << to_string(est.method) << ',';
    if (const auto* counts = std::get_if<PairCounts>(&est.counts))
        out << counts->concordant << ',' << counts->discordant << ',' << counts->tied << ','
            << counts->comparable << ',';
    else
        out << format_double(std::get<ClusterMass>(est.counts).concordant_mass) << ",,,"
            << std::get<ClusterMass>(est.counts).admissible_pairs << ',';
    if (est.ci)
        out << format_double(est.ci->lower) << ',' << format_double(est.ci->upper);
    else
        out << ',';
    out << '\n';
    return out.str();
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
    std::ostringstream out;
    out << "x,value,ci_lower,ci_upper,n_pairs,status\n";
    for (const CurvePoint& p : curve) {
        out << format_double(p.x) << ',';
        if (p.estimate) out << format_double(p.estimate->value);
        out << ',';
        if (p.estimate && p.estimate->ci)
            out << format_double(p.estimate->ci->lower) << ','
                << format_double(p.estimate->ci->upper);
        else
            out << ',';
        out << ',' << p.comparable_pairs << ',' << status_name(p.status) << '\n';
    }
    return out.str();
}

void emit(const std::string& text, const IoOptions& io, std::ostream& out) {
    if (io.out_file.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
        return;
    }
    std::ofstream file(io.out_file);
    if (!file) throw IngestError("cannot open file for writing: " + io.out_file);
    file << text;
}

ordered_json report_skeleton(const std::string& command) {
    ordered_json report;
    report["schema_version"] = kReportSchemaVersion;
    report["tool"] = "concord";
    report["version"] = kVersion;
    report["command"] = command;
    return report;
}

void warn_rejections(const Dataset& dataset, std::ostream& err) {
    if (dataset.rejected.empty()) return;
    err << "warning: rejected " << dataset.rejected.size() << " of " << dataset.input_rows
        << " rows\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(10, dataset.rejected.size()); ++i)
        err << "  row " << dataset.rejected[i].row_number << ": " << dataset.rejected[i].reason
            << '\n';
    if (dataset.rejected.size() > 10) err << "  ...\n";
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            grid.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--grid", "not a number: " + item);
        }
    }
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw CLI::ValidationError("--grid", "grid values must be strictly ascending");
    return grid;
}

std::string format_cell(double estimate, double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f (%.1fs)", estimate, seconds);
    return buf;
}

// ---------------------------------------------------------------------------
// subcommand drivers

int run_freq(const IoOptions& io, const EngineOptions& engine_opts, const std::string& contrast_text,
             double tol, std::ostream& out, std::ostream& err) {
    const auto contrast = parse_contrast(contrast_text);
    if (!contrast) throw CLI::ValidationError("--contrast", "must be one of 01+, 02+, 12+");

    const Dataset dataset = ingest_csv(io.input, DatasetKind::Frequency, io.columns);
    warn_rejections(dataset, err);

    Stopwatch watch;
    const ConcordanceEstimate est =
        global_frequency_concordance(dataset.frequency(), *contrast, tol, engine_opts.build());
    const double elapsed = watch.seconds();

    if (io.output == "csv") {
        emit(estimate_to_csv(est), io, out);
        return 0;
    }
    ordered_json report = report_skeleton("freq");
    report["params"] = engine_opts.echo(false);
    report["params"]["contrast"] = contrast_text;
    report["params"]["tol"] = tol;
    report["input"] = input_section(dataset);
    report["duration_seconds"] = elapsed;
    report["result"] = estimate_to_json(est);
    emit(report.dump(2), io, out);
    return 0;
}

int run_freq_curve(const IoOptions& io, const EngineOptions& engine_opts,
                   const std::string& contrast_text, const std::string& grid_text, double window,
                   std::uint64_t min_pairs, std::ostream& out, std::ostream& err) {
    const auto contrast = parse_contrast(contrast_text);
    if (!contrast) throw CLI::ValidationError("--contrast", "must be one of 01+, 02+, 12+");

    const Dataset dataset = ingest_csv(io.input, DatasetKind::Frequency, io.columns);
    warn_rejections(dataset, err);

    LocalCurveConfig config;
    config.lambda_grid = grid_text.empty() ? default_lambda_grid() : parse_grid(grid_text);
    config.window = window;
    config.min_pairs = min_pairs;

    Stopwatch watch;
    const std::vector<CurvePoint> curve =
        local_frequency_curve(dataset.frequency(), *contrast, config, engine_opts.build());
    const double elapsed = watch.seconds();

    if (io.output == "csv") {
        emit(curve_to_csv(curve), io, out);
        return 0;
    }
    ordered_json report = report_skeleton("freq-curve");
    report["params"] = engine_opts.echo(false);
    report["params"]["contrast"] = contrast_text;
    report["params"]["window"] = window;
    report["params"]["min_pairs"] = min_pairs;
    {
        ordered_json grid = ordered_json::array();
        for (double x : config.lambda_grid) grid.push_back(x);
        report["params"]["grid"] = grid;
    }
    report["input"] = input_section(dataset);
    report["duration_seconds"] = elapsed;
    report["curve"] = curve_to_json(curve);
    emit(report.dump(2), io, out);
    return 0;
}

int run_sev(const IoOptions& io, const EngineOptions& engine_opts, double v, std::ostream& out,
            std::ostream& err) {
    const Dataset dataset = ingest_csv(io.input, DatasetKind::Severity, io.columns);
    warn_rejections(dataset, err);

    Stopwatch watch;
    const ConcordanceEstimate est =
        severity_concordance(dataset.severity(), v, engine_opts.build());
    const double elapsed = watch.seconds();

    if (io.output == "csv") {
        emit(estimate_to_csv(est), io, out);
        return 0;
    }
    ordered_json report = report_skeleton("sev");
    report["params"] = engine_opts.echo(true);
    report["params"]["v"] = v;
    report["input"] = input_section(dataset);
    report["duration_seconds"] = elapsed;
    report["result"] = estimate_to_json(est);
    emit(report.dump(2), io, out);
    return 0;
}

int run_sev_curve(const IoOptions& io, const EngineOptions& engine_opts,
                  const std::string& grid_text, std::ostream& out, std::ostream& err) {
    const Dataset dataset = ingest_csv(io.input, DatasetKind::Severity, io.columns);
    warn_rejections(dataset, err);

    SeverityCurveConfig config;
    config.engine = engine_opts.build();
    config.v_grid = grid_text.empty() ? default_severity_grid(dataset.severity(), engine_opts.seed)
                                      : parse_grid(grid_text);

    Stopwatch watch;
    const std::vector<CurvePoint> curve = severity_curve(dataset.severity(), config);
    const double elapsed = watch.seconds();

    if (io.output == "csv") {
        emit(curve_to_csv(curve), io, out);
        return 0;
    }
    ordered_json report = report_skeleton("sev-curve");
    report["params"] = engine_opts.echo(true);
    {
        ordered_json grid = ordered_json::array();
        for (double x : config.v_grid) grid.push_back(x);
        report["params"]["grid"] = grid;
    }
    report["input"] = input_section(dataset);
    report["duration_seconds"] = elapsed;
    report["curve"] = curve_to_json(curve);
    emit(report.dump(2), io, out);
    return 0;
}

int run_bench(const IoOptions& io, const std::string& contrast_text, double tol,
              const std::vector<std::string>& methods, std::uint64_t sample_size,
              std::vector<std::uint32_t> ks, std::vector<std::uint32_t> bins_list,
              std::vector<std::uint32_t> reruns_list, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
    const auto contrast = parse_contrast(contrast_text);
    if (!contrast) throw CLI::ValidationError("--contrast", "must be one of 01+, 02+, 12+");
    for (const std::string& m : methods)
        if (m != "sample" && m != "kmeans")
            throw CLI::ValidationError("--methods", "unknown method: " + m);
    if (reruns_list.empty()) reruns_list.assign(ks.size(), 1);
    if (reruns_list.size() == 1 && ks.size() > 1) reruns_list.assign(ks.size(), reruns_list[0]);
    if (reruns_list.size() != ks.size())
        throw CLI::ValidationError("--reruns", "needs one value per --k entry");

    const Dataset dataset = ingest_csv(io.input, DatasetKind::Frequency, io.columns);
    warn_rejections(dataset, err);
    const FrequencySpec spec{*contrast, tol};

    ordered_json cells = ordered_json::array();
    std::ostringstream table;
    table << "concordance " << contrast_text << " on " << dataset.size() << " records ("
          << io.input << ")\n";

    if (std::find(methods.begin(), methods.end(), "sample") != methods.end()) {
        Stopwatch watch;
        const ConcordanceEstimate est =
            sampled_concordance(dataset.frequency(), spec, SamplingConfig{sample_size, seed, 0.05});
        const double elapsed = watch.seconds();
        cells.push_back({{"method", "sample"},
                         {"S", sample_size},
                         {"estimate", est.value},
                         {"ci_lower", est.ci ? ordered_json(est.ci->lower) : ordered_json(nullptr)},
                         {"ci_upper", est.ci ? ordered_json(est.ci->upper) : ordered_json(nullptr)},
                         {"seconds", elapsed}});
        char label[64];
        std::snprintf(label, sizeof(label), "sample S=%llu",
                      static_cast<unsigned long long>(sample_size));
        table << '\n' << label << ": " << format_cell(est.value, elapsed) << '\n';
    }

    if (std::find(methods.begin(), methods.end(), "kmeans") != methods.end()) {
        table << '\n' << "k-means";
        for (std::uint32_t b : bins_list) table << "\tbins=" << b;
        table << '\n';
        for (std::size_t ki = 0; ki < ks.size(); ++ki) {
            table << "k=" << ks[ki] << " (reruns=" << reruns_list[ki] << ")";
            for (std::uint32_t b : bins_list) {
                KMeansConfig config;
                config.k = ks[ki];
                config.reruns = reruns_list[ki];
                config.exposure_bins = b;
                config.seed = seed;
                Stopwatch watch;
                const ConcordanceEstimate est =
                    clustered_concordance(dataset.frequency(), spec, config);
                const double elapsed = watch.seconds();
                cells.push_back({{"method", "kmeans"},
                                 {"k", ks[ki]},
                                 {"reruns", reruns_list[ki]},
                                 {"bins", b},
                                 {"estimate", est.value},
                                 {"seconds", elapsed}});
                table << '\t' << format_cell(est.value, elapsed);
            }
            table << '\n';
        }
    }

    if (io.output == "csv") {
        std::ostringstream csv;
        csv << "method,S,k,reruns,bins,estimate,seconds\n";
        for (const auto& cell : cells) {
            csv << cell["method"].get<std::string>() << ',';
            csv << (cell.contains("S") ? std::to_string(cell["S"].get<std::uint64_t>()) : "") << ',';
            csv << (cell.contains("k") ? std::to_string(cell["k"].get<std::uint32_t>()) : "") << ',';
            csv << (cell.contains("reruns") ? std::to_string(cell["reruns"].get<std::uint32_t>())
                                            : "")
                << ',';
            csv << (cell.contains("bins") ? std::to_string(cell["bins"].get<std::uint32_t>()) : "")
                << ',';
            csv << format_double(cell["estimate"].get<double>()) << ','
                << format_double(cell["seconds"].get<double>()) << '\n';
        }
        emit(csv.str(), io, out);
        return 0;
    }

    ordered_json report = report_skeleton("bench");
    report["params"] = {{"contrast", contrast_text}, {"tol", tol}, {"seed", seed}};
    report["input"] = input_section(dataset);
    report["bench"] = cells;
    report["table"] = table.str();
    emit(report.dump(2), io, out);
    err << table.str();
    return 0;
}

int run_synth(std::size_t n, const std::string& scenario_text, std::uint64_t seed,
              const std::string& out_file, std::ostream& out, std::ostream& err) {
    const auto scenario = parse_scenario(scenario_text);
    if (!scenario)
        throw CLI::ValidationError(
            "--scenario", "must be poisson-world, gamma-world, separable or degenerate-ties");
    const Dataset dataset = generate_synthetic(n, *scenario, seed);
    write_csv(dataset, out_file);
    ordered_json report = report_skeleton("synth");
    report["params"] = {{"n", n}, {"scenario", scenario_text}, {"seed", seed}};
    report["output"] = {{"path", out_file},
                        {"kind", to_string(dataset.kind)},
                        {"rows", dataset.size()},
                        {"digest", to_hex(dataset.digest())}};
    out << report.dump(2) << '\n';
    (void)err;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"concordance probabilities for insurance frequency and severity models",
                 "concord"};
    app.require_subcommand(1);

    // freq / freq-curve
    IoOptions freq_io;
    EngineOptions freq_engine;
    std::string freq_contrast = "01+";
    double freq_tol = 0.05;
    CLI::App* freq = app.add_subcommand("freq", "global exposure-matched frequency concordance");
    freq_io.add_flags(freq);
    freq_engine.add_flags(freq, false);
    freq->add_option("--contrast", freq_contrast, "claim-count contrast: 01+, 02+ or 12+");
    freq->add_option("--tol", freq_tol, "max exposure gap within a pair")
        ->check(CLI::NonNegativeNumber);

    IoOptions curve_io;
    EngineOptions curve_engine;
    std::string curve_contrast = "01+";
    std::string curve_grid;
    double curve_window = 0.05;
    std::uint64_t curve_min_pairs = 100;
    CLI::App* fcurve =
        app.add_subcommand("freq-curve", "local concordance over the exposure axis");
    curve_io.add_flags(fcurve);
    curve_engine.add_flags(fcurve, false);
    fcurve->add_option("--contrast", curve_contrast, "claim-count contrast: 01+, 02+ or 12+");
    fcurve->add_option("--grid", curve_grid, "comma-separated exposure grid (default 0.05..1.00)");
    fcurve->add_option("--window", curve_window, "exposure half-window per grid point")
        ->check(CLI::PositiveNumber);
    fcurve->add_option("--min-pairs", curve_min_pairs,
                       "mark points with fewer comparable pairs than this");

    // sev / sev-curve
    IoOptions sev_io;
    EngineOptions sev_engine;
    double sev_v = 0.0;
    CLI::App* sev = app.add_subcommand("sev", "severity concordance C(v)");
    sev_io.add_flags(sev);
    sev_engine.add_flags(sev, true);
    sev->add_option("--v", sev_v, "minimum claim-size gap")->check(CLI::NonNegativeNumber);

    IoOptions scurve_io;
    EngineOptions scurve_engine;
    std::string scurve_grid;
    CLI::App* scurve = app.add_subcommand("sev-curve", "C(v) over a threshold grid");
    scurve_io.add_flags(scurve);
    scurve_engine.add_flags(scurve, true);
    scurve->add_option("--grid", scurve_grid,
                       "comma-separated v grid (default: data-driven deciles)");

    // bench
    IoOptions bench_io;
    std::string bench_contrast = "01+";
    double bench_tol = 0.05;
    std::vector<std::string> bench_methods{"sample", "kmeans"};
    std::uint64_t bench_s = 20000;
    std::vector<std::uint32_t> bench_ks{10, 19, 50};
    std::vector<std::uint32_t> bench_bins{8, 15, 70};
    std::vector<std::uint32_t> bench_reruns;
    std::uint64_t bench_seed = 0;
    CLI::App* bench = app.add_subcommand("bench", "estimate/runtime table across settings");
    bench_io.add_flags(bench);
    bench->add_option("--contrast", bench_contrast, "claim-count contrast");
    bench->add_option("--tol", bench_tol, "exposure tolerance for the sampled row")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--methods", bench_methods, "methods to run: sample,kmeans")
        ->delimiter(',');
    bench->add_option("--S", bench_s, "sample size for the sampled row");
    bench->add_option("--k", bench_ks, "cluster counts")->delimiter(',');
    bench->add_option("--bins", bench_bins, "exposure splits")->delimiter(',');
    bench->add_option("--reruns", bench_reruns, "reruns per --k entry")->delimiter(',');
    bench->add_option("--seed", bench_seed, "random seed");

    // synth
    std::size_t synth_n = 10000;
    std::string synth_scenario = "poisson-world";
    std::uint64_t synth_seed = 0;
    std::string synth_out = "synthetic.csv";
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic dataset CSV");
    synth->add_option("--n", synth_n, "rows to generate")->check(CLI::PositiveNumber);
    synth->add_option("--scenario", synth_scenario,
                      "poisson-world, gamma-world, separable or degenerate-ties");
    synth->add_option("--seed", synth_seed, "random seed");
    synth->add_option("--out-file", synth_out, "destination CSV path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (app.got_subcommand(freq))
            return run_freq(freq_io, freq_engine, freq_contrast, freq_tol, out, err);
        if (app.got_subcommand(fcurve))
            return run_freq_curve(curve_io, curve_engine, curve_contrast, curve_grid, curve_window,
                                  curve_min_pairs, out, err);
        if (app.got_subcommand(sev)) return run_sev(sev_io, sev_engine, sev_v, out, err);
        if (app.got_subcommand(scurve))
            return run_sev_curve(scurve_io, scurve_engine, scurve_grid, out, err);
        if (app.got_subcommand(bench))
            return run_bench(bench_io, bench_contrast, bench_tol, bench_methods, bench_s, bench_ks,
                             bench_bins, bench_reruns, bench_seed, out, err);
        if (app.got_subcommand(synth))
            return run_synth(synth_n, synth_scenario, synth_seed, synth_out, out, err);
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) {
            err << "usage error: " << e.what() << '\n';
            return 1;
        }
        return 0;
    } catch (const UnsupportedEngine& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "data error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace concord
