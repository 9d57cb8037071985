// hookdist: t-hook statistics of self-conjugate partitions from the command line.

#include "hookdist/asymptotics.hpp"
#include "hookdist/csv.hpp"
#include "hookdist/genfun.hpp"
#include "hookdist/parallel.hpp"
#include "hookdist/partitions.hpp"
#include "hookdist/stats.hpp"
#include "hookdist/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hookdist;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    int t = 2;
    int n = -1;
    std::optional<int> truncation;
    std::vector<int> nvals{100, 500, 1000, 5000};
    std::string T0 = "1";
    std::optional<std::size_t> samples;
    std::string format = "csv";
    std::string output;
    unsigned threads = 0;
    int precision = 12;
    bool self_conjugate = false;
    std::string suite = "all";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void progress(const std::string& message) {
    std::cerr << "hookdist: " << message << '\n';
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

void require_n(const RunConfig& cfg) {
    if (cfg.n < 0) throw UsageError("-n/--size is required and must be non-negative");
}

Rational parse_t0(const RunConfig& cfg) {
    Rational t0;
    try {
        t0 = Rational::parse(cfg.T0);
    } catch (const std::exception&) {
        throw UsageError("--T0 must be a positive rational such as 3/2 or 1.5, got '" + cfg.T0 + "'");
    }
    if (t0.sign() <= 0) throw UsageError("--T0 must be positive");
    return t0;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        write_file_atomic(cfg.output, text);
    }
}

std::string cmd_enumerate(const RunConfig& cfg) {
    require_n(cfg);
    const auto parts = cfg.self_conjugate ? enumerate_self_conjugate(cfg.n) : enumerate_partitions(cfg.n);
    std::ostringstream out;
    if (cfg.format == "json") {
        json list = json::array();
        for (const Partition& p : parts) list.push_back(p.parts());
        out << json{{"n", cfg.n}, {"self_conjugate", cfg.self_conjugate}, {"partitions", list}}.dump() << '\n';
    } else {
        for (const Partition& p : parts) out << p.to_string() << '\n';
    }
    return out.str();
}

std::string cmd_dist(const RunConfig& cfg, unsigned threads) {
    require_n(cfg);
    const int budget = cfg.truncation.value_or(cfg.n);
    if (cfg.n > budget) {
        throw UsageError("n=" + std::to_string(cfg.n) + " exceeds the truncation budget " + std::to_string(budget));
    }
    Stopwatch clock;
    progress("building F_" + std::to_string(cfg.t) + "(T;q) to q^" + std::to_string(budget) + " on " +
             std::to_string(threads) + " thread(s)");
    const auto g = build_genfun(cfg.t, static_cast<std::size_t>(budget), threads);
    const HookDistribution d = hook_distribution(g, static_cast<std::size_t>(cfg.n));
    progress("done in " + seconds_text(clock.seconds()));

    std::optional<ExactMoments> mom;
    if (sgn(d.total) != 0) mom = exact_moments(d);
    std::ostringstream out;
    if (cfg.format == "json") {
        json counts = json::array();
        for (std::size_t m = 0; m < d.counts.size(); ++m) {
            if (sgn(d.counts[m]) != 0) counts.push_back(json::array({m, d.counts[m].get_str()}));
        }
        json doc{{"t", d.t}, {"n", d.n}, {"coeffs", counts}, {"total", d.total.get_str()}};
        doc["mean"] = mom ? json(mom->mean.to_string()) : json(nullptr);
        doc["variance"] = mom ? json(mom->variance.to_string()) : json(nullptr);
        out << doc.dump() << '\n';
    } else {
        write_csv_row(out, {"m", "count"});
        for (std::size_t m = 0; m < d.counts.size(); ++m) {
            if (sgn(d.counts[m]) != 0) write_csv_row(out, {std::to_string(m), d.counts[m].get_str()});
        }
        write_csv_row(out, {"total", d.total.get_str()});
        write_csv_row(out, {"mean", mom ? mom->mean.to_decimal(cfg.precision) : ""});
        write_csv_row(out, {"variance", mom ? mom->variance.to_decimal(cfg.precision) : ""});
    }
    return out.str();
}

std::string cmd_table1(const RunConfig& cfg, unsigned threads) {
    for (int n : cfg.nvals) {
        if (n < 1) throw UsageError("--nvals entries must be positive (the mean is undefined at n=" + std::to_string(n) + ")");
    }
    Stopwatch clock;
    progress("jets of F_2(1+e;q) to q^" + std::to_string(*std::max_element(cfg.nvals.begin(), cfg.nvals.end())));
    const auto rows = table1(cfg.nvals, threads);
    progress("done in " + seconds_text(clock.seconds()));
    std::ostringstream out;
    if (cfg.format == "json") {
        json list = json::array();
        for (const Table1Row& r : rows) {
            list.push_back({{"n", r.n},
                            {"mu_measured", r.mean_measured.to_string()},
                            {"mu_asymptotic", r.mean_asymptotic.to_string()},
                            {"ratio", r.ratio.to_string()},
                            {"mu_measured_exact", r.mean_exact.to_string()}});
        }
        out << list.dump() << '\n';
    } else {
        write_table1_csv(out, rows);
    }
    return out.str();
}

std::string cmd_figure2(const RunConfig& cfg, unsigned threads) {
    require_n(cfg);
    if (cfg.precision < 1 || cfg.precision > 17) throw UsageError("--precision must be in [1, 17] for figure2");
    Stopwatch clock;
    progress("building F_" + std::to_string(cfg.t) + "(T;q) to q^" + std::to_string(cfg.n));
    const HookDistribution d = hook_distribution(cfg.t, cfg.n, threads);
    progress("done in " + seconds_text(clock.seconds()));
    const auto rows = figure2_data(d);
    std::ostringstream out;
    if (cfg.format == "json") {
        json list = json::array();
        for (const Figure2Row& r : rows) list.push_back({{"m", r.m}, {"x", r.x}, {"y", r.y}});
        out << list.dump() << '\n';
    } else {
        write_figure2_csv(out, rows, cfg.precision);
    }
    return out.str();
}

std::string key_values(const RunConfig& cfg, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream out;
    if (cfg.format == "json") {
        json doc = json::object();
        for (const auto& [k, v] : kv) doc[k] = v;
        out << doc.dump() << '\n';
    } else {
        write_csv_row(out, {"quantity", "value"});
        for (const auto& [k, v] : kv) write_csv_row(out, {k, v});
    }
    return out.str();
}

std::string cmd_asymptotics(const RunConfig& cfg) {
    require_n(cfg);
    if (cfg.n < 1) throw UsageError("asymptotics needs n >= 1");
    const Rational t0 = parse_t0(cfg);
    const double T = t0.to_double();
    const int digits = std::clamp(cfg.precision, 1, 17);
    const AsymptoticParams p = asymptotic_params(cfg.t);
    std::vector<std::pair<std::string, std::string>> kv{
        {"t", std::to_string(cfg.t)},
        {"n", std::to_string(cfg.n)},
        {"T", t0.to_string()},
        {"b_t", format_double(b_t(cfg.t, T), digits)},
        {"alpha", format_double(saddle_alpha(cfg.t, T, cfg.n), digits)},
        {"sc_asymptotic", format_double(sc_asymptotic(cfg.t, T, cfg.n), digits)},
        {"n_min", std::to_string(p.n_min)},
    };
    if (cfg.n >= p.n_min) {
        const MeanVariance mv = mean_variance(cfg.t, cfg.n);
        kv.emplace_back("mu", format_double(mv.mean, digits));
        kv.emplace_back("sigma2", format_double(mv.variance, digits));
    }
    return key_values(cfg, kv);
}

std::string cmd_cauchy(const RunConfig& cfg, unsigned threads) {
    require_n(cfg);
    if (cfg.n < 1) throw UsageError("cauchy needs n >= 1");
    const Rational t0 = parse_t0(cfg);
    const std::size_t samples = cfg.samples.value_or(std::max<std::size_t>(4096, 8 * static_cast<std::size_t>(cfg.n)));
    const int digits = std::clamp(cfg.precision, 1, 17);
    Stopwatch clock;
    progress("trapezoidal rule with " + std::to_string(samples) + " samples");
    const double estimate = cauchy_estimate(cfg.t, t0.to_double(), cfg.n, samples, threads);
    const Rational exact = exact_sc_value(cfg.t, t0, cfg.n, threads);
    progress("done in " + seconds_text(clock.seconds()));
    const double rel = std::abs(estimate - exact.to_double()) / exact.to_double();
    return key_values(cfg, {{"t", std::to_string(cfg.t)},
                            {"n", std::to_string(cfg.n)},
                            {"T", t0.to_string()},
                            {"samples", std::to_string(samples)},
                            {"estimate", format_double(estimate, digits)},
                            {"exact", exact.to_string()},
                            {"relative_error", format_double(rel, digits)}});
}

int cmd_verify(const RunConfig& cfg, unsigned threads) {
    Suite suite;
    try {
        suite = parse_suite(cfg.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto results = run_verification(suite, threads, [](const std::string& m) { progress(m); });
    std::ostringstream out;
    int failed = 0;
    for (const CheckResult& r : results) {
        failed += r.passed ? 0 : 1;
        out << (r.passed ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name;
        if (!r.detail.empty()) out << "  (" << r.detail << ')';
        out << '\n';
    }
    out << results.size() - static_cast<std::size_t>(failed) << '/' << results.size() << " checks passed\n";
    emit(cfg, out.str());
    return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact t-hook statistics of self-conjugate partitions"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_t = [&](CLI::App* sub) {
        sub->add_option("-t,--hook-length", cfg.t, "hook length t")->check(CLI::Range(1, 1000000));
    };
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("-n,--size", cfg.n, "partition size n")->check(CLI::NonNegativeNumber);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", cfg.output, "write to PATH (atomically) instead of stdout");
        sub->add_option("--threads", cfg.threads, "worker threads (default: logical processors)")
            ->envname("HOOKDIST_THREADS")
            ->check(CLI::PositiveNumber);
        sub->add_option("--precision", cfg.precision, "decimal digits in printed values")
            ->check(CLI::Range(1, 1000));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list partitions of n, one per line");
    enumerate->add_option("N", cfg.n, "partition size")->check(CLI::NonNegativeNumber);
    add_n(enumerate);
    enumerate->add_flag("--self-conjugate", cfg.self_conjugate, "only self-conjugate partitions");
    add_common(enumerate);

    auto* dist = app.add_subcommand("dist", "exact distribution of t-hook counts over SC(n)");
    add_t(dist);
    add_n(dist);
    dist->add_option("--truncation", cfg.truncation, "q-truncation budget (default: n)")
        ->check(CLI::NonNegativeNumber);
    add_common(dist);

    auto* tab = app.add_subcommand("table1", "mean number of 2-hooks against sqrt(6n)/pi");
    tab->add_option("--nvals", cfg.nvals, "comma-separated n values")->delimiter(',');
    add_common(tab);

    auto* fig = app.add_subcommand("figure2", "renormalized coefficients of sc_t(n;T)");
    add_t(fig);
    add_n(fig);
    add_common(fig);

    auto* asym = app.add_subcommand("asymptotics", "b_t, saddle point, mu and sigma^2 for t, n, T");
    add_t(asym);
    add_n(asym);
    asym->add_option("--T0", cfg.T0, "evaluation point T (rational, default 1)");
    add_common(asym);

    auto* cauchy = app.add_subcommand("cauchy", "Cauchy-integral quadrature cross-check");
    add_t(cauchy);
    add_n(cauchy);
    cauchy->add_option("--T0", cfg.T0, "evaluation point T (rational, default 1)");
    cauchy->add_option("--samples", cfg.samples, "trapezoidal nodes M (>= 8n)")->check(CLI::PositiveNumber);
    add_common(cauchy);

    auto* ver = app.add_subcommand("verify", "run the self-check suites");
    ver->add_option("--suite", cfg.suite, "oracle, identities, asymptotics or all")
        ->check(CLI::IsMember({"oracle", "identities", "asymptotics", "all"}));
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const unsigned threads = resolve_threads(cfg.threads);
        if (*enumerate) {
            emit(cfg, cmd_enumerate(cfg));
        } else if (*dist) {
            emit(cfg, cmd_dist(cfg, threads));
        } else if (*tab) {
            emit(cfg, cmd_table1(cfg, threads));
        } else if (*fig) {
            emit(cfg, cmd_figure2(cfg, threads));
        } else if (*asym) {
            emit(cfg, cmd_asymptotics(cfg));
        } else if (*cauchy) {
            emit(cfg, cmd_cauchy(cfg, threads));
        } else if (*ver) {
            return cmd_verify(cfg, threads);
        }
    } catch (const UsageError& e) {
        std::cerr << "hookdist: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "hookdist: internal invariant violated: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::logic_error& e) {
        // invalid_argument, domain_error, out_of_range: bad input for this command
        std::cerr << "hookdist: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "hookdist: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitOk;
}
