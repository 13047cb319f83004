#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include "gallagher/arith.hpp"
#include "gallagher/compare.hpp"
#include "gallagher/correlation.hpp"
#include "gallagher/csv.hpp"
#include "gallagher/dirichlet.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/expsum.hpp"
#include "gallagher/parallel.hpp"
#include "gallagher/selberg.hpp"
#include "gallagher/suite.hpp"
#include "gallagher/transforms.hpp"
#include "gallagher/weights.hpp"

namespace gallagher::cli {

namespace {

using csv::format;

// Where CSV goes, plus what the manifest records about it.
class Sink {
public:
    Sink(std::ostream& fallback, std::string path) : fallback_(fallback), path_(std::move(path)) {
        if (!path_.empty()) {
            file_.open(path_);
            if (!file_) throw ParameterDomainError("cannot open --out file '" + path_ + "'");
        }
    }
    std::ostream& csv() { return path_.empty() ? fallback_ : file_; }
    std::ostream& console() { return fallback_; }
    const std::string& path() const { return path_; }

private:
    std::ostream& fallback_;
    std::string path_;
    std::ofstream file_;
};

void write_manifest(const std::string& out_path, const std::vector<std::string>& args, const CLI::App& sub,
                    std::uint64_t seed, double seconds) {
    std::ofstream m(out_path + ".manifest.txt");
    if (!m) throw ParameterDomainError("cannot write manifest for '" + out_path + "'");
    std::string command;
    for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
    m << "command=" << command << '\n';
    m << "version=" << GALLAGHER_VERSION << '\n';
    m << "subcommand=" << sub.get_name() << '\n';
    m << "seed=" << seed << '\n';
    std::map<std::string, std::string> params;
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string joined;
        for (const auto& r : opt->results()) joined += (joined.empty() ? "" : ";") + r;
        params[opt->get_name()] = joined.empty() ? "true" : joined;
    }
    for (const auto& [k, v] : params) m << "param." << k << '=' << v << '\n';
    m << "wall_seconds=" << seconds << '\n';
    m << "output=" << out_path << '\n';
}

// Frequencies from a file or a seeded generator.
ExpSumSpec load_spec(const std::string& path, int random_terms, std::uint64_t seed) {
    if (!path.empty()) return read_expsum_csv(path);
    if (random_terms > 0) return random_expsum(static_cast<std::size_t>(random_terms), seed);
    throw ParameterDomainError("give --frequencies <file.csv> or --random <terms>");
}

std::string report_row(const std::string& statement, const InequalityReport& r) {
    return csv::row({statement, format(r.lhs), format(r.m), format(r.rhs), format(r.slack), format(r.holds),
                     format(r.trivial)});
}

ArithFnTable load_function(const std::string& fn, long long hi) {
    if (fn.rfind("custom:", 0) == 0) return read_arith_csv(fn.substr(7));
    if (fn.size() == 2 && fn[0] == 'd' && fn[1] >= '1' && fn[1] <= '9') return divisor_table(fn[1] - '0', 1, hi);
    throw ParameterDomainError("--fn must be d1, d2, d3 or custom:<file>, got '" + fn + "'");
}

SelbergKind parse_kind(const std::string& text) {
    for (auto k : {SelbergKind::original, SelbergKind::modified, SelbergKind::jth, SelbergKind::weighted,
                   SelbergKind::box})
        if (to_string(k) == text) return k;
    throw ParameterDomainError("unknown --kind '" + text + "'");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& cell : csv::split(text)) out.push_back(csv::parse_double(cell, "--sweep"));
    return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted mean-square inequalities, Selberg integrals and weight comparisons."};
    app.name(args.empty() ? "gallagher_lab" : args.front());
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::uint64_t seed = 0;
    int threads = 0;
    app.add_option("--out", out_path, "CSV destination (default stdout); a manifest is written next to it");
    app.add_option("--seed", seed, "Seed for every random input (default 0)");
    app.add_option("--threads", threads, "Cap on worker threads (overrides GALLAGHER_LAB_THREADS)");

    // weight
    auto* weight = app.add_subcommand("weight", "Inspect a weight: values, spline, transform, interval minimum");
    std::string weight_spec;
    std::vector<double> evals;
    bool emit_spline = false;
    std::string grid;
    double min_T = 0;
    weight->add_option("--spec", weight_spec, "e.g. cesaro:j=2,delta=1")->required();
    weight->add_option("--eval", evals, "Points at which to print w(x)");
    weight->add_flag("--spline", emit_spline, "Print the spline, one row per piece");
    weight->add_option("--grid", grid, "Transform table over lo:hi:n");
    weight->add_option("--min-T", min_T, "Print min over |t| <= T of |w^(t)|^2");

    // verify-lemma
    auto* verify = app.add_subcommand("verify-lemma", "Both sides of the weighted mean-square inequality");
    std::string verify_weight, frequencies;
    double verify_T = 0, theta = 0;
    int random_terms = 0;
    verify->add_option("--weight", verify_weight, "Weight spec");
    verify->add_option("--T", verify_T, "Half-length of the t-interval")->required();
    verify->add_option("--theta", theta, "Also run the explicit-constant instances with delta = theta / T");
    verify->add_option("--frequencies", frequencies, "CSV with columns nu,re,im");
    verify->add_option("--random", random_terms, "Use a seeded random spec with this many terms");

    // dirichlet
    auto* dir = app.add_subcommand("dirichlet", "Mean square of a Dirichlet polynomial against its upper bound");
    std::string coeffs, random_range, sweep, method = "exact";
    double dir_T = 0;
    dir->add_option("--coeffs", coeffs, "CSV rows n,re[,im]");
    dir->add_option("--random", random_range, "Seeded coefficients on n_min:n_max");
    dir->add_option("--T", dir_T, "T > 1");
    dir->add_option("--sweep", sweep, "Comma-separated list of T values");
    dir->add_option("--method", method, "exact or simpson")->check(CLI::IsMember({"exact", "simpson"}));

    // selberg
    auto* sel = app.add_subcommand("selberg", "Selberg-type integrals of an arithmetic function");
    sel->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    std::string fn = "d2", kind = "original", sel_weight;
    long long N = 0, h = 0, H = 0;
    int j = 1;
    bool balanced = false;
    sel->add_option("--fn", fn, "d1, d2, d3 or custom:<file>");
    sel->add_flag("--balanced", balanced, "Subtract the log polynomial first");
    sel->add_option("--N", N, "x ranges over (N, 2N]")->required();
    sel->add_option("--h", h, "Window length")->required();
    sel->add_option("--H", H, "Longer window: adds the length-inertia ratios");
    sel->add_option("--j", j, "Order of the Cesaro window for --kind jth/modified");
    sel->add_option("--kind", kind, "original, modified, jth, weighted or box");
    sel->add_option("--weight", sel_weight, "Weight for --kind weighted (default cesaro:j=1,delta=h)");

    // correlate
    auto* cor = app.add_subcommand("correlate", "Autocorrelation of an integer-sampled weight and its DFT");
    std::string cor_weight, emit = "table";
    int points = 1024;
    cor->add_option("--weight", cor_weight, "Weight spec, e.g. step:delta=16")->required();
    cor->add_option("--emit", emit, "table or dft")->check(CLI::IsMember({"table", "dft"}));
    cor->add_option("--points", points, "Number of alpha samples on [-1/2, 1/2) for --emit dft");

    // compare
    auto* cmp = app.add_subcommand("compare", "Is v T-better than w?");
    std::string v_spec, w_spec, scan_text;
    double cmp_T = 0;
    cmp->add_option("--v", v_spec, "Candidate weight")->required();
    cmp->add_option("--w", w_spec, "Reference weight")->required();
    cmp->add_option("--T", cmp_T, "T > 0")->required();
    cmp->add_option("--scan", scan_text, "ymax=..,n=..");

    // suite
    auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
    std::string profile = "quick";
    int criterion = 0;
    suite->add_option("profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    suite->add_option("--criterion", criterion, "Run a single criterion (1-10)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParameter;
    }

    const auto started = std::chrono::steady_clock::now();
    int status = kOk;
    try {
        if (threads > 0) set_thread_cap(threads);
        Sink sink(out, out_path);
        auto& csv = sink.csv();
        csv.precision(17);

        if (weight->parsed()) {
            const auto w = make_weight(weight_spec);
            bool any = false;
            for (double x : evals) {
                csv << format(w(x)) << '\n';
                any = true;
            }
            if (emit_spline) {
                csv << w.spline().to_csv();
                any = true;
            }
            if (!grid.empty()) {
                csv << transform_csv(w, parse_frequency_grid(grid));
                any = true;
            }
            if (min_T > 0) {
                const auto r = min_sq_on_interval(w, min_T);
                csv << "T,argmin,m,analytic\n"
                    << csv::row({format(r.T), format(r.argmin), format(r.m), format(r.analytic)}) << '\n';
                any = true;
            }
            if (!any) {
                csv << "label,lower,upper,pieces,degree,integral,transform_at_0\n"
                    << csv::row({w.label(), format(w.spline().lower()), format(w.spline().upper()),
                                 format(static_cast<long long>(w.spline().piece_count())),
                                 format(static_cast<long long>(w.spline().degree())), format(w.spline().integral()),
                                 format(transform(w, 0).real())})
                    << '\n';
            }
        } else if (verify->parsed()) {
            const auto spec = load_spec(frequencies, random_terms, seed);
            if (verify_weight.empty() && theta <= 0) throw ParameterDomainError("give --weight and/or --theta");
            bool holds = true;
            csv << "statement,lhs,m,rhs,slack,holds,trivial\n";
            if (!verify_weight.empty()) {
                const auto r = verify_lemma(spec, make_weight(verify_weight), verify_T);
                csv << report_row("lemma", r) << '\n';
                holds = holds && r.holds;
            }
            if (theta > 0) {
                const auto c = cesaro_instance(spec, verify_T, theta);
                csv << report_row("cesaro_instance", c.report) << '\n';
                const auto g = gallagher_original(spec, theta / verify_T, theta);
                csv << report_row("original", g) << '\n';
                holds = holds && c.report.holds && g.holds;
            }
            if (!holds) status = kViolation;
        } else if (dir->parsed()) {
            DirichletPoly D;
            if (!coeffs.empty()) {
                D = read_dirichlet_csv(coeffs);
            } else if (!random_range.empty()) {
                const auto colon = random_range.find(':');
                if (colon == std::string::npos) throw ParameterDomainError("--random expects n_min:n_max");
                D = random_dirichlet(csv::parse_int(random_range.substr(0, colon), "n_min"),
                                     csv::parse_int(random_range.substr(colon + 1), "n_max"), seed);
            } else {
                throw ParameterDomainError("give --coeffs <file.csv> or --random n_min:n_max");
            }
            std::vector<double> Ts = sweep.empty() ? std::vector<double>{} : parse_list(sweep);
            if (dir_T > 0) Ts.insert(Ts.begin(), dir_T);
            if (Ts.empty()) throw ParameterDomainError("give --T or --sweep");
            Theorem1Options opt;
            opt.method = method == "simpson" ? Theorem1Method::simpson : Theorem1Method::exact;
            csv << "T,lhs,main,remainder,ratio\n";
            for (double T : Ts) {
                const double lhs = d_norm_sq_2T(D, T);
                const auto terms = theorem1_rhs(D, T, opt);
                const double rhs = terms.main + terms.remainder;
                csv << csv::row({format(T), format(lhs), format(terms.main), format(terms.remainder),
                                 format(rhs > 0 ? lhs / rhs : 0.0)})
                    << '\n';
            }
        } else if (sel->parsed()) {
            const long long reach = std::max(h, H) + 2;
            const SelbergKind k = parse_kind(kind);
            auto f = load_function(fn, 2 * N + 2 * reach);
            if (balanced) f = balanced_part(f);
            SelbergResult r;
            switch (k) {
                case SelbergKind::original: r = selberg_integral(f, N, h); break;
                case SelbergKind::box: r = box_selberg_integral(f, N, h); break;
                case SelbergKind::modified:
                case SelbergKind::jth: r = modified_selberg_integral(f, N, h, k == SelbergKind::modified ? 1 : j); break;
                case SelbergKind::weighted:
                    r = weighted_selberg_integral(
                        f, make_weight(sel_weight.empty() ? "cesaro:j=1,delta=" + std::to_string(h) : sel_weight), N);
                    break;
            }
            std::string orig, mod;
            if (H > 0) {
                const auto li = length_inertia_check(f, N, h, H);
                orig = format(li.original_ratio);
                mod = format(li.modified_ratio);
            }
            csv << "N,h,H,j,kind,value,original_ratio,modified_ratio\n"
                << csv::row({format(N), format(h), H > 0 ? format(H) : "", r.j >= 0 ? format(r.j) : "",
                             to_string(r.kind), format(r.value), orig, mod})
                << '\n';
        } else if (cor->parsed()) {
            const auto w = IntWeight::from_weight(make_weight(cor_weight));
            if (emit == "table") {
                const auto t = autocorrelation(w);
                csv << "lag,re,im\n";
                for (long long lag = -t.max_lag; lag <= t.max_lag; ++lag)
                    csv << csv::row({format(lag), format(t.at(lag).real()), format(t.at(lag).imag())}) << '\n';
            } else {
                const auto t = autocorrelation(w);
                csv << "alpha,re,im\n";
                for (double a : alpha_grid(points)) {
                    const auto v = correlation_dft(t, a);
                    csv << csv::row({format(a), format(v.real()), format(v.imag())}) << '\n';
                }
            }
        } else if (cmp->parsed()) {
            const auto v = make_weight(v_spec), w = make_weight(w_spec);
            const auto r = is_T_better(v, w, cmp_T, scan_text.empty() ? ScanOptions{} : parse_scan_options(scan_text));
            sink.console() << "verdict=" << to_string(r.verdict) << " violation_measure=" << format(r.violation_measure)
                           << " ratio_threshold=" << format(r.ratio_threshold) << " gain_bound=" << format(r.gain_bound)
                           << " y_max=" << format(r.y_max) << '\n';
            csv << comparison_csv(r);
        } else if (suite->parsed()) {
            acceptance::SuiteOptions opt{acceptance::parse_profile(profile), seed};
            std::vector<acceptance::CriterionResult> results;
            auto report = [&](const acceptance::CriterionResult& r) {
                csv << acceptance::summary_line(r) << '\n';
                for (const auto& note : r.notes) csv << "      " << note << '\n';
                csv.flush();
                results.push_back(r);
            };
            if (criterion != 0)
                report(acceptance::run_criterion(criterion, opt));
            else
                acceptance::run_suite(opt, report);
            for (const auto& r : results)
                if (!r.passed) status = kInternal;
        }
        csv.flush();

        if (!sink.path().empty()) {
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            write_manifest(out_path, args, *app.get_subcommands().front(), seed, seconds);
        }
    } catch (const ResourceError& e) {
        err << "resource guard: " << e.what() << '\n';
        return kInternal;
    } catch (const ParameterDomainError& e) {
        err << "parameter error: " << e.what() << '\n';
        return kParameter;
    } catch (const DegenerateInputError& e) {
        err << "degenerate input: " << e.what() << '\n';
        return kParameter;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kParameter;
    } catch (const RangeError& e) {
        err << "range: " << e.what() << '\n';
        return kParameter;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << '\n';
        return kParameter;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return status;
}

}  // namespace gallagher::cli
