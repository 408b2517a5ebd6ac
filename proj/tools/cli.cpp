#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "uflab/dft.hpp"
#include "uflab/error.hpp"
#include "uflab/explorer.hpp"
#include "uflab/functionals.hpp"
#include "uflab/optimizer.hpp"
#include "uflab/report_io.hpp"
#include "uflab/verifier.hpp"

namespace uflab::cli {
namespace {

struct Common {
    std::optional<double> q;
    std::optional<double> p;
    std::optional<double> tol;
    std::uint64_t seed = 42;
    bool json = false;
    std::string out;
    std::optional<unsigned> threads;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--q", c.q, "Exponent q");
    sub->add_option("--p", c.p, "Second exponent p (F_{q,p}); omitted means p = 2");
    sub->add_option("--tol", c.tol, "Relative quadrature tolerance (default 1e-8; 1e-10 for verify and minimize)");
    sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    sub->add_flag("--json", c.json, "JSON output (sweep only; other subcommands always emit JSON)");
    sub->add_option("--out", c.out, "Write the report to this path instead of stdout");
    sub->add_option("--threads", c.threads, "Worker threads (env UFLAB_THREADS; the flag wins)")
        ->check(CLI::PositiveNumber);
}

unsigned resolve_threads(const Common& c) {
    if (c.threads) {
        return *c.threads;
    }
    if (const char* env = std::getenv("UFLAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
        throw CLI::ValidationError("UFLAB_THREADS", "must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

double require_q(const Common& c) {
    if (!c.q) {
        throw CLI::RequiredError("--q");
    }
    return *c.q;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        throw Error("cannot open '" + c.out + "' for writing");
    }
    f << text;
    if (!f) {
        throw Error("write to '" + c.out + "' failed");
    }
}

struct FamilyArgs {
    std::string family;
    std::optional<double> a;
    std::optional<double> c;
};

void add_family_member(CLI::App* sub, FamilyArgs& f) {
    sub->add_option("--family", f.family, "chirp | twoscale | gaussian")
        ->required()
        ->check(CLI::IsMember({"chirp", "twoscale", "gaussian"}));
    auto* a = sub->add_option("--a", f.a, "Chirp parameter a > 1");
    auto* c = sub->add_option("--c", f.c, "Two-scale parameter c > 0");
    a->excludes(c);
}

TestFunction family_member(const FamilyArgs& f, double& param) {
    if (f.family == "chirp") {
        if (!f.a || f.c) {
            throw CLI::ValidationError("--a", "chirp needs --a (and no --c)");
        }
        param = *f.a;
        return GaussianMixture(make_chirp(ChirpParams(*f.a)));
    }
    if (f.family == "twoscale") {
        if (!f.c || f.a) {
            throw CLI::ValidationError("--c", "twoscale needs --c (and no --a)");
        }
        param = *f.c;
        return make_two_scale(TwoScaleParams(*f.c));
    }
    if (f.a || f.c) {
        throw CLI::ValidationError("--family", "gaussian takes no --a or --c");
    }
    param = 1.0;
    return GaussianMixture(make_term({1.0, 0.0}, {1.0, 0.0}));
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical laboratory for the Fourier uncertainty functionals F_q and F_{q,p}", "uflab"};
    app.require_subcommand(1);

    // eval
    Common eval_c;
    FamilyArgs eval_f;
    std::string eval_method = "both";
    auto* eval = app.add_subcommand("eval", "Evaluate F_q or F_{q,p} for one function");
    add_common(eval, eval_c);
    add_family_member(eval, eval_f);
    eval->add_option("--method", eval_method, "closed | quad | both")
        ->check(CLI::IsMember({"closed", "closed-form", "quad", "quadrature", "both"}))
        ->capture_default_str();

    // sweep
    Common sweep_c;
    std::string sweep_family;
    std::string sweep_grid;
    bool sweep_image = false;
    auto* sw = app.add_subcommand("sweep", "Sweep a family parameter (t = a^2 for chirp, c for twoscale)");
    add_common(sw, sweep_c);
    sw->add_option("--family", sweep_family, "chirp | twoscale")->check(CLI::IsMember({"chirp", "twoscale"}));
    sw->add_option("--grid", sweep_grid, "start:stop:count[log|lin]");
    sw->add_flag("--image-interval", sweep_image, "Report the observed image interval instead of a grid sweep");

    // verify
    Common verify_c;
    std::string suite = "all";
    std::optional<std::size_t> samples;
    auto* verify = app.add_subcommand("verify", "Run the inequality and identity checks");
    add_common(verify, verify_c);
    verify
        ->add_option("--suite", suite, "all | closed-forms | fq-lower | hy | interp | reduction | asymptotics | superadd")
        ->check(CLI::IsMember({"all", "closed-forms", "fq-lower", "hy", "interp", "reduction", "asymptotics", "superadd"}))
        ->capture_default_str();
    verify->add_option("--samples", samples, "Override every check's sample count")->check(CLI::PositiveNumber);

    // minimize
    Common min_c;
    OptimizerConfig opt;
    MixtureFamilySpec spec;
    auto* minimize = app.add_subcommand("minimize", "Search Gaussian mixtures for small F_q");
    add_common(minimize, min_c);
    minimize->add_option("--terms", spec.terms, "Mixture terms")->check(CLI::PositiveNumber)->capture_default_str();
    minimize->add_flag("--chirp", spec.chirp, "Complex amplitudes and chirped widths");
    minimize->add_option("--restarts", opt.restarts, "Restarts")->check(CLI::PositiveNumber)->capture_default_str();
    minimize->add_option("--max-iter", opt.max_iter, "Simplex iterations per restart")->capture_default_str();
    minimize->add_option("--simplex-scale", opt.simplex_scale, "Initial simplex edge")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // ftcheck
    Common ft_c;
    FamilyArgs ft_f;
    std::size_t grid_n = 4096;
    std::optional<double> dx;
    auto* ft = app.add_subcommand("ftcheck", "Compare the FFT approximation with the analytic transform");
    add_common(ft, ft_c);
    add_family_member(ft, ft_f);
    ft->add_option("--grid-n", grid_n, "Samples (power of two >= 16)")->capture_default_str();
    ft->add_option("--dx", dx, "Sample spacing (default: chosen from the truncation radii)")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "uflab: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            double param = 0.0;
            const TestFunction f = family_member(eval_f, param);
            const double q = require_q(eval_c);
            const double tol = eval_c.tol.value_or(kSweepTol);
            const EvalMethod method = parse_eval_method(eval_method);
            const FunctionalReport r = eval_c.p ? eval_Fqp(f, q, *eval_c.p, method, tol) : eval_Fq(f, q, method, tol);
            emit(eval_c, to_json(r), out);
            return kExitOk;
        }
        if (sw->parsed()) {
            const double q = require_q(sweep_c);
            const unsigned threads = resolve_threads(sweep_c);
            const double tol = sweep_c.tol.value_or(kSweepTol);
            if (sweep_image) {
                IntervalBudget budget;
                budget.tol = tol;
                budget.threads = threads;
                emit(sweep_c, to_json(estimate_image_interval(q, sweep_c.p, budget)), out);
                return kExitOk;
            }
            if (sweep_family.empty()) {
                throw CLI::RequiredError("--family");
            }
            if (sweep_grid.empty()) {
                throw CLI::RequiredError("--grid");
            }
            const SweepResult r = sweep(parse_family(sweep_family), q, sweep_c.p, parse_grid(sweep_grid), {tol, threads});
            emit(sweep_c, sweep_c.json ? to_json(r) : to_csv(r), out);
            return kExitOk;
        }
        if (verify->parsed()) {
            SuiteConfig cfg;
            cfg.seed = verify_c.seed;
            cfg.samples = samples;
            cfg.options.quad_tol = verify_c.tol.value_or(kVerifyQuadTol);
            cfg.options.threads = resolve_threads(verify_c);
            const auto results = run_suite(suite, cfg);
            emit(verify_c, verify_report_json(suite, cfg, results), out);
            return all_passed(results) ? kExitOk : kExitFailure;
        }
        if (minimize->parsed()) {
            opt.seed = min_c.seed;
            opt.threads = resolve_threads(min_c);
            opt.tol = min_c.tol.value_or(opt.tol);
            emit(min_c, to_json(minimize_Fq(require_q(min_c), spec, opt)), out);
            return kExitOk;
        }
        if (ft->parsed()) {
            double param = 0.0;
            const TestFunction f = family_member(ft_f, param);
            const TestFunction fhat = fourier_transform(f);
            const double tol = ft_c.tol.value_or(kSweepTol);
            const double step = dx ? *dx : select_grid_dx(envelope(f), envelope(fhat), grid_n, tol);
            const auto fn = [&f](double x) { return evaluate(f, x); };
            const auto fhn = [&fhat](double x) { return evaluate(fhat, x); };
            FtCheckReport r{ft_f.family, param, grid_n, step, dft_max_error(fn, fhn, grid_n, step)};
            emit(ft_c, to_json(r), out);
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        err << "uflab: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const ToleranceNotAchieved& e) {
        err << "uflab: " << e.what() << "\n";
        return kExitFailure;
    } catch (const DomainError& e) {
        err << "uflab: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "uflab: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace uflab::cli
