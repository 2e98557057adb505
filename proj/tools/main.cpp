#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "borwein/character_sums.hpp"
#include "borwein/errors.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/progression.hpp"
#include "borwein/serialization.hpp"
#include "borwein/supnorm.hpp"
#include "borwein/verification.hpp"

namespace {

using namespace borwein;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 4;

std::size_t env_budget() {
    if (const char* raw = std::getenv("BORWEIN_BUDGET")) {
        try {
            const long long parsed = std::stoll(raw);
            if (parsed > 0) return static_cast<std::size_t>(parsed);
        } catch (const std::exception&) {
        }
        throw SpecError("BORWEIN_BUDGET must be a positive integer, got '" + std::string(raw) +
                        "'");
    }
    return kDefaultCoefficientBudget;
}

struct OutputOptions {
    std::string format = "json";
    std::string path;
    bool no_timestamp = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write the report to this file instead of stdout");
    cmd->add_flag("--no-timestamp", out.no_timestamp,
                  "Omit the generated-at comment line from CSV output");
}

/* CSV carries an optional leading comment line with the generation
 * time; JSON is always emitted bare so identical configs are
 * byte-identical. */
void emit(const OutputOptions& opts, const std::string& csv, const Json& json) {
    std::string payload;
    if (opts.format == "csv") {
        if (!opts.no_timestamp) payload = "# generated " + iso8601_utc_now() + "\n";
        payload += csv;
    } else {
        payload = json.dump(2) + "\n";
    }
    if (opts.path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream file(opts.path, std::ios::binary);
        if (!file) throw SpecError("cannot open output file '" + opts.path + "'");
        file << payload;
    }
}

struct ExpandArgs {
    std::int64_t p = 0, s = 0, n = 0;
    std::size_t budget = 0;
    OutputOptions out;
};

int run_expand(const ExpandArgs& args) {
    const ProductSpec spec(args.p, args.s, args.n);
    const IntPolynomial poly = expand_product(spec, args.budget);
    emit(args.out, polynomial_csv(spec, poly), polynomial_json(spec, poly));
    return kExitOk;
}

struct MsumArgs {
    std::int64_t p = 0, s = 0, n = 0;
    std::string b = "all";
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> d;
    std::string method = "both";
    bool method_explicit = false;
    std::size_t budget = 0;
    OutputOptions out;
};

int run_msum(const MsumArgs& args) {
    const ProductSpec spec(args.p, args.s, args.n);
    const IntPolynomial poly = expand_product(spec, args.budget);
    std::vector<MsumRow> rows;

    if (args.a.has_value() != args.d.has_value()) {
        throw SpecError("--a and --d must be given together");
    }
    if (args.a) {
        /* General progression mode: direct summation only. */
        if (args.method_explicit && args.method != "direct") {
            throw SpecError("--a/--d progressions support --method direct only");
        }
        MsumRow row{spec.p(), spec.s(), spec.n(), *args.a, *args.d, std::nullopt, std::nullopt};
        row.m_direct = direct_progression_sum(poly, ProgressionQuery(*args.a, *args.d, spec.p()));
        rows.push_back(std::move(row));
    } else {
        std::vector<std::int64_t> residues;
        if (args.b == "all") {
            for (std::int64_t b = 0; b < spec.modulus(); ++b) residues.push_back(b);
        } else {
            try {
                residues.push_back(std::stoll(args.b));
            } catch (const std::exception&) {
                throw SpecError("--b must be an integer or 'all', got '" + args.b + "'");
            }
        }
        for (std::int64_t b : residues) {
            MsumRow row{spec.p(), spec.s(), spec.n(), spec.modulus(), b,
                        std::nullopt, std::nullopt};
            if (args.method != "charsum") row.m_direct = m_direct(poly, spec, b);
            if (args.method != "direct") row.m_charsum = m_charsum_exact(spec, b);
            if (args.method == "both" && row.m_direct != row.m_charsum) {
                throw CheckError("m_direct and m_charsum disagree at b = " + std::to_string(b));
            }
            rows.push_back(std::move(row));
        }
    }
    emit(args.out, msum_csv(rows), msum_json(rows));
    return kExitOk;
}

struct VerifyArgs {
    std::vector<std::int64_t> ps;
    std::vector<std::int64_t> ss;
    std::int64_t n_max = 0;
    std::string suite = "all";
    std::int64_t b = 0;
    unsigned threads = 0;
    std::size_t budget = 0;
    OutputOptions out;
};

int run_verify(const VerifyArgs& args) {
    if (args.suite == "ratios") {
        if (args.ps.size() != 1 || args.ss.size() != 1) {
            throw SpecError("--suite ratios needs exactly one --p and one --s");
        }
        const auto rows = ratio_trend(args.ps[0], args.ss[0], args.b, args.n_max, args.budget);
        emit(args.out, ratio_csv(rows), ratio_json(rows));
        return kExitOk;
    }

    const auto rows = verify_grid(args.ps, args.ss, args.n_max, args.budget, args.threads);
    emit(args.out, verification_csv(rows), verification_json(rows));

    bool ok = true;
    for (const VerificationRow& row : rows) {
        if ((args.suite == "main1" || args.suite == "all") && !row.within_bound) ok = false;
        if ((args.suite == "signs" || args.suite == "all") && !row.sign_ok) ok = false;
    }
    if (!ok) {
        std::cerr << "verification failed: see report rows\n";
        return kExitVerification;
    }
    return kExitOk;
}

struct MaxcoeffArgs {
    std::int64_t p = 0, s = 1;
    std::int64_t n_from = 0, n_max = 0;
    unsigned threads = 0;
    std::size_t budget = 0;
    OutputOptions out;
};

int run_maxcoeff(const MaxcoeffArgs& args) {
    const bool small_prime = args.p <= 13;
    const auto rows = small_prime
                          ? borw1_check(args.p, args.s, args.n_from, args.n_max, args.budget,
                                        args.threads)
                          : borw2_check(args.p, args.s, args.n_from, args.n_max, args.budget,
                                        args.threads);
    emit(args.out, spectral_csv(rows, !small_prime), spectral_json(rows, !small_prime));
    return kExitOk;
}

struct SupnormArgs {
    std::int64_t p = 0, s = 1, n = 0;
    std::int64_t samples = 0;
    bool no_refine = false;
    unsigned threads = 0;
    OutputOptions out;
};

int run_supnorm(const SupnormArgs& args) {
    const ProductSpec spec(args.p, args.s, args.n);
    const std::int64_t samples =
        args.samples > 0 ? args.samples : kDefaultSamplesPerDegree * spec.degree();
    const SupNormEstimate est = supnorm_sample(spec, samples, !args.no_refine, args.threads);

    std::ostringstream csv;
    csv << "p,s,n,degree,samples,refined,value\n"
        << spec.p() << ',' << spec.s() << ',' << spec.n() << ',' << spec.degree() << ','
        << est.samples << ',' << (est.refined ? "true" : "false") << ','
        << format_double(est.value) << '\n';
    Json j;
    j["p"] = spec.p();
    j["s"] = spec.s();
    j["n"] = spec.n();
    j["degree"] = spec.degree();
    j["samples"] = est.samples;
    j["refined"] = est.refined;
    j["value"] = est.value;
    emit(args.out, csv.str(), j);
    return kExitOk;
}

struct RecursionsArgs {
    std::int64_t n_max = 0;
    std::size_t budget = 0;
    OutputOptions out;
};

int run_recursions(const RecursionsArgs& args) {
    const auto rows = check_andrews_recursions(args.n_max, args.budget);
    emit(args.out, recursions_csv(rows), recursions_json(rows));
    for (const RecursionCheck& row : rows) {
        if (!row.passed) {
            std::cerr << "recursion failed at n = " << row.n << " (part " << row.failed_part
                      << ", index " << row.mismatch_index << ")\n";
            return kExitVerification;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact expansion, progression sums, and sign/bound verification for the "
                 "truncated products behind the Borwein conjectures"};
    app.require_subcommand(1);

    const unsigned default_threads = std::max(1u, std::thread::hardware_concurrency());

    ExpandArgs expand_args;
    MsumArgs msum_args;
    VerifyArgs verify_args;
    MaxcoeffArgs maxcoeff_args;
    SupnormArgs supnorm_args;
    RecursionsArgs recursions_args;

    CLI::App* expand = app.add_subcommand("expand", "Expand T_{p,s,n} to its coefficient vector");
    expand->add_option("--p", expand_args.p, "Prime p")->required();
    expand->add_option("--s", expand_args.s, "Power s")->required();
    expand->add_option("--n", expand_args.n, "Index n")->required();
    expand->add_option("--budget", expand_args.budget, "Coefficient budget override");
    add_output_options(expand, expand_args.out);

    CLI::App* msum = app.add_subcommand("msum", "Progression sums of the coefficients");
    msum->add_option("--p", msum_args.p, "Prime p")->required();
    msum->add_option("--s", msum_args.s, "Power s")->required();
    msum->add_option("--n", msum_args.n, "Index n")->required();
    msum->add_option("--b", msum_args.b, "Residue mod N_p, or 'all'")->capture_default_str();
    msum->add_option("--a", msum_args.a, "Progression modulus (any multiple of p)");
    msum->add_option("--d", msum_args.d, "Progression offset for --a");
    CLI::Option* msum_method = msum->add_option("--method", msum_args.method,
                                                "direct, charsum, or both (--a implies direct)")
                                   ->check(CLI::IsMember({"direct", "charsum", "both"}))
                                   ->capture_default_str();
    msum->add_option("--budget", msum_args.budget, "Coefficient budget override");
    add_output_options(msum, msum_args.out);

    CLI::App* verify = app.add_subcommand("verify", "Verify bounds and signs on a (p,s,n) grid");
    verify->add_option("--p", verify_args.ps, "Primes (comma separated)")
        ->required()
        ->delimiter(',');
    verify->add_option("--s", verify_args.ss, "Powers (comma separated)")
        ->required()
        ->delimiter(',');
    verify->add_option("--n-max", verify_args.n_max, "Largest n in the grid")->required();
    verify->add_option("--suite", verify_args.suite, "main1, signs, ratios, or all")
        ->check(CLI::IsMember({"main1", "signs", "ratios", "all"}))
        ->capture_default_str();
    verify->add_option("--b", verify_args.b, "Residue for --suite ratios")->capture_default_str();
    verify->add_option("--threads", verify_args.threads, "Worker threads")
        ->default_val(default_threads);
    verify->add_option("--budget", verify_args.budget, "Coefficient budget override");
    add_output_options(verify, verify_args.out);

    CLI::App* maxcoeff =
        app.add_subcommand("maxcoeff", "Max-coefficient and sup-norm trend table over n");
    maxcoeff->add_option("--p", maxcoeff_args.p, "Prime p")->required();
    maxcoeff->add_option("--s", maxcoeff_args.s, "Power s")->capture_default_str();
    maxcoeff->add_option("--n-from", maxcoeff_args.n_from, "Smallest n")->capture_default_str();
    maxcoeff->add_option("--n-max", maxcoeff_args.n_max, "Largest n")->required();
    maxcoeff->add_option("--threads", maxcoeff_args.threads, "Worker threads")
        ->default_val(default_threads);
    maxcoeff->add_option("--budget", maxcoeff_args.budget, "Coefficient budget override");
    add_output_options(maxcoeff, maxcoeff_args.out);

    CLI::App* supnorm = app.add_subcommand("supnorm", "Unit-circle sup-norm lower bound");
    supnorm->add_option("--p", supnorm_args.p, "Prime p")->required();
    supnorm->add_option("--s", supnorm_args.s, "Power s")->capture_default_str();
    supnorm->add_option("--n", supnorm_args.n, "Index n")->required();
    supnorm->add_option("--samples", supnorm_args.samples,
                        "Circle sample count (default 8*degT, minimum 4*degT)");
    supnorm->add_flag("--no-refine", supnorm_args.no_refine,
                      "Skip golden-section refinement around the best sample");
    supnorm->add_option("--threads", supnorm_args.threads, "Worker threads")
        ->default_val(default_threads);
    add_output_options(supnorm, supnorm_args.out);

    CLI::App* recursions =
        app.add_subcommand("recursions", "Check the coupled (3,1) recursions up to n-max");
    recursions->add_option("--n-max", recursions_args.n_max, "Largest n")->required();
    recursions->add_option("--budget", recursions_args.budget, "Coefficient budget override");
    add_output_options(recursions, recursions_args.out);

    try {
        app.parse(argc, argv);
        msum_args.method_explicit = msum_method->count() > 0;

        const std::size_t budget = env_budget();
        if (expand_args.budget == 0) expand_args.budget = budget;
        if (msum_args.budget == 0) msum_args.budget = budget;
        if (verify_args.budget == 0) verify_args.budget = budget;
        if (maxcoeff_args.budget == 0) maxcoeff_args.budget = budget;
        if (recursions_args.budget == 0) recursions_args.budget = budget;

        if (expand->parsed()) return run_expand(expand_args);
        if (msum->parsed()) return run_msum(msum_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (maxcoeff->parsed()) return run_maxcoeff(maxcoeff_args);
        if (supnorm->parsed()) return run_supnorm(supnorm_args);
        if (recursions->parsed()) return run_recursions(recursions_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const CheckError& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const SpecError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        std::cerr << app.help() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
