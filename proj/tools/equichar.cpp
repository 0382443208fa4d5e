// equichar: equivariant cohomology of Hassett spaces of weighted pointed
// genus-zero curves, as characters of S_k x S_{n-k}.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "equichar/cache.hpp"
#include "equichar/length.hpp"
#include "equichar/moduli.hpp"
#include "equichar/render.hpp"
#include "equichar/serialize.hpp"
#include "equichar/verify.hpp"

using namespace equichar;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerification = 2, kCache = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int n = 0;
    int k = 0;
    int l = 1;
    int n_max = 8;
    std::string format = "text";
    std::string cache_dir;
    std::string suite;
    std::string action;
    bool group_q = false;
};

std::unique_ptr<ModuliEngine> make_engine(const Config& cfg)
{
    if (cfg.cache_dir.empty()) return std::make_unique<ModuliEngine>();
    return std::make_unique<ModuliEngine>(std::filesystem::path(cfg.cache_dir));
}

void require_n(int n, const char* flag)
{
    if (n < 3) throw UsageError(std::string(flag) + " must be at least 3 (got " + std::to_string(n) + ")");
}

int cmd_compute(const Config& cfg)
{
    require_n(cfg.n, "--n");
    if (cfg.k < 0 || cfg.k > cfg.n) throw UsageError("--k must lie in [0, n]");
    if (cfg.l < 1) throw UsageError("--l must be positive");
    auto engine = make_engine(cfg);
    const BiSymFunc e = engine->E(cfg.n, cfg.k, cfg.l);
    std::cout << render(e, format_from_string(cfg.format), cfg.group_q) << '\n';
    return kOk;
}

std::string join_coefficients(const QPoly& p)
{
    std::ostringstream os;
    for (int i = 0; i <= p.degree(); ++i) os << (i ? "," : "") << rational_to_string(p.coeff(i));
    return os.str();
}

int cmd_betti(const Config& cfg)
{
    require_n(cfg.n, "--n");
    auto engine = make_engine(cfg);
    const QPoly p = poincare_polynomial(*engine, cfg.n);
    const Format format = format_from_string(cfg.format);
    if (format == Format::Json) {
        Json j;
        j["n"] = cfg.n;
        j["poincare"] = to_json(p);
        Json betti = Json::array();
        for (int i = 0; i <= p.degree(); ++i) betti.push_back(rational_to_string(p.coeff(i)));
        j["betti"] = std::move(betti);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << render_qpoly(p, format) << '\n' << join_coefficients(p) << '\n';
    }
    return kOk;
}

int cmd_length_table(const Config& cfg)
{
    require_n(cfg.n_max, "--n-max");
    auto engine = make_engine(cfg);
    const Format format = format_from_string(cfg.format);
    bool all_ok = true;
    Json reports = Json::array();
    if (format != Format::Json) std::cout << "n\ti\tlength\tbound\tmatch\tw\tstatus\n";
    for (int n = 3; n <= cfg.n_max; ++n) {
        const LengthReport report = length_theorem_report(*engine, n);
        all_ok = all_ok && report.all_ok();
        if (format == Format::Json) {
            reports.push_back(to_json(report));
            continue;
        }
        for (const auto& row : report.rows) {
            std::string status = "-";
            if (row.exceptional)
                status = "lambda mult=" + (row.lambda_mult ? std::to_string(*row.lambda_mult) : std::string("?"));
            else if (row.star_applies)
                status = row.star ? "star" : "no-star";
            std::cout << n << '\t' << row.i << '\t' << row.length << '\t' << row.bound << '\t'
                      << (row.ok ? "yes" : "NO") << '\t' << row.w.to_string() << '\t' << status << '\n';
        }
    }
    if (format == Format::Json) std::cout << reports.dump(2) << '\n';
    return all_ok ? kOk : kVerification;
}

int cmd_verify(const Config& cfg)
{
    std::vector<std::string> suites;
    if (cfg.suite.empty() || cfg.suite == "all")
        suites = suite_names();
    else
        suites = {cfg.suite};
    require_n(cfg.n_max, "--n-max");
    auto engine = make_engine(cfg);
    bool ok = true;
    Json out = Json::array();
    for (const auto& name : suites) {
        SuiteResult result;
        try {
            result = run_suite(name, *engine, cfg.n_max);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        ok = ok && result.passed();
        out.push_back(to_json(result));
        std::cerr << name << ": " << (result.checks.size() - result.failures()) << "/" << result.checks.size()
                  << " passed\n";
    }
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
    return ok ? kOk : kVerification;
}

int cmd_cache(const Config& cfg)
{
    if (cfg.cache_dir.empty()) throw UsageError("cache: no directory given (--cache or EQUICHAR_CACHE)");
    if (cfg.action == "list") {
        DiskCache cache(cfg.cache_dir);
        for (const auto& key : cache.entries()) std::cout << key.n << ' ' << key.k << ' ' << key.l << '\n';
        return kOk;
    }
    if (cfg.action == "clear") {
        DiskCache cache(cfg.cache_dir);
        std::cout << "removed " << cache.clear() << " entries\n";
        return kOk;
    }
    if (cfg.action == "warm") {
        require_n(cfg.n_max, "--n-max");
        auto engine = make_engine(cfg);
        for (int n = 3; n <= cfg.n_max; ++n)
            for (int k = 0; k <= n; ++k)
                for (int l = 1; l <= stabilization_level(n, k); ++l) engine->E(n, k, l);
        std::cout << "cached " << engine->memo_size() << " entries up to n=" << cfg.n_max << '\n';
        return kOk;
    }
    throw UsageError("cache: unknown action '" + cfg.action + "' (expected warm, list or clear)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant Poincare-Serre polynomials of Hassett spaces M_{0,n}(weights)"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("EQUICHAR_CACHE")) cfg.cache_dir = env;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
    };
    const auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache", cfg.cache_dir, "Disk cache directory (default: $EQUICHAR_CACHE)");
    };

    auto* compute = app.add_subcommand("compute", "Print E(n,k,l) in the Schur basis");
    compute->add_option("--n", cfg.n, "Number of marked points")->required();
    compute->add_option("--k", cfg.k, "Number of heavy points");
    compute->add_option("--l", cfg.l, "Light points have weight 1/l");
    compute->add_flag("--group-q", cfg.group_q, "Collect terms by power of q");
    add_format(compute);
    add_cache(compute);

    auto* betti = app.add_subcommand("betti", "Print the Poincare polynomial of M_{0,n}bar");
    betti->add_option("--n", cfg.n, "Number of marked points")->required();
    add_format(betti);
    add_cache(betti);

    auto* length = app.add_subcommand("length-table", "Check the length bound on H^{2i}(M_{0,n}bar) for 3 <= n <= n-max");
    length->add_option("--n-max", cfg.n_max, "Largest n in the sweep");
    add_format(length);
    add_cache(length);

    auto* verify = app.add_subcommand("verify", "Run a self-check suite and print a JSON summary");
    verify->add_option("--suite", cfg.suite, "paper-examples, duality, oracles, length-theorem or all");
    verify->add_option("--n-max", cfg.n_max, "Largest n for the sweeping suites");
    add_cache(verify);

    auto* cache = app.add_subcommand("cache", "Manage the disk cache");
    cache->add_option("action", cfg.action, "warm, list or clear")->required();
    cache->add_option("--n-max", cfg.n_max, "Largest n to warm");
    add_cache(cache);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) return cmd_compute(cfg);
        if (*betti) return cmd_betti(cfg);
        if (*length) return cmd_length_table(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*cache) return cmd_cache(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CacheError& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return kCache;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerification;
    }
    return kUsage;
}
