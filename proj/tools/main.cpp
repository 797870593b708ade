// Command line front end: exact zero counts of two-term trace forms and
// point counts of the associated curves y^q - y = x^{q^b+1} - x^{q^a+1}.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tqf/cache.hpp"
#include "tqf/closed_form.hpp"
#include "tqf/qform.hpp"
#include "tqf/sweep.hpp"
#include "tqf/weil.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDisagreement = 2;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (...) {
        throw std::runtime_error(std::string("bad value in $") + name + ": " + v);
    }
}

struct CommonOpts {
    std::uint32_t p = 3, r = 1, b = 1, a = 0, n = 1;
    std::uint64_t budget = 0;
    std::uint32_t workers = 0;
    bool json = false;
    std::string out;
    std::string cache;
    std::string ledger;
    bool raw_tables = false;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o, bool with_n) {
    cmd->add_option("-p", o.p, "characteristic (odd prime)")->required();
    cmd->add_option("-r", o.r, "q = p^r")->default_val(1);
    cmd->add_option("-b", o.b, "first exponent")->required();
    cmd->add_option("-a", o.a, "second exponent")->default_val(0);
    if (with_n) cmd->add_option("-n", o.n, "extension degree")->required();
    cmd->add_option("--budget", o.budget, "max field size for exhaustive counting");
    cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
    cmd->add_flag("--json", o.json, "JSON output");
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
    cmd->add_option("--cache", o.cache, "count cache CSV (read and append)");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open output file: " + o.out);
    f << text;
}

tqf::CorrectionLedger pick_ledger(const CommonOpts& o) {
    if (!o.ledger.empty()) return tqf::CorrectionLedger::load_file(o.ledger);
    return tqf::CorrectionLedger::builtin();
}

std::string lambda_str(int lam) { return lam > 0 ? "+1" : lam < 0 ? "-1" : "0"; }

int cmd_count(const CommonOpts& o) {
    tqf::CurveParams params = tqf::CurveParams::make(o.p, o.r, o.b, o.a);
    tqf::CacheKey key{o.p, o.r, params.b, params.a, o.n};
    tqf::OracleResult res;
    bool from_cache = false;
    if (!o.cache.empty()) {
        tqf::CountCache cache = tqf::CountCache::load(o.cache);
        if (const tqf::CacheRow* hit = cache.find(key); hit && hit->source == "oracle") {
            res = {o.n, hit->zeros, hit->w, hit->lambda, hit->points};
            from_cache = true;
        }
    }
    if (!from_cache) {
        tqf::QFormInstance inst = tqf::make_instance(params, o.n);
        res = tqf::run_oracle(inst, o.budget, o.workers);
        if (!o.cache.empty())
            tqf::CountCache::append(o.cache, {key, res.zeros, res.w, res.lambda, res.points, "oracle"});
    }
    std::ostringstream out;
    if (o.json) {
        out << "{\"p\":" << o.p << ",\"r\":" << o.r << ",\"b\":" << params.b << ",\"a\":"
            << params.a << ",\"n\":" << o.n << ",\"zeros\":" << res.zeros.str() << ",\"w\":"
            << res.w << ",\"lambda\":" << res.lambda << ",\"points\":" << res.points.str()
            << ",\"source\":\"" << (from_cache ? "cache" : "oracle") << "\"}\n";
    } else {
        out << "zeros=" << res.zeros.str() << " w=" << res.w << " lambda=" << lambda_str(res.lambda)
            << " points=" << res.points.str() << "\n";
    }
    emit(o, out.str());
    return kExitOk;
}

int cmd_predict(const CommonOpts& o) {
    tqf::CurveParams params = tqf::CurveParams::make(o.p, o.r, o.b, o.a);
    tqf::Prediction pred = o.raw_tables ? tqf::predict_printed_tables(params, o.n)
                                        : tqf::predict(params, o.n, pick_ledger(o));
    std::ostringstream out;
    if (o.json) {
        out << "{\"p\":" << o.p << ",\"r\":" << o.r << ",\"b\":" << params.b << ",\"a\":"
            << params.a << ",\"n\":" << o.n << ",\"status\":\""
            << (pred.covered() ? "covered" : "outside-theorem") << "\",\"branch\":\""
            << pred.branch << "\",\"w\":" << pred.w;
        if (pred.lambda) out << ",\"lambda\":" << *pred.lambda;
        if (pred.zeros) out << ",\"zeros\":" << pred.zeros->str();
        if (pred.points) out << ",\"points\":" << pred.points->str();
        out << "}\n";
    } else {
        out << "status=" << (pred.covered() ? "covered" : "outside-theorem") << " branch=\""
            << pred.branch << "\" w=" << pred.w;
        if (pred.lambda) out << " lambda=" << lambda_str(*pred.lambda);
        if (pred.zeros) out << " zeros=" << pred.zeros->str();
        if (pred.points) out << " points=" << pred.points->str();
        out << "\n";
    }
    emit(o, out.str());
    return kExitOk;
}

int cmd_levelsets(const CommonOpts& o) {
    tqf::CurveParams params = tqf::CurveParams::make(o.p, o.r, o.b, o.a);
    tqf::QFormInstance inst = tqf::make_instance(params, o.n);
    auto counts = tqf::count_level_sets(inst, o.budget, o.workers);
    std::ostringstream out;
    if (o.json) {
        out << "{\"levels\":[";
        for (std::size_t i = 0; i < counts.size(); ++i)
            out << (i ? "," : "") << counts[i].str();
        out << "]}\n";
    } else {
        out << "index,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i) out << i << ',' << counts[i].str() << "\n";
    }
    emit(o, out.str());
    return kExitOk;
}

int cmd_period(const CommonOpts& o) {
    tqf::CurveParams params = tqf::CurveParams::make(o.p, o.r, o.b, o.a);
    tqf::PeriodInfo info = tqf::find_period(params, pick_ledger(o));
    std::ostringstream out;
    if (o.json)
        out << "{\"s\":" << info.s << ",\"witness\":" << info.witness << ",\"maximal_half\":"
            << (info.maximal_half ? "true" : "false") << "}\n";
    else
        out << "period=" << info.s << " witness=" << info.witness
            << " maximal_half=" << (info.maximal_half ? "yes" : "no") << "\n";
    emit(o, out.str());
    return kExitOk;
}

int cmd_zeta(const CommonOpts& o, std::uint64_t genus_cap) {
    tqf::CurveParams params = tqf::CurveParams::make(o.p, o.r, o.b, o.a);
    std::uint64_t g = tqf::genus(params);
    if (g > genus_cap)
        throw std::runtime_error("genus " + std::to_string(g) + " exceeds cap " +
                                 std::to_string(genus_cap) + " (raise with --genus-cap)");
    tqf::CountSequence cs;
    cs.params = params;
    tqf::CountCache cache;
    if (!o.cache.empty()) cache = tqf::CountCache::load(o.cache);
    for (std::uint32_t n = 1; n <= 2 * g; ++n) {
        tqf::CacheKey key{o.p, o.r, params.b, params.a, n};
        if (const tqf::CacheRow* hit = cache.find(key); hit && hit->source == "oracle") {
            cs.entries.push_back({n, hit->points, tqf::CountSource::Oracle});
            continue;
        }
        tqf::QFormInstance inst = tqf::make_instance(params, n);
        tqf::OracleResult res = tqf::run_oracle(inst, o.budget, o.workers);
        cs.entries.push_back({n, res.points, tqf::CountSource::Oracle});
        if (!o.cache.empty())
            tqf::CountCache::append(o.cache, {key, res.zeros, res.w, res.lambda, res.points, "oracle"});
    }
    tqf::LPoly L = tqf::lpoly_from_counts(cs);
    bool fe = tqf::check_functional_equation(L, params.q_big());
    tqf::PeriodInfo period = tqf::find_period(params, pick_ledger(o));
    std::ostringstream out;
    if (o.json) {
        out << "{\"genus\":" << g << ",\"coeffs\":[";
        for (std::size_t i = 0; i < L.coeffs.size(); ++i)
            out << (i ? "," : "") << L.coeffs[i].str();
        out << "],\"functional_equation\":" << (fe ? "true" : "false")
            << ",\"period\":" << period.s << "}\n";
    } else {
        out << "L(T) coefficients (degree " << 2 * g << "):";
        for (const auto& c : L.coeffs) out << ' ' << c.str();
        out << "\nfunctional equation: " << (fe ? "ok" : "VIOLATED") << "\nperiod: " << period.s
            << "\n";
    }
    emit(o, out.str());
    return kExitOk;
}

int cmd_verify(CommonOpts& o, tqf::SweepConfig& config) {
    config.budget = o.budget;
    config.workers = o.workers;
    config.raw_tables = o.raw_tables;
    if (!o.ledger.empty()) config.ledger_path = o.ledger;
    if (!o.cache.empty()) config.cache_path = o.cache;
    tqf::SweepReport report = tqf::run_verify_sweep(config);
    emit(o, o.json ? tqf::report_json(report) : tqf::report_csv(report));
    std::cerr << "rows=" << report.rows.size() << " oracle=" << report.oracle_rows
              << " covered=" << report.covered << " outside=" << report.outside
              << " disagreements=" << report.disagreements << "\n";
    if (report.disagreements) {
        for (const auto& row : report.rows) {
            if (row.agree && !*row.agree)
                std::cerr << "DISAGREE p=" << row.params.p << " r=" << row.params.r
                          << " b=" << row.params.b << " a=" << row.params.a << " n=" << row.n
                          << " branch=" << row.pred.branch << "\n";
        }
        return kExitDisagreement;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zero counts of two-term trace forms and point counts of"
                 " the curves y^q - y = x^{q^b+1} - x^{q^a+1}"};
    app.require_subcommand(1);

    CommonOpts o;
    std::uint64_t default_budget = env_u64("TQF_BUDGET", tqf::kDefaultBudget);
    std::uint32_t default_workers = static_cast<std::uint32_t>(env_u64("TQF_WORKERS", 0));

    auto* count = app.add_subcommand("count", "exhaustive zero count at one degree");
    auto* predict = app.add_subcommand("predict", "closed-form prediction at one degree");
    auto* verify = app.add_subcommand("verify", "oracle vs prediction sweep");
    auto* zeta = app.add_subcommand("zeta", "reconstruct the L-polynomial from counts");
    auto* period = app.add_subcommand("period", "smallest degree where the curve is minimal");
    auto* levelsets = app.add_subcommand("levelsets", "per-value counts of the form");

    CommonOpts co = o, po = o, vo = o, zo = o, eo = o, lo = o;
    add_param_flags(count, co, true);
    count->add_option("--ledger", co.ledger, "corrections ledger file");
    add_param_flags(predict, po, true);
    predict->add_option("--ledger", po.ledger, "corrections ledger file");
    predict->add_flag("--raw-paper-tables", po.raw_tables, "use the case tables exactly as printed");
    add_param_flags(levelsets, lo, true);
    add_param_flags(period, eo, false);
    eo.n = 1;
    period->add_option("--ledger", eo.ledger, "corrections ledger file");
    std::uint64_t genus_cap = 10;
    add_param_flags(zeta, zo, false);
    zeta->add_option("--genus-cap", genus_cap, "largest genus to reconstruct")->default_val(10);
    zeta->add_option("--ledger", zo.ledger, "corrections ledger file");

    tqf::SweepConfig config;
    std::vector<std::uint32_t> blist, alist;
    verify->add_option("-p", config.ps, "characteristics to sweep");
    verify->add_option("-r", config.rs, "extension exponents r (q = p^r)");
    verify->add_option("-b", blist, "first exponents (crossed with -a)");
    verify->add_option("-a", alist, "second exponents (crossed with -b)");
    verify->add_option("-n,--nmax", config.n_max, "highest degree (0: budget-driven)");
    verify->add_option("--budget", vo.budget, "max field size for exhaustive counting");
    verify->add_option("--workers", vo.workers, "worker threads (0 = all cores)");
    verify->add_flag("--json", vo.json, "JSON report");
    verify->add_option("--out", vo.out, "report file");
    verify->add_option("--cache", vo.cache, "count cache CSV (read and append)");
    verify->add_option("--ledger", vo.ledger, "corrections ledger file");
    verify->add_flag("--raw-paper-tables", vo.raw_tables,
                     "use the case tables exactly as printed (documents their misprints)");

    try {
        app.parse(argc, argv);
        for (CommonOpts* x : {&co, &po, &vo, &zo, &eo, &lo}) {
            if (x->budget == 0) x->budget = default_budget;
            if (x->workers == 0) x->workers = default_workers;
        }
        if (count->parsed()) return cmd_count(co);
        if (predict->parsed()) return cmd_predict(po);
        if (levelsets->parsed()) return cmd_levelsets(lo);
        if (period->parsed()) return cmd_period(eo);
        if (zeta->parsed()) return cmd_zeta(zo, genus_cap);
        if (verify->parsed()) {
            if (!blist.empty() || !alist.empty()) {
                if (blist.empty() || alist.empty())
                    throw std::runtime_error("give both -b and -a lists (crossed), or neither");
                config.pairs.clear();
                for (auto b : blist)
                    for (auto a : alist)
                        if (b != a) config.pairs.emplace_back(b, a);
                if (config.pairs.empty()) throw std::runtime_error("no valid (b, a) pairs");
            }
            return cmd_verify(vo, config);
        }
        return kExitError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const tqf::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n(hint: `tqf predict` has no budget limit)\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
