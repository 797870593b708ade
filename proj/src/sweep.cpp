#include "tqf/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tqf {

namespace {

bool rows_agree(const ReportRow& row) {
    const OracleResult& o = *row.oracle;
    const Prediction& p = row.pred;
    if (o.w != p.w) return false;
    if (!p.covered()) return true;  // no sign claim to contradict
    return p.lambda && *p.lambda == o.lambda && p.zeros && *p.zeros == o.zeros && p.points &&
           *p.points == o.points;
}

} // namespace

SweepReport run_verify_sweep(const SweepConfig& config) {
    if (config.ps.empty() || config.rs.empty() || config.pairs.empty())
        throw std::invalid_argument("run_verify_sweep: empty parameter range");
    if (config.n_min == 0) throw std::invalid_argument("run_verify_sweep: n_min must be >= 1");

    CorrectionLedger ledger = config.ledger_path ? CorrectionLedger::load_file(*config.ledger_path)
                                                 : CorrectionLedger::builtin();

    CountCache cache;
    if (config.cache_path) cache = CountCache::load(*config.cache_path);

    // deterministic job order
    std::vector<std::uint32_t> ps = config.ps, rs = config.rs;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    std::set<std::tuple<std::uint32_t, std::uint32_t>> pairset;
    for (auto [b, a] : config.pairs) {
        if (b == a) throw std::invalid_argument("run_verify_sweep: pair with b = a");
        if (b < a) std::swap(b, a);
        pairset.insert({b, a});
    }

    SweepReport report;
    for (std::uint32_t p : ps) {
        if (!is_prime_u64(p) || p == 2)
            throw std::invalid_argument("run_verify_sweep: p=" + std::to_string(p) +
                                        " is not an odd prime");
        for (std::uint32_t r : rs) {
            if (config.budget < big_pow(p, r))
                throw std::invalid_argument("run_verify_sweep: budget below q = p^r");
            for (auto [b, a] : pairset) {
                CurveParams params = CurveParams::make(p, r, b, a);
                for (std::uint32_t n = config.n_min;; ++n) {
                    if (config.n_max && n > config.n_max) break;
                    bool in_budget = big_pow(p, static_cast<std::uint64_t>(r) * n) <= config.budget;
                    if (!config.n_max && !in_budget) break;

                    auto start = std::chrono::steady_clock::now();
                    ReportRow row;
                    row.params = params;
                    row.n = n;
                    row.pred = config.raw_tables ? predict_printed_tables(params, n)
                                                 : predict(params, n, ledger);
                    if (in_budget) {
                        CacheKey key{p, r, b, a, n};
                        const CacheRow* hit = cache.find(key);
                        if (hit && hit->source == "oracle") {
                            OracleResult res;
                            res.n = n;
                            res.zeros = hit->zeros;
                            res.w = hit->w;
                            res.lambda = hit->lambda;
                            res.points = hit->points;
                            row.oracle = res;
                        } else {
                            QFormInstance inst = make_instance(params, n);
                            row.oracle = run_oracle(inst, config.budget, config.workers);
                            CacheRow fresh{key, row.oracle->zeros, row.oracle->w,
                                           row.oracle->lambda, row.oracle->points, "oracle"};
                            cache.insert(fresh);
                            if (config.cache_path) CountCache::append(*config.cache_path, fresh);
                        }
                        row.agree = rows_agree(row);
                        ++report.oracle_rows;
                        if (!*row.agree) ++report.disagreements;
                    }
                    row.pred.covered() ? ++report.covered : ++report.outside;
                    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
                    report.rows.push_back(std::move(row));
                }
            }
        }
    }
    return report;
}

namespace {

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : ""; }

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string report_csv(const SweepReport& report, bool include_timing) {
    std::ostringstream out;
    out << "p,r,b,a,n,oracle_zeros,oracle_w,oracle_lambda,oracle_points,"
           "status,branch,pred_w,pred_lambda,pred_zeros,pred_points,agree";
    if (include_timing) out << ",millis";
    out << "\n";
    for (const auto& row : report.rows) {
        out << row.params.p << ',' << row.params.r << ',' << row.params.b << ','
            << row.params.a << ',' << row.n << ',';
        if (row.oracle)
            out << row.oracle->zeros.str() << ',' << row.oracle->w << ',' << row.oracle->lambda
                << ',' << row.oracle->points.str() << ',';
        else
            out << ",,,,";
        out << (row.pred.covered() ? "covered" : "outside-theorem") << ','
            << csv_quote(row.pred.branch) << ',' << row.pred.w << ','
            << (row.pred.lambda ? std::to_string(*row.pred.lambda) : "") << ','
            << opt_str(row.pred.zeros) << ',' << opt_str(row.pred.points) << ',';
        if (row.agree) out << (*row.agree ? "yes" : "NO");
        if (include_timing) out << ',' << row.millis;
        out << "\n";
    }
    return out.str();
}

std::string report_json(const SweepReport& report, bool include_timing) {
    std::ostringstream out;
    for (const auto& row : report.rows) {
        out << "{\"p\":" << row.params.p << ",\"r\":" << row.params.r << ",\"b\":" << row.params.b
            << ",\"a\":" << row.params.a << ",\"n\":" << row.n;
        if (row.oracle) {
            out << ",\"oracle\":{\"zeros\":" << row.oracle->zeros.str()
                << ",\"w\":" << row.oracle->w << ",\"lambda\":" << row.oracle->lambda
                << ",\"points\":" << row.oracle->points.str() << "}";
        }
        out << ",\"status\":\"" << (row.pred.covered() ? "covered" : "outside-theorem") << "\"";
        std::string esc;
        for (char c : row.pred.branch) {
            if (c == '"' || c == '\\') esc += '\\';
            esc += c;
        }
        out << ",\"branch\":\"" << esc << "\",\"pred_w\":" << row.pred.w;
        if (row.pred.lambda) out << ",\"pred_lambda\":" << *row.pred.lambda;
        if (row.pred.zeros) out << ",\"pred_zeros\":" << row.pred.zeros->str();
        if (row.pred.points) out << ",\"pred_points\":" << row.pred.points->str();
        if (row.agree) out << ",\"agree\":" << (*row.agree ? "true" : "false");
        if (include_timing) out << ",\"millis\":" << row.millis;
        out << "}\n";
    }
    return out.str();
}

} // namespace tqf
