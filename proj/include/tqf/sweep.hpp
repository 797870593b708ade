#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tqf/cache.hpp"
#include "tqf/closed_form.hpp"
#include "tqf/qform.hpp"

namespace tqf {

struct SweepConfig {
    std::vector<std::uint32_t> ps{3, 5, 7};
    std::vector<std::uint32_t> rs{1};
    // (b, a) exponent pairs; the default grid keeps the whole sweep within
    // minutes at the default budget
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs{
        {1, 0}, {2, 0}, {3, 0}, {4, 0}, {2, 1}, {4, 1}, {3, 2}};
    std::uint32_t n_min = 1;
    std::uint32_t n_max = 0;  // 0: every n with q^n within budget
    std::uint64_t budget = kDefaultBudget;
    std::uint32_t workers = 0;  // 0: hardware concurrency
    bool raw_tables = false;
    std::optional<std::string> ledger_path;
    std::optional<std::string> cache_path;
};

struct ReportRow {
    CurveParams params;
    std::uint32_t n = 0;
    std::optional<OracleResult> oracle;
    Prediction pred;
    std::optional<bool> agree;  // set iff the oracle ran
    std::int64_t millis = 0;
};

struct SweepReport {
    std::vector<ReportRow> rows;
    std::uint64_t disagreements = 0;
    std::uint64_t covered = 0;
    std::uint64_t outside = 0;
    std::uint64_t oracle_rows = 0;
};

/// Oracle vs prediction over the configured grid. Rows are ordered by
/// (p, r, b, a, n); results are independent of the worker count.
SweepReport run_verify_sweep(const SweepConfig& config);

std::string report_csv(const SweepReport& report, bool include_timing = true);
std::string report_json(const SweepReport& report, bool include_timing = true);

} // namespace tqf
