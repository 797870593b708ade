#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "tqf/cache.hpp"
#include "tqf/sweep.hpp"

using namespace tqf;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("count cache round-trips and deduplicates") {
    TempFile tmp("test_cache.tmp");
    CacheRow oracle_row{{3, 1, 1, 0, 6}, 297, 2, 1, 892, "oracle"};
    CacheRow pred_row{{3, 1, 1, 0, 7}, 675, 1, -1, 2026, "predicted"};
    CountCache::append(tmp.path, oracle_row);
    CountCache::append(tmp.path, pred_row);

    CountCache cache = CountCache::load(tmp.path);
    CHECK(cache.size() == 2);
    const CacheRow* hit = cache.find({3, 1, 1, 0, 6});
    REQUIRE(hit);
    CHECK(hit->zeros == 297);
    CHECK(hit->points == 892);
    CHECK(hit->source == "oracle");
    CHECK(cache.find({3, 1, 1, 0, 9}) == nullptr);

    // duplicate key: the oracle row wins regardless of order
    CacheRow pred_dup{{3, 1, 1, 0, 6}, 296, 2, 1, 889, "predicted"};
    CountCache::append(tmp.path, pred_dup);
    cache = CountCache::load(tmp.path);
    CHECK(cache.find({3, 1, 1, 0, 6})->zeros == 297);

    CountCache fresh = CountCache::load("no_such_cache.tmp");
    CHECK(fresh.size() == 0);
}

TEST_CASE("malformed cache rows are rejected with their line number") {
    TempFile tmp("test_cache_bad.tmp");

    {
        std::ofstream f(tmp.path);
        f << CountCache::kHeader << "\n";
        f << "3,1,1,0,6,297,2,2,892,oracle\n";  // lambda out of range
    }
    CHECK_THROWS_WITH_AS(CountCache::load(tmp.path),
                         doctest::Contains("line 2"), std::runtime_error);

    {
        std::ofstream f(tmp.path);
        f << CountCache::kHeader << "\n";
        f << "3,1,1,0,6,297,2,1,892\n";  // nine fields
    }
    CHECK_THROWS_WITH_AS(CountCache::load(tmp.path),
                         doctest::Contains("line 2"), std::runtime_error);

    {
        std::ofstream f(tmp.path);
        f << CountCache::kHeader << "\n";
        f << "3,1,1,0,6,297,2,1,892,oracle\n";
        f << "3,1,1,0,7,67x,1,-1,2026,oracle\n";  // bad integer
    }
    CHECK_THROWS_WITH_AS(CountCache::load(tmp.path),
                         doctest::Contains("line 3"), std::runtime_error);

    {
        std::ofstream f(tmp.path);
        f << CountCache::kHeader << "\n";
        f << "3,1,1,0,6,297,2,1,892,guessed\n";  // bad source
    }
    CHECK_THROWS_AS(CountCache::load(tmp.path), std::runtime_error);
}

TEST_CASE("verify sweep: agreement, determinism, and cache short-circuit") {
    SweepConfig config;
    config.ps = {3};
    config.pairs = {{1, 0}, {2, 1}};
    config.budget = 6561;  // up to 3^8

    SweepReport base = run_verify_sweep(config);
    CHECK(base.rows.size() == 16);
    CHECK(base.disagreements == 0);
    CHECK(base.oracle_rows == 16);

    SUBCASE("reports are identical for any worker count") {
        SweepConfig one = config, eight = config;
        one.workers = 1;
        eight.workers = 8;
        std::string a = report_csv(run_verify_sweep(one), false);
        std::string b = report_csv(run_verify_sweep(eight), false);
        CHECK(a == b);
        CHECK(a == report_csv(base, false));
    }

    SUBCASE("beyond-budget rows are prediction-only") {
        SweepConfig capped = config;
        capped.n_max = 10;  // 3^9, 3^10 exceed the budget
        SweepReport rep = run_verify_sweep(capped);
        CHECK(rep.rows.size() == 20);
        CHECK(rep.oracle_rows == 16);
        for (const auto& row : rep.rows)
            CHECK(row.oracle.has_value() == (row.n <= 8));
    }

    SUBCASE("a cache file short-circuits recomputation") {
        TempFile tmp("test_sweep_cache.tmp");
        SweepConfig cached = config;
        cached.cache_path = tmp.path;
        SweepReport first = run_verify_sweep(cached);
        CHECK(first.disagreements == 0);
        CountCache cache = CountCache::load(tmp.path);
        CHECK(cache.size() == 16);

        // rerun from the cache: identical report
        SweepReport second = run_verify_sweep(cached);
        CHECK(report_csv(second, false) == report_csv(first, false));
    }
}

TEST_CASE("poisoned cache value is trusted, which shows the short-circuit works") {
    TempFile tmp("test_poison_cache.tmp");
    // a consistent-looking but wrong row for (3,1,1,0) n=6
    CountCache::append(tmp.path, {{3, 1, 1, 0, 6}, 298, 2, 1, 895, "oracle"});
    SweepConfig config;
    config.ps = {3};
    config.pairs = {{1, 0}};
    config.budget = 729;
    config.cache_path = tmp.path;
    SweepReport rep = run_verify_sweep(config);
    CHECK(rep.disagreements == 1);  // the poisoned row, not a recount
}

TEST_CASE("sweep config validation") {
    SweepConfig empty;
    empty.ps.clear();
    CHECK_THROWS_AS(run_verify_sweep(empty), std::invalid_argument);

    SweepConfig degenerate;
    degenerate.pairs = {{2, 2}};
    CHECK_THROWS_AS(run_verify_sweep(degenerate), std::invalid_argument);

    SweepConfig tiny;
    tiny.ps = {3};
    tiny.pairs = {{1, 0}};
    tiny.budget = 2;  // below q
    CHECK_THROWS_AS(run_verify_sweep(tiny), std::invalid_argument);
}

TEST_CASE("raw printed tables disagree with the oracle where adjudicated") {
    SweepConfig config;
    config.ps = {3};
    config.pairs = {{4, 0}};
    config.budget = 6561;
    config.raw_tables = true;
    SweepReport rep = run_verify_sweep(config);
    std::uint64_t bad = 0;
    for (const auto& row : rep.rows)
        if (row.agree && !*row.agree) ++bad;
    CHECK(bad >= 2);  // n = 4 and n = 8 hit the misprinted row
    CHECK(rep.disagreements == bad);

    config.raw_tables = false;
    CHECK(run_verify_sweep(config).disagreements == 0);
}
