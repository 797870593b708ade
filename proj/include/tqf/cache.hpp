#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "tqf/bigint.hpp"

namespace tqf {

struct CacheKey {
    std::uint32_t p = 0, r = 0, b = 0, a = 0, n = 0;
    bool operator<(const CacheKey& o) const {
        return std::tie(p, r, b, a, n) < std::tie(o.p, o.r, o.b, o.a, o.n);
    }
    bool operator==(const CacheKey& o) const {
        return std::tie(p, r, b, a, n) == std::tie(o.p, o.r, o.b, o.a, o.n);
    }
};

struct CacheRow {
    CacheKey key;
    BigInt zeros;
    std::uint32_t w = 0;
    int lambda = 0;
    BigInt points;
    std::string source;  // "oracle" or "predicted"
};

/// Append-only CSV of counts, header `p,r,b,a,n,zeros,w,lambda,points,source`.
/// Loading deduplicates by key, preferring oracle rows; malformed rows are
/// rejected with their line number.
class CountCache {
public:
    static constexpr const char* kHeader = "p,r,b,a,n,zeros,w,lambda,points,source";

    static CountCache load(const std::string& path);  // missing file -> empty cache
    static void append(const std::string& path, const CacheRow& row);

    const CacheRow* find(const CacheKey& key) const;
    void insert(const CacheRow& row);
    std::size_t size() const { return rows_.size(); }

private:
    std::map<CacheKey, CacheRow> rows_;
};

} // namespace tqf
