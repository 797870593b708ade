#include "tqf/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tqf {

namespace {

std::uint64_t parse_u64(const std::string& s, std::size_t line, const char* field) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error("cache line " + std::to_string(line) + ": bad " + field +
                                 " `" + s + "`");
    return std::stoull(s);
}

BigInt parse_big(const std::string& s, std::size_t line, const char* field) {
    std::string t = s;
    if (t.empty())
        throw std::runtime_error("cache line " + std::to_string(line) + ": empty " + field);
    std::size_t start = t[0] == '-' ? 1 : 0;
    if (t.size() == start || t.find_first_not_of("0123456789", start) != std::string::npos)
        throw std::runtime_error("cache line " + std::to_string(line) + ": bad " + field +
                                 " `" + s + "`");
    return BigInt(t);
}

} // namespace

CountCache CountCache::load(const std::string& path) {
    CountCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line == kHeader) continue;
        std::stringstream ss(line);
        std::vector<std::string> f;
        std::string tok;
        while (std::getline(ss, tok, ',')) f.push_back(tok);
        if (f.size() != 10)
            throw std::runtime_error("cache line " + std::to_string(lineno) +
                                     ": expected 10 fields, got " + std::to_string(f.size()));
        CacheRow row;
        row.key.p = static_cast<std::uint32_t>(parse_u64(f[0], lineno, "p"));
        row.key.r = static_cast<std::uint32_t>(parse_u64(f[1], lineno, "r"));
        row.key.b = static_cast<std::uint32_t>(parse_u64(f[2], lineno, "b"));
        row.key.a = static_cast<std::uint32_t>(parse_u64(f[3], lineno, "a"));
        row.key.n = static_cast<std::uint32_t>(parse_u64(f[4], lineno, "n"));
        row.zeros = parse_big(f[5], lineno, "zeros");
        row.w = static_cast<std::uint32_t>(parse_u64(f[6], lineno, "w"));
        BigInt lam = parse_big(f[7], lineno, "lambda");
        if (lam < -1 || lam > 1)
            throw std::runtime_error("cache line " + std::to_string(lineno) +
                                     ": lambda must be -1, 0 or 1, got " + f[7]);
        row.lambda = static_cast<int>(lam);
        row.points = parse_big(f[8], lineno, "points");
        if (f[9] != "oracle" && f[9] != "predicted")
            throw std::runtime_error("cache line " + std::to_string(lineno) +
                                     ": source must be `oracle` or `predicted`, got `" + f[9] + "`");
        row.source = f[9];
        cache.insert(row);
    }
    return cache;
}

void CountCache::append(const std::string& path, const CacheRow& row) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache for append: " + path);
    if (fresh) out << kHeader << "\n";
    out << row.key.p << ',' << row.key.r << ',' << row.key.b << ',' << row.key.a << ','
        << row.key.n << ',' << row.zeros.str() << ',' << row.w << ',' << row.lambda << ','
        << row.points.str() << ',' << row.source << "\n";
}

const CacheRow* CountCache::find(const CacheKey& key) const {
    auto it = rows_.find(key);
    return it == rows_.end() ? nullptr : &it->second;
}

void CountCache::insert(const CacheRow& row) {
    auto it = rows_.find(row.key);
    if (it == rows_.end()) {
        rows_.emplace(row.key, row);
        return;
    }
    // oracle entries win over predicted ones
    if (it->second.source != "oracle" && row.source == "oracle") it->second = row;
}

} // namespace tqf
