#include "vsl/cache.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "vsl/field.hpp"

namespace vsl {

namespace fs = std::filesystem;

std::string format_record(const BlockCacheRecord& rec)
{
    nlohmann::ordered_json j;
    j["n"] = rec.key.n;
    j["d"] = rec.key.d;
    j["b"] = rec.key.b;
    j["p"] = rec.key.p;
    j["q"] = rec.key.q;
    j["mdeg"] = rec.key.mdeg;
    j["prime"] = rec.key.prime;
    j["rank"] = rec.rank;
    return j.dump();
}

std::optional<BlockCacheRecord> parse_record(const std::string& line)
{
    try {
        const auto j = nlohmann::json::parse(line);
        BlockCacheRecord rec;
        rec.key.n = j.at("n").get<int>();
        rec.key.d = j.at("d").get<int>();
        rec.key.b = j.at("b").get<int>();
        rec.key.p = j.at("p").get<int>();
        rec.key.q = j.at("q").get<int>();
        rec.key.mdeg = j.at("mdeg").get<std::vector<int>>();
        rec.key.prime = j.at("prime").get<std::uint32_t>();
        rec.rank = j.at("rank").get<std::uint64_t>();
        if (rec.key.mdeg.size() != static_cast<std::size_t>(rec.key.n + 1))
            return std::nullopt;
        return rec;
    }
    catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

namespace {

struct LoadResult {
    std::vector<std::pair<std::string, BlockCacheRecord>> good;
    std::vector<std::string> bad;
};

LoadResult read_records(const fs::path& file)
{
    LoadResult res;
    std::ifstream in(file);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (auto rec = parse_record(line))
            res.good.emplace_back(line, *rec);
        else
            res.bad.push_back(line);
    }
    return res;
}

void quarantine(const fs::path& dir, const LoadResult& res)
{
    std::ofstream q(dir / BlockCache::kQuarantineFile, std::ios::app);
    for (const auto& line : res.bad)
        q << line << '\n';
    const fs::path tmp = dir / "ranks.jsonl.tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        for (const auto& [line, rec] : res.good)
            out << line << '\n';
    }
    fs::rename(tmp, dir / BlockCache::kRecordsFile);
}

}  // namespace

BlockCache::BlockCache(fs::path dir) : dir_(std::move(dir))
{
    fs::create_directories(dir_);
    const fs::path file = dir_ / kRecordsFile;
    if (fs::exists(file)) {
        auto res = read_records(file);
        if (!res.bad.empty()) {
            warnings_.push_back("quarantined " + std::to_string(res.bad.size()) + " unreadable cache record(s) to " +
                                (dir_ / kQuarantineFile).string());
            quarantine(dir_, res);
        }
        for (const auto& [line, rec] : res.good) {
            auto [it, inserted] = records_.emplace(rec.key, rec.rank);
            if (!inserted && it->second != rec.rank)
                warnings_.push_back("conflicting cache records for one key; keeping the first: " + line);
        }
    }
    out_.open(file, std::ios::app);
    if (!out_)
        throw std::runtime_error("BlockCache: cannot open " + file.string() + " for append");
}

std::optional<std::uint64_t> BlockCache::lookup(const BlockCacheKey& key) const
{
    std::lock_guard lock(mu_);
    auto it = records_.find(key);
    if (it == records_.end())
        return std::nullopt;
    return it->second;
}

bool BlockCache::insert(const BlockCacheKey& key, std::uint64_t rank)
{
    std::lock_guard lock(mu_);
    auto [it, inserted] = records_.emplace(key, rank);
    if (!inserted)
        return false;
    out_ << format_record({key, rank}) << '\n';
    out_.flush();
    ++appended_;
    return true;
}

std::size_t BlockCache::size() const
{
    std::lock_guard lock(mu_);
    return records_.size();
}

std::size_t BlockCache::appended() const
{
    std::lock_guard lock(mu_);
    return appended_;
}

CacheStats cache_stats(const fs::path& dir)
{
    CacheStats st;
    if (!fs::is_directory(dir))
        throw std::runtime_error("cache directory does not exist: " + dir.string());
    const fs::path file = dir / BlockCache::kRecordsFile;
    if (fs::exists(file)) {
        auto res = read_records(file);
        if (!res.bad.empty()) {
            st.warnings.push_back("quarantined " + std::to_string(res.bad.size()) + " unreadable record(s)");
            quarantine(dir, res);
        }
        std::map<BlockCacheKey, std::uint64_t> seen;
        for (const auto& [line, rec] : res.good) {
            if (!seen.emplace(rec.key, rec.rank).second) {
                ++st.duplicates;
                continue;
            }
            ++st.per_params[{rec.key.n, rec.key.d, rec.key.b, rec.key.prime}];
        }
        st.records = seen.size();
    }
    const fs::path qfile = dir / BlockCache::kQuarantineFile;
    if (fs::exists(qfile)) {
        std::ifstream in(qfile);
        std::string line;
        while (std::getline(in, line))
            st.quarantined += !line.empty();
    }
    return st;
}

CacheStats cache_gc(const fs::path& dir, bool drop_unpinned)
{
    cache_stats(dir);  // quarantines unreadable lines first
    const fs::path file = dir / BlockCache::kRecordsFile;
    if (fs::exists(file)) {
        auto res = read_records(file);
        std::map<BlockCacheKey, std::uint64_t> seen;
        LoadResult kept;
        for (auto& [line, rec] : res.good) {
            const bool pinned = std::find(kPinnedPrimes.begin(), kPinnedPrimes.end(), rec.key.prime) != kPinnedPrimes.end();
            if (drop_unpinned && !pinned)
                continue;
            if (!seen.emplace(rec.key, rec.rank).second)
                continue;
            kept.good.emplace_back(format_record(rec), rec);
        }
        const fs::path tmp = dir / "ranks.jsonl.tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            for (const auto& [line, rec] : kept.good)
                out << line << '\n';
        }
        fs::rename(tmp, file);
    }
    return cache_stats(dir);
}

}  // namespace vsl
