#ifndef VSL_CACHE_HPP
#define VSL_CACHE_HPP

#include <compare>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace vsl {

struct BlockCacheKey {
    int n = 0;
    int d = 0;
    int b = 0;
    int p = 0;
    int q = 0;
    std::vector<int> mdeg;
    std::uint32_t prime = 0;

    friend bool operator==(const BlockCacheKey&, const BlockCacheKey&) = default;
    friend auto operator<=>(const BlockCacheKey&, const BlockCacheKey&) = default;
};

struct BlockCacheRecord {
    BlockCacheKey key;
    std::uint64_t rank = 0;
};

/// One JSON line: {"n","d","b","p","q","mdeg":[...],"prime","rank"}.
std::string format_record(const BlockCacheRecord& rec);
std::optional<BlockCacheRecord> parse_record(const std::string& line);

/// Append-only JSON-lines store of block ranks in <dir>/ranks.jsonl.
///
/// Upserts are idempotent by key. Lines that fail to parse are moved to
/// <dir>/quarantine.jsonl on open and reported through warnings().
class BlockCache {
public:
    explicit BlockCache(std::filesystem::path dir);

    std::optional<std::uint64_t> lookup(const BlockCacheKey& key) const;
    /// Returns false if the key was already present (nothing written).
    bool insert(const BlockCacheKey& key, std::uint64_t rank);

    std::size_t size() const;
    std::size_t appended() const;
    const std::vector<std::string>& warnings() const { return warnings_; }
    const std::filesystem::path& dir() const { return dir_; }

    static constexpr const char* kRecordsFile = "ranks.jsonl";
    static constexpr const char* kQuarantineFile = "quarantine.jsonl";

private:
    std::filesystem::path dir_;
    mutable std::mutex mu_;
    std::map<BlockCacheKey, std::uint64_t> records_;
    std::ofstream out_;
    std::size_t appended_ = 0;
    std::vector<std::string> warnings_;
};

struct CacheStats {
    std::size_t records = 0;
    std::size_t quarantined = 0;
    std::size_t duplicates = 0;
    std::map<std::tuple<int, int, int, std::uint32_t>, std::size_t> per_params;  // (n,d,b,prime)
    std::vector<std::string> warnings;
};

CacheStats cache_stats(const std::filesystem::path& dir);

/// Compacts the record file (drops duplicate lines); with drop_unpinned also
/// removes records whose prime is not in kPinnedPrimes.
CacheStats cache_gc(const std::filesystem::path& dir, bool drop_unpinned);

}  // namespace vsl

#endif  // VSL_CACHE_HPP
