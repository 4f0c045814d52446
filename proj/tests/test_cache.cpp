#include <doctest.h>

#include <fstream>

#include <unistd.h>

#include "vsl/betti.hpp"
#include "vsl/cache.hpp"

using namespace vsl;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
    {
        path = fs::temp_directory_path() / ("vsl-test-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::size_t count_lines(const fs::path& f)
{
    std::ifstream in(f);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        n += !line.empty();
    return n;
}

}  // namespace

TEST_CASE("record format round-trips")
{
    BlockCacheRecord rec{{2, 3, -1, 4, 1, {3, 2, 2}, kPinnedPrimes[0]}, 17};
    const auto line = format_record(rec);
    CHECK(line == R"({"n":2,"d":3,"b":-1,"p":4,"q":1,"mdeg":[3,2,2],"prime":2147483647,"rank":17})");
    const auto back = parse_record(line);
    REQUIRE(back.has_value());
    CHECK(back->key == rec.key);
    CHECK(back->rank == 17);
    CHECK_FALSE(parse_record("{not json").has_value());
    CHECK_FALSE(parse_record(R"({"n":2})").has_value());
}

TEST_CASE("empty dir has zero records")
{
    TempDir t("empty");
    const auto s = cache_stats(t.path);
    CHECK(s.records == 0);
    CHECK(s.quarantined == 0);
    CHECK_THROWS(cache_stats(t.path / "missing"));
}

TEST_CASE("insert is idempotent and persists")
{
    TempDir t("idem");
    const BlockCacheKey k{1, 2, 0, 1, 1, {2, 2}, kPinnedPrimes[0]};
    {
        BlockCache c(t.path);
        CHECK(c.insert(k, 1));
        CHECK_FALSE(c.insert(k, 1));
        CHECK(c.size() == 1);
        CHECK(c.appended() == 1);
    }
    BlockCache again(t.path);
    REQUIRE(again.lookup(k).has_value());
    CHECK(*again.lookup(k) == 1);
    CHECK(count_lines(t.path / BlockCache::kRecordsFile) == 1);
}

TEST_CASE("unreadable records are quarantined, not dropped")
{
    TempDir t("quarantine");
    {
        std::ofstream out(t.path / BlockCache::kRecordsFile);
        out << format_record({{1, 2, 0, 1, 1, {2, 2}, kPinnedPrimes[0]}, 1}) << "\n";
        out << "garbage line\n";
        out << R"({"n":1,"d":2)" << "\n";
    }
    BlockCache c(t.path);
    CHECK(c.size() == 1);
    CHECK(c.warnings().size() >= 1);
    CHECK(count_lines(t.path / BlockCache::kQuarantineFile) == 2);
    CHECK(count_lines(t.path / BlockCache::kRecordsFile) == 1);
    CHECK(cache_stats(t.path).quarantined == 2);
}

TEST_CASE("engine records one line per orbit-reduced block, per prime")
{
    TempDir t("engine");
    EngineConfig cfg;
    cfg.cache = std::make_shared<BlockCache>(t.path);
    BettiEngine eng(cfg);
    const auto F0 = FieldSpec::prime(kPinnedPrimes[0]);
    eng.betti_table(VeroneseParams(2, 2), 0, 6, 0, 2, F0);
    const auto touched = eng.blocks_touched();
    CHECK(touched > 0);
    auto s = cache_stats(t.path);
    CHECK(s.records == touched);

    eng.betti_table(VeroneseParams(2, 2), 0, 6, 0, 2, FieldSpec::prime(kPinnedPrimes[1]));
    s = cache_stats(t.path);
    CHECK(s.records == 2 * touched);
    REQUIRE(s.per_params.size() == 2);
    for (const auto& [k, n] : s.per_params)
        CHECK(n == touched);

    // second engine over the same directory performs no eliminations
    EngineConfig cfg2;
    cfg2.cache = std::make_shared<BlockCache>(t.path);
    BettiEngine again(cfg2);
    const auto table = again.betti_table(VeroneseParams(2, 2), 0, 6, 0, 2, F0);
    CHECK(again.eliminations() == 0);
    CHECK(*table.dim(1, 1) == 6);
}

TEST_CASE("gc compacts and drops unpinned primes")
{
    TempDir t("gc");
    {
        std::ofstream out(t.path / BlockCache::kRecordsFile);
        const BlockCacheRecord a{{1, 2, 0, 1, 1, {2, 2}, kPinnedPrimes[0]}, 1};
        const BlockCacheRecord b{{1, 2, 0, 1, 1, {2, 2}, 1000003}, 1};
        out << format_record(a) << "\n" << format_record(a) << "\n" << format_record(b) << "\n";
    }
    auto s = cache_stats(t.path);
    CHECK(s.records == 2);
    CHECK(s.duplicates == 1);
    s = cache_gc(t.path, false);
    CHECK(count_lines(t.path / BlockCache::kRecordsFile) == 2);
    s = cache_gc(t.path, true);
    CHECK(count_lines(t.path / BlockCache::kRecordsFile) == 1);
    CHECK(cache_stats(t.path).records == 1);
}
