#ifndef VSL_BETTI_HPP
#define VSL_BETTI_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vsl/bounds.hpp"
#include "vsl/cache.hpp"
#include "vsl/field.hpp"
#include "vsl/koszul.hpp"
#include "vsl/linalg.hpp"

namespace vsl {

struct EngineConfig {
    /// Largest row or column count of a single block.
    std::uint64_t max_block_dim = 60'000;
    /// Largest total number of structural nonzeros over one K_{p,q}.
    std::uint64_t max_total_nnz = 400'000'000;
    /// Largest C(h0(d), p) for which subsets are enumerated.
    std::uint64_t max_wedge_subsets = 50'000'000;
    unsigned threads = 1;
    bool use_orbits = true;
    std::size_t dense_limit = kDefaultDenseLimit;
    std::shared_ptr<BlockCache> cache;
};

enum class EntryStatus { ZERO, NONZERO, SKIPPED };

std::string_view to_string(EntryStatus s);

struct KpqResult {
    EntryStatus status = EntryStatus::SKIPPED;
    std::uint64_t dim = 0;
    std::uint64_t middle = 0;    // dim C_{p,q}
    std::uint64_t rank_out = 0;  // rank d_{p,q}
    std::uint64_t rank_in = 0;   // rank d_{p+1,q-1}
    std::string note;

    bool computed() const { return status != EntryStatus::SKIPPED; }
};

struct BettiEntry {
    int p = 0;
    int q = 0;
    KpqResult result;
};

struct BettiTable {
    VeroneseParams params;
    FieldSpec field = FieldSpec::rationals();
    std::vector<BettiEntry> entries;  // ordered by (q, p)
    std::vector<std::uint32_t> primes;
    bool certified = false;
    bool rational_checked = false;
    std::vector<std::string> disagreements;

    const BettiEntry* find(int p, int q) const;
    /// Dimension if the entry was computed.
    std::optional<std::uint64_t> dim(int p, int q) const;
};

struct DualityCheck {
    KpqResult lhs;
    KpqResult rhs;
    DualIndex partner;
    bool equal = false;
};

struct GreenVanishingReport {
    VeroneseParams params;
    int q = 0;
    long long bound = 0;
    long long checked_up_to = 0;   // vanishing verified on [bound, checked_up_to]
    bool vanishing_holds = false;
    bool edge_defined = false;     // bound - 1 >= 0
    std::uint64_t edge_dim = 0;
    bool edge_nonzero = false;
    bool skipped = false;
    std::string note;
};

/// Computes dim K_{p,q}(P^n; O(b), O(d)) from ranks of multigraded blocks.
/// Block ranks are memoized per field and optionally persisted.
class BettiEngine {
public:
    explicit BettiEngine(EngineConfig cfg = {});

    const EngineConfig& config() const { return cfg_; }

    KpqResult kpq_dim(const VeroneseParams& params, int p, int q, const FieldSpec& f);

    /// Computes every (p, q) in the given ranges. With certify, a second
    /// pinned prime and (where blocks fit the dense limit) the rationals are
    /// compared entry by entry; disagreements are listed, never merged.
    BettiTable betti_table(const VeroneseParams& params, int p_min, int p_max, int q_min, int q_max,
                           const FieldSpec& f, bool certify = false);

    /// Rank of d_{p,q} summed over blocks, or nullopt if refused.
    std::optional<std::uint64_t> differential_rank(const VeroneseParams& params, int p, int q, const FieldSpec& f);

    DualityCheck duality_check(const VeroneseParams& params, int p, int q, const FieldSpec& f);
    GreenVanishingReport green_vanishing_check(const VeroneseParams& params, int q, const FieldSpec& f);

    /// Block eliminations actually performed (memo and cache hits excluded).
    std::uint64_t eliminations() const { return eliminations_; }
    /// Distinct nontrivial blocks whose rank was requested.
    std::uint64_t blocks_touched() const;

private:
    struct Plan;
    Plan plan(const VeroneseParams& params, int p, int q);
    void compute_ranks(const std::vector<BlockKey>& keys, const FieldSpec& f);
    std::uint64_t block_rank(const BlockKey& key, const FieldSpec& f);
    std::optional<std::uint64_t> known_rank(const BlockKey& key, const FieldSpec& f);
    KpqResult assemble(const Plan& pl, const FieldSpec& f);

    EngineConfig cfg_;
    mutable std::mutex mu_;
    std::map<std::pair<BlockKey, std::uint32_t>, std::uint64_t> memo_;
    std::atomic<std::uint64_t> eliminations_{0};
};

}  // namespace vsl

#endif  // VSL_BETTI_HPP
