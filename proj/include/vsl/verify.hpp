#ifndef VSL_VERIFY_HPP
#define VSL_VERIFY_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vsl/betti.hpp"
#include "vsl/bounds.hpp"
#include "vsl/syzygy.hpp"

namespace vsl {

enum class Expectation { ZERO, NONZERO };
std::string_view to_string(Expectation e);

struct PredictionCheck {
    PredictionSource source;
    Expectation expected = Expectation::ZERO;
    bool applicable = true;
    bool consistent = true;  // meaningful only when applicable and computed
    std::string reason;
};

struct VerificationRow {
    int p = 0;
    int q = 0;
    KpqResult computed;
    std::vector<PredictionCheck> predictions;
    Verdict verdict = Verdict::SKIPPED;
    std::string provenance;  // filled for VIOLATION rows
};

struct SourceSummary {
    PredictionSource source;
    std::size_t rows_checked = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;
    bool applicable = false;
    /// Every in-scope row computed and consistent.
    bool verified = false;
};

struct VerificationReport {
    VeroneseParams params;
    std::string field;
    std::vector<std::uint32_t> primes;
    std::vector<int> strands;
    std::vector<VerificationRow> rows;  // ordered by (q, p)
    std::vector<SourceSummary> sources;

    std::size_t count(Verdict v) const;
    const VerificationRow* find(int p, int q) const;
};

/// Predictions emitted for one (p, q) independent of any computation.
std::vector<PredictionCheck> predictions_for(const VeroneseParams& params, int p, int q);

/// Computes every K_{p,q} with q in strands and 0 <= p <= p_max (default
/// h0(d)) and checks it against every applicable prediction.
VerificationReport verify(BettiEngine& engine, const VeroneseParams& params, const std::vector<int>& strands,
                          const FieldSpec& f, std::optional<int> p_max = std::nullopt);

/// Properties of the induced maps ev_D and ev_point on K_{p,1}.
struct EvMapReport {
    VeroneseParams params;
    int p = 0;
    int s = 0;
    Fp prime = 0;
    std::uint64_t seed = 0;
    int attempts = 0;  // point draws until the certificate held
    std::vector<PointOverField> points;
    std::size_t source_dim = 0;  // K_{p,1}
    std::size_t target_dim = 0;  // K_{p-s,1}
    std::size_t ev_rank = 0;
    std::size_t composite_rank = 0;
    int composite_sign = 0;  // ev_D = sign * composite on every basis class; 0 if neither
    std::size_t point_rank = 0;  // ev_point at points[0], K_{p,1} -> K_{p-1,1}
    std::size_t factor_true = 0;
    std::size_t factor_total = 0;
    bool gamma_invariant = false;
    std::size_t samples = 0;
    bool cycles_to_cycles = false;
    bool boundaries_to_boundaries = false;

    bool all_properties_hold() const;
};

/// points empty means draw them from the seed.
EvMapReport ev_map_report(const VeroneseParams& params, int p, Fp prime, std::uint64_t seed,
                          std::vector<PointOverField> points = {}, std::size_t samples = 100);

struct SelftestOptions {
    /// Runs the d^2 check against a differential with the alternating sign removed.
    bool mutate_sign = false;
    unsigned threads = 1;
    /// Scratch directory for the cache round-trip; a temporary one if empty.
    std::filesystem::path scratch;
};

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    bool passed() const;
};

SelftestReport selftest(const SelftestOptions& opts = {});

}  // namespace vsl

#endif  // VSL_VERIFY_HPP
