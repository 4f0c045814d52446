#ifndef VSL_REPORT_HPP
#define VSL_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vsl/betti.hpp"
#include "vsl/bounds.hpp"
#include "vsl/cache.hpp"
#include "vsl/syzygy.hpp"
#include "vsl/verify.hpp"

namespace vsl {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, ascii };
/// Accepts json, csv, ascii (alias: text, table).
OutputFormat parse_format(std::string_view s);

Json to_json(const VeroneseParams& params);
Json to_json(const RangePrediction& r);
Json to_json(const KpqResult& r);
Json to_json(const BettiTable& t);
Json to_json(const VerificationReport& r);
Json to_json(const ChainReport& r);
Json to_json(const EvMapReport& r);
Json to_json(const SelftestReport& r);
Json to_json(const CacheStats& s);
Json to_json(const DualityCheck& c);
Json to_json(const GreenVanishingReport& r);

/// Every prediction the bounds module can state for (params, q); q < 0 means all q in [1, n].
std::vector<RangePrediction> all_predictions(const VeroneseParams& params, int q = -1);

std::string to_csv(const BettiTable& t);
std::string to_csv(const VerificationReport& r);

/// Macaulay-style display: one row per q, one column per p; '.' for zero, '?' for skipped.
std::string to_ascii(const BettiTable& t);
std::string to_ascii(const VerificationReport& r);

std::string render(const BettiTable& t, OutputFormat f);
std::string render(const VerificationReport& r, OutputFormat f);

}  // namespace vsl

#endif  // VSL_REPORT_HPP
