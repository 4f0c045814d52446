#include "vsl/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace vsl {

OutputFormat parse_format(std::string_view s)
{
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "ascii" || s == "text" || s == "table")
        return OutputFormat::ascii;
    throw std::invalid_argument("unknown output format '" + std::string(s) + "' (json, csv, ascii)");
}

namespace {

Json big(const std::optional<BigInt>& v)
{
    if (!v)
        return nullptr;
    // bounds may exceed 64 bits; emit them as numbers when they fit
    if (*v <= BigInt(std::numeric_limits<long long>::max()) && *v >= BigInt(std::numeric_limits<long long>::min()))
        return static_cast<long long>(*v);
    return v->str();
}

Json verdict_counts(const VerificationReport& r)
{
    Json j;
    for (Verdict v : {Verdict::CONSISTENT, Verdict::VIOLATION, Verdict::OUT_OF_APPLICABILITY, Verdict::SKIPPED})
        j[std::string(to_string(v))] = r.count(v);
    return j;
}

}  // namespace

Json to_json(const VeroneseParams& params)
{
    return Json{{"n", params.n}, {"d", params.d}, {"b", params.b}};
}

Json to_json(const RangePrediction& r)
{
    return Json{{"source", std::string(to_string(r.source))},
                {"q", r.q},
                {"lo", big(r.lo)},
                {"hi", big(r.hi)},
                {"kind", r.source == PredictionSource::EL_CONJ ? "nonvanishing_iff" : "vanishing"},
                {"applicable", r.applicable},
                {"reason", r.reason}};
}

Json to_json(const KpqResult& r)
{
    Json j{{"status", std::string(to_string(r.status))}};
    j["dim"] = r.computed() ? Json(r.dim) : Json(nullptr);
    j["middle"] = r.middle;
    if (r.computed()) {
        j["rank_out"] = r.rank_out;
        j["rank_in"] = r.rank_in;
    }
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

Json to_json(const BettiTable& t)
{
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json j{{"p", e.p}, {"q", e.q}};
        j["dim"] = e.result.computed() ? Json(e.result.dim) : Json(nullptr);
        j["status"] = std::string(to_string(e.result.status));
        if (!e.result.note.empty())
            j["note"] = e.result.note;
        entries.push_back(std::move(j));
    }
    Json prov{{"primes", t.primes}, {"certified", t.certified}, {"rational_checked", t.rational_checked}};
    if (!t.disagreements.empty())
        prov["disagreements"] = t.disagreements;
    return Json{{"params", to_json(t.params)}, {"field", t.field.name()}, {"entries", entries}, {"provenance", prov}};
}

Json to_json(const VerificationReport& r)
{
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json preds = Json::array();
        for (const auto& pc : row.predictions) {
            preds.push_back(Json{{"source", std::string(to_string(pc.source))},
                                 {"expected", std::string(to_string(pc.expected))},
                                 {"applicable", pc.applicable},
                                 {"consistent", row.computed.computed() ? Json(pc.consistent) : Json(nullptr)},
                                 {"reason", pc.reason}});
        }
        Json j{{"p", row.p}, {"q", row.q}};
        j["computed"] = row.computed.computed() ? std::string(to_string(row.computed.status)) : "SKIPPED";
        j["dim"] = row.computed.computed() ? Json(row.computed.dim) : Json(nullptr);
        j["predictions"] = preds;
        j["verdict"] = std::string(to_string(row.verdict));
        if (!row.provenance.empty())
            j["provenance"] = row.provenance;
        if (!row.computed.note.empty())
            j["note"] = row.computed.note;
        rows.push_back(std::move(j));
    }
    Json sources = Json::array();
    for (const auto& s : r.sources) {
        sources.push_back(Json{{"source", std::string(to_string(s.source))},
                               {"applicable", s.applicable},
                               {"rows_checked", s.rows_checked},
                               {"violations", s.violations},
                               {"skipped", s.skipped},
                               {"verified", s.verified}});
    }
    return Json{{"params", to_json(r.params)}, {"field", r.field}, {"strands", r.strands},
                {"provenance", Json{{"primes", r.primes}}}, {"summary", verdict_counts(r)},
                {"sources", sources}, {"rows", rows}};
}

Json to_json(const ChainReport& r)
{
    Json j{{"params", to_json(r.params)}, {"p", r.p}, {"s", r.s}};
    j["first"] = to_json(r.first);
    j["second"] = to_json(r.second);
    j["second_params"] = Json{{"n", r.params.n}, {"d", r.params.d - 1}, {"b", -1}, {"p", r.p - r.s}, {"q", 1}};
    j["green_bound"] = r.green_bound;
    j["main_bound"] = r.main_bound ? Json(*r.main_bound) : Json(nullptr);
    j["implication_holds"] = r.implication_holds;
    j["green_holds"] = r.green_holds;
    j["verdict"] = std::string(to_string(r.verdict));
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

Json to_json(const EvMapReport& r)
{
    Json pts = Json::array();
    for (const auto& x : r.points)
        pts.push_back(x.coordinates());
    return Json{{"params", to_json(r.params)},
                {"p", r.p},
                {"s", r.s},
                {"prime", r.prime},
                {"seed", r.seed},
                {"attempts", r.attempts},
                {"points", pts},
                {"source_dim", r.source_dim},
                {"target_dim", r.target_dim},
                {"ev_rank", r.ev_rank},
                {"composite_rank", r.composite_rank},
                {"composite_sign", r.composite_sign},
                {"point_rank", r.point_rank},
                {"projection_factor", Json{{"true", r.factor_true}, {"total", r.factor_total}}},
                {"gamma_invariant", r.gamma_invariant},
                {"samples", r.samples},
                {"cycles_to_cycles", r.cycles_to_cycles},
                {"boundaries_to_boundaries", r.boundaries_to_boundaries},
                {"all_properties_hold", r.all_properties_hold()}};
}

Json to_json(const SelftestReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    return Json{{"passed", r.passed()}, {"checks", checks}};
}

Json to_json(const CacheStats& s)
{
    Json per = Json::array();
    for (const auto& [k, count] : s.per_params) {
        const auto& [n, d, b, prime] = k;
        per.push_back(Json{{"n", n}, {"d", d}, {"b", b}, {"prime", prime}, {"records", count}});
    }
    return Json{{"records", s.records}, {"quarantined", s.quarantined}, {"duplicates", s.duplicates},
                {"per_params", per}, {"warnings", s.warnings}};
}

Json to_json(const DualityCheck& c)
{
    return Json{{"lhs", to_json(c.lhs)},
                {"partner", Json{{"p", c.partner.p}, {"q", c.partner.q}, {"b", c.partner.b}}},
                {"rhs", to_json(c.rhs)},
                {"equal", c.equal}};
}

Json to_json(const GreenVanishingReport& r)
{
    return Json{{"params", to_json(r.params)}, {"q", r.q}, {"bound", r.bound}, {"checked_up_to", r.checked_up_to},
                {"vanishing_holds", r.vanishing_holds}, {"edge_defined", r.edge_defined}, {"edge_dim", r.edge_dim},
                {"edge_nonzero", r.edge_nonzero}, {"skipped", r.skipped}, {"note", r.note}};
}

std::vector<RangePrediction> all_predictions(const VeroneseParams& params, int q)
{
    using PS = PredictionSource;
    const int n = params.n, d = params.d;
    std::vector<int> qs;
    if (q >= 0)
        qs.push_back(q);
    else
        for (int k = 1; k <= n; ++k)
            qs.push_back(k);

    const bool untwisted = params.b == 0;
    const bool big_d = d >= n + 1;
    auto mark = [&](RangePrediction r) {
        if (!untwisted) {
            r.applicable = false;
            r.reason = "stated for b = 0";
        }
        return r;
    };
    std::vector<RangePrediction> out;
    for (int k : qs) {
        if (k >= 1 && k <= n)
            out.push_back(mark(el_range(params, k)));
        if (k == 1 && n >= 2)
            out.push_back(mark({PS::LINEAR_CONJ, 1, linear_conj_bound(params), std::nullopt, big_d,
                                big_d ? "vanishing for p >= C(d+n-1,n)+n-1" : "requires d >= n+1"}));
        if (k == 1 && n >= 3)
            out.push_back(mark({PS::MAIN_THM, 1, main_thm_bound(params), std::nullopt, true,
                                "vanishing for p >= C(d+n-1,n)+C(d+n-2,n-2)"}));
        if (k == n && n >= 2) {
            if (big_d)
                out.push_back(mark({PS::QN_THM, n, BigInt(0), qn_thm_bound(params), true,
                                    "vanishing for p <= C(d+n,n)-C(d-1,n)-n-1"}));
            else
                out.push_back(mark({PS::QN_THM, n, std::nullopt, std::nullopt, false, "requires d >= n+1"}));
        }
        if (k >= 0)
            out.push_back({PS::GREEN_VANISHING, k, green_vanishing_bound(params, k), std::nullopt, true,
                           "vanishing for p >= h0(b+qd)"});
        if (k == 2 && n == 2)
            out.push_back(mark({PS::GB_VANISHING, 2, BigInt(0), gb_bound(d) - 1, true, "vanishing for p < 3d-2"}));
        out.push_back(mark({PS::DUALITY_TRIVIAL, k, h0(n, d) - 1 - n + 1, std::nullopt, true,
                            "vanishing for p > r-n"}));
    }
    return out;
}

std::string to_csv(const BettiTable& t)
{
    std::ostringstream os;
    os << "p,q,dim,status\n";
    for (const auto& e : t.entries) {
        os << e.p << ',' << e.q << ',';
        if (e.result.computed())
            os << e.result.dim;
        os << ',' << to_string(e.result.status) << '\n';
    }
    return os.str();
}

std::string to_csv(const VerificationReport& r)
{
    std::ostringstream os;
    os << "p,q,dim,status,verdict\n";
    for (const auto& row : r.rows) {
        os << row.p << ',' << row.q << ',';
        if (row.computed.computed())
            os << row.computed.dim;
        os << ',' << to_string(row.computed.status) << ',' << to_string(row.verdict) << '\n';
    }
    return os.str();
}

std::string to_ascii(const BettiTable& t)
{
    std::map<std::pair<int, int>, std::string> cell;
    int pmin = 0, pmax = -1, qmin = 0, qmax = -1;
    bool first = true;
    for (const auto& e : t.entries) {
        if (first) {
            pmin = pmax = e.p;
            qmin = qmax = e.q;
            first = false;
        }
        pmin = std::min(pmin, e.p);
        pmax = std::max(pmax, e.p);
        qmin = std::min(qmin, e.q);
        qmax = std::max(qmax, e.q);
        cell[{e.q, e.p}] = !e.result.computed() ? "?" : e.result.dim == 0 ? "." : std::to_string(e.result.dim);
    }
    std::map<int, std::string> total;
    std::size_t w = 1;
    for (int p = pmin; p <= pmax; ++p) {
        unsigned long long sum = 0;
        bool unknown = false;
        for (const auto& e : t.entries) {
            if (e.p != p)
                continue;
            unknown = unknown || !e.result.computed();
            sum += e.result.dim;
        }
        total[p] = unknown ? "?" : std::to_string(sum);
        w = std::max(w, total[p].size());
    }
    for (const auto& [k, s] : cell)
        w = std::max(w, s.size());
    const std::size_t lw = std::max<std::size_t>(6, std::to_string(qmax).size() + 1);

    std::ostringstream os;
    os << t.params.n << "," << t.params.d << "," << t.params.b << " over " << t.field.name() << "\n";
    os << std::setw(lw + 1) << "";
    for (int p = pmin; p <= pmax; ++p)
        os << ' ' << std::setw(w) << p;
    os << "\n" << std::setw(lw) << "total:" << ' ';
    for (int p = pmin; p <= pmax; ++p)
        os << ' ' << std::setw(w) << total[p];
    os << "\n";
    for (int q = qmin; q <= qmax; ++q) {
        os << std::setw(lw) << (std::to_string(q) + ":") << ' ';
        for (int p = pmin; p <= pmax; ++p) {
            auto it = cell.find({q, p});
            os << ' ' << std::setw(w) << (it == cell.end() ? "" : it->second);
        }
        os << "\n";
    }
    return os.str();
}

std::string to_ascii(const VerificationReport& r)
{
    std::ostringstream os;
    os << "verify n=" << r.params.n << " d=" << r.params.d << " b=" << r.params.b << " over " << r.field << "\n";
    for (const auto& row : r.rows) {
        os << "  K_{" << row.p << "," << row.q << "} = "
           << (row.computed.computed() ? std::to_string(row.computed.dim) : std::string("?")) << "  "
           << to_string(row.verdict);
        for (const auto& pc : row.predictions) {
            os << "  " << to_string(pc.source) << ":" << to_string(pc.expected);
            if (!pc.applicable)
                os << "(n/a)";
        }
        if (!row.provenance.empty())
            os << "  [" << row.provenance << "]";
        os << "\n";
    }
    for (Verdict v : {Verdict::CONSISTENT, Verdict::VIOLATION, Verdict::OUT_OF_APPLICABILITY, Verdict::SKIPPED})
        os << to_string(v) << ": " << r.count(v) << "\n";
    for (const auto& s : r.sources) {
        if (s.applicable || s.skipped)
            os << to_string(s.source) << ": " << (s.verified ? "verified" : "not verified") << " (" << s.rows_checked
               << " rows, " << s.violations << " violations, " << s.skipped << " skipped)\n";
    }
    return os.str();
}

std::string render(const BettiTable& t, OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return to_json(t).dump(2) + "\n";
    case OutputFormat::csv: return to_csv(t);
    case OutputFormat::ascii: return to_ascii(t);
    }
    return {};
}

std::string render(const VerificationReport& r, OutputFormat f)
{
    switch (f) {
    case OutputFormat::json: return to_json(r).dump(2) + "\n";
    case OutputFormat::csv: return to_csv(r);
    case OutputFormat::ascii: return to_ascii(r);
    }
    return {};
}

}  // namespace vsl
