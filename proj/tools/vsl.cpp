// vsl: command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vsl/betti.hpp"
#include "vsl/config.hpp"
#include "vsl/report.hpp"
#include "vsl/syzygy.hpp"
#include "vsl/verify.hpp"

namespace {

using namespace vsl;

struct EngineFlags {
    std::string prime = "auto";
    unsigned threads = 1;
    std::string cache;
    bool no_cache = false;
    std::size_t dense_limit = kDefaultDenseLimit;
    std::uint64_t max_block_dim = EngineConfig{}.max_block_dim;
    std::uint64_t max_nnz = EngineConfig{}.max_total_nnz;
    std::uint64_t max_wedge_subsets = EngineConfig{}.max_wedge_subsets;
    bool no_orbits = false;

    void attach(CLI::App* app)
    {
        app->add_option("--prime", prime, "auto, a pinned prime, any odd prime < 2^31, or QQ")->capture_default_str();
        app->add_option("--threads", threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
        app->add_option("--cache", cache, "block-rank cache directory (default: $VSL_CACHE_DIR)");
        app->add_flag("--no-cache", no_cache, "ignore VSL_CACHE_DIR and --cache");
        app->add_option("--dense-limit", dense_limit, "largest block eliminated over QQ")->capture_default_str();
        app->add_option("--max-block-dim", max_block_dim, "refuse blocks larger than this")->capture_default_str();
        app->add_option("--max-nnz", max_nnz, "refuse entries with more structural nonzeros")->capture_default_str();
        app->add_option("--max-wedge-subsets", max_wedge_subsets, "refuse wedge powers with more basis elements")
            ->capture_default_str();
        app->add_flag("--no-orbits", no_orbits, "compute every block instead of one per permutation orbit");
    }

    FieldSpec field() const
    {
        if (prime == "auto")
            return FieldSpec::prime(kPinnedPrimes[0]);
        if (prime == "QQ" || prime == "qq" || prime == "0")
            return FieldSpec::rationals();
        std::size_t pos = 0;
        const unsigned long v = std::stoul(prime, &pos);
        if (pos != prime.size())
            throw std::invalid_argument("bad --prime '" + prime + "'");
        return FieldSpec::prime(static_cast<std::uint32_t>(v));
    }

    EngineConfig config() const
    {
        EngineConfig c;
        c.threads = threads;
        c.dense_limit = dense_limit;
        c.max_block_dim = max_block_dim;
        c.max_total_nnz = max_nnz;
        c.max_wedge_subsets = max_wedge_subsets;
        c.use_orbits = !no_orbits;
        std::string dir = cache;
        if (dir.empty()) {
            if (const char* env = std::getenv("VSL_CACHE_DIR"))
                dir = env;
        }
        if (!no_cache && !dir.empty()) {
            std::filesystem::create_directories(dir);
            c.cache = std::make_shared<BlockCache>(dir);
            for (const auto& w : c.cache->warnings())
                std::cerr << "warning: " << w << "\n";
        }
        return c;
    }
};

// Checked after the config file is merged, so a required flag may come from either.
std::vector<CLI::Option*> required_options;

CLI::Option* must(CLI::Option* o)
{
    required_options.push_back(o);
    return o;
}

struct Params {
    int n = 0;
    int d = 0;
    int b = 0;

    void attach(CLI::App* app, bool with_b = true)
    {
        must(app->add_option("--n", n, "dimension of P^n"));
        must(app->add_option("--d", d, "embedding degree"));
        if (with_b)
            app->add_option("--b", b, "twist O(b)")->capture_default_str();
    }
    VeroneseParams get() const { return VeroneseParams(n, d, b); }
};

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw std::runtime_error("cannot write " + out);
    f << text;
}

std::vector<PointOverField> read_points(const std::string& file, int n, Fp prime)
{
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open points file " + file);
    std::vector<PointOverField> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<Fp> c;
        long long v;
        while (ls >> v)
            c.push_back(modp::from_int(v, prime));
        if (c.size() != static_cast<std::size_t>(n + 1))
            throw std::runtime_error("points file: expected " + std::to_string(n + 1) + " coordinates per line");
        pts.emplace_back(std::move(c), prime);
    }
    return pts;
}

// Config values fill options the command line left unset.
void apply_config(CLI::App& app, CLI::App* leaf, const std::map<std::string, std::string>& cfg)
{
    std::set<std::string> known;
    std::function<void(CLI::App*)> collect = [&](CLI::App* a) {
        for (const auto* o : a->get_options())
            for (const auto& ln : o->get_lnames())
                known.insert(ln);
        for (auto* s : a->get_subcommands({}))
            collect(s);
    };
    collect(&app);
    for (const auto& [key, value] : cfg) {
        if (!known.count(key))
            throw ConfigError("config: unknown key '" + key + "'");
        if (key == "config")
            continue;
        auto* opt = leaf->get_option_no_throw("--" + key);
        if (!opt || opt->count() > 0)
            continue;
        opt->add_result(value);
        opt->run_callback();
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Koszul cohomology of Veronese embeddings by exact block-sparse linear algebra"};
    app.require_subcommand(1);
    std::string config_file;
    app.add_option("--config", config_file, "key = value file mirroring the long flags; the command line wins");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "closed-form ranges and vanishing bounds");
    Params bp;
    int bq = -1;
    std::string bformat = "json";
    bp.attach(bounds);
    bounds->add_option("--q", bq, "strand (default: all of 1..n)");
    bounds->add_option("--format", bformat, "json|text")->capture_default_str();

    // betti
    auto* betti = app.add_subcommand("betti", "Betti table K_{p,q} by block ranks");
    Params tp;
    EngineFlags tf;
    int pmin = 0, pmax = -1, qmin = 0, qmax = -1;
    bool certify = false;
    std::string tout, tformat = "json";
    tp.attach(betti);
    tf.attach(betti);
    betti->add_option("--p-min", pmin)->capture_default_str();
    betti->add_option("--p-max", pmax, "default h0(d)");
    betti->add_option("--q-min", qmin)->capture_default_str();
    betti->add_option("--q-max", qmax, "default n (n+1 when b != 0)");
    betti->add_flag("--certify", certify, "recompute with a second pinned prime and over QQ where blocks fit");
    betti->add_option("--out", tout, "write to file instead of stdout");
    betti->add_option("--format", tformat, "json|csv|ascii")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "compare computed tables against every applicable prediction");
    Params vp;
    EngineFlags vf;
    std::vector<int> strands;
    int vpmax = -1;
    std::string vout, vformat = "json";
    vp.attach(verify_cmd);
    vf.attach(verify_cmd);
    verify_cmd->add_option("--strands", strands, "strands q (default 1..n)")->delimiter(',');
    verify_cmd->add_option("--p-max", vpmax, "default h0(d)");
    verify_cmd->add_option("--out", vout);
    verify_cmd->add_option("--format", vformat, "json|csv|ascii")->capture_default_str();

    // maps
    auto* maps = app.add_subcommand("maps", "evaluation and projection maps on Koszul classes");
    maps->require_subcommand(1);
    auto* ev = maps->add_subcommand("ev", "ev_D on K_{p,1}: ranks, factorization and invariance checks");
    Params ep;
    int ev_p = 0;
    std::uint64_t seed = 1;
    std::string points_mode = "random", points_file, ev_prime = "auto", eout;
    std::size_t samples = 100;
    ep.attach(ev, false);
    must(ev->add_option("--p", ev_p, "homological index (p >= s)"));
    ev->add_option("--seed", seed)->capture_default_str();
    ev->add_option("--points", points_mode, "random|file")->check(CLI::IsMember({"random", "file"}))->capture_default_str();
    ev->add_option("--points-file", points_file, "one point per line, n+1 integers, x_0 = 0");
    ev->add_option("--samples", samples, "random cycles/boundaries tested")->capture_default_str();
    ev->add_option("--prime", ev_prime, "auto or an odd prime < 2^31")->capture_default_str();
    ev->add_option("--out", eout);

    auto* chain = maps->add_subcommand("chain", "proof-chain implication and Green vanishing for K_{p,1}");
    Params cp;
    EngineFlags cf;
    std::vector<int> chain_p;
    std::string cout_file;
    cp.attach(chain, false);
    cf.attach(chain);
    chain->add_option("--p", chain_p, "indices (default 0..h0(d))")->delimiter(',');
    chain->add_option("--out", cout_file);

    // selftest
    auto* self = app.add_subcommand("selftest", "invariant suite at pinned desk-scale parameters");
    SelftestOptions so;
    std::string sout;
    self->add_flag("--mutate-sign", so.mutate_sign, "drop the alternating sign (the suite must fail)");
    self->add_option("--threads", so.threads)->capture_default_str();
    self->add_option("--out", sout);

    // cache
    auto* cache = app.add_subcommand("cache", "inspect or compact the block-rank cache");
    cache->require_subcommand(1);
    std::string cache_dir;
    bool drop_unpinned = false;
    auto* stats = cache->add_subcommand("stats", "record counts per (n,d,b,prime)");
    auto* gc = cache->add_subcommand("gc", "compact; optionally drop records for unpinned primes");
    for (auto* s : {stats, gc})
        s->add_option("--dir", cache_dir, "cache directory (default: $VSL_CACHE_DIR)");
    gc->add_flag("--drop-unpinned", drop_unpinned);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        CLI::App* leaf = app.get_subcommands().front();
        while (!leaf->get_subcommands().empty())
            leaf = leaf->get_subcommands().front();
        if (!config_file.empty())
            apply_config(app, leaf, load_config(config_file));
        for (auto* o : required_options)
            if (leaf->get_option_no_throw(o->get_name()) == o && o->count() == 0)
                throw CLI::RequiredError(o->get_name());

        if (bounds->parsed()) {
            const auto params = bp.get();
            const auto preds = all_predictions(params, bq);
            if (bformat == "json") {
                Json arr = Json::array();
                for (const auto& r : preds)
                    arr.push_back(to_json(r));
                std::cout << arr.dump(2) << "\n";
            }
            else if (bformat == "text") {
                for (const auto& r : preds) {
                    std::cout << to_string(r.source) << " q=" << r.q << " [" << (r.lo ? r.lo->str() : "-inf") << ", "
                              << (r.hi ? r.hi->str() : "+inf") << "] "
                              << (r.applicable ? "applicable" : "not applicable") << "  " << r.reason << "\n";
                }
            }
            else {
                throw std::invalid_argument("bounds: --format must be json or text");
            }
            return 0;
        }

        if (betti->parsed()) {
            const auto params = tp.get();
            if (pmax < 0)
                pmax = static_cast<int>(to_ll(h0(params.n, params.d)));
            if (qmax < 0)
                qmax = params.b == 0 ? params.n : params.n + 1;
            BettiEngine engine(tf.config());
            const auto table = engine.betti_table(params, pmin, pmax, qmin, qmax, tf.field(), certify);
            emit(render(table, parse_format(tformat)), tout);
            return table.disagreements.empty() ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            const auto params = vp.get();
            if (strands.empty())
                for (int q = 1; q <= params.n; ++q)
                    strands.push_back(q);
            BettiEngine engine(vf.config());
            const auto rep = verify(engine, params, strands, vf.field(),
                                    vpmax >= 0 ? std::optional<int>(vpmax) : std::nullopt);
            emit(render(rep, parse_format(vformat)), vout);
            return rep.count(Verdict::VIOLATION) == 0 ? 0 : 1;
        }

        if (ev->parsed()) {
            const VeroneseParams params(ep.n, ep.d);
            const Fp prime = ev_prime == "auto" ? kPinnedPrimes[0] : static_cast<Fp>(std::stoul(ev_prime));
            FieldSpec::prime(prime);  // validates
            std::vector<PointOverField> pts;
            if (points_mode == "file") {
                if (points_file.empty())
                    throw std::invalid_argument("--points file needs --points-file");
                pts = read_points(points_file, ep.n, prime);
            }
            const auto rep = ev_map_report(params, ev_p, prime, seed, pts, samples);
            emit(to_json(rep).dump(2) + "\n", eout);
            return rep.all_properties_hold() ? 0 : 1;
        }

        if (chain->parsed()) {
            const VeroneseParams params(cp.n, cp.d);
            if (chain_p.empty())
                for (int p = 0; p <= to_ll(h0(params.n, params.d)); ++p)
                    chain_p.push_back(p);
            BettiEngine engine(cf.config());
            Json rows = Json::array();
            bool bad = false;
            for (int p : chain_p) {
                const auto r = theorem_chain_check(engine, params, p, cf.field());
                bad = bad || r.verdict == Verdict::VIOLATION;
                rows.push_back(to_json(r));
            }
            const VeroneseParams projected(params.n, params.d - 1, -1);
            Json out{{"params", to_json(params)},
                     {"projected", to_json(projected)},
                     {"green", to_json(engine.green_vanishing_check(projected, 1, cf.field()))},
                     {"rows", rows}};
            emit(out.dump(2) + "\n", cout_file);
            return bad ? 1 : 0;
        }

        if (self->parsed()) {
            const auto rep = selftest(so);
            emit(to_json(rep).dump(2) + "\n", sout);
            for (const auto& c : rep.checks)
                std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                          << "\n";
            return rep.passed() ? 0 : 1;
        }

        if (cache->parsed()) {
            std::string dir = cache_dir;
            if (dir.empty()) {
                if (const char* env = std::getenv("VSL_CACHE_DIR"))
                    dir = env;
            }
            if (dir.empty())
                throw std::invalid_argument("cache: give --dir or set VSL_CACHE_DIR");
            const auto s = stats->parsed() ? cache_stats(dir) : cache_gc(dir, drop_unpinned);
            std::cout << to_json(s).dump(2) << "\n";
            return 0;
        }
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    catch (const std::exception& e) {
        std::cerr << "vsl: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
