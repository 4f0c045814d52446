// pybind11 bindings; structured results cross the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vsl/betti.hpp"
#include "vsl/oracle.hpp"
#include "vsl/report.hpp"
#include "vsl/syzygy.hpp"
#include "vsl/verify.hpp"

namespace py = pybind11;
using namespace vsl;

namespace {

FieldSpec field_of(const std::string& prime)
{
    if (prime.empty() || prime == "auto")
        return FieldSpec::prime(kPinnedPrimes[0]);
    if (prime == "QQ" || prime == "qq")
        return FieldSpec::rationals();
    return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(prime)));
}

EngineConfig engine_config(unsigned threads, const std::string& cache_dir, std::uint64_t max_block_dim)
{
    EngineConfig c;
    c.threads = threads;
    if (max_block_dim)
        c.max_block_dim = max_block_dim;
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        c.cache = std::make_shared<BlockCache>(cache_dir);
    }
    return c;
}

}  // namespace

PYBIND11_MODULE(_vsl, m)
{
    m.doc() = "Koszul cohomology of Veronese embeddings";

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<GenericityError>(m, "GenericityError", PyExc_RuntimeError);

    m.attr("PINNED_PRIMES") = std::vector<std::uint32_t>(kPinnedPrimes.begin(), kPinnedPrimes.end());

    m.def("binom", [](long long a, long long k) { return binom(a, k).str(); });
    m.def("h0", [](int n, long long d) { return h0(n, d).str(); });

    m.def("bounds_json", [](int n, int d, int b, int q) {
        Json arr = Json::array();
        for (const auto& r : all_predictions(VeroneseParams(n, d, b), q))
            arr.push_back(to_json(r));
        return arr.dump();
    }, py::arg("n"), py::arg("d"), py::arg("b") = 0, py::arg("q") = -1);

    m.def("kpq_json", [](int n, int d, int b, int p, int q, const std::string& prime) {
        BettiEngine eng;
        return to_json(eng.kpq_dim(VeroneseParams(n, d, b), p, q, field_of(prime))).dump();
    }, py::arg("n"), py::arg("d"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("prime") = "auto");

    m.def("betti_json",
          [](int n, int d, int b, int p_min, int p_max, int q_min, int q_max, const std::string& prime, bool certify,
             unsigned threads, const std::string& cache_dir, std::uint64_t max_block_dim) {
              const VeroneseParams params(n, d, b);
              if (p_max < 0)
                  p_max = static_cast<int>(to_ll(h0(n, d)));
              if (q_max < 0)
                  q_max = b == 0 ? n : n + 1;
              py::gil_scoped_release nogil;
              BettiEngine eng(engine_config(threads, cache_dir, max_block_dim));
              return to_json(eng.betti_table(params, p_min, p_max, q_min, q_max, field_of(prime), certify)).dump();
          },
          py::arg("n"), py::arg("d"), py::arg("b") = 0, py::arg("p_min") = 0, py::arg("p_max") = -1,
          py::arg("q_min") = 0, py::arg("q_max") = -1, py::arg("prime") = "auto", py::arg("certify") = false,
          py::arg("threads") = 1, py::arg("cache_dir") = "", py::arg("max_block_dim") = 0);

    m.def("verify_json",
          [](int n, int d, int b, std::vector<int> strands, int p_max, const std::string& prime) {
              if (strands.empty())
                  for (int q = 1; q <= n; ++q)
                      strands.push_back(q);
              py::gil_scoped_release nogil;
              BettiEngine eng;
              return to_json(verify(eng, VeroneseParams(n, d, b), strands, field_of(prime),
                                    p_max >= 0 ? std::optional<int>(p_max) : std::nullopt))
                  .dump();
          },
          py::arg("n"), py::arg("d"), py::arg("b") = 0, py::arg("strands") = std::vector<int>{},
          py::arg("p_max") = -1, py::arg("prime") = "auto");

    m.def("ev_map_json",
          [](int n, int d, int p, std::uint64_t seed, std::uint32_t prime, std::size_t samples) {
              py::gil_scoped_release nogil;
              return to_json(ev_map_report(VeroneseParams(n, d), p, prime ? prime : kPinnedPrimes[0], seed, {},
                                           samples))
                  .dump();
          },
          py::arg("n"), py::arg("d"), py::arg("p"), py::arg("seed") = 1, py::arg("prime") = 0,
          py::arg("samples") = 100);

    m.def("chain_json", [](int n, int d, int p, const std::string& prime) {
        BettiEngine eng;
        return to_json(theorem_chain_check(eng, VeroneseParams(n, d), p, field_of(prime))).dump();
    }, py::arg("n"), py::arg("d"), py::arg("p"), py::arg("prime") = "auto");

    m.def("twist_identification_json", [](int n, int d, int p, const std::string& prime) {
        BettiEngine eng;
        const auto c = twist_identification_check(eng, n, d, p, field_of(prime));
        return Json{{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}, {"equal", c.equal}}.dump();
    }, py::arg("n"), py::arg("d"), py::arg("p"), py::arg("prime") = "auto");

    m.def("duality_json", [](int n, int d, int b, int p, int q, const std::string& prime) {
        BettiEngine eng;
        return to_json(eng.duality_check(VeroneseParams(n, d, b), p, q, field_of(prime))).dump();
    }, py::arg("n"), py::arg("d"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("prime") = "auto");

    m.def("dense_kpq", [](int n, int d, int b, int p, int q, std::uint32_t prime) {
        return oracle::dense_kpq(VeroneseParams(n, d, b), p, q, prime ? prime : kPinnedPrimes[0]);
    }, py::arg("n"), py::arg("d"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("prime") = 0);

    m.def("selftest_json", [](bool mutate_sign) {
        SelftestOptions o;
        o.mutate_sign = mutate_sign;
        py::gil_scoped_release nogil;
        return to_json(selftest(o)).dump();
    }, py::arg("mutate_sign") = false);

    m.def("cache_stats_json", [](const std::string& dir) { return to_json(cache_stats(dir)).dump(); });
    m.def("cache_gc_json", [](const std::string& dir, bool drop_unpinned) {
        return to_json(cache_gc(dir, drop_unpinned)).dump();
    }, py::arg("dir"), py::arg("drop_unpinned") = false);
}
