#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "rsieve/atkin.hpp"
#include "rsieve/baseline.hpp"
#include "rsieve/engines.hpp"
#include "rsieve/errors.hpp"
#include "rsieve/incremental.hpp"
#include "rsieve/instrumentation.hpp"
#include "rsieve/rolling.hpp"

namespace py = pybind11;
using namespace rsieve;

namespace {

Engine engine_arg(const std::string& name) {
    const auto e = parse_engine(name);
    if (!e) throw py::value_error("unknown engine '" + name + "'");
    return *e;
}

std::vector<std::uint64_t> set_bits(const BitVector& bits, std::uint64_t offset) {
    std::vector<std::uint64_t> out;
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits.test(j)) out.push_back(offset + j);
    return out;
}

py::dict work_dict(const WorkMeter& m) {
    py::dict d;
    d["pushes"] = m.pushes;
    d["pops"] = m.pops;
    d["lattice_visits"] = m.lattice_visits;
    d["crossings"] = m.crossings;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rolling, segmented and incremental prime sieves";

    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def("trial_division_is_prime", &trial_division_is_prime, py::arg("m"));
    m.def("simple_sieve", [](std::uint64_t n) { return set_bits(simple_sieve(n).bits, 0); }, py::arg("n"),
          "Primes <= n from the unsegmented sieve of Eratosthenes.");
    m.def("base_primes", [](std::uint64_t limit) { return base_primes(limit).primes; }, py::arg("limit"));
    m.def("sieve_segment", [](std::uint64_t left, std::uint64_t right) {
              const auto seg = sieve_segment(left, right, base_primes(std::max<std::uint64_t>(isqrt(right), 1)));
              return set_bits(seg.bits, left);
          }, py::arg("left"), py::arg("right"), "Primes in [left, right] from one Eratosthenes segment.");
    m.def("segmented_sieve", py::overload_cast<std::uint64_t, std::uint64_t>(&segmented_sieve), py::arg("n"),
          py::arg("delta") = 0);

    m.def("primes", [](std::uint64_t start, std::uint64_t end, const std::string& engine, std::uint64_t budget) {
              return primes_in_range(start, end, engine_arg(engine), {0, budget});
          }, py::arg("start"), py::arg("end"), py::arg("engine") = "rolling", py::arg("budget") = 0,
          "Primes in [start, end] from the chosen engine (simple, segmented, rolling, atkin).");
    m.def("count", [](std::uint64_t n, const std::string& engine) { return count_primes(n, engine_arg(engine)); },
          py::arg("n"), py::arg("engine") = "rolling");

    py::class_<RollingSieve>(m, "RollingSieve")
        .def(py::init<std::uint64_t>(), py::arg("start") = RollingSieve::kMinStart)
        .def("next", &RollingSieve::next, "Primality of the current integer; advances by one.")
        .def("nextprime", &RollingSieve::nextprime)
        .def("next_factored", [](RollingSieve& s) {
            const auto f = s.next_factored();
            return py::make_tuple(f.value, f.factors);
        })
        .def_property_readonly("current", &RollingSieve::current)
        .def_property_readonly("position", &RollingSieve::position)
        .def_property_readonly("root_bound", &RollingSieve::root_bound)
        .def_property_readonly("delta", &RollingSieve::delta)
        .def_property_readonly("node_count", &RollingSieve::node_count)
        .def("active_primes", &RollingSieve::active_primes)
        .def("audit", &RollingSieve::audit)
        .def("save", [](const RollingSieve& s) {
            const auto b = s.save();
            return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
        })
        .def_static("load", [](const py::bytes& data) {
            const std::string raw = data;
            const auto* p = reinterpret_cast<const std::uint8_t*>(raw.data());
            return RollingSieve::load(std::span<const std::uint8_t>(p, raw.size()));
        });

    py::class_<PendingInterval>(m, "AtkinInterval")
        .def(py::init([](std::uint64_t lo, std::uint64_t delta) { return PendingInterval(lo, delta); }),
             py::arg("lo"), py::arg("delta"))
        .def("step", [](PendingInterval& p, std::uint64_t budget) {
            const auto r = p.step(budget);
            return py::make_tuple(r.completed, r.used);
        }, py::arg("budget"), "Runs at most `budget` work units; returns (completed, used).")
        .def("run", [](PendingInterval& p) { return p.run(); })
        .def_property_readonly("phase", [](const PendingInterval& p) { return std::string(to_string(p.phase())); })
        .def_property_readonly("done", &PendingInterval::done)
        .def_property_readonly("spent", &PendingInterval::spent)
        .def_property_readonly("lo", &PendingInterval::lo)
        .def_property_readonly("delta", &PendingInterval::delta)
        .def("finish", [](const PendingInterval& p) { return p.finish().primes; });

    py::class_<IncrementalSieve>(m, "IncrementalSieve")
        .def(py::init([](std::uint64_t start, std::uint64_t budget) {
                 return std::make_unique<IncrementalSieve>(start, nullptr, budget);
             }), py::arg("start") = IncrementalSieve::kMinStart, py::arg("budget") = 0)
        .def("next", &IncrementalSieve::next)
        .def("nextprime", &IncrementalSieve::nextprime)
        .def_property_readonly("current", &IncrementalSieve::current)
        .def_property_readonly("budget_per_call", &IncrementalSieve::budget_per_call)
        .def_property_readonly("swaps", &IncrementalSieve::swaps)
        .def_property_readonly("last_call_work", &IncrementalSieve::last_call_work)
        .def_property_readonly("live_words", &IncrementalSieve::live_words);

    m.def("count_rolling_work", [](std::uint64_t start, std::uint64_t n) {
        const auto r = count_rolling_work(start, n);
        py::dict d = work_dict(r.meter);
        d["start"] = r.start;
        d["n"] = r.n;
        d["peak_nodes"] = r.peak_nodes;
        d["final_delta"] = r.final_delta;
        d["peak_delta_ratio"] = r.peak_delta_ratio;
        return d;
    }, py::arg("start"), py::arg("n"));
    m.def("expected_pushes", &expected_pushes, py::arg("start"), py::arg("n"));
    m.def("incremental_profile", [](std::uint64_t start, std::uint64_t n) {
        const auto s = summarize_profile(start, n);
        py::dict d;
        d["gaps"] = s.gaps;
        d["max_normalized"] = s.max_normalized;
        d["mean_normalized"] = s.mean_normalized;
        d["windowed_constant"] = s.windowed_constant;
        return d;
    }, py::arg("start"), py::arg("n"), "Summary of rolling-sieve work per prime gap in [start, n].");
    m.def("mertens_check", &mertens_check, py::arg("x"));
    m.def("pnt_check", &pnt_check, py::arg("x"));
    m.def("chebyshev_check", &chebyshev_check, py::arg("x"));

    m.def("encode_bitmap", [](std::uint64_t lo, const std::vector<bool>& bits) {
        Bitmap bm{lo, BitVector(bits.size())};
        for (std::size_t j = 0; j < bits.size(); ++j)
            if (bits[j]) bm.bits.set(j);
        const auto b = encode_bitmap(bm);
        return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
    }, py::arg("lo"), py::arg("bits"));
    m.def("decode_bitmap", [](const py::bytes& data) {
        const std::string raw = data;
        const auto bm = decode_bitmap(
            std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
        std::vector<bool> bits(bm.bits.size());
        for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = bm.bits.test(j);
        return py::make_tuple(bm.lo, bits);
    }, py::arg("data"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
