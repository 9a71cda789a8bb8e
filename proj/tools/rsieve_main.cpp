// rsieve: prime listing, counting, factored streaming and work measurement.
//
// Exit status: 0 success, 1 internal invariant violation, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsieve/engines.hpp"
#include "rsieve/errors.hpp"
#include "rsieve/instrumentation.hpp"
#include "rsieve/rolling.hpp"

namespace {

constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

rsieve::Engine engine_from(const std::string& name) {
    const auto e = rsieve::parse_engine(name);
    if (!e) throw UsageError("unknown engine '" + name + "' (expected simple, segmented, rolling or atkin)");
    return *e;
}

struct PrimesArgs {
    std::uint64_t start = 0;
    std::uint64_t end = 0;
    std::string engine = "rolling";
    std::string format = "text";
    std::string out;
    std::uint64_t budget = 0;
    std::uint64_t segment = 0;
};

void run_primes(const PrimesArgs& a) {
    if (a.start < 2 || a.end < a.start) throw UsageError("need 2 <= start <= end");
    const auto engine = engine_from(a.engine);
    if (a.end > rsieve::engine_limit(engine)) throw UsageError("end exceeds the engine's range");
    const rsieve::EngineOptions opts{a.segment, a.budget};
    Output out(a.out);
    auto& os = out.stream();
    if (a.format == "text") {
        std::string buf;
        buf.reserve(1 << 16);
        rsieve::for_each_prime(a.start, a.end, engine, [&](std::uint64_t p) {
            buf += std::to_string(p);
            buf += '\n';
            if (buf.size() > (1 << 16) - 32) {
                os << buf;
                buf.clear();
            }
        }, opts);
        os << buf;
    } else if (a.format == "bitmap") {
        rsieve::Bitmap bm{a.start, rsieve::BitVector(static_cast<std::size_t>(a.end - a.start + 1))};
        rsieve::for_each_prime(a.start, a.end, engine,
                               [&](std::uint64_t p) { bm.bits.set(static_cast<std::size_t>(p - a.start)); }, opts);
        const auto bytes = rsieve::encode_bitmap(bm);
        os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    } else {
        throw UsageError("unknown format '" + a.format + "' (expected text or bitmap)");
    }
    os.flush();
}

void run_count(std::uint64_t n, const std::string& engine_name, std::uint64_t budget) {
    if (n < 2) throw UsageError("need n >= 2");
    const auto engine = engine_from(engine_name);
    if (n > rsieve::engine_limit(engine)) throw UsageError("n exceeds the engine's range");
    std::cout << rsieve::count_primes(n, engine, {0, budget}) << '\n';
}

void run_factor(std::uint64_t start, std::uint64_t end, const std::string& path) {
    if (start < rsieve::RollingSieve::kMinStart || end < start) throw UsageError("need 100 <= start <= end");
    if (end >= rsieve::RollingSieve::kMaxStart) throw UsageError("end exceeds 2^60");
    Output out(path);
    auto& os = out.stream();
    rsieve::RollingSieve sieve(start);
    std::string line;
    for (std::uint64_t v = start; v <= end; ++v) {
        const auto f = sieve.next_factored();
        line = std::to_string(f.value) + " =";
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            line += i == 0 ? " " : " * ";
            line += std::to_string(f.factors[i].first) + '^' + std::to_string(f.factors[i].second);
        }
        line += '\n';
        os << line;
    }
    os.flush();
}

void run_bench(std::uint64_t start, const std::vector<std::uint64_t>& ns, const std::string& path) {
    std::vector<rsieve::RollingWorkReport> rows;
    for (const auto n : ns) {
        if (start < 100 || n <= start) throw UsageError("need 100 <= start < n");
        rows.push_back(rsieve::count_rolling_work(start, n));
    }
    Output out(path);
    rsieve::write_bench_csv(out.stream(), rows);
}

void run_profile(std::uint64_t start, std::uint64_t n, bool gaps, const std::string& path) {
    if (start < 100 || n <= start) throw UsageError("need 100 <= start < n");
    Output out(path);
    if (gaps) {
        rsieve::write_profile_csv(out.stream(), rsieve::incremental_profile(start, n));
    } else {
        rsieve::write_summary_csv(out.stream(), {rsieve::summarize_profile(start, n)});
    }
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{"rsieve: rolling, segmented and incremental prime sieves"};
    app.require_subcommand(1);

    PrimesArgs primes;
    auto* primes_cmd = app.add_subcommand("primes", "List the primes in [start, end]");
    primes_cmd->add_option("start,--start", primes.start, "First value")->required();
    primes_cmd->add_option("end,--end", primes.end, "Last value")->required();
    primes_cmd->add_option("--engine", primes.engine, "simple | segmented | rolling | atkin")
        ->capture_default_str();
    primes_cmd->add_option("--format", primes.format, "text | bitmap")->capture_default_str();
    primes_cmd->add_option("--out", primes.out, "Output path (default: standard output)");
    primes_cmd->add_option("--budget", primes.budget, "Per-call work budget for the atkin engine (0 = calibrate)");
    primes_cmd->add_option("--segment", primes.segment, "Segment width for the segmented engine (0 = sqrt)");

    std::uint64_t count_n = 0;
    std::string count_engine = "rolling";
    std::uint64_t count_budget = 0;
    auto* count_cmd = app.add_subcommand("count", "Print pi(n)");
    count_cmd->add_option("n,--end", count_n, "Upper bound")->required();
    count_cmd->add_option("--engine", count_engine, "simple | segmented | rolling | atkin")->capture_default_str();
    count_cmd->add_option("--budget", count_budget, "Per-call work budget for the atkin engine (0 = calibrate)");

    std::uint64_t factor_start = 0, factor_end = 0;
    std::string factor_out;
    auto* factor_cmd = app.add_subcommand("factor", "Stream factorizations of [start, end] (start >= 100)");
    factor_cmd->add_option("start,--start", factor_start, "First value")->required();
    factor_cmd->add_option("end,--end", factor_end, "Last value")->required();
    factor_cmd->add_option("--out", factor_out, "Output path (default: standard output)");

    std::uint64_t bench_start = 100;
    std::vector<std::uint64_t> bench_ns;
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "CSV of rolling-sieve push/pop counts over [start, n)");
    bench_cmd->add_option("n,--end", bench_ns, "One or more end points")->required();
    bench_cmd->add_option("--start", bench_start, "First value")->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "Output path (default: standard output)");

    std::uint64_t profile_start = 0, profile_n = 0;
    bool profile_gaps = false;
    std::string profile_out;
    auto* profile_cmd = app.add_subcommand("profile", "CSV of rolling-sieve work per prime gap in [start, n]");
    profile_cmd->add_option("start,--start", profile_start, "First value")->required();
    profile_cmd->add_option("n,--end", profile_n, "Last value")->required();
    profile_cmd->add_flag("--gaps", profile_gaps, "One row per gap instead of the summary row");
    profile_cmd->add_option("--out", profile_out, "Output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*primes_cmd) run_primes(primes);
        else if (*count_cmd) run_count(count_n, count_engine, count_budget);
        else if (*factor_cmd) run_factor(factor_start, factor_end, factor_out);
        else if (*bench_cmd) run_bench(bench_start, bench_ns, bench_out);
        else if (*profile_cmd) run_profile(profile_start, profile_n, profile_gaps, profile_out);
    } catch (const rsieve::InvariantViolation& e) {
        std::cerr << "rsieve: internal invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const UsageError& e) {
        std::cerr << "rsieve: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rsieve: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "rsieve: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
