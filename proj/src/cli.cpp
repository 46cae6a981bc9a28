#include "sextic/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sextic/errors.hpp"
#include "sextic/serialize.hpp"

namespace sextic {

namespace {

std::string format_ratio(double ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", ratio);
    return buf;
}

void print_witness_text(std::ostream& out, u64 P, const ExclusionWitness& w) {
    out << "witness: i=" << w.i << " a=" << w.a << " residue=" << w.residue
        << " divisor=" << w.divisor << " cofactor=" << w.cofactor << "\n";
    out << "factorization: " << P << " = " << w.divisor << " * " << w.cofactor << "\n";
}

int cmd_check(std::ostream& out, u64 N, u64 m, Engine engine, const std::string& format) {
    Verdict v = engine == Engine::sound ? theorem_verdict(N, m) : paper_literal_verdict(N, m);
    Outcome oracle = is_prime_ref(v.P) ? Outcome::prime : Outcome::composite;
    bool agree = oracle == v.outcome;

    if (format == "json") {
        out << verdict_json(v, oracle).dump(2) << "\n";
    } else {
        out << "m: " << m << "\n";
        out << "N: " << N << "\n";
        out << "P: " << v.P << "\n";
        out << "engine: " << engine_name(v.engine) << "\n";
        if (v.params.even_extension()) out << "mode: even-m extension\n";
        out << "verdict: " << outcome_name(v.outcome) << "\n";
        if (v.witness) print_witness_text(out, v.P, *v.witness);
        out << "bound: " << v.i_bound_used << "\n";
        out << "checks: " << v.checks_performed << "\n";
        out << "oracle: " << outcome_name(oracle) << "\n";
        out << "agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_families(std::ostream& out, u64 scale, u64 shift, u64 count, const std::string& format) {
    std::vector<LinearFamily> families = residue_families(scale, shift);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const LinearFamily& fam : families) arr.push_back(family_json(fam, count));
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << "q,slope,intercept,members\n";
        for (const LinearFamily& fam : families) {
            out << fam.offset << ',' << fam.slope << ',' << fam.intercept << ',';
            for (u64 p = 0; p < count; ++p) out << (p ? " " : "") << fam.member(p);
            out << "\n";
        }
    } else {
        for (const LinearFamily& fam : families) {
            out << "family q=" << fam.offset << ": " << fam.slope << "*p + " << fam.intercept
                << ":";
            for (u64 p = 0; p < count; ++p) out << ' ' << fam.member(p);
            out << "\n";
        }
    }
    return 0;
}

int cmd_sieve(std::ostream& out, u64 lo, u64 hi, const std::string& algo, bool count_only,
              const std::string& format) {
    SieveRange range{lo, hi};
    SieveResult result = algo == "eratosthenes" ? eratosthenes(range) : wheel_sieve(range);

    if (format == "json") {
        ordered_json j;
        j["algorithm"] = algorithm_name(result.stats.algorithm);
        j["lo"] = json_u64(lo);
        j["hi"] = json_u64(hi);
        j["count"] = json_u64(result.stats.primes_found);
        if (!count_only) {
            ordered_json primes = ordered_json::array();
            for (u64 p : result.primes) primes.push_back(json_u64(p));
            j["primes"] = primes;
        }
        j["candidates"] = json_u64(result.stats.candidates_considered);
        j["marks"] = json_u64(result.stats.mark_operations);
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << stats_csv_header << "\n" << stats_csv_row(result.stats, range) << "\n";
    } else if (count_only) {
        out << result.stats.primes_found << "\n";
    } else {
        for (u64 p : result.primes) out << p << "\n";
    }
    return 0;
}

int cmd_bench(std::ostream& out, const std::vector<u64>& highs, const std::string& format) {
    bool csv = format != "text";
    if (csv) out << stats_csv_header << "\n";
    for (u64 hi : highs) {
        SieveRange range{1, hi};
        ComparisonReport report = compare(range);
        if (csv) {
            out << stats_csv_row(report.wheel, range) << "\n";
            out << stats_csv_row(report.baseline, range) << "\n";
        } else {
            out << "range [1, " << hi << "]\n";
            out << "  wheel6:       candidates=" << report.wheel.candidates_considered
                << " marks=" << report.wheel.mark_operations
                << " primes=" << report.wheel.primes_found << "\n";
            out << "  eratosthenes: candidates=" << report.baseline.candidates_considered
                << " marks=" << report.baseline.mark_operations
                << " primes=" << report.baseline.primes_found << "\n";
            out << "  lists match: " << (report.lists_match ? "yes" : "no") << "\n";
            if (report.mark_ratio)
                out << "  mark ratio (wheel6/eratosthenes): " << format_ratio(*report.mark_ratio)
                    << "\n";
            else
                out << "  mark ratio: undefined (baseline made no marks)\n";
        }
    }
    return 0;
}

int cmd_search(std::ostream& out, std::ostream& err, const std::vector<u64>& m_list, u64 from,
               u64 to, Engine engine, unsigned threads, const std::string& format) {
    for (u64 m : m_list) theorem_p(to, m); // whole grid must fit 64 bits
    SearchReport report = search_counterexamples(m_list, from, to, engine, threads);

    for (const SkippedPoint& s : report.skipped)
        err << "skipped: m=" << s.m << " N=" << s.N << " (" << s.reason << ")\n";

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const Disagreement& d : report.disagreements) arr.push_back(disagreement_json(d));
        out << arr.dump(2) << "\n";
    } else {
        if (report.disagreements.empty()) {
            out << "no disagreements\n";
        } else {
            for (const Disagreement& d : report.disagreements)
                out << "disagreement: m=" << d.m << " N=" << d.N << " P=" << d.P
                    << " engine=" << engine_name(d.engine)
                    << " verdict=" << outcome_name(d.engine_outcome)
                    << " oracle=" << outcome_name(d.oracle_outcome) << "\n";
        }
    }
    bool fail = engine == Engine::sound && !report.disagreements.empty();
    return fail ? 1 : 0;
}

int cmd_excluded(std::ostream& out, u64 m, u64 n_max, const std::string& format) {
    ExcludedSetStream stream(m, n_max);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        while (auto entry = stream.next()) arr.push_back(excluded_entry_json(m, *entry));
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << "N,P,i,a,residue,divisor,cofactor\n";
        while (auto entry = stream.next()) {
            const ExclusionWitness& w = entry->witness;
            out << entry->N << ',' << w.divisor * w.cofactor << ',' << w.i << ',' << w.a << ','
                << w.residue << ',' << w.divisor << ',' << w.cofactor << "\n";
        }
    } else {
        while (auto entry = stream.next()) {
            const ExclusionWitness& w = entry->witness;
            u64 P = w.divisor * w.cofactor;
            out << "N=" << entry->N << " P=" << P << " witness: i=" << w.i << " a=" << w.a
                << " residue=" << w.residue << " divisor=" << w.divisor
                << " cofactor=" << w.cofactor << " (" << P << " = " << w.divisor << " * "
                << w.cofactor << ")\n";
        }
    }
    return 0;
}

Engine parse_engine(const std::string& name) {
    return name == "literal" ? Engine::paper_literal : Engine::sound;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"6n+-1 wheel machinery: closed-form residues, divisor-exclusion "
                 "primality for P = 6^(m+1)*N - 1, and instrumented sieves"};
    app.require_subcommand(1);

    std::function<int()> action;
    bool timing = false;
    app.add_flag("--timing", timing, "print elapsed time (text output only)");

    // check
    {
        auto* sub = app.add_subcommand("check", "decide P = 6^(m+1)*N - 1 and compare with the oracle");
        auto N = std::make_shared<u64>(0);
        auto m = std::make_shared<u64>(1);
        auto engine = std::make_shared<std::string>("sound");
        auto format = std::make_shared<std::string>("text");
        sub->add_option("--N", *N, "index multiplier N")->required();
        sub->add_option("--m", *m, "exponent parameter m (P = 6^(m+1)*N - 1)")->required();
        sub->add_option("--engine", *engine, "decision engine")
            ->check(CLI::IsMember({"sound", "literal"}));
        sub->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback([&action, N, m, engine, format, &out] {
            action = [=, &out] { return cmd_check(out, *N, *m, parse_engine(*engine), *format); };
        });
    }

    // families
    {
        auto* sub = app.add_subcommand("families", "residue families of i^2 mod (A*i + B)");
        auto scale = std::make_shared<u64>(6);
        auto shift = std::make_shared<u64>(1);
        auto count = std::make_shared<u64>(5);
        auto format = std::make_shared<std::string>("text");
        sub->add_option("--A", *scale, "divisor scale A")->required();
        sub->add_option("--B", *shift, "divisor shift B")->required();
        sub->add_option("--count", *count, "members to print per family");
        sub->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->callback([&action, scale, shift, count, format, &out] {
            action = [=, &out] { return cmd_families(out, *scale, *shift, *count, *format); };
        });
    }

    // sieve
    {
        auto* sub = app.add_subcommand("sieve", "list the primes in [lo, hi]");
        auto lo = std::make_shared<u64>(1);
        auto hi = std::make_shared<u64>(1);
        auto algo = std::make_shared<std::string>("wheel");
        auto count_only = std::make_shared<bool>(false);
        auto format = std::make_shared<std::string>("text");
        sub->add_option("--lo", *lo, "range start")->required();
        sub->add_option("--hi", *hi, "range end")->required();
        sub->add_option("--algo", *algo, "sieve algorithm")
            ->check(CLI::IsMember({"wheel", "eratosthenes"}));
        sub->add_flag("--count-only", *count_only, "print only the prime count");
        sub->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->callback([&action, lo, hi, algo, count_only, format, &out] {
            action = [=, &out] { return cmd_sieve(out, *lo, *hi, *algo, *count_only, *format); };
        });
    }

    // bench
    {
        auto* sub = app.add_subcommand("bench", "run both sieves and report their work side by side");
        auto hi = std::make_shared<u64>(0);
        auto format = std::make_shared<std::string>("csv");
        sub->add_option("--hi", *hi, "single range end (default: ladder 10^4, 10^5, 10^6)");
        sub->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"csv", "text"}));
        sub->callback([&action, hi, format, &out] {
            action = [=, &out] {
                std::vector<u64> highs;
                if (*hi > 0)
                    highs.push_back(*hi);
                else
                    highs = {10000, 100000, 1000000};
                return cmd_bench(out, highs, *format);
            };
        });
    }

    // search
    {
        auto* sub = app.add_subcommand("search", "cross-check an engine against the oracle over a grid");
        auto m_list = std::make_shared<std::vector<u64>>();
        auto from = std::make_shared<u64>(2);
        auto to = std::make_shared<u64>(2);
        auto engine = std::make_shared<std::string>("sound");
        auto threads = std::make_shared<unsigned>(0);
        auto format = std::make_shared<std::string>("json");
        sub->add_option("--m", *m_list, "m values (comma separated)")->required()->delimiter(',');
        sub->add_option("--from", *from, "first N")->required();
        sub->add_option("--to", *to, "last N")->required();
        sub->add_option("--engine", *engine, "decision engine")
            ->check(CLI::IsMember({"sound", "literal"}));
        sub->add_option("--threads", *threads, "worker threads (0 = SEXTIC_SIEVE_THREADS or hardware)");
        sub->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->callback([&action, m_list, from, to, engine, threads, format, &out, &err] {
            action = [=, &out, &err] {
                return cmd_search(out, err, *m_list, *from, *to, parse_engine(*engine), *threads,
                                  *format);
            };
        });
    }

    // excluded
    {
        auto* sub = app.add_subcommand("excluded", "stream the excluded N set with witnesses");
        auto m = std::make_shared<u64>(1);
        auto n_max = std::make_shared<u64>(2);
        auto format = std::make_shared<std::string>("text");
        sub->add_option("--m", *m, "exponent parameter m")->required();
        sub->add_option("--max", *n_max, "largest N to stream")->required();
        sub->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->callback([&action, m, n_max, format, &out] {
            action = [=, &out] { return cmd_excluded(out, *m, *n_max, *format); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (!action) return 2;

    try {
        auto started = std::chrono::steady_clock::now();
        int code = action();
        if (timing) {
            auto elapsed = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - started)
                               .count();
            out << "elapsed_ms: " << format_ratio(elapsed) << "\n";
        }
        return code;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace sextic
