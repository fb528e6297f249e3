// Command-line front end: generate representation tables (JSON/CSV), run the
// verification suite, print character tables per conjugacy class, and
// benchmark the closed-form standard matrices against direct conjugation.
//
// Exit codes: 0 success, 1 verification counterexample or internal
// inconsistency, 2 usage or capacity error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snrep/snrep.hpp"

using json = nlohmann::ordered_json;
using namespace snrep;

namespace {

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string join_ints(const std::vector<int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            os << ' ';
        os << values[i];
    }
    return os.str();
}

std::string join_entries(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        if (i)
            os << ' ';
        os << m.entries()[i];
    }
    return os.str();
}

RepKind parse_rep_or_throw(const std::string& name) {
    const auto kind = parse_rep_kind(name);
    if (!kind)
        throw std::invalid_argument("unknown representation '" + name +
                                    "' (expected permutation, trivial, sign, "
                                    "standard or standard_sign)");
    return *kind;
}

// ---------------------------------------------------------------- gen ----

int run_gen(int n, const std::string& rep_name, const std::string& format,
            const std::vector<std::uint64_t>& k_values) {
    const RepKind kind = parse_rep_or_throw(rep_name);

    std::vector<std::uint64_t> ks = k_values;
    if (ks.empty()) {
        if (n > 10)
            throw std::length_error(
                "gen: a full table needs all n! elements; limit is n <= 10 "
                "(pass explicit --k values for larger degrees)");
        const std::uint64_t total = factorial(n);
        ks.reserve(static_cast<std::size_t>(total));
        for (std::uint64_t k = 1; k <= total; ++k)
            ks.push_back(k);
    }

    if (format == "json") {
        // Streamed record by record; the envelope matches nlohmann's compact
        // dump byte for byte, so full tables need no table-sized buffer.
        std::cout << "{\"n\":" << n << ",\"rep\":\"" << to_string(kind)
                  << "\",\"elements\":[";
        bool first = true;
        for (const std::uint64_t k : ks) {
            const Permutation p = Permutation::unrank(n, k);
            json record;
            record["k"] = k;
            record["one_line"] = p.one_line();
            record["matrix"] = matrix_to_json(rep_matrix(kind, p));
            if (!first)
                std::cout << ',';
            first = false;
            std::cout << record.dump();
        }
        std::cout << "]}\n";
    } else {
        std::cout << "k,one_line,entries\n";
        for (const std::uint64_t k : ks) {
            const Permutation p = Permutation::unrank(n, k);
            std::cout << k << ',' << join_ints(p.one_line()) << ','
                      << join_entries(rep_matrix(kind, p)) << '\n';
        }
    }
    return 0;
}

// ------------------------------------------------------------- verify ----

void print_human_report(const VerificationReport& report, const SuiteMode& mode) {
    std::cout << "verify: n=" << report.n;
    if (mode.kind == SuiteMode::Kind::exhaustive)
        std::cout << " mode=exhaustive";
    else
        std::cout << " mode=sampled samples=" << mode.sample_count
                  << " seed=" << mode.seed;
    std::cout << '\n';

    for (const auto& check : report.checks) {
        std::cout << "  " << std::left << std::setw(28) << check.check_name
                  << " elements=" << std::setw(8) << check.elements_tested
                  << (check.passed ? "PASS" : "FAIL") << '\n';
        if (!check.passed && check.first_counterexample) {
            const auto& ce = *check.first_counterexample;
            std::cout << "    first counterexample: rank=" << ce.rank
                      << " element=(" << join_ints(ce.one_line) << ")\n"
                      << "    expected:\n"
                      << ce.expected << "\n    actual:\n"
                      << ce.actual << '\n';
        }
    }
    std::cout << "result: " << (report.all_passed() ? "PASS" : "FAIL") << " ("
              << report.checks.size() << " checks)\n";
}

void print_json_report(const VerificationReport& report, const SuiteMode& mode) {
    json doc;
    doc["n"] = report.n;
    if (mode.kind == SuiteMode::Kind::exhaustive) {
        doc["mode"] = "exhaustive";
    } else {
        doc["mode"] = "sampled";
        doc["samples"] = mode.sample_count;
        doc["seed"] = mode.seed;
    }
    json checks = json::array();
    for (const auto& check : report.checks) {
        json rec;
        rec["name"] = check.check_name;
        rec["elements_tested"] = check.elements_tested;
        rec["passed"] = check.passed;
        if (check.first_counterexample) {
            const auto& ce = *check.first_counterexample;
            json witness;
            witness["rank"] = ce.rank;
            witness["one_line"] = ce.one_line;
            witness["expected"] = matrix_to_json(ce.expected);
            witness["actual"] = matrix_to_json(ce.actual);
            rec["first_counterexample"] = std::move(witness);
        } else {
            rec["first_counterexample"] = nullptr;
        }
        checks.push_back(std::move(rec));
    }
    doc["checks"] = std::move(checks);
    doc["all_passed"] = report.all_passed();
    std::cout << doc.dump() << '\n';
}

int run_verify(int n, bool exhaustive, std::uint64_t samples, std::uint64_t seed,
               bool as_json) {
    const SuiteMode mode = exhaustive ? SuiteMode::exhaustive()
                                      : SuiteMode::sampled(samples, seed);
    const VerificationReport report = run_suite(n, mode);
    if (as_json)
        print_json_report(report, mode);
    else
        print_human_report(report, mode);
    return report.all_passed() ? 0 : 1;
}

// --------------------------------------------------------- characters ----

// Partitions of n, parts descending within each partition, partitions in
// ascending lexicographic order (identity class [1,...,1] first).
std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto descend = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    descend(descend, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

// Conjugacy class size n! / prod_j (j^{m_j} * m_j!) for multiplicities m_j.
std::uint64_t class_size(int n, const std::vector<int>& type) {
    std::map<int, int> multiplicity;
    for (int part : type)
        ++multiplicity[part];
    std::uint64_t centralizer = 1;
    for (const auto& [part, count] : multiplicity) {
        for (int c = 1; c <= count; ++c)
            centralizer *= static_cast<std::uint64_t>(part) *
                           static_cast<std::uint64_t>(c);
    }
    return factorial(n) / centralizer;
}

// Canonical class representative: consecutive cycles of the given lengths.
Permutation class_representative(int n, const std::vector<int>& type) {
    std::vector<int> line(static_cast<std::size_t>(n));
    int start = 1;
    for (int len : type) {
        for (int offset = 0; offset < len; ++offset)
            line[static_cast<std::size_t>(start - 1 + offset)] =
                start + (offset + 1) % len;
        start += len;
    }
    return Permutation::from_one_line(line);
}

int run_characters(int n) {
    if (n < 2)
        throw std::invalid_argument("characters: degree must be at least 2");
    if (n > 10)
        throw std::length_error("characters: limit is n <= 10");

    const auto types = partitions_of(n);
    std::uint64_t covered = 0;

    std::size_t type_width = std::string("cycle_type").size();
    for (const auto& type : types)
        type_width = std::max(type_width, join_ints(type).size());

    std::cout << "characters: n=" << n << " classes=" << types.size()
              << " order=" << factorial(n) << '\n';
    std::cout << std::left << std::setw(static_cast<int>(type_width) + 2)
              << "cycle_type" << std::right << std::setw(8) << "size";
    for (RepKind kind : all_rep_kinds)
        std::cout << std::setw(14) << to_string(kind);
    std::cout << std::setw(18) << "trivial+standard" << '\n';

    for (const auto& type : types) {
        const std::uint64_t size = class_size(n, type);
        covered += size;
        const Permutation rep = class_representative(n, type);
        const std::int64_t decomposition = character(RepKind::trivial, rep) +
                                           character(RepKind::standard, rep);
        if (decomposition != character(RepKind::permutation, rep))
            throw std::logic_error(
                "characters: permutation character fails to split into "
                "trivial + standard");
        std::cout << std::left << std::setw(static_cast<int>(type_width) + 2)
                  << join_ints(type) << std::right << std::setw(8) << size;
        for (RepKind kind : all_rep_kinds)
            std::cout << std::setw(14) << character(kind, rep);
        std::cout << std::setw(18) << decomposition << '\n';
    }
    if (covered != factorial(n))
        throw std::logic_error("characters: class sizes do not cover the group");
    return 0;
}

// -------------------------------------------------------------- bench ----

int run_bench(int n, int reps) {
    if (n < 2)
        throw std::invalid_argument("bench: degree must be at least 2");
    if (n > 10)
        throw std::length_error("bench: limit is n <= 10");

    const auto all = enumerate(n);
    std::cout << "bench: n=" << n << " elements=" << all.size()
              << " reps=" << reps << '\n';

    // Both paths must agree before any timing is reported.
    for (const auto& p : all) {
        const IntMatrix closed = standard_matrix(p);
        const IntMatrix direct =
            block_extract(conjugate_direct(p), 1, 1, n - 1, n - 1);
        if (closed != direct) {
            std::cerr << "bench: paths disagree at element " << p << '\n';
            return 1;
        }
    }
    std::cout << "paths agree on all " << all.size() << " elements\n";

    using clock = std::chrono::steady_clock;
    std::int64_t checksum_closed = 0;
    std::int64_t checksum_direct = 0;

    std::cout << std::left << std::setw(22) << "path" << std::right
              << std::setw(6) << "rep" << std::setw(14) << "total_us"
              << std::setw(18) << "ns_per_element" << '\n';

    auto time_path = [&](const std::string& name, auto&& body,
                         std::int64_t& checksum) {
        for (int rep = 1; rep <= reps; ++rep) {
            checksum = 0;
            const auto begin = clock::now();
            for (const auto& p : all)
                checksum += body(p);
            const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                     clock::now() - begin)
                                     .count();
            std::cout << std::left << std::setw(22) << name << std::right
                      << std::setw(6) << rep << std::setw(14) << elapsed / 1000
                      << std::setw(18) << std::fixed << std::setprecision(1)
                      << static_cast<double>(elapsed) /
                             static_cast<double>(all.size())
                      << '\n';
        }
    };

    time_path(
        "closed_form",
        [&](const Permutation& p) {
            std::int64_t sum = 0;
            const IntMatrix b = standard_matrix(p);
            for (std::int64_t v : b.entries())
                sum += v;
            return sum;
        },
        checksum_closed);
    time_path(
        "direct_conjugation",
        [&](const Permutation& p) {
            std::int64_t sum = 0;
            const IntMatrix b = block_extract(conjugate_direct(p), 1, 1, n - 1, n - 1);
            for (std::int64_t v : b.entries())
                sum += v;
            return sum;
        },
        checksum_direct);

    std::cout << "checksum " << checksum_closed
              << (checksum_closed == checksum_direct ? " (identical across paths)"
                                                     : " (MISMATCH)")
              << '\n';
    return checksum_closed == checksum_direct ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact standard-representation toolkit for the symmetric group"};
    app.require_subcommand(1);

    int gen_n = 0;
    std::string gen_rep;
    std::string gen_format = "json";
    std::vector<std::uint64_t> gen_ks;
    auto* gen = app.add_subcommand("gen", "emit representation matrices as JSON or CSV");
    gen->add_option("--n", gen_n, "degree of the symmetric group")->required();
    gen->add_option("--rep", gen_rep,
                    "representation: permutation, trivial, sign, standard, standard_sign")
        ->required();
    gen->add_option("--format", gen_format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    gen->add_option("--k", gen_ks,
                    "lexicographic ranks to emit (default: all of [1, n!])");

    int verify_n = 0;
    bool verify_exhaustive = false;
    std::uint64_t verify_samples = 0;
    std::uint64_t verify_seed = 0;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--n", verify_n, "degree of the symmetric group")->required();
    auto* exhaustive_flag =
        verify->add_flag("--exhaustive", verify_exhaustive, "walk all n! elements (n <= 8)");
    auto* sample_opt = verify->add_option("--sample", verify_samples,
                                          "number of seeded random elements");
    auto* seed_opt = verify->add_option("--seed", verify_seed, "sampling seed");
    verify->add_flag("--json", verify_json, "emit the report as JSON instead of text");
    sample_opt->excludes(exhaustive_flag);
    sample_opt->needs(seed_opt);
    seed_opt->needs(sample_opt);

    int characters_n = 0;
    auto* characters =
        app.add_subcommand("characters", "print the character table by conjugacy class");
    characters->add_option("--n", characters_n, "degree of the symmetric group")
        ->required();

    int bench_n = 0;
    int bench_reps = 1;
    auto* bench = app.add_subcommand(
        "bench", "time the closed form against direct conjugation");
    bench->add_option("--n", bench_n, "degree of the symmetric group")->required();
    bench->add_option("--reps", bench_reps, "timing repetitions (default 1)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return run_gen(gen_n, gen_rep, gen_format, gen_ks);
        if (*verify) {
            if (!verify_exhaustive && verify_samples == 0)
                throw std::invalid_argument(
                    "verify: choose --exhaustive or --sample COUNT --seed SEED");
            return run_verify(verify_n, verify_exhaustive, verify_samples,
                              verify_seed, verify_json);
        }
        if (*characters)
            return run_characters(characters_n);
        if (*bench)
            return run_bench(bench_n, bench_reps);
    } catch (const std::length_error& e) {
        std::cerr << "error (capacity): " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (usage): " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error (usage): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error (internal): " << e.what() << '\n';
        return 1;
    }
    return 2;
}
