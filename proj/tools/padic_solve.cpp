// padic-solve: count and enumerate solutions of g^(x^n) = x^k (mod p^e)
// for odd prime p with p not dividing g, with a brute-force cross-check.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic_solve/counting.hpp"
#include "padic_solve/errors.hpp"
#include "padic_solve/oracle.hpp"

using namespace padic_solve;
using nlohmann::json;

namespace {

constexpr u64 kMaxInstances = 100'000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json_lines };

Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::text;
    if (s == "csv")
        return Format::csv;
    if (s == "json")
        return Format::json_lines;
    throw UsageError("unknown format '" + s + "' (expected text|csv|json)");
}

u64 parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("expected a nonnegative integer, got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw UsageError("integer out of range: '" + s + "'");
    }
}

// "5" -> {5}; "1..6" -> {1,...,6} when ranges are allowed.
std::vector<u64> parse_values(const std::string& s, bool allow_range) {
    const auto pos = s.find("..");
    if (pos == std::string::npos)
        return {parse_u64(s)};
    if (!allow_range)
        throw UsageError("this subcommand takes a single value, got '" + s + "'");
    const u64 lo = parse_u64(s.substr(0, pos));
    const u64 hi = parse_u64(s.substr(pos + 2));
    if (lo > hi)
        throw UsageError("empty range '" + s + "'");
    std::vector<u64> out;
    out.reserve(hi - lo + 1);
    for (u64 v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

std::string cell_text(const json& v) {
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ';';
            s += std::to_string(v[i].get<u64>());
        }
        return s;
    }
    return v.dump();
}

// JSON lines keep nlohmann's sorted keys so re-serialized output is
// byte-identical; text and CSV follow the given column order.
void emit_records(const std::vector<json>& records,
                  const std::vector<std::string>& columns, Format format) {
    switch (format) {
    case Format::json_lines:
        for (const auto& r : records)
            std::cout << r.dump() << '\n';
        break;
    case Format::csv: {
        for (std::size_t i = 0; i < columns.size(); ++i)
            std::cout << (i ? "," : "") << columns[i];
        std::cout << '\n';
        for (const auto& r : records) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                std::cout << (i ? "," : "");
                if (r.contains(columns[i]))
                    std::cout << cell_text(r[columns[i]]);
            }
            std::cout << '\n';
        }
        break;
    }
    case Format::text:
        for (const auto& r : records) {
            bool first = true;
            for (const auto& c : columns) {
                if (!r.contains(c))
                    continue;
                std::cout << (first ? "" : " ") << c << '=' << cell_text(r[c]);
                first = false;
            }
            std::cout << '\n';
        }
        break;
    }
}

json instance_fields(u64 g, u64 n, u64 k, u64 p, u64 e) {
    return {{"g", g}, {"n", n}, {"k", k}, {"p", p}, {"e", e}};
}

u64 scan_ceiling_from_env() {
    if (const char* env = std::getenv("PADIC_SOLVE_CEILING"))
        return parse_u64(env);
    return kDefaultScanCeiling;
}

void require_odd_prime(u64 p) {
    if (!is_odd_prime(p))
        throw UsageError("--p must be an odd prime, got " + std::to_string(p));
}

// --- count ---------------------------------------------------------------

int cmd_count(const std::vector<u64>& ps, const std::vector<u64>& es,
              const std::vector<u64>& gs, const std::vector<u64>& ns,
              const std::vector<u64>& ks, Format format) {
    const u64 product = static_cast<u64>(ps.size()) * es.size() * gs.size() *
                        ns.size() * ks.size();
    if (product > kMaxInstances)
        throw UsageError("instance product " + std::to_string(product) +
                         " exceeds the cap of " + std::to_string(kMaxInstances));
    for (u64 p : ps)
        require_odd_prime(p);

    std::vector<json> records;
    for (u64 p : ps) {
        for (u64 e : es) {
            for (u64 g : gs) {
                for (u64 n : ns) {
                    for (u64 k : ks) {
                        json rec = instance_fields(g, n, k, p, e);
                        rec["method"] = "formula";
                        try {
                            const ProblemInstance inst(g, n, k, p,
                                                       static_cast<u32>(e));
                            rec["m"] = inst.m();
                            if (!inst.supported()) {
                                rec["unsupported_reason"] =
                                    inst.unsupported_reason();
                            } else {
                                const CountReport report = count_solutions(inst);
                                rec["count"] = report.total;
                                if (report.wieferich)
                                    rec["wieferich"] = *report.wieferich;
                            }
                        } catch (const DomainError&) {
                            rec["unsupported_reason"] = "g_not_unit_mod_p";
                        } catch (const ResourceLimitError&) {
                            rec["unsupported_reason"] = "window_exceeds_ceiling";
                        }
                        records.push_back(std::move(rec));
                    }
                }
            }
        }
    }
    emit_records(records,
                 {"g", "n", "k", "p", "e", "m", "method", "count", "wieferich",
                  "unsupported_reason"},
                 format);
    return 0;
}

// --- enumerate / oracle --------------------------------------------------

json solution_record(const ProblemInstance& inst, const char* method,
                     const std::vector<u64>& solutions) {
    json rec = instance_fields(inst.g(), inst.n(), inst.k(), inst.p(), inst.e());
    rec["m"] = inst.m();
    rec["method"] = method;
    rec["count"] = solutions.size();
    rec["solutions"] = solutions;
    return rec;
}

const std::vector<std::string> kSolutionColumns = {
    "g", "n", "k",     "p",         "e",         "m",
    "method", "count", "agreement", "exploratory", "solutions"};

int cmd_enumerate(const ProblemInstance& inst, bool check, u64 ceiling,
                  Format format) {
    if (!inst.supported())
        throw UsageError("enumerate: open case (" + inst.unsupported_reason() +
                         "); only the oracle (--exploratory) can scan it");
    const SolutionSet lifted = enumerate_solutions(inst);
    std::vector<json> records;
    records.push_back(solution_record(inst, "lift", lifted.solutions));

    bool mismatch = false;
    if (check) {
        const ScanResult scanned = brute_force(inst, ceiling);
        const bool agree = scanned.solutions == lifted.solutions;
        mismatch = !agree;
        records[0]["agreement"] = agree;
        records.push_back(solution_record(inst, "oracle", scanned.solutions));
        records[1]["agreement"] = agree;
    }
    emit_records(records, kSolutionColumns, format);
    if (mismatch) {
        std::cerr << "verification mismatch: lift and oracle disagree\n";
        return 3;
    }
    return 0;
}

int cmd_oracle(const ProblemInstance& inst, bool check, bool exploratory,
               u64 ceiling, Format format) {
    if (!inst.supported() && !exploratory)
        throw UsageError("oracle: open case (" + inst.unsupported_reason() +
                         "); pass --exploratory to scan it anyway");
    const ScanResult scanned = brute_force(inst, ceiling);
    std::vector<json> records;
    records.push_back(solution_record(inst, "oracle", scanned.solutions));
    if (!inst.supported())
        records[0]["exploratory"] = true;

    bool mismatch = false;
    if (check && inst.supported()) {
        const SolutionSet lifted = enumerate_solutions(inst);
        const bool agree = scanned.solutions == lifted.solutions;
        mismatch = !agree;
        records[0]["agreement"] = agree;
        records.push_back(solution_record(inst, "lift", lifted.solutions));
        records[1]["agreement"] = agree;
    }
    emit_records(records, kSolutionColumns, format);
    if (mismatch) {
        std::cerr << "verification mismatch: oracle and lift disagree\n";
        return 3;
    }
    return 0;
}

// --- table ---------------------------------------------------------------

struct TableSpec {
    u64 p;
    std::vector<u64> rows_g;
    std::vector<u64> cols;  // k values (table 1) or e values (table 2)
    bool cols_are_k;        // otherwise columns vary e
    u64 n, k, e;            // fixed parameters
};

int cmd_table(int id, u64 e_override, u64 n_override, u64 e_max, bool verify,
              u64 ceiling, Format format) {
    TableSpec spec;
    if (id == 1) {
        spec = {7, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4}, true, n_override, 0,
                e_override};
    } else if (id == 2) {
        if (e_max < 1 || e_max > 8)
            throw UsageError("--e-max must be in [1, 8]");
        std::vector<u64> cols;
        for (u64 e = 1; e <= e_max; ++e)
            cols.push_back(e);
        spec = {11, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, cols, false, 1, 11, 0};
    } else {
        throw UsageError("table id must be 1 or 2");
    }

    std::vector<json> records;
    std::vector<std::vector<u64>> grid;
    for (u64 g : spec.rows_g) {
        std::vector<u64> row;
        json rec;
        rec["g"] = g;
        for (u64 col : spec.cols) {
            const u64 k = spec.cols_are_k ? col : spec.k;
            const u64 e = spec.cols_are_k ? spec.e : col;
            const ProblemInstance inst(g, spec.n, k, spec.p,
                                       static_cast<u32>(e));
            rec["m"] = inst.m();
            const u64 count = count_solutions(inst).total;
            if (verify) {
                const SolutionSet lifted = enumerate_solutions(inst);
                std::optional<std::vector<u64>> scanned;
                if (inst.window() <= ceiling)
                    scanned = brute_force(inst, ceiling).solutions;
                const bool enum_ok = lifted.solutions.size() == count;
                const bool oracle_ok =
                    !scanned || (scanned->size() == count &&
                                 *scanned == lifted.solutions);
                if (!enum_ok || !oracle_ok) {
                    std::cerr << "verification mismatch at cell g=" << g << ", "
                              << (spec.cols_are_k ? "k=" : "e=") << col
                              << ": formula=" << count
                              << " enumeration=" << lifted.solutions.size();
                    if (scanned)
                        std::cerr << " oracle=" << scanned->size();
                    std::cerr << '\n';
                    return 3;
                }
            }
            row.push_back(count);
            rec[(spec.cols_are_k ? "k" : "e") + std::to_string(col)] = count;
        }
        grid.push_back(row);
        records.push_back(std::move(rec));
    }

    std::vector<std::string> columns = {"g", "m"};
    for (u64 col : spec.cols)
        columns.push_back((spec.cols_are_k ? "k" : "e") + std::to_string(col));

    if (format == Format::text) {
        std::printf("%4s %4s", "g", "m");
        for (u64 col : spec.cols)
            std::printf(" %6s",
                        ((spec.cols_are_k ? "k=" : "e=") + std::to_string(col))
                            .c_str());
        std::printf("\n");
        for (std::size_t r = 0; r < grid.size(); ++r) {
            std::printf("%4llu %4llu",
                        static_cast<unsigned long long>(spec.rows_g[r]),
                        static_cast<unsigned long long>(
                            records[r]["m"].get<u64>()));
            for (u64 v : grid[r])
                std::printf(" %6llu", static_cast<unsigned long long>(v));
            std::printf("\n");
        }
    } else {
        emit_records(records, columns, format);
    }
    return 0;
}

// --- wieferich -----------------------------------------------------------

int cmd_wieferich(u64 p, const std::vector<u64>& gs, Format format) {
    require_odd_prime(p);
    std::vector<json> records;
    u64 found = 0, tested = 0;
    for (u64 g : gs) {
        json rec = {{"p", p}, {"g", g}};
        if (g % p == 0) {
            rec["unsupported_reason"] = "g_not_unit_mod_p";
        } else {
            const bool wf = is_wieferich_base(g, p);
            rec["wieferich"] = wf;
            ++tested;
            found += wf ? 1 : 0;
        }
        records.push_back(std::move(rec));
    }
    emit_records(records, {"p", "g", "wieferich", "unsupported_reason"}, format);
    if (format == Format::text)
        std::cout << "wieferich bases: " << found << " of " << tested
                  << " tested\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"counts and enumerates solutions of g^(x^n) = x^k (mod p^e)"};
    app.require_subcommand(1);

    std::string p_arg, e_arg = "1", g_arg, n_arg = "1", k_arg, format_arg = "text";
    std::string ceiling_arg;
    bool check = false, verify = false, exploratory = false;
    int table_id = 0;
    u64 table_e = 1, table_n = 1, table_e_max = 4;

    auto add_instance_flags = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_arg, "odd prime (value or lo..hi)")->required();
        cmd->add_option("--e", e_arg, "precision e >= 1 (value or lo..hi)");
        cmd->add_option("--g", g_arg, "base g (value or lo..hi)")->required();
        cmd->add_option("--n", n_arg, "exponent power n (value or lo..hi)");
        cmd->add_option("--k", k_arg, "target power k (value or lo..hi)")
            ->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_arg, "text|csv|json");
    };
    auto add_ceiling = [&](CLI::App* cmd) {
        cmd->add_option("--ceiling", ceiling_arg,
                        "scan ceiling (wins over PADIC_SOLVE_CEILING)");
    };

    CLI::App* count = app.add_subcommand("count", "closed-form counts");
    add_instance_flags(count);
    add_format(count);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "explicit solutions via lifting");
    add_instance_flags(enumerate);
    add_format(enumerate);
    add_ceiling(enumerate);
    enumerate->add_flag("--check", check, "also run the oracle and compare");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force scan");
    add_instance_flags(oracle);
    add_format(oracle);
    add_ceiling(oracle);
    oracle->add_flag("--check", check, "also run the lifting path and compare");
    oracle->add_flag("--exploratory", exploratory,
                     "allow scanning the open cases");

    CLI::App* table = app.add_subcommand("table", "published count grids");
    table->add_option("id", table_id, "1 (p=7 grid) or 2 (p=11, k=11 grid)")
        ->required();
    table->add_option("--e", table_e, "precision for table 1 cells");
    table->add_option("--n", table_n, "exponent power for table 1 cells");
    table->add_option("--e-max", table_e_max, "last e column for table 2");
    table->add_flag("--verify", verify, "re-check cells by lifting and oracle");
    add_format(table);
    add_ceiling(table);

    CLI::App* wieferich =
        app.add_subcommand("wieferich", "Wieferich-base classification");
    wieferich->add_option("--p", p_arg, "odd prime")->required();
    wieferich->add_option("--g", g_arg, "bases to test (value or lo..hi)");
    add_format(wieferich);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format format = parse_format(format_arg);
        u64 ceiling = scan_ceiling_from_env();
        if (!ceiling_arg.empty())
            ceiling = parse_u64(ceiling_arg);

        if (count->parsed()) {
            return cmd_count(parse_values(p_arg, true), parse_values(e_arg, true),
                             parse_values(g_arg, true), parse_values(n_arg, true),
                             parse_values(k_arg, true), format);
        }
        if (enumerate->parsed() || oracle->parsed()) {
            const u64 p = parse_values(p_arg, false)[0];
            require_odd_prime(p);
            const u64 e = parse_values(e_arg, false)[0];
            if (e < 1 || e > 40)
                throw UsageError("--e must be in [1, 40]");
            ProblemInstance inst(parse_values(g_arg, false)[0],
                                 parse_values(n_arg, false)[0],
                                 parse_values(k_arg, false)[0], p,
                                 static_cast<u32>(e));
            return enumerate->parsed()
                       ? cmd_enumerate(inst, check, ceiling, format)
                       : cmd_oracle(inst, check, exploratory, ceiling, format);
        }
        if (table->parsed())
            return cmd_table(table_id, table_e, table_n, table_e_max, verify,
                             ceiling, format);
        if (wieferich->parsed()) {
            const u64 p = parse_values(p_arg, false)[0];
            require_odd_prime(p);
            std::vector<u64> gs;
            if (g_arg.empty())
                for (u64 g = 1; g < p; ++g)
                    gs.push_back(g);
            else
                gs = parse_values(g_arg, true);
            return cmd_wieferich(p, gs, format);
        }
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "unsupported case: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
