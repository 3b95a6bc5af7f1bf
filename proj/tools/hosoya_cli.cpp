#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hosoya/census.hpp"
#include "hosoya/composites.hpp"
#include "hosoya/modular.hpp"
#include "hosoya/sieve.hpp"
#include "hosoya/triangle.hpp"

namespace {

using nlohmann::json;

enum class Format { table, csv, jsonfmt };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::jsonfmt;
    throw CLI::ValidationError("--format", "expected table, csv or json");
}

void add_format_flag(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format: table, csv or json")
        ->default_val("table")
        ->check(CLI::IsMember({"table", "csv", "json"}));
}

hosoya::SieveTable table_from_flag(const std::vector<std::uint64_t>& primes) {
    if (primes.empty()) return hosoya::SieveTable::build({3, 5, 7, 11, 13, 17, 19});
    return hosoya::SieveTable::build(primes);
}

void emit_records(const std::vector<hosoya::PrimeRecord>& records, Format fmt,
                  bool full_values) {
    switch (fmt) {
        case Format::csv:
            std::cout << hosoya::records_to_csv(records, full_values);
            break;
        case Format::jsonfmt:
            std::cout << hosoya::records_to_json(records, full_values).dump()
                      << '\n';
            break;
        case Format::table:
            for (const auto& rec : records) {
                std::cout << '(' << rec.coord.r << ',' << rec.coord.k << ") "
                          << rec.digits << " digits";
                if (full_values || rec.digits <= hosoya::kInlineValueDigits)
                    std::cout << "  " << rec.value.get_str();
                std::cout << '\n';
            }
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"determinant Hosoya triangle toolkit"};
    app.require_subcommand(1);

    // entry
    auto* cmd_entry = app.add_subcommand("entry", "exact entry value");
    long long entry_row = 0, entry_col = 0;
    std::string entry_fmt;
    cmd_entry->add_option("--row", entry_row, "row index")->required();
    cmd_entry->add_option("--col", entry_col, "column index")->required();
    add_format_flag(cmd_entry, entry_fmt);

    // row
    auto* cmd_row = app.add_subcommand("row", "all entries of a row");
    long long row_row = 0;
    std::string row_fmt;
    cmd_row->add_option("--row", row_row, "row index")->required();
    add_format_flag(cmd_row, row_fmt);

    // sieve-table
    auto* cmd_sieve = app.add_subcommand("sieve-table", "residue classes per prime");
    std::vector<std::uint64_t> sieve_primes;
    std::string sieve_fmt;
    cmd_sieve->add_option("--primes", sieve_primes, "odd primes (comma separated)")
        ->delimiter(',');
    add_format_flag(cmd_sieve, sieve_fmt);

    // coverage
    auto* cmd_cov = app.add_subcommand("coverage", "per-column sieve verdicts for a row");
    long long cov_row = 0;
    std::vector<std::uint64_t> cov_primes;
    std::string cov_fmt;
    cmd_cov->add_option("--row", cov_row, "row index")->required();
    cmd_cov->add_option("--primes", cov_primes, "odd primes (comma separated)")
        ->delimiter(',');
    add_format_flag(cmd_cov, cov_fmt);

    // primes
    auto* cmd_primes = app.add_subcommand("primes", "prime coordinates up to a row");
    long long pr_max = 0, pr_min_col = 1;
    bool pr_full = false;
    std::string pr_fmt;
    cmd_primes->add_option("--max-row", pr_max, "last row to scan")->required();
    cmd_primes->add_option("--min-col", pr_min_col, "first column to scan");
    cmd_primes->add_flag("--full-values", pr_full, "emit full values regardless of size");
    add_format_flag(cmd_primes, pr_fmt);

    // density
    auto* cmd_density = app.add_subcommand("density", "distinct-prime density rows");
    std::vector<long long> density_rows;
    std::string density_fmt;
    cmd_density->add_option("--rows", density_rows, "row counts (comma separated)")
        ->required()
        ->delimiter(',');
    add_format_flag(cmd_density, density_fmt);

    // prime-free
    auto* cmd_free = app.add_subcommand("prime-free", "rows without any prime entry");
    long long free_max = 0;
    std::string free_fmt;
    cmd_free->add_option("--max-row", free_max, "last row to scan")->required();
    add_format_flag(cmd_free, free_fmt);

    // fl
    auto* cmd_fl = app.add_subcommand("fl", "primes of the form F(r) + L(r+-1)");
    long long fl_max = 0;
    std::string fl_variant = "plus", fl_fmt;
    bool fl_full = false;
    cmd_fl->add_option("--max", fl_max, "last index to scan")->required();
    cmd_fl->add_option("--variant", fl_variant, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    cmd_fl->add_flag("--full-values", fl_full, "emit full values regardless of size");
    add_format_flag(cmd_fl, fl_fmt);

    // neighborhood
    auto* cmd_nb = app.add_subcommand("neighborhood", "all-composite block certificate");
    int nb_m = 0;
    std::string nb_verify, nb_fmt;
    cmd_nb->add_option("--m", nb_m, "block side")->required();
    cmd_nb->add_option("--verify", nb_verify, "divisor or value")
        ->check(CLI::IsMember({"divisor", "value"}));
    add_format_flag(cmd_nb, nb_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_entry) {
            Format fmt = parse_format(entry_fmt);
            hosoya::Integer v = hosoya::entry({entry_row, entry_col});
            if (fmt == Format::jsonfmt)
                std::cout << json{{"r", entry_row},
                                  {"k", entry_col},
                                  {"value", v.get_str()}}
                                 .dump()
                          << '\n';
            else if (fmt == Format::csv)
                std::cout << "r,k,value\n"
                          << entry_row << ',' << entry_col << ',' << v.get_str()
                          << '\n';
            else
                std::cout << v.get_str() << '\n';
        } else if (*cmd_row) {
            Format fmt = parse_format(row_fmt);
            hosoya::Row r = hosoya::row(row_row);
            if (fmt == Format::jsonfmt) {
                json arr = json::array();
                for (const auto& v : r.entries) arr.push_back(v.get_str());
                std::cout << json{{"r", r.r}, {"entries", arr}}.dump() << '\n';
            } else if (fmt == Format::csv) {
                std::cout << "r,k,value\n";
                for (std::size_t k = 0; k < r.entries.size(); ++k)
                    std::cout << r.r << ',' << k + 1 << ','
                              << r.entries[k].get_str() << '\n';
            } else {
                for (std::size_t k = 0; k < r.entries.size(); ++k)
                    std::cout << r.entries[k].get_str()
                              << (k + 1 < r.entries.size() ? ' ' : '\n');
            }
        } else if (*cmd_sieve) {
            Format fmt = parse_format(sieve_fmt);
            hosoya::SieveTable t = table_from_flag(sieve_primes);
            if (fmt == Format::jsonfmt)
                std::cout << hosoya::table_to_json(t).dump() << '\n';
            else if (fmt == Format::csv)
                std::cout << hosoya::table_to_csv(t);
            else
                for (std::uint64_t p : t.primes())
                    for (const auto& rc : t.classes_for(p))
                        std::cout << "p=" << rc.p << "  (r,k) = (" << rc.r_res
                                  << ',' << rc.k_res << ") mod " << rc.modulus
                                  << '\n';
        } else if (*cmd_cov) {
            Format fmt = parse_format(cov_fmt);
            hosoya::SieveTable t = table_from_flag(cov_primes);
            auto verdicts = hosoya::coverage_report(cov_row, t);
            if (fmt == Format::jsonfmt) {
                json arr = json::array();
                for (std::size_t k = 0; k < verdicts.size(); ++k) {
                    json item = {{"k", k + 1}};
                    if (verdicts[k]) item["p"] = *verdicts[k];
                    arr.push_back(std::move(item));
                }
                std::cout << json{{"r", cov_row}, {"columns", arr}}.dump() << '\n';
            } else if (fmt == Format::csv) {
                std::cout << "k,p\n";
                for (std::size_t k = 0; k < verdicts.size(); ++k) {
                    std::cout << k + 1 << ',';
                    if (verdicts[k]) std::cout << *verdicts[k];
                    std::cout << '\n';
                }
            } else {
                for (std::size_t k = 0; k < verdicts.size(); ++k)
                    if (verdicts[k])
                        std::cout << "k=" << k + 1 << "  divisible by "
                                  << *verdicts[k] << '\n';
                    else
                        std::cout << "k=" << k + 1 << "  no table divisor\n";
            }
        } else if (*cmd_primes) {
            Format fmt = parse_format(pr_fmt);
            auto records = hosoya::prime_coords(pr_max, pr_min_col);
            emit_records(records, fmt, pr_full);
        } else if (*cmd_density) {
            Format fmt = parse_format(density_fmt);
            auto rows = hosoya::density_table(density_rows);
            if (fmt == Format::jsonfmt)
                std::cout << hosoya::density_to_json(rows).dump() << '\n';
            else if (fmt == Format::csv)
                std::cout << hosoya::density_to_csv(rows);
            else
                for (const auto& row : rows)
                    std::cout << "n=" << row.n << "  N=" << row.distinct_entries
                              << "  primes_in_triangle=" << row.distinct_primes
                              << "  pi(N)=" << row.primes_below << '\n';
        } else if (*cmd_free) {
            Format fmt = parse_format(free_fmt);
            auto lines = hosoya::prime_free_lines(free_max);
            if (fmt == Format::jsonfmt)
                std::cout << hosoya::lines_to_json(lines).dump() << '\n';
            else if (fmt == Format::csv)
                std::cout << hosoya::lines_to_csv(lines);
            else
                for (const auto& line : lines)
                    std::cout << line.r << "  " << hosoya::to_string(line.cls)
                              << '\n';
        } else if (*cmd_fl) {
            Format fmt = parse_format(fl_fmt);
            auto hits = hosoya::fl_prime_search(
                fl_max, fl_variant == "plus" ? hosoya::FlVariant::plus
                                             : hosoya::FlVariant::minus);
            if (fmt == Format::jsonfmt)
                std::cout << hosoya::fl_to_json(hits, fl_full).dump() << '\n';
            else if (fmt == Format::csv)
                std::cout << hosoya::fl_to_csv(hits, fl_full);
            else
                for (const auto& hit : hits) {
                    std::size_t digits =
                        mpz_sizeinbase(hit.value.get_mpz_t(), 10);
                    std::cout << "r=" << hit.r << "  ";
                    if (fl_full || digits <= hosoya::kInlineValueDigits)
                        std::cout << hit.value.get_str() << '\n';
                    else
                        std::cout << digits << " digits\n";
                }
        } else if (*cmd_nb) {
            Format fmt = parse_format(nb_fmt);
            hosoya::NeighborhoodCert cert = hosoya::build_neighborhood(nb_m);
            std::optional<hosoya::VerificationReport> report;
            if (!nb_verify.empty())
                report = hosoya::verify_neighborhood(
                    cert, nb_verify == "divisor" ? hosoya::VerifyMode::divisor
                                                 : hosoya::VerifyMode::value);
            if (fmt == Format::jsonfmt) {
                json out = hosoya::cert_to_json(cert);
                if (report) {
                    json cells = json::array();
                    for (const auto& cell : report->cells)
                        cells.push_back({{"i", cell.i},
                                         {"j", cell.j},
                                         {"p", cell.p},
                                         {"ok", cell.ok},
                                         {"note", cell.note}});
                    out["verification"] = {{"mode", nb_verify},
                                           {"ok", report->ok},
                                           {"cells", cells}};
                }
                std::cout << out.dump() << '\n';
            } else {
                std::cout << "m=" << cert.m << "\nn=" << cert.n.get_str()
                          << "\nk=" << cert.k.get_str()
                          << "\nmodulus=" << cert.modulus.get_str() << '\n';
                if (report) {
                    int passed = 0;
                    for (const auto& cell : report->cells) passed += cell.ok;
                    std::cout << passed << '/' << report->cells.size()
                              << " cells composite ("
                              << (nb_verify == "value" ? "value" : "divisor")
                              << " mode)\n";
                    if (!report->ok) {
                        for (const auto& cell : report->cells)
                            if (!cell.ok)
                                std::cerr << "cell (" << cell.i << ',' << cell.j
                                          << ") failed: " << cell.note << '\n';
                        return 1;
                    }
                }
            }
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
