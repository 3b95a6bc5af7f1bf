#include "hosoya/composites.hpp"

#include <algorithm>
#include <stdexcept>

#include "hosoya/modular.hpp"
#include "hosoya/triangle.hpp"

namespace hosoya {

Integer crt(const std::vector<Integer>& residues,
            const std::vector<Integer>& moduli) {
    if (residues.size() != moduli.size())
        throw std::domain_error("crt: residue/modulus length mismatch");
    Integer x = 0, big = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const Integer& m = moduli[i];
        if (m < 1) throw std::domain_error("crt: moduli must be positive");
        Integer g;
        mpz_gcd(g.get_mpz_t(), big.get_mpz_t(), m.get_mpz_t());
        if (g != 1) throw std::domain_error("crt: moduli are not pairwise coprime");
        // x' = x (mod big), x' = residues[i] (mod m)
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), Integer(big % m).get_mpz_t(),
                       m.get_mpz_t()) == 0)
            throw std::domain_error("crt: moduli are not pairwise coprime");
        Integer delta = (residues[i] - x) % m;
        if (delta < 0) delta += m;
        x += big * (delta * inv % m);
        big *= m;
        x %= big;
    }
    return x;
}

namespace {

std::vector<std::uint64_t> first_odd_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 3; out.size() < count; q += 2)
        if (is_prime_u64(q)) out.push_back(q);
    return out;
}

void require_valid_cert(const NeighborhoodCert& cert) {
    if (cert.m < 1 || cert.m > 16)
        throw std::domain_error("neighborhood: block side must be in [1, 16]");
    const std::size_t m = static_cast<std::size_t>(cert.m);
    if (cert.primes.size() != m)
        throw std::domain_error("neighborhood: malformed prime grid");
    std::vector<std::uint64_t> flat;
    for (const auto& grid_row : cert.primes) {
        if (grid_row.size() != m)
            throw std::domain_error("neighborhood: malformed prime grid");
        flat.insert(flat.end(), grid_row.begin(), grid_row.end());
    }
    std::vector<std::uint64_t> expected = first_odd_primes(m * m);
    std::vector<std::uint64_t> sorted = flat;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected)
        throw std::domain_error(
            "neighborhood: grid is not a bijection onto the first m^2 odd primes");
    Integer prod = 1;
    for (std::uint64_t p : flat) prod *= static_cast<unsigned long>(p);
    if (prod != cert.modulus)
        throw std::domain_error("neighborhood: modulus does not match the grid");
    if (cert.k <= cert.m || cert.n < cert.k + cert.m)
        throw std::domain_error("neighborhood: block coordinates are invalid");
}

}  // namespace

NeighborhoodCert build_neighborhood(int m) {
    if (m < 1 || m > 16)
        throw std::domain_error("build_neighborhood: block side must be in [1, 16]");
    NeighborhoodCert cert;
    cert.m = m;
    std::vector<std::uint64_t> primes =
        first_odd_primes(static_cast<std::size_t>(m) * m);
    cert.primes.assign(m, std::vector<std::uint64_t>(m));
    std::vector<Integer> n_res, k_res, mods;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            std::uint64_t p = primes[static_cast<std::size_t>(i - 1) * m + (j - 1)];
            cert.primes[i - 1][j - 1] = p;
            Integer pm(static_cast<unsigned long>(p));
            n_res.push_back(((-(i + 2)) % static_cast<long>(p) +
                             static_cast<long>(p)) % static_cast<long>(p));
            k_res.push_back(((-j) % static_cast<long>(p) + static_cast<long>(p)) %
                            static_cast<long>(p));
            mods.push_back(pm);
        }
    cert.n = crt(n_res, mods);
    cert.k = crt(k_res, mods);
    cert.modulus = 1;
    for (const Integer& pm : mods) cert.modulus *= pm;
    // Minimal lift: make k valid first, then push n above k + m.
    while (cert.k <= m) cert.k += cert.modulus;
    while (cert.n < cert.k + m) cert.n += cert.modulus;
    return cert;
}

VerificationReport verify_neighborhood(const NeighborhoodCert& cert,
                                       VerifyMode mode) {
    require_valid_cert(cert);
    VerificationReport report;
    report.mode = mode;
    report.ok = true;

    if (mode == VerifyMode::value) {
        // Entry sizes grow like F(n); refuse blocks whose base row is
        // beyond exact evaluation.
        if (cert.n + cert.m > 1'000'000)
            throw std::domain_error(
                "verify_neighborhood: value mode infeasible at this scale, "
                "use divisor mode");
    }

    for (int i = 1; i <= cert.m; ++i)
        for (int j = 1; j <= cert.m; ++j) {
            std::uint64_t p = cert.primes[i - 1][j - 1];
            CellCheck cell;
            cell.i = i;
            cell.j = j;
            cell.p = p;
            Integer row_shift = cert.n + i + 2;
            Integer col_shift = cert.k + j;
            bool div_row = mpz_divisible_ui_p(row_shift.get_mpz_t(),
                                              static_cast<unsigned long>(p));
            bool div_col = mpz_divisible_ui_p(col_shift.get_mpz_t(),
                                              static_cast<unsigned long>(p));
            if (!div_row || !div_col) {
                cell.ok = false;
                cell.note = "congruence failed";
            } else if (mode == VerifyMode::divisor) {
                // F(p) divides gcd(n+i+2, k+j) hence the entry; the entry
                // strictly exceeds F(p) because the row index dwarfs p.
                cell.ok = cert.n + i - 1 > p;
                cell.note = cell.ok ? "divides gcd" : "growth bound violated";
            } else {
                long long r = mpz_get_si(Integer(cert.n + i).get_mpz_t());
                long long c = mpz_get_si(Integer(cert.k + j).get_mpz_t());
                Integer value = entry({r, c});
                Integer fp = fib(static_cast<long long>(p));
                bool divides =
                    mpz_divisible_p(value.get_mpz_t(), fp.get_mpz_t());
                cell.ok = divides && fp > 1 && fp < value;
                cell.note = cell.ok ? "proper divisor exhibited"
                                    : "divisor check failed";
            }
            if (!cell.ok) report.ok = false;
            report.cells.push_back(std::move(cell));
        }
    return report;
}

nlohmann::json cert_to_json(const NeighborhoodCert& cert) {
    nlohmann::json cells = nlohmann::json::array();
    for (int i = 1; i <= cert.m; ++i)
        for (int j = 1; j <= cert.m; ++j) {
            std::uint64_t p = cert.primes[i - 1][j - 1];
            Integer row_shift = (cert.n + i + 2) % static_cast<unsigned long>(p);
            Integer col_shift = (cert.k + j) % static_cast<unsigned long>(p);
            cells.push_back({{"i", i},
                             {"j", j},
                             {"p", p},
                             {"row_shift_mod_p", row_shift.get_str()},
                             {"col_shift_mod_p", col_shift.get_str()}});
        }
    return {{"m", cert.m},
            {"n", cert.n.get_str()},
            {"k", cert.k.get_str()},
            {"modulus", cert.modulus.get_str()},
            {"primes", cert.primes},
            {"cells", cells}};
}

NeighborhoodCert cert_from_json(const nlohmann::json& j) {
    NeighborhoodCert cert;
    cert.m = j.at("m").get<int>();
    cert.n = Integer(j.at("n").get<std::string>());
    cert.k = Integer(j.at("k").get<std::string>());
    cert.modulus = Integer(j.at("modulus").get<std::string>());
    cert.primes = j.at("primes").get<std::vector<std::vector<std::uint64_t>>>();
    require_valid_cert(cert);
    return cert;
}

}  // namespace hosoya
