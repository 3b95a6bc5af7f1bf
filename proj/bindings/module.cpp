#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hosoya/census.hpp"
#include "hosoya/composites.hpp"
#include "hosoya/modular.hpp"
#include "hosoya/sieve.hpp"
#include "hosoya/triangle.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> Python int, routed through decimal strings (exact).
template <>
struct type_caster<mpz_class> {
  public:
    PYBIND11_TYPE_CASTER(mpz_class, _("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s) return false;
        const char* text = PyUnicode_AsUTF8(s);
        if (!text) {
            Py_DECREF(s);
            return false;
        }
        value = mpz_class(text);
        Py_DECREF(s);
        return true;
    }

    static handle cast(const mpz_class& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

const hosoya::SieveTable& table_or_default(const hosoya::SieveTable* t) {
    return t ? *t : hosoya::default_sieve_table();
}

hosoya::FlVariant variant_from(const std::string& s) {
    if (s == "plus") return hosoya::FlVariant::plus;
    if (s == "minus") return hosoya::FlVariant::minus;
    throw std::domain_error("variant must be 'plus' or 'minus'");
}

hosoya::VerifyMode mode_from(const std::string& s) {
    if (s == "divisor") return hosoya::VerifyMode::divisor;
    if (s == "value") return hosoya::VerifyMode::value;
    throw std::domain_error("mode must be 'divisor' or 'value'");
}

}  // namespace

PYBIND11_MODULE(_hosoya, m) {
    m.doc() = "determinant Hosoya triangle toolkit";

    py::register_exception<std::domain_error>(m, "DomainError",
                                              PyExc_ValueError);

    // fibonacci / lucas kernels
    m.def("fib", &hosoya::fib, py::arg("n"));
    m.def("lucas", &hosoya::lucas, py::arg("n"));
    m.def(
        "fib_pair",
        [](long long n) {
            hosoya::FibPair p = hosoya::fib_pair(n);
            return py::make_tuple(p.lo, p.hi);
        },
        py::arg("n"));

    // triangle
    m.def(
        "entry",
        [](long long r, long long k) { return hosoya::entry({r, k}); },
        py::arg("r"), py::arg("k"));
    m.def(
        "entry_det",
        [](long long r, long long k) { return hosoya::entry_det({r, k}); },
        py::arg("r"), py::arg("k"));
    m.def(
        "row", [](long long r) { return hosoya::row(r).entries; },
        py::arg("r"));
    m.def("diagonal_slash", &hosoya::diagonal_slash, py::arg("m"),
          py::arg("count"));
    m.def("diagonal_backslash", &hosoya::diagonal_backslash, py::arg("m"),
          py::arg("count"));
    m.def("distinct_count", &hosoya::distinct_count, py::arg("r"));
    m.def("gf_coefficients", &hosoya::gf_coefficients, py::arg("max_degree"));

    // modular machinery
    m.def("is_prime_u64", &hosoya::is_prime_u64, py::arg("n"));
    m.def("legendre5", &hosoya::legendre5, py::arg("p"));
    m.def("d_p", &hosoya::d_p, py::arg("p"));

    py::class_<hosoya::PisanoInfo>(m, "PisanoInfo")
        .def_readonly("modulus", &hosoya::PisanoInfo::modulus)
        .def_readonly("period", &hosoya::PisanoInfo::period)
        .def_readonly("rank", &hosoya::PisanoInfo::rank);
    m.def("pisano", &hosoya::pisano, py::arg("m"));

    m.def("fib_mod", &hosoya::fib_mod, py::arg("n"), py::arg("m"));
    m.def(
        "entry_mod",
        [](long long r, long long k, std::uint64_t m) {
            return hosoya::entry_mod({r, k}, m);
        },
        py::arg("r"), py::arg("k"), py::arg("m"));
    m.def("parity_rule", &hosoya::parity_rule, py::arg("r"));
    m.def("predicted_residue_even_col", &hosoya::predicted_residue_even_col,
          py::arg("p"), py::arg("t"));
    m.def("predicted_residue_odd_col", &hosoya::predicted_residue_odd_col,
          py::arg("p"), py::arg("t"));

    py::class_<hosoya::Mod12Rule>(m, "Mod12Rule")
        .def_readonly("divisor", &hosoya::Mod12Rule::divisor)
        .def("columns", &hosoya::Mod12Rule::columns, py::arg("r"))
        .def("description", &hosoya::Mod12Rule::description);
    m.def("mod12_classes", &hosoya::mod12_classes, py::arg("p"));

    m.def(
        "universal_zero_classes",
        [](std::uint64_t p) {
            py::list out;
            for (const auto& rp : hosoya::universal_zero_classes(p))
                out.append(py::make_tuple(rp.r_res, rp.k_res));
            return out;
        },
        py::arg("p"));

    // sieve
    m.def(
        "seed_classes",
        [](std::uint64_t p) {
            py::list out;
            for (const auto& rc : hosoya::seed_classes(p))
                out.append(py::make_tuple(rc.r_res, rc.k_res));
            return out;
        },
        py::arg("p"));

    py::class_<hosoya::SieveTable>(m, "SieveTable")
        .def(py::init([](std::vector<std::uint64_t> primes) {
                 return hosoya::SieveTable::build(std::move(primes));
             }),
             py::arg("primes") =
                 std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19})
        .def_property_readonly("primes", &hosoya::SieveTable::primes)
        .def("class_count", &hosoya::SieveTable::class_count)
        .def(
            "classes_for",
            [](const hosoya::SieveTable& t, std::uint64_t p) {
                py::list out;
                for (const auto& rc : t.classes_for(p))
                    out.append(py::make_tuple(rc.r_res, rc.k_res));
                return out;
            },
            py::arg("p"))
        .def(
            "reject",
            [](const hosoya::SieveTable& t, long long r, long long k) {
                return t.reject({r, k});
            },
            py::arg("r"), py::arg("k"))
        .def(
            "coverage",
            [](const hosoya::SieveTable& t, long long r) {
                return hosoya::coverage_report(r, t);
            },
            py::arg("r"))
        .def("to_csv",
             [](const hosoya::SieveTable& t) { return hosoya::table_to_csv(t); })
        .def("to_json", [](const hosoya::SieveTable& t) {
            return hosoya::table_to_json(t).dump();
        });

    // census
    py::class_<hosoya::PrimalityVerdict>(m, "PrimalityVerdict")
        .def_property_readonly("kind",
                               [](const hosoya::PrimalityVerdict& v) {
                                   return std::string(hosoya::to_string(v.kind));
                               })
        .def_readonly("divisor", &hosoya::PrimalityVerdict::divisor)
        .def_property_readonly("passed", &hosoya::PrimalityVerdict::passed);
    m.def("is_prime", &hosoya::is_prime, py::arg("v"));

    py::class_<hosoya::PrimeRecord>(m, "PrimeRecord")
        .def_property_readonly(
            "r", [](const hosoya::PrimeRecord& p) { return p.coord.r; })
        .def_property_readonly(
            "k", [](const hosoya::PrimeRecord& p) { return p.coord.k; })
        .def_readonly("value", &hosoya::PrimeRecord::value)
        .def_readonly("digits", &hosoya::PrimeRecord::digits)
        .def_property_readonly("verdict", [](const hosoya::PrimeRecord& p) {
            return std::string(hosoya::to_string(p.verdict));
        });

    m.def(
        "primes_in_row",
        [](long long r, long long min_col, const hosoya::SieveTable* t) {
            return hosoya::primes_in_row(r, min_col, table_or_default(t));
        },
        py::arg("r"), py::arg("min_col") = 1, py::arg("table") = nullptr);
    m.def(
        "prime_coords",
        [](long long max_row, long long min_col, const hosoya::SieveTable* t) {
            return hosoya::prime_coords(max_row, min_col, table_or_default(t));
        },
        py::arg("max_row"), py::arg("min_col") = 1, py::arg("table") = nullptr);
    m.def(
        "distinct_primes",
        [](long long max_row, const hosoya::SieveTable* t) {
            return hosoya::distinct_primes(max_row, table_or_default(t));
        },
        py::arg("max_row"), py::arg("table") = nullptr);

    py::class_<hosoya::DensityRow>(m, "DensityRow")
        .def_readonly("n", &hosoya::DensityRow::n)
        .def_readonly("distinct_entries", &hosoya::DensityRow::distinct_entries)
        .def_readonly("distinct_primes", &hosoya::DensityRow::distinct_primes)
        .def_readonly("primes_below", &hosoya::DensityRow::primes_below);
    m.def(
        "density_table",
        [](std::vector<long long> rows, const hosoya::SieveTable* t) {
            return hosoya::density_table(std::move(rows), table_or_default(t));
        },
        py::arg("rows"), py::arg("table") = nullptr);

    m.def("count_primes_upto", &hosoya::count_primes_upto, py::arg("n"));

    m.def(
        "prime_free_lines",
        [](long long max_row, const hosoya::SieveTable* t) {
            py::list out;
            for (const auto& line :
                 hosoya::prime_free_lines(max_row, table_or_default(t)))
                out.append(py::make_tuple(line.r, hosoya::to_string(line.cls)));
            return out;
        },
        py::arg("max_row"), py::arg("table") = nullptr);

    m.def(
        "fl_prime_search",
        [](long long max_r, const std::string& variant) {
            py::list out;
            for (const auto& hit :
                 hosoya::fl_prime_search(max_r, variant_from(variant)))
                out.append(py::make_tuple(hit.r, hit.value));
            return out;
        },
        py::arg("max_r"), py::arg("variant") = "plus");

    // composites
    m.def("crt", &hosoya::crt, py::arg("residues"), py::arg("moduli"));

    py::class_<hosoya::NeighborhoodCert>(m, "NeighborhoodCert")
        .def_readonly("m", &hosoya::NeighborhoodCert::m)
        .def_readonly("n", &hosoya::NeighborhoodCert::n)
        .def_readonly("k", &hosoya::NeighborhoodCert::k)
        .def_readonly("primes", &hosoya::NeighborhoodCert::primes)
        .def_readonly("modulus", &hosoya::NeighborhoodCert::modulus)
        .def("to_json", [](const hosoya::NeighborhoodCert& cert) {
            return hosoya::cert_to_json(cert).dump();
        });
    m.def("build_neighborhood", &hosoya::build_neighborhood, py::arg("m"));
    m.def(
        "verify_neighborhood",
        [](const hosoya::NeighborhoodCert& cert, const std::string& mode) {
            hosoya::VerificationReport report =
                hosoya::verify_neighborhood(cert, mode_from(mode));
            py::list cells;
            for (const auto& cell : report.cells)
                cells.append(py::dict(
                    py::arg("i") = cell.i, py::arg("j") = cell.j,
                    py::arg("p") = cell.p, py::arg("ok") = cell.ok,
                    py::arg("note") = cell.note));
            return py::dict(py::arg("ok") = report.ok, py::arg("cells") = cells);
        },
        py::arg("cert"), py::arg("mode") = "divisor");
}
