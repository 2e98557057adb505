#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "borwein/character_sums.hpp"
#include "borwein/errors.hpp"
#include "borwein/number_theory.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/product_spec.hpp"
#include "borwein/progression.hpp"
#include "borwein/supnorm.hpp"
#include "borwein/verification.hpp"

namespace py = pybind11;
using namespace borwein;

namespace {

py::int_ to_py(const BigInt& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

BigInt to_big(const py::int_& value) {
    return BigInt(py::str(value).cast<std::string>());
}

py::object to_fraction(const BigRational& value) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_py(numerator(value)), to_py(denominator(value)));
}

std::size_t resolve_budget(std::size_t budget) {
    return budget == 0 ? kDefaultCoefficientBudget : budget;
}

py::dict supnorm_dict(const SupNormEstimate& est) {
    py::dict d;
    d["value"] = est.value;
    d["samples"] = est.samples;
    d["refined"] = est.refined;
    return d;
}

py::list spectral_rows_list(const std::vector<SpectralRow>& rows, bool with_trend) {
    py::list out;
    for (const auto& row : rows) {
        py::dict d;
        d["n"] = row.n;
        d["degree"] = row.degree;
        d["max_abs_coeff"] = to_py(row.max_abs);
        d["log_p_ratio"] = row.log_p_ratio;
        d["supnorm"] = supnorm_dict(row.supnorm);
        if (with_trend) d["trend"] = row.trend;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact coefficient and progression-sum computations for products "
              "T_{p,s,n}(q) = prod_{j<=n} prod_{0<k<p} (1-q^{pj+k})^s";

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<CheckError>(m, "CheckError", PyExc_RuntimeError);

    m.def(
        "expand",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::size_t budget) {
            IntPolynomial poly = expand_product(ProductSpec(p, s, n), resolve_budget(budget));
            py::list coeffs;
            for (const BigInt& c : poly.coefficients()) coeffs.append(to_py(c));
            return coeffs;
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("budget") = 0,
        "Coefficients of T_{p,s,n} as exact integers, constant term first.");

    m.def(
        "degree",
        [](std::int64_t p, std::int64_t s, std::int64_t n) {
            return ProductSpec(p, s, n).degree();
        },
        py::arg("p"), py::arg("s"), py::arg("n"),
        "Degree p(p-1)s(n+1)^2/2 of T_{p,s,n}.");

    m.def(
        "m_direct",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t b,
           std::size_t budget) {
            return to_py(m_direct(ProductSpec(p, s, n), b, resolve_budget(budget)));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("b"), py::arg("budget") = 0,
        "Progression sum M_{p,s,n}(b) by direct coefficient summation.");

    m.def(
        "m_charsum",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t b) {
            return to_py(m_charsum_exact(ProductSpec(p, s, n), b));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("b"),
        "Progression sum M_{p,s,n}(b) via the exact character-sum formula.");

    m.def(
        "progression_sum",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t a, std::int64_t d,
           std::size_t budget) {
            ProductSpec spec(p, s, n);
            IntPolynomial poly = expand_product(spec, resolve_budget(budget));
            return to_py(direct_progression_sum(poly, ProgressionQuery(a, d, p)));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("a"), py::arg("d"),
        py::arg("budget") = 0,
        "Sum of coefficients t_i over i = d, d+a, d+2a, ... (a must be a multiple of p).");

    m.def(
        "main_term",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t b) {
            return to_fraction(main_term(ProductSpec(p, s, n), b));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("b"),
        "Exact main term Sigma/(n+1) of M_{p,s,n}(b) as a Fraction.");

    m.def(
        "error_bound_holds",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t b,
           const py::int_& m_value) {
            return error_bound_holds(ProductSpec(p, s, n), b, to_big(m_value));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("b"), py::arg("m"),
        "Whether |m - Sigma/(n+1)| <= p^{s(n+1)/2}, decided in exact integers.");

    m.def(
        "sign_threshold",
        [](std::int64_t p, std::int64_t s, bool divisible) {
            return sign_threshold(p, s,
                                  divisible ? ResidueClass::kDivisible
                                            : ResidueClass::kNondivisible);
        },
        py::arg("p"), py::arg("s"), py::arg("divisible"),
        "Smallest n from which the main term provably dominates the error bound.");

    m.def(
        "verify",
        [](const std::vector<std::int64_t>& ps, const std::vector<std::int64_t>& ss,
           std::int64_t n_max, std::size_t budget, unsigned threads) {
            py::list out;
            for (const auto& row :
                 verify_grid(ps, ss, n_max, resolve_budget(budget), threads)) {
                py::dict d;
                d["p"] = row.p;
                d["s"] = row.s;
                d["n"] = row.n;
                d["b"] = row.b;
                d["m_direct"] = to_py(row.m_direct);
                d["m_charsum"] = to_py(row.m_charsum);
                d["main"] = to_fraction(row.main);
                d["error_bound"] = row.error_bound;
                d["within_bound"] = row.within_bound;
                d["sign_expected"] = row.sign_expected;
                d["sign_observed"] = row.sign_observed;
                d["sign_required"] = row.sign_required;
                d["sign_ok"] = row.sign_ok;
                out.append(d);
            }
            return out;
        },
        py::arg("ps"), py::arg("ss"), py::arg("n_max"), py::arg("budget") = 0,
        py::arg("threads") = 1,
        "Full verification grid: both progression-sum routes, bound and sign checks.");

    m.def(
        "ratio_trend",
        [](std::int64_t p, std::int64_t s, std::int64_t b, std::int64_t n_max,
           std::size_t budget) {
            py::list out;
            for (const auto& row : ratio_trend(p, s, b, n_max, resolve_budget(budget))) {
                py::dict d;
                d["n"] = row.n;
                d["ratio"] = to_fraction(row.ratio);
                d["value"] = row.ratio_value;
                out.append(d);
            }
            return out;
        },
        py::arg("p"), py::arg("s"), py::arg("b"), py::arg("n_max"), py::arg("budget") = 0,
        "M(b) divided by its main term, per n.");

    m.def(
        "named_parts",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::size_t budget) {
            ProductSpec spec(p, s, n);
            IntPolynomial poly = expand_product(spec, resolve_budget(budget));
            py::dict out;
            for (const auto& part :
                 extract_borwein_polynomials(split_residues(poly, spec), spec)) {
                py::list coeffs;
                for (const BigInt& c : part.poly.coefficients()) coeffs.append(to_py(c));
                out[py::str(part.name)] = coeffs;
            }
            return out;
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("budget") = 0,
        "The classically named residue parts (A/B/C, alpha/beta/gamma, nu..omega).");

    m.def(
        "check_recursions",
        [](std::int64_t n_max, std::size_t budget) {
            py::list out;
            for (const auto& check :
                 check_andrews_recursions(n_max, resolve_budget(budget))) {
                py::dict d;
                d["n"] = check.n;
                d["passed"] = check.passed;
                d["failed_part"] = check.failed_part;
                d["mismatch_index"] = check.mismatch_index;
                out.append(d);
            }
            return out;
        },
        py::arg("n_max"), py::arg("budget") = 0,
        "Checks the coupled (3,1) recursion for n = 1..n_max.");

    m.def(
        "max_abs_coeff",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::size_t budget) {
            return to_py(
                expand_product(ProductSpec(p, s, n), resolve_budget(budget)).max_abs_coeff());
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("budget") = 0,
        "Largest |t_i| of T_{p,s,n}.");

    m.def(
        "supnorm",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t samples,
           bool refine, unsigned threads) {
            ProductSpec spec(p, s, n);
            const std::int64_t count =
                samples == 0 ? kDefaultSamplesPerDegree * spec.degree() : samples;
            return supnorm_dict(supnorm_sample(spec, count, refine, threads));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("samples") = 0,
        py::arg("refine") = true, py::arg("threads") = 1,
        "Sampled lower bound of sup |T| on the unit circle.");

    m.def(
        "borw1",
        [](std::int64_t p, std::int64_t s, std::int64_t n_from, std::int64_t n_to,
           std::size_t budget, unsigned threads) {
            return spectral_rows_list(
                borw1_check(p, s, n_from, n_to, resolve_budget(budget), threads), false);
        },
        py::arg("p"), py::arg("s"), py::arg("n_from"), py::arg("n_to"),
        py::arg("budget") = 0, py::arg("threads") = 1,
        "Small-prime coefficient/sup-norm rows (p in {2,3,5,7,11,13}).");

    m.def(
        "borw2",
        [](std::int64_t p, std::int64_t s, std::int64_t n_from, std::int64_t n_to,
           std::size_t budget, unsigned threads) {
            return spectral_rows_list(
                borw2_check(p, s, n_from, n_to, resolve_budget(budget), threads), true);
        },
        py::arg("p"), py::arg("s"), py::arg("n_from"), py::arg("n_to"),
        py::arg("budget") = 0, py::arg("threads") = 1,
        "Large-prime coefficient/sup-norm rows with growth trend (prime p > 15).");

    m.def(
        "ramanujan_sum",
        [](std::int64_t d, std::int64_t b) { return ramanujan_sum(d, b); },
        py::arg("d"), py::arg("b"), "Ramanujan sum c_d(b).");

    m.def(
        "cyclotomic",
        [](std::int64_t n) { return cyclotomic_polynomial(n); },
        py::arg("n"), "Coefficients of the n-th cyclotomic polynomial.");

    m.def(
        "z_poly",
        [](std::int64_t k, const std::vector<py::int_>& ts) {
            std::vector<BigInt> t;
            t.reserve(ts.size());
            for (const auto& v : ts) t.push_back(to_big(v));
            return to_py(z_poly(k, t));
        },
        py::arg("k"), py::arg("t"),
        "Cycle-type generating polynomial Z_k(t_1..t_k).");

    m.def(
        "f_psi_closed",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t order,
           std::int64_t k) {
            return to_py(f_psi_closed(ProductSpec(p, s, n), order, k));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("order"), py::arg("k"),
        "Distinct-tuple character sum F_psi in closed form by character order.");

    m.def(
        "f_psi_bruteforce",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t x, std::int64_t k) {
            ProductSpec spec(p, s, n);
            return to_py(f_psi_bruteforce(spec, Character(spec.modulus(), x), k));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("x"), py::arg("k"),
        "F_psi by exhaustive tuple enumeration (budget-guarded).");

    m.def(
        "partition_parity",
        [](std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t j) {
            return to_py(partition_parity_oracle(ProductSpec(p, s, n), j));
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("j"),
        "Coefficient t_j recomputed as an even/odd subset-count difference.");
}
