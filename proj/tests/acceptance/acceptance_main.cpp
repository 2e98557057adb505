#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "borwein/character_sums.hpp"
#include "borwein/errors.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/product_spec.hpp"
#include "borwein/progression.hpp"
#include "borwein/serialization.hpp"
#include "borwein/supnorm.hpp"
#include "borwein/verification.hpp"

using namespace borwein;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct GridCell {
    std::int64_t p;
    std::int64_t s;
    std::int64_t n;
};

/* The grid shared by the equivalence and bound criteria. */
std::vector<GridCell> oracle_grid() {
    std::vector<GridCell> cells;
    for (std::int64_t p : {3, 5}) {
        for (std::int64_t s : {1, 2}) {
            for (std::int64_t n = 0; n <= 6; ++n) cells.push_back({p, s, n});
        }
    }
    for (std::int64_t n = 0; n <= 4; ++n) cells.push_back({7, 1, n});
    return cells;
}

Outcome check_oracle_equivalence() {
    std::int64_t points = 0;
    for (const GridCell& cell : oracle_grid()) {
        ProductSpec spec(cell.p, cell.s, cell.n);
        IntPolynomial poly = expand_product(spec);
        for (std::int64_t b = 0; b < spec.modulus(); ++b) {
            if (m_charsum_exact(spec, b) != m_direct(poly, spec, b)) {
                std::ostringstream os;
                os << "mismatch at p=" << cell.p << " s=" << cell.s << " n=" << cell.n
                   << " b=" << b;
                return {false, os.str()};
            }
            ++points;
        }
    }
    std::ostringstream os;
    os << "character-sum and direct routes agree at all " << points << " grid points";
    return {true, os.str()};
}

Outcome check_error_bound() {
    std::int64_t points = 0;
    for (const GridCell& cell : oracle_grid()) {
        ProductSpec spec(cell.p, cell.s, cell.n);
        IntPolynomial poly = expand_product(spec);
        for (std::int64_t b = 0; b < spec.modulus(); ++b) {
            if (!error_bound_holds(spec, b, m_direct(poly, spec, b))) {
                std::ostringstream os;
                os << "bound fails at p=" << cell.p << " s=" << cell.s << " n=" << cell.n
                   << " b=" << b;
                return {false, os.str()};
            }
            ++points;
        }
    }
    std::ostringstream os;
    os << "main-term error bound holds at all " << points << " grid points";
    return {true, os.str()};
}

Outcome check_worked_instance() {
    ProductSpec spec(3, 1, 1);
    IntPolynomial poly = expand_product(spec);
    const std::vector<BigInt> want = {1, -1, -1, 1, -1, 0, 2, 0, -1, 1, -1, -1, 1};
    if (poly.coefficients() != want) return {false, "coefficient vector differs"};
    if (m_direct(poly, spec, 0) != 4 || m_charsum_exact(spec, 0) != 4) {
        return {false, "M(0) != 4"};
    }
    if (m_direct(poly, spec, 1) != -1) return {false, "M(1) != -1"};
    if (m_direct(poly, spec, 2) != -2) return {false, "M(2) != -2"};
    if (main_term(spec, 0) != BigRational(3)) return {false, "main term != 3"};
    auto rows = verify_grid({3}, {1}, 1);
    for (const auto& row : rows) {
        if (row.n == 1 && row.b == 0) {
            if (row.error_bound != 3.0 || !row.error_bound_is_integer || !row.within_bound) {
                return {false, "error bound at (3,1,1,0) is not the integer 3"};
            }
        }
    }
    return {true, "coefficients, progression sums, main term and bound all reproduced"};
}

Outcome check_sign_theorems() {
    std::int64_t points = 0;
    struct Family {
        std::int64_t p;
        std::int64_t s;
        bool assert_divisible;
    };
    for (const Family fam : {Family{3, 1, false}, Family{3, 2, true}, Family{5, 1, true}}) {
        for (std::int64_t n = 1; n <= 6; ++n) {
            ProductSpec spec(fam.p, fam.s, n);
            IntPolynomial poly = expand_product(spec);
            for (std::int64_t b = 0; b < spec.modulus(); ++b) {
                const BigInt m = m_direct(poly, spec, b);
                const bool divisible = (b % fam.p) == 0;
                bool ok = true;
                if (!divisible && m >= 0) ok = false;
                if (divisible && fam.assert_divisible && m <= 0) ok = false;
                if (!ok) {
                    std::ostringstream os;
                    os << "sign violated at p=" << fam.p << " s=" << fam.s << " n=" << n
                       << " b=" << b << " M=" << m;
                    return {false, os.str()};
                }
                ++points;
            }
        }
    }
    std::ostringstream os;
    os << "sign pattern holds at all " << points << " checked residues";
    return {true, os.str()};
}

Outcome check_thresholds() {
    const std::int64_t t3 = sign_threshold(3, 1, ResidueClass::kNondivisible);
    const std::int64_t t5 = sign_threshold(5, 1, ResidueClass::kNondivisible);
    if (t3 != 4) return {false, "sign_threshold(3,1,nondivisible) = " + std::to_string(t3)};
    if (t5 != 3) return {false, "sign_threshold(5,1,nondivisible) = " + std::to_string(t5)};
    return {true, "dominance thresholds are 4 (p=3) and 3 (p=5) in the nondivisible class"};
}

Outcome check_sieve_identities() {
    std::vector<GridCell> cells;
    for (std::int64_t n = 0; n <= 3; ++n) cells.push_back({3, 1, n});
    for (std::int64_t n = 0; n <= 1; ++n) cells.push_back({5, 1, n});
    cells.push_back({7, 1, 0});
    cells.push_back({11, 1, 0});

    std::int64_t identities = 0;
    for (const GridCell& cell : cells) {
        ProductSpec spec(cell.p, cell.s, cell.n);
        const std::int64_t modulus = spec.modulus();
        if (modulus > 12) return {false, "grid cell exceeds the N_p <= 12 budget"};
        for (std::int64_t x = 0; x < modulus; ++x) {
            Character psi(modulus, x);
            const std::int64_t k_max = std::min<std::int64_t>(4, spec.exponent_count());
            for (std::int64_t k = 0; k <= k_max; ++k) {
                if (f_psi_closed(spec, psi.order(), k) != f_psi_bruteforce(spec, psi, k)) {
                    std::ostringstream os;
                    os << "sieve identity fails at p=" << cell.p << " n=" << cell.n
                       << " x=" << x << " k=" << k;
                    return {false, os.str()};
                }
                ++identities;
            }
        }
        for (std::int64_t order : divisors(modulus)) {
            if (order > 1 && order % spec.p() != 0) {
                if (!p_term_vanishing_check(spec, order)) {
                    std::ostringstream os;
                    os << "vanishing check fails at p=" << cell.p << " n=" << cell.n
                       << " order=" << order;
                    return {false, os.str()};
                }
                ++identities;
            }
        }
    }
    for (std::int64_t size_d = 1; size_d <= 64; ++size_d) {
        if (!alternating_binomial_check(size_d)) {
            return {false, "alternating binomial sum nonzero at sizeD=" + std::to_string(size_d)};
        }
        ++identities;
    }
    std::ostringstream os;
    os << identities << " sieve and vanishing identities verified";
    return {true, os.str()};
}

Outcome check_partition_parity() {
    std::vector<GridCell> cells;
    for (std::int64_t n = 0; n <= 3; ++n) cells.push_back({3, 1, n});
    for (std::int64_t n = 0; n <= 1; ++n) cells.push_back({5, 1, n});

    std::int64_t coeffs = 0;
    for (const GridCell& cell : cells) {
        ProductSpec spec(cell.p, cell.s, cell.n);
        IntPolynomial poly = expand_product(spec);
        for (std::int64_t j = 0; j <= spec.degree(); ++j) {
            if (partition_parity_oracle(spec, j) != poly.coeff(static_cast<std::size_t>(j))) {
                std::ostringstream os;
                os << "parity oracle differs at p=" << cell.p << " n=" << cell.n
                   << " j=" << j;
                return {false, os.str()};
            }
            ++coeffs;
        }
    }
    std::ostringstream os;
    os << "all " << coeffs << " coefficients recomputed from subset parities";
    return {true, os.str()};
}

Outcome check_recursions() {
    auto checks = check_andrews_recursions(8);
    for (const auto& c : checks) {
        if (!c.passed) {
            std::ostringstream os;
            os << "recursion fails at n=" << c.n << " part=" << c.failed_part
               << " index=" << c.mismatch_index;
            return {false, os.str()};
        }
    }
    return {true, "coupled recursion identities hold exactly for n = 1..8"};
}

Outcome check_nonnegativity() {
    for (std::int64_t n = 0; n <= 12; ++n) {
        ProductSpec spec(3, 1, n);
        auto named = extract_borwein_polynomials(
            split_residues(expand_product(spec), spec), spec);
        for (const auto& part : named) {
            for (const BigInt& c : part.poly.coefficients()) {
                if (c < 0) {
                    std::ostringstream os;
                    os << "negative coefficient in " << part.name << " at n=" << n;
                    return {false, os.str()};
                }
            }
        }
    }
    return {true, "A_n, B_n, C_n coefficients nonnegative for n <= 12"};
}

Outcome check_spectral() {
    for (std::int64_t n = 0; n <= 10; ++n) {
        ProductSpec base(3, 1, n);
        ProductSpec square(3, 2, n);
        const std::int64_t samples = 8 * square.degree();
        const double v1 = supnorm_sample(base, samples).value;
        const double v2 = supnorm_sample(square, samples).value;
        if (std::abs(v2 - v1 * v1) > 1e-9 * v2) {
            std::ostringstream os;
            os << "power law off at n=" << n << ": " << v2 << " vs " << v1 * v1;
            return {false, os.str()};
        }
    }

    for (std::int64_t p : {2, 3, 5, 7}) {
        for (std::int64_t s : {1, 2}) {
            for (std::int64_t n = 0; n <= 3; ++n) {
                ProductSpec spec(p, s, n);
                IntPolynomial poly = expand_product(spec);
                auto est = supnorm_sample(spec, 8 * spec.degree());
                if (!exact_leq(est.value, poly.abs_coeff_sum())) {
                    std::ostringstream os;
                    os << "triangle inequality violated at p=" << p << " s=" << s
                       << " n=" << n;
                    return {false, os.str()};
                }
            }
        }
    }

    auto large = borw2_check(17, 1, 0, 3);
    if (large.size() != 4) return {false, "large-prime check returned wrong row count"};
    for (const auto& row : large) {
        if (!exact_leq(row.supnorm.value, BigInt(row.degree + 1) * row.max_abs)) {
            return {false, "large-prime inequality violated at n=" + std::to_string(row.n)};
        }
    }

    return {true, "power law to 1e-9, triangle inequality exact, p=17 inequality holds"};
}

Outcome check_trend_table() {
    auto rows = borw1_check(3, 1, 0, 30);
    if (rows.size() != 31) return {false, "trend table has wrong row count"};
    for (const auto& row : rows) {
        if (!std::isfinite(row.log_p_ratio)) {
            return {false, "coefficient growth ratio not finite at n=" + std::to_string(row.n)};
        }
    }
    std::ofstream out("spectral_trend_p3.csv");
    out << spectral_csv(rows, false);
    out.close();

    std::int64_t inversions = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].log_p_ratio < rows[i - 1].log_p_ratio) ++inversions;
    }
    std::ostringstream os;
    os << "trend table written to spectral_trend_p3.csv; final ratio "
       << format_double(rows.back().log_p_ratio) << " (reported, not asserted; "
       << inversions << " local dips)";
    return {true, os.str()};
}

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"C1 oracle equivalence", 30.0, check_oracle_equivalence},
        {"C2 main-term error bound", 30.0, check_error_bound},
        {"C3 worked instance (3,1,1)", 30.0, check_worked_instance},
        {"C4 sign theorems", 30.0, check_sign_theorems},
        {"C5 dominance thresholds", 30.0, check_thresholds},
        {"C6 sieve identities", 10.0, check_sieve_identities},
        {"C7 partition-parity oracle", 60.0, check_partition_parity},
        {"C8 coupled recursions", 30.0, check_recursions},
        {"C9 nonnegativity regression", 30.0, check_nonnegativity},
        {"C10 spectral properties", 120.0, check_spectral},
        {"C10d growth trend table", 120.0, check_trend_table},
    };

    bool all_passed = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > criterion.budget_seconds) {
            outcome.passed = false;
            outcome.detail += " [over time budget]";
        }
        all_passed = all_passed && outcome.passed;
        std::ostringstream line;
        line << (outcome.passed ? "[PASS] " : "[FAIL] ") << criterion.label << ": "
             << outcome.detail << " (" << format_double(seconds) << " s)";
        std::cout << line.str() << '\n';
    }
    std::cout << (all_passed ? "acceptance: all criteria satisfied"
                             : "acceptance: FAILURES present")
              << std::endl;
    return all_passed ? 0 : 1;
}
