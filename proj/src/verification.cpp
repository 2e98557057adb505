#include "borwein/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "borwein/character_sums.hpp"
#include "borwein/errors.hpp"
#include "borwein/number_theory.hpp"
#include "borwein/progression.hpp"

namespace borwein {

namespace {

void require_theorem_spec(std::int64_t p, std::int64_t s) {
    if (p < 3 || !is_prime(p)) {
        throw SpecError("asymptotic results require an odd prime p, got " + std::to_string(p));
    }
    if (s < 1) throw SpecError("s must be >= 1");
}

/* Sigma = (p-1) p^{s(n+1)-1} if p | b, else -p^{s(n+1)-1}. */
BigInt sigma_numerator(const ProductSpec& spec, std::int64_t b) {
    const BigInt power = big_pow(spec.p(), spec.s() * (spec.n() + 1) - 1);
    return (b % spec.p() == 0) ? BigInt(spec.p() - 1) * power : -power;
}

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

BigRational main_term(const ProductSpec& spec, std::int64_t b) {
    require_theorem_spec(spec.p(), spec.s());
    if (b < 0 || b >= spec.modulus()) {
        throw SpecError("residue b must satisfy 0 <= b < N_p, got " + std::to_string(b));
    }
    return BigRational(sigma_numerator(spec, b), BigInt(spec.n() + 1));
}

bool error_bound_holds(const ProductSpec& spec, std::int64_t b, const BigInt& m_value) {
    require_theorem_spec(spec.p(), spec.s());
    if (b < 0 || b >= spec.modulus()) {
        throw SpecError("residue b must satisfy 0 <= b < N_p, got " + std::to_string(b));
    }
    /* |m - Sigma/(n+1)| <= p^{s(n+1)/2}, squared to stay integral when
     * the exponent is odd. */
    const BigInt lhs = BigInt(spec.n() + 1) * m_value - sigma_numerator(spec, b);
    const BigInt rhs =
        BigInt(spec.n() + 1) * (spec.n() + 1) * big_pow(spec.p(), spec.s() * (spec.n() + 1));
    return lhs * lhs <= rhs;
}

std::int64_t sign_threshold(std::int64_t p, std::int64_t s, ResidueClass residue_class) {
    require_theorem_spec(p, s);
    for (std::int64_t n = 1;; ++n) {
        /* (p-1) p^{s(n+1)/2 - 1} > n+1 (divisible class; without the
         * p-1 factor otherwise), compared via squares. */
        BigInt lhs = big_pow(p, s * (n + 1));
        if (residue_class == ResidueClass::kDivisible) {
            lhs *= BigInt(p - 1) * (p - 1);
        }
        const BigInt rhs = BigInt(p) * p * (n + 1) * (n + 1);
        if (lhs > rhs) return n;
    }
}

namespace {

bool sign_is_required(std::int64_t p, std::int64_t s, std::int64_t n, std::int64_t b) {
    const bool proved_family =
        (p == 3 && (s == 1 || s == 2)) || (p == 5 && s == 1);
    if (proved_family) return n >= 1;
    const ResidueClass cls =
        (b % p == 0) ? ResidueClass::kDivisible : ResidueClass::kNondivisible;
    return n >= sign_threshold(p, s, cls);
}

std::vector<VerificationRow> verify_cell(const ProductSpec& spec, std::size_t budget) {
    const IntPolynomial poly = expand_product(spec, budget);
    std::vector<VerificationRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.modulus()));
    for (std::int64_t b = 0; b < spec.modulus(); ++b) {
        VerificationRow row;
        row.p = spec.p();
        row.s = spec.s();
        row.n = spec.n();
        row.b = b;
        row.m_direct = m_direct(poly, spec, b);
        row.m_charsum = m_charsum_exact(spec, b);
        if (row.m_direct != row.m_charsum) {
            throw CheckError("progression sum mismatch at (p,s,n,b) = (" +
                             std::to_string(spec.p()) + "," + std::to_string(spec.s()) + "," +
                             std::to_string(spec.n()) + "," + std::to_string(b) +
                             "): direct " + row.m_direct.str() + " vs character sum " +
                             row.m_charsum.str());
        }
        row.main = main_term(spec, b);
        const std::int64_t exponent = spec.s() * (spec.n() + 1);
        row.error_bound = std::pow(static_cast<double>(spec.p()),
                                   static_cast<double>(exponent) / 2.0);
        row.error_bound_is_integer = exponent % 2 == 0;
        row.within_bound = error_bound_holds(spec, b, row.m_direct);
        row.sign_expected = (b % spec.p() == 0) ? 1 : -1;
        row.sign_observed = sign_of(row.m_direct);
        row.sign_required = sign_is_required(spec.p(), spec.s(), spec.n(), b);
        row.sign_ok = !row.sign_required || row.sign_observed == row.sign_expected;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<VerificationRow> verify_grid(const std::vector<std::int64_t>& ps,
                                         const std::vector<std::int64_t>& ss,
                                         std::int64_t n_max,
                                         std::size_t budget,
                                         unsigned threads) {
    if (ps.empty() || ss.empty()) throw SpecError("verification grid must be nonempty");
    if (n_max < 0) throw SpecError("n_max must be >= 0");

    std::vector<std::int64_t> sorted_ps = ps;
    std::vector<std::int64_t> sorted_ss = ss;
    std::sort(sorted_ps.begin(), sorted_ps.end());
    std::sort(sorted_ss.begin(), sorted_ss.end());
    sorted_ps.erase(std::unique(sorted_ps.begin(), sorted_ps.end()), sorted_ps.end());
    sorted_ss.erase(std::unique(sorted_ss.begin(), sorted_ss.end()), sorted_ss.end());

    std::vector<ProductSpec> cells;
    for (std::int64_t p : sorted_ps) {
        require_theorem_spec(p, 1);
        for (std::int64_t s : sorted_ss) {
            for (std::int64_t n = 0; n <= n_max; ++n) {
                cells.emplace_back(p, s, n);
            }
        }
    }

    std::vector<std::vector<VerificationRow>> per_cell(cells.size());
    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            per_cell[i] = verify_cell(cells[i], budget);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    try {
                        per_cell[i] = verify_cell(cells[i], budget);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<VerificationRow> rows;
    for (auto& cell_rows : per_cell) {
        rows.insert(rows.end(), std::make_move_iterator(cell_rows.begin()),
                    std::make_move_iterator(cell_rows.end()));
    }
    return rows;
}

std::vector<RatioRow> ratio_trend(std::int64_t p, std::int64_t s, std::int64_t b,
                                  std::int64_t n_max, std::size_t budget) {
    require_theorem_spec(p, s);
    if (b < 0) throw SpecError("residue b must be >= 0");
    std::vector<RatioRow> rows;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        ProductSpec spec(p, s, n);
        if (b >= spec.modulus()) continue;
        const BigInt m = m_direct(spec, b, budget);
        RatioRow row;
        row.n = n;
        /* m / (Sigma/(n+1)); divide rather than construct pairwise so a
         * negative Sigma lands in the numerator. */
        row.ratio = BigRational(BigInt(n + 1) * m) / BigRational(sigma_numerator(spec, b));
        row.ratio_value = row.ratio.convert_to<double>();
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace borwein
