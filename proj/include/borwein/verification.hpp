#ifndef BORWEIN_VERIFICATION_HPP
#define BORWEIN_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borwein/big_int.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/product_spec.hpp"

namespace borwein {

enum class ResidueClass { kDivisible, kNondivisible };

/* The exact main term of the progression sum:
 *
 *   M(b) ~ Sigma / (n+1),  Sigma = (p-1) p^{s(n+1)-1}  if p | b,
 *                                  -p^{s(n+1)-1}       otherwise,
 *
 * with error at most p^{s(n+1)/2}.  All entry points here require
 * p >= 3. */
BigRational main_term(const ProductSpec& spec, std::int64_t b);

/* |m - Sigma/(n+1)| <= p^{s(n+1)/2}, decided entirely in integers by
 * clearing the denominator and squaring:
 * ((n+1) m - Sigma)^2 <= (n+1)^2 p^{s(n+1)}. */
bool error_bound_holds(const ProductSpec& spec, std::int64_t b, const BigInt& m_value);

/* Smallest n >= 1 from which the main term provably dominates the
 * error: (p-1) p^{s(n+1)/2 - 1} > n+1 in the divisible class, and
 * p^{s(n+1)/2 - 1} > (n+1)/p ... i.e. p^{s(n+1)/2} > p(n+1) without the
 * (p-1) factor in the nondivisible class.  Decided by squaring. */
std::int64_t sign_threshold(std::int64_t p, std::int64_t s, ResidueClass residue_class);

struct VerificationRow {
    std::int64_t p = 0;
    std::int64_t s = 0;
    std::int64_t n = 0;
    std::int64_t b = 0;
    BigInt m_direct;
    BigInt m_charsum;
    BigRational main;
    /* p^{s(n+1)/2} as a double; exact (integer) when s(n+1) is even. */
    double error_bound = 0.0;
    bool error_bound_is_integer = false;
    bool within_bound = false;
    /* +1 if p | b else -1. */
    int sign_expected = 0;
    /* sign of m_direct: -1, 0, +1. */
    int sign_observed = 0;
    /* Whether the sign claim is in proved range for this row: n >= 1
     * for (3,1), (3,2), (5,1); n >= sign_threshold otherwise. */
    bool sign_required = false;
    /* True when the sign is not required or matches. */
    bool sign_ok = false;
};

/* Evaluates every (p,s,n,b) cell: expands once per (p,s,n), compares
 * m_direct with m_charsum_exact (mismatch throws CheckError: the two
 * routes are independent and must agree), and fills in bound and sign
 * results.  Rows come back sorted by (p,s,n,b) regardless of thread
 * count. */
std::vector<VerificationRow> verify_grid(const std::vector<std::int64_t>& ps,
                                         const std::vector<std::int64_t>& ss,
                                         std::int64_t n_max,
                                         std::size_t budget = kDefaultCoefficientBudget,
                                         unsigned threads = 1);

struct RatioRow {
    std::int64_t n = 0;
    BigRational ratio;     /* m_direct / main term, exact */
    double ratio_value = 0.0;
};

/* m / (Sigma/(n+1)) per n for trend inspection; rows are skipped while
 * b >= N_p.  No assertion: the convergence rate is not quantified. */
std::vector<RatioRow> ratio_trend(std::int64_t p, std::int64_t s, std::int64_t b,
                                  std::int64_t n_max,
                                  std::size_t budget = kDefaultCoefficientBudget);

} // namespace borwein

#endif
