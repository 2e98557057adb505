#ifndef BORWEIN_SUPNORM_HPP
#define BORWEIN_SUPNORM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borwein/big_int.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/product_spec.hpp"

namespace borwein {

/* A certified lower bound of $\sup_{|q|=1} |T(q)|$: the maximum of |T|
 * over sampled points (plus optional local refinement), never an upper
 * bound. */
struct SupNormEstimate {
    double value = 0.0;
    std::int64_t samples = 0;
    bool refined = false;
};

inline BigInt max_abs_coeff(const IntPolynomial& poly) { return poly.max_abs_coeff(); }

/* Samples |T| at `samples` equispaced points of the unit circle using
 * the factor form $|T(e^{i\theta})| = \prod_{m \in D} (2|\sin(m\theta/2)|)^s$
 * (never the expanded coefficients), then runs golden-section refinement
 * in a window of one inter-sample gap around the best point.  Requires
 * samples >= 4 degT; magnitudes accumulate in log space once
 * degT > 10^4. */
SupNormEstimate supnorm_sample(const ProductSpec& spec, std::int64_t samples,
                               bool refine = true, unsigned threads = 1);

/* Minimum and default sampling densities, in multiples of degT. */
inline constexpr std::int64_t kMinSamplesPerDegree = 4;
inline constexpr std::int64_t kDefaultSamplesPerDegree = 8;

struct SpectralRow {
    std::int64_t n = 0;
    std::int64_t degree = 0;
    BigInt max_abs;
    /* log_p(max_abs) / (s(n+1)); approaches 1 from below as n grows. */
    double log_p_ratio = 0.0;
    SupNormEstimate supnorm;
    /* borw2 rows only: max_abs * s p^2 max(n,1)^2 / 1.219^{s(p-1)(n+1)}. */
    double trend = 0.0;
};

/* Small-prime regime p in {2,3,5,7,11,13}: per n, reports max|t_i|,
 * the ratio r_n, and a sup-norm estimate, asserting the one rigorously
 * checkable direction
 *
 *   supnorm lower bound <= (degT+1) * max|t_i|
 *
 * exactly (a sampled value can only fall below the true sup, which the
 * triangle inequality bounds by the right side).  Violation throws
 * CheckError. */
std::vector<SpectralRow> borw1_check(std::int64_t p, std::int64_t s,
                                     std::int64_t n_from, std::int64_t n_to,
                                     std::size_t budget = kDefaultCoefficientBudget,
                                     unsigned threads = 1);

/* Large-prime regime p > 15: asserts the equivalent inequality
 * max|t_i| >= supnorm lower bound / (degT+1) and reports the growth
 * trend against the 1.219^{s(p-1)(n+1)} scale (the constant is known
 * only to those digits and enters reporting only). */
std::vector<SpectralRow> borw2_check(std::int64_t p, std::int64_t s,
                                     std::int64_t n_from, std::int64_t n_to,
                                     std::size_t budget = kDefaultCoefficientBudget,
                                     unsigned threads = 1);

} // namespace borwein

#endif
