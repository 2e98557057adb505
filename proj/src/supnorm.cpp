#include "borwein/supnorm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "borwein/errors.hpp"
#include "borwein/number_theory.hpp"

namespace borwein {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;
constexpr std::int64_t kLogSpaceDegree = 10'000;
constexpr int kGoldenIterations = 80;

/* $|T(e^{i\theta})| = \prod_{m \in D} (2|\sin(m\theta/2)|)^s$.  The
 * factor product accumulates in log space for very high degrees; the
 * s-th power is taken by repeated multiplication at the end, so equal
 * sample points give s = 2 exactly the square of the s = 1 value. */
double magnitude_at(const std::vector<std::int64_t>& exponents, std::int64_t s,
                    bool log_space, double theta) {
    double base;
    if (log_space) {
        double log_sum = 0.0;
        for (std::int64_t m : exponents) {
            const double factor = 2.0 * std::fabs(std::sin(0.5 * static_cast<double>(m) * theta));
            if (factor == 0.0) return 0.0;
            log_sum += std::log(factor);
        }
        base = std::exp(log_sum);
    } else {
        base = 1.0;
        for (std::int64_t m : exponents) {
            base *= 2.0 * std::fabs(std::sin(0.5 * static_cast<double>(m) * theta));
        }
        base = std::fabs(base);
    }
    double value = base;
    for (std::int64_t i = 1; i < s; ++i) value *= base;
    return value;
}

struct GridBest {
    double value = -1.0;
    std::int64_t index = 0;
};

/* Higher value wins; ties resolve to the lower index so the scan order
 * and thread count never change the result. */
GridBest better(const GridBest& a, const GridBest& b) {
    if (a.value != b.value) return a.value > b.value ? a : b;
    return a.index <= b.index ? a : b;
}

} // namespace

SupNormEstimate supnorm_sample(const ProductSpec& spec, std::int64_t samples,
                               bool refine, unsigned threads) {
    const std::int64_t min_samples = kMinSamplesPerDegree * spec.degree();
    if (samples < min_samples) {
        throw SpecError("sample count too low: need >= 4*degT = " +
                        std::to_string(min_samples) + ", got " + std::to_string(samples));
    }

    const std::vector<std::int64_t> exponents = spec.exponents();
    const std::int64_t s = spec.s();
    const bool log_space = spec.degree() > kLogSpaceDegree;
    const double step = kTwoPi / static_cast<double>(samples);

    const auto eval = [&](double theta) {
        return magnitude_at(exponents, s, log_space, theta);
    };

    const unsigned workers = std::max(1u, threads);
    GridBest best;
    if (workers == 1) {
        for (std::int64_t i = 0; i < samples; ++i) {
            best = better(best, {eval(static_cast<double>(i) * step), i});
        }
    } else {
        std::vector<GridBest> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                GridBest local;
                for (std::int64_t i = w; i < samples; i += workers) {
                    local = better(local, {eval(static_cast<double>(i) * step), i});
                }
                partial[w] = local;
            });
        }
        for (auto& t : pool) t.join();
        for (const GridBest& g : partial) best = better(best, g);
    }

    double value = best.value;
    if (refine) {
        /* Golden-section ascent in the window of one inter-sample gap
         * around the best grid point. */
        const double center = static_cast<double>(best.index) * step;
        double lo = center - step;
        double hi = center + step;
        const double invphi = 0.6180339887498948482;
        double c = hi - invphi * (hi - lo);
        double d = lo + invphi * (hi - lo);
        double fc = eval(c);
        double fd = eval(d);
        for (int iter = 0; iter < kGoldenIterations; ++iter) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - invphi * (hi - lo);
                fc = eval(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + invphi * (hi - lo);
                fd = eval(d);
            }
        }
        value = std::max(value, std::max(fc, fd));
    }

    return SupNormEstimate{value, samples, refine};
}

namespace {

std::vector<SpectralRow> spectral_rows(std::int64_t p, std::int64_t s,
                                       std::int64_t n_from, std::int64_t n_to,
                                       std::size_t budget, unsigned threads,
                                       bool with_trend) {
    if (s < 1) throw SpecError("s must be >= 1");
    if (n_from < 0 || n_from > n_to) throw SpecError("need 0 <= n_from <= n_to");

    std::vector<SpectralRow> rows;
    rows.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (std::int64_t n = n_from; n <= n_to; ++n) {
        const ProductSpec spec(p, s, n);
        const IntPolynomial poly = expand_product(spec, budget);

        SpectralRow row;
        row.n = n;
        row.degree = spec.degree();
        row.max_abs = poly.max_abs_coeff();
        row.log_p_ratio = big_log(row.max_abs) /
                          (std::log(static_cast<double>(p)) * static_cast<double>(s * (n + 1)));
        row.supnorm = supnorm_sample(spec, kDefaultSamplesPerDegree * spec.degree(),
                                     /*refine=*/true, threads);

        /* A sampled max can only sit below the true sup, and the sup is
         * at most (degT+1) max|t_i|; anything else is a bug. */
        const BigInt cap = BigInt(spec.degree() + 1) * row.max_abs;
        if (!exact_leq(row.supnorm.value, cap)) {
            throw CheckError("sampled sup-norm lower bound " + std::to_string(row.supnorm.value) +
                             " exceeds (degT+1)*max|t| at n = " + std::to_string(n));
        }

        if (with_trend) {
            const std::int64_t n_sq = std::max<std::int64_t>(n, 1);
            const double scale = static_cast<double>(s) * static_cast<double>(p) *
                                 static_cast<double>(p) * static_cast<double>(n_sq) *
                                 static_cast<double>(n_sq);
            const double log_trend = big_log(row.max_abs) + std::log(scale) -
                                     static_cast<double>(s * (p - 1) * (n + 1)) * std::log(1.219);
            row.trend = std::exp(log_trend);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<SpectralRow> borw1_check(std::int64_t p, std::int64_t s,
                                     std::int64_t n_from, std::int64_t n_to,
                                     std::size_t budget, unsigned threads) {
    if (p != 2 && p != 3 && p != 5 && p != 7 && p != 11 && p != 13) {
        throw SpecError("small-prime check supports p in {2,3,5,7,11,13}, got " +
                        std::to_string(p));
    }
    return spectral_rows(p, s, n_from, n_to, budget, threads, /*with_trend=*/false);
}

std::vector<SpectralRow> borw2_check(std::int64_t p, std::int64_t s,
                                     std::int64_t n_from, std::int64_t n_to,
                                     std::size_t budget, unsigned threads) {
    if (p <= 15 || !is_prime(p)) {
        throw SpecError("large-prime check requires a prime p > 15, got " + std::to_string(p));
    }
    return spectral_rows(p, s, n_from, n_to, budget, threads, /*with_trend=*/true);
}

} // namespace borwein
