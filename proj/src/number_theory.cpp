#include "borwein/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "borwein/errors.hpp"

namespace borwein {

bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= m; d += 2) {
        if (m % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> factorize(std::int64_t m) {
    if (m < 1) throw SpecError("factorize requires m >= 1, got " + std::to_string(m));
    std::vector<std::pair<std::int64_t, std::int64_t>> factors;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            std::int64_t e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (m > 1) factors.emplace_back(m, 1);
    return factors;
}

std::int64_t mobius(std::int64_t m) {
    std::int64_t mu = 1;
    for (const auto& [prime, exp] : factorize(m)) {
        (void)prime;
        if (exp > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::int64_t totient(std::int64_t m) {
    std::int64_t phi = m;
    for (const auto& [prime, exp] : factorize(m)) {
        (void)exp;
        phi -= phi / prime;
    }
    return phi;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
    if (m < 1) throw SpecError("divisors requires m >= 1, got " + std::to_string(m));
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

namespace {

/* Exact quotient of polynomials with integer coefficients, divisor
 * monic up to sign of its leading term; both vectors constant term
 * first.  Remainder must vanish. */
std::vector<std::int64_t> exact_poly_divide(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
    const std::int64_t lead = den.back();
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
        const std::int64_t q = num[i] / lead;
        quot[i - dd] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] -= q * den[j];
        }
    }
    for (std::int64_t c : num) {
        if (c != 0) throw CheckError("nonzero remainder in exact polynomial division");
    }
    return quot;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw SpecError("cyclotomic index must be >= 1, got " + std::to_string(n));
    /* x^n - 1 divided by the product of Phi_d over proper divisors d. */
    std::vector<std::int64_t> phi(static_cast<std::size_t>(n) + 1, 0);
    phi[0] = -1;
    phi[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d : divisors(n)) {
        if (d == n) continue;
        phi = exact_poly_divide(std::move(phi), cyclotomic_polynomial(d));
    }
    return phi;
}

BigInt root_of_unity_sum(std::span<const BigInt> counts, std::int64_t n) {
    if (n < 1) throw SpecError("root_of_unity_sum requires modulus >= 1");
    /* Fold exponents into [0, n) first, then reduce modulo Phi_n. */
    std::vector<BigInt> rem(static_cast<std::size_t>(n), BigInt(0));
    for (std::size_t r = 0; r < counts.size(); ++r) {
        rem[r % static_cast<std::size_t>(n)] += counts[r];
    }
    const std::vector<std::int64_t> phi = cyclotomic_polynomial(n);
    const std::size_t dd = phi.size() - 1;
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        const BigInt q = rem[i];  /* Phi_n is monic */
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= q * phi[j];
        }
    }
    for (std::size_t i = 1; i < std::min(rem.size(), dd); ++i) {
        if (rem[i] != 0) {
            throw CheckError("root-of-unity sum did not reduce to a rational integer");
        }
    }
    return rem.empty() ? BigInt(0) : rem[0];
}

std::int64_t ramanujan_sum(std::int64_t d, std::int64_t b) {
    if (d < 1) throw SpecError("ramanujan_sum requires d >= 1, got " + std::to_string(d));
    std::int64_t r = b % d;
    if (r < 0) r += d;
    const std::int64_t g = (r == 0) ? d : std::gcd(d, r);
    const std::int64_t m = d / g;
    const std::int64_t mu = mobius(m);
    if (mu == 0) return 0;
    return mu * (totient(d) / totient(m));
}

} // namespace borwein
