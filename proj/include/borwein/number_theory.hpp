#ifndef BORWEIN_NUMBER_THEORY_HPP
#define BORWEIN_NUMBER_THEORY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "borwein/big_int.hpp"

namespace borwein {

bool is_prime(std::int64_t m);

/* (prime, exponent) pairs with primes increasing. */
std::vector<std::pair<std::int64_t, std::int64_t>> factorize(std::int64_t m);

/* Moebius mu(m), m >= 1. */
std::int64_t mobius(std::int64_t m);

/* Euler totient phi(m), m >= 1. */
std::int64_t totient(std::int64_t m);

/* All divisors of m in increasing order, m >= 1. */
std::vector<std::int64_t> divisors(std::int64_t m);

/* Exact binomial coefficient, 0 for k < 0 or k > n. */
BigInt binomial(std::int64_t n, std::int64_t k);

/* Coefficients of the N-th cyclotomic polynomial, constant term first.
 * Computed by exact division of x^N - 1 by the Phi_d with d | N, d < N. */
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

/* Exact value of $\sum_r counts[r] \zeta_N^r$ for a primitive N-th root
 * of unity, obtained by reducing modulo Phi_N.  The inputs arising here
 * always reduce to a rational integer; throws CheckError otherwise. */
BigInt root_of_unity_sum(std::span<const BigInt> counts, std::int64_t n);

/* Ramanujan sum $c_d(b) = \sum_{x: \gcd(x,d)=1} e^{2\pi i x b / d}
 * = \mu(d/g)\,\phi(d)/\phi(d/g)$ with $g = \gcd(d, b)$. */
std::int64_t ramanujan_sum(std::int64_t d, std::int64_t b);

} // namespace borwein

#endif
