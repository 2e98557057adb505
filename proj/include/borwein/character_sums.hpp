#ifndef BORWEIN_CHARACTER_SUMS_HPP
#define BORWEIN_CHARACTER_SUMS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "borwein/big_int.hpp"
#include "borwein/number_theory.hpp"
#include "borwein/product_spec.hpp"

namespace borwein {

/* Hard cap on brute-force enumeration sizes (tuples or subset tuples). */
inline constexpr std::int64_t kEnumerationBudget = 10'000'000;

/* Additive character $\psi(y) = e^{2\pi i x y / N}$ of Z_N.  The order
 * is N/gcd(x,N); x = 0 is the trivial character. */
class Character {
public:
    Character(std::int64_t modulus, std::int64_t index);

    std::int64_t modulus() const { return modulus_; }
    std::int64_t index() const { return index_; }
    std::int64_t order() const;
    bool is_trivial() const { return index_ == 0; }

private:
    std::int64_t modulus_;
    std::int64_t index_;
};

/* Cycle type $(1^{c_1} 2^{c_2} \cdots k^{c_k})$ of a permutation in S_k,
 * stored as the multiplicities c_1..c_k with $\sum i c_i = k$. */
class CycleType {
public:
    explicit CycleType(std::vector<std::int64_t> multiplicities);

    std::int64_t k() const { return static_cast<std::int64_t>(multiplicities_.size()); }
    const std::vector<std::int64_t>& multiplicities() const { return multiplicities_; }

private:
    std::vector<std::int64_t> multiplicities_;
};

/* The characters of Z_{N_p} of exact order d, aggregated: their number
 * phi(d) and their total contribution weight c_d(b) at residue b. */
struct CharacterClass {
    std::int64_t divisor = 1;
    std::int64_t weight = 0;
    std::int64_t count = 0;
};

/* One class per divisor d of N_p; counts total N_p. */
std::vector<CharacterClass> character_classes(const ProductSpec& spec, std::int64_t b);

/* $s_D(\chi) = \sum_{a \in D} \chi(a)$ over the factor exponents D,
 * taken mod N_p.  Closed form by order o of chi:
 * |D| = (p-1)N_p/p if o = 1, -N_p/p if o = p, and 0 otherwise. */
std::int64_t exponent_char_sum(const ProductSpec& spec, const Character& chi);

/* Number of permutations in S_k with the given cycle type:
 * $k! / \prod_i i^{c_i} c_i!$. */
BigInt cycle_count(const CycleType& ct);

/* $Z_k(t_1,..,t_k) = \sum_{\sum i c_i = k} N(c) \prod t_i^{c_i}$, the
 * polynomial with EGF $\exp(\sum_i t_i u^i / i)$, by enumeration of the
 * integer partitions of k. */
BigInt z_poly(std::int64_t k, std::span<const BigInt> t);

/* $F_\psi = \sum \psi(a_1 + .. + a_k)$ over distinct-coordinate
 * k-tuples from D.  Depends on psi only through its order o; with
 * |D| = (p-1)N_p/p the closed form is
 *
 *   (-1)^k k! [u^k] (1 - u^o)^{|D|/o}                  if p does not divide o
 *   (-1)^k k! [u^k] ((1 - u^o)/(1 - u^{o/p}))^{N_p/o}  if p divides o.
 */
BigInt f_psi_closed(const ProductSpec& spec, std::int64_t order, std::int64_t k);

/* Same sum by exhausting all |D|^k tuples, accumulating residue counts
 * and reducing the resulting root-of-unity combination exactly.  Budget:
 * |D|^k <= kEnumerationBudget. */
BigInt f_psi_bruteforce(const ProductSpec& spec, const Character& psi, std::int64_t k);

/* Number of s-tuples of subsets (V_1,..,V_s), V_i inside D with
 * |V_i| = sizes[i], whose total element sum is b mod N_p.  Budget:
 * prod C(|D|,sizes[i]) <= kEnumerationBudget. */
BigInt m_fixed_sizes_bruteforce(const ProductSpec& spec,
                                const std::vector<std::int64_t>& sizes,
                                std::int64_t b);

/* Coefficient t_j recomputed from first principles: over s-tuples of
 * subsets of D with total element sum exactly j, the number with even
 * total size minus the number with odd total size. */
BigInt partition_parity_oracle(const ProductSpec& spec, std::int64_t j);

/* Exact progression sum via characters:
 *
 *   $M(b) = \frac{1}{N_p} \sum_{d | N_p,\ p | d} c_d(b)\, p^{s N_p / d}$.
 *
 * Characters of order not divisible by p contribute nothing (their
 * coefficient-sum factor is the full coefficient sum of a polynomial
 * vanishing at 1); the surviving orders d contribute the full
 * multinomial sum p^{s N_p / d}, and grouping same-order characters
 * turns the b-twist into a Ramanujan sum.  The division by N_p must be
 * exact; guarded by m_direct equivalence in the test suites. */
BigInt m_charsum_exact(const ProductSpec& spec, std::int64_t b);

/* $\sum_k (-1)^k \binom{sizeD}{k} = 0$, exactly (true for sizeD >= 1). */
bool alternating_binomial_check(std::int64_t size_d);

/* For p not dividing `order`, order > 1: the coefficients of
 * $(1-u^{order})^{(p-1)N_p/(p\,order)}$ over 0 <= k <= |D| sum to zero
 * (the polynomial has degree <= |D| and vanishes at u = 1). */
bool p_term_vanishing_check(const ProductSpec& spec, std::int64_t order);

} // namespace borwein

#endif
