#include "borwein/character_sums.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "borwein/errors.hpp"

namespace borwein {

namespace {

/* The sieve analysis is developed for odd primes only; p = 2 stays in
 * the expansion/spectral layers. */
void require_sieve_spec(const ProductSpec& spec) {
    if (spec.p() < 3) {
        throw SpecError("character operations require p >= 3, got " + std::to_string(spec.p()));
    }
}

BigInt factorial(std::int64_t k) {
    BigInt f = 1;
    for (std::int64_t i = 2; i <= k; ++i) f *= i;
    return f;
}

/* Calls fn(c) for every cycle type c_1..c_k with sum i*c_i = k. */
void for_each_cycle_type(std::int64_t k,
                         const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t part,
                                                              std::int64_t remaining) {
        if (part == 0) {
            if (remaining == 0) fn(c);
            return;
        }
        for (std::int64_t count = 0; count * part <= remaining; ++count) {
            c[static_cast<std::size_t>(part - 1)] = count;
            rec(part - 1, remaining - count * part);
        }
        c[static_cast<std::size_t>(part - 1)] = 0;
    };
    rec(k, k);
}

} // namespace

Character::Character(std::int64_t modulus, std::int64_t index)
    : modulus_(modulus), index_(index) {
    if (modulus < 1) throw SpecError("character modulus must be >= 1");
    if (index < 0 || index >= modulus) {
        throw SpecError("character index must satisfy 0 <= x < N, got " + std::to_string(index));
    }
}

std::int64_t Character::order() const {
    return modulus_ / std::gcd(index_, modulus_);
}

CycleType::CycleType(std::vector<std::int64_t> multiplicities)
    : multiplicities_(std::move(multiplicities)) {
    std::int64_t weighted = 0;
    for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
        if (multiplicities_[i] < 0) throw SpecError("cycle multiplicities must be >= 0");
        weighted += static_cast<std::int64_t>(i + 1) * multiplicities_[i];
    }
    if (weighted != k()) {
        throw SpecError("cycle type multiplicities must satisfy sum i*c_i = k");
    }
}

std::vector<CharacterClass> character_classes(const ProductSpec& spec, std::int64_t b) {
    require_sieve_spec(spec);
    std::vector<CharacterClass> out;
    for (std::int64_t d : divisors(spec.modulus())) {
        out.push_back({d, ramanujan_sum(d, b), totient(d)});
    }
    return out;
}

std::int64_t exponent_char_sum(const ProductSpec& spec, const Character& chi) {
    require_sieve_spec(spec);
    if (chi.modulus() != spec.modulus()) {
        throw SpecError("character modulus " + std::to_string(chi.modulus()) +
                        " does not match N_p = " + std::to_string(spec.modulus()));
    }
    const std::int64_t order = chi.order();
    if (order == 1) return (spec.p() - 1) * (spec.modulus() / spec.p());
    if (order == spec.p()) return -(spec.modulus() / spec.p());
    return 0;
}

BigInt cycle_count(const CycleType& ct) {
    BigInt denom = 1;
    const auto& c = ct.multiplicities();
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::int64_t rep = 0; rep < c[i]; ++rep) denom *= static_cast<std::int64_t>(i + 1);
        denom *= factorial(c[i]);
    }
    return factorial(ct.k()) / denom;
}

BigInt z_poly(std::int64_t k, std::span<const BigInt> t) {
    if (k < 0) throw SpecError("z_poly requires k >= 0");
    if (static_cast<std::int64_t>(t.size()) != k) {
        throw SpecError("z_poly needs exactly k values, got " + std::to_string(t.size()));
    }
    BigInt total = 0;
    for_each_cycle_type(k, [&](const std::vector<std::int64_t>& c) {
        BigInt term = cycle_count(CycleType(c));
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::int64_t rep = 0; rep < c[i]; ++rep) term *= t[i];
        }
        total += term;
    });
    return total;
}

namespace {

void validate_tuple_length(const ProductSpec& spec, std::int64_t k) {
    if (k < 0 || k > spec.exponent_count()) {
        throw SpecError("tuple length must satisfy 0 <= k <= |D|, got " + std::to_string(k));
    }
}

void validate_order(const ProductSpec& spec, std::int64_t order) {
    if (order < 1 || spec.modulus() % order != 0) {
        throw SpecError("order " + std::to_string(order) + " does not divide N_p = " +
                        std::to_string(spec.modulus()));
    }
}

} // namespace

BigInt f_psi_closed(const ProductSpec& spec, std::int64_t order, std::int64_t k) {
    require_sieve_spec(spec);
    validate_order(spec, order);
    validate_tuple_length(spec, k);

    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    if (order % spec.p() != 0) {
        /* [u^k](1-u^o)^{|D|/o}: nonzero only at multiples of o. */
        if (k % order != 0) return 0;
        const std::int64_t i = k / order;
        const std::int64_t exponent = spec.exponent_count() / order;
        const BigInt coeff = ((i % 2 == 0) ? 1 : -1) * binomial(exponent, i);
        return sign * factorial(k) * coeff;
    }
    /* (1-u^o)/(1-u^{o/p}) = 1 + u^{o/p} + ... + u^{(p-1)o/p}; raise the
     * p-term geometric block to the power N_p/o by sliding-window
     * convolution. */
    const std::int64_t step = order / spec.p();
    if (k % step != 0) return 0;
    const std::int64_t target = k / step;
    const std::int64_t power = spec.modulus() / order;
    std::vector<BigInt> dp(static_cast<std::size_t>(target) + 1, BigInt(0));
    dp[0] = 1;
    for (std::int64_t f = 0; f < power; ++f) {
        std::vector<BigInt> next(dp.size(), BigInt(0));
        BigInt window = 0;
        for (std::size_t v = 0; v < dp.size(); ++v) {
            window += dp[v];
            if (static_cast<std::int64_t>(v) >= spec.p()) {
                window -= dp[v - static_cast<std::size_t>(spec.p())];
            }
            next[v] = window;
        }
        dp = std::move(next);
    }
    return sign * factorial(k) * dp[static_cast<std::size_t>(target)];
}

BigInt f_psi_bruteforce(const ProductSpec& spec, const Character& psi, std::int64_t k) {
    require_sieve_spec(spec);
    if (psi.modulus() != spec.modulus()) {
        throw SpecError("character modulus does not match N_p");
    }
    validate_tuple_length(spec, k);

    const std::vector<std::int64_t> d = spec.exponents();
    double tuples = 1.0;
    for (std::int64_t i = 0; i < k; ++i) tuples *= static_cast<double>(d.size());
    if (tuples > static_cast<double>(kEnumerationBudget)) {
        throw BudgetError("tuple enumeration exceeds budget of " +
                          std::to_string(kEnumerationBudget));
    }

    const std::int64_t n_mod = spec.modulus();
    std::vector<BigInt> counts(static_cast<std::size_t>(n_mod), BigInt(0));
    std::vector<bool> used(d.size(), false);
    /* Walk all injective k-tuples, tallying the residue x*(sum a_i). */
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t depth,
                                                              std::int64_t sum) {
        if (depth == k) {
            counts[static_cast<std::size_t>((psi.index() * (sum % n_mod)) % n_mod)] += 1;
            return;
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            rec(depth + 1, (sum + d[i]) % n_mod);
            used[i] = false;
        }
    };
    rec(0, 0);
    return root_of_unity_sum(counts, n_mod);
}

BigInt m_fixed_sizes_bruteforce(const ProductSpec& spec,
                                const std::vector<std::int64_t>& sizes,
                                std::int64_t b) {
    require_sieve_spec(spec);
    if (static_cast<std::int64_t>(sizes.size()) != spec.s()) {
        throw SpecError("need one subset size per factor power s");
    }
    if (b < 0 || b >= spec.modulus()) {
        throw SpecError("residue b must satisfy 0 <= b < N_p");
    }
    const std::vector<std::int64_t> d = spec.exponents();
    BigInt combos = 1;
    for (std::int64_t size : sizes) {
        if (size < 0 || size > static_cast<std::int64_t>(d.size())) {
            throw SpecError("subset size must satisfy 0 <= k_i <= |D|");
        }
        combos *= binomial(static_cast<std::int64_t>(d.size()), size);
    }
    if (combos > kEnumerationBudget) {
        throw BudgetError("subset enumeration exceeds budget of " +
                          std::to_string(kEnumerationBudget));
    }

    const std::int64_t n_mod = spec.modulus();
    /* Residue histogram of subset sums, one per coordinate, combined by
     * exact convolution mod N_p. */
    std::vector<BigInt> acc(static_cast<std::size_t>(n_mod), BigInt(0));
    acc[0] = 1;
    for (std::int64_t size : sizes) {
        std::vector<BigInt> hist(static_cast<std::size_t>(n_mod), BigInt(0));
        /* Lexicographic enumeration of all size-element subsets of d. */
        std::vector<std::int64_t> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::int64_t sum = 0;
            for (std::int64_t i : idx) sum += d[static_cast<std::size_t>(i)];
            hist[static_cast<std::size_t>(sum % n_mod)] += 1;
            std::int64_t pos = size - 1;
            while (pos >= 0 &&
                   idx[static_cast<std::size_t>(pos)] ==
                       static_cast<std::int64_t>(d.size()) - size + pos) {
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::int64_t i = pos + 1; i < size; ++i) {
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
            }
        }
        std::vector<BigInt> next(static_cast<std::size_t>(n_mod), BigInt(0));
        for (std::int64_t r = 0; r < n_mod; ++r) {
            if (acc[static_cast<std::size_t>(r)] == 0) continue;
            for (std::int64_t q = 0; q < n_mod; ++q) {
                next[static_cast<std::size_t>((r + q) % n_mod)] +=
                    acc[static_cast<std::size_t>(r)] * hist[static_cast<std::size_t>(q)];
            }
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(b)];
}

BigInt partition_parity_oracle(const ProductSpec& spec, std::int64_t j) {
    require_sieve_spec(spec);
    if (j < 0) throw SpecError("coefficient index must be >= 0");
    const std::int64_t bits = spec.s() * spec.exponent_count();
    if (bits > 23) {  /* 2^23 < 10^7 < 2^24 */
        throw BudgetError("subset-tuple enumeration exceeds budget of " +
                          std::to_string(kEnumerationBudget));
    }
    /* An s-tuple of subsets of D is one subset of the disjoint union of
     * s copies of D.  Count even total size minus odd total size among
     * those with element sum exactly j. */
    const std::vector<std::int64_t> d = spec.exponents();
    std::vector<std::int64_t> pool;
    pool.reserve(static_cast<std::size_t>(bits));
    for (std::int64_t copy = 0; copy < spec.s(); ++copy) {
        pool.insert(pool.end(), d.begin(), d.end());
    }
    BigInt balance = 0;
    std::function<void(std::size_t, std::int64_t, int)> rec = [&](std::size_t i,
                                                                  std::int64_t sum,
                                                                  int parity) {
        if (sum > j) return;  /* all elements are positive */
        if (i == pool.size()) {
            if (sum == j) balance += parity;
            return;
        }
        rec(i + 1, sum, parity);
        rec(i + 1, sum + pool[i], -parity);
    };
    rec(0, 0, 1);
    return balance;
}

BigInt m_charsum_exact(const ProductSpec& spec, std::int64_t b) {
    require_sieve_spec(spec);
    if (b < 0 || b >= spec.modulus()) {
        throw SpecError("residue b must satisfy 0 <= b < N_p, got " + std::to_string(b));
    }
    const std::int64_t n_mod = spec.modulus();
    BigInt acc = 0;
    for (std::int64_t d : divisors(n_mod)) {
        if (d % spec.p() != 0) continue;
        acc += BigInt(ramanujan_sum(d, b)) * big_pow(spec.p(), spec.s() * (n_mod / d));
    }
    if (acc % n_mod != 0) {
        throw CheckError("character sum for b = " + std::to_string(b) +
                         " is not divisible by N_p");
    }
    return acc / n_mod;
}

bool alternating_binomial_check(std::int64_t size_d) {
    if (size_d < 0) throw SpecError("sizeD must be >= 0");
    BigInt sum = 0;
    for (std::int64_t k = 0; k <= size_d; ++k) {
        sum += ((k % 2 == 0) ? 1 : -1) * binomial(size_d, k);
    }
    return sum == 0;
}

bool p_term_vanishing_check(const ProductSpec& spec, std::int64_t order) {
    require_sieve_spec(spec);
    validate_order(spec, order);
    if (order <= 1 || order % spec.p() == 0) {
        throw SpecError("order must be > 1 and coprime to p, got " + std::to_string(order));
    }
    /* (1-u^o)^{|D|/o} has degree exactly |D|, so the truncated
     * coefficient sum over 0 <= k <= |D| is the full value at u = 1. */
    const std::int64_t exponent = spec.exponent_count() / order;
    BigInt sum = 0;
    for (std::int64_t i = 0; i * order <= spec.exponent_count(); ++i) {
        sum += ((i % 2 == 0) ? 1 : -1) * binomial(exponent, i);
    }
    return sum == 0;
}

} // namespace borwein
