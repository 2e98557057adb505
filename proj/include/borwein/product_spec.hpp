#ifndef BORWEIN_PRODUCT_SPEC_HPP
#define BORWEIN_PRODUCT_SPEC_HPP

#include <cstdint>
#include <vector>

namespace borwein {

/* Parameters of the truncated product
 *
 *   $T_{p,s,n}(q) = \prod_{j=0}^{n} \prod_{k=1}^{p-1} (1 - q^{pj+k})^s$,
 *
 * i.e. one factor $(1-q^m)^s$ for every positive $m \le pn+p-1$ with
 * $p \nmid m$.  Requires p prime, s >= 1, n >= 0. */
class ProductSpec {
public:
    ProductSpec(std::int64_t p, std::int64_t s, std::int64_t n);

    std::int64_t p() const { return p_; }
    std::int64_t s() const { return s_; }
    std::int64_t n() const { return n_; }

    /* N_p = p(n+1), the period of the coefficient progressions. */
    std::int64_t modulus() const { return p_ * (n_ + 1); }

    /* Number of distinct factor exponents: (p-1)(n+1). */
    std::int64_t exponent_count() const { return (p_ - 1) * (n_ + 1); }

    /* The factor exponents in increasing order: all m in [1, pn+p-1]
     * with p not dividing m. */
    std::vector<std::int64_t> exponents() const;

    /* deg T = s * (sum of the exponents) = p(p-1)s(n+1)^2 / 2. */
    std::int64_t degree() const {
        return p_ * (p_ - 1) * s_ * (n_ + 1) * (n_ + 1) / 2;
    }

    bool operator==(const ProductSpec& other) const = default;

private:
    std::int64_t p_;
    std::int64_t s_;
    std::int64_t n_;
};

} // namespace borwein

#endif
