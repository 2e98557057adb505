#ifndef BORWEIN_POLYNOMIAL_HPP
#define BORWEIN_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "borwein/big_int.hpp"
#include "borwein/product_spec.hpp"

namespace borwein {

/* Default cap on the number of stored coefficients (2^26).  Callers can
 * raise or lower it per call; the CLI also honours BORWEIN_BUDGET. */
inline constexpr std::size_t kDefaultCoefficientBudget = std::size_t{1} << 26;

/* Dense integer polynomial.  Canonical form: the coefficient vector has
 * no trailing zeros, so the zero polynomial is the empty vector and
 * degree() == -1 for it. */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial one();
    /* c * q^d */
    static IntPolynomial monomial(BigInt c, std::size_t d);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /* Coefficient of q^i; zero beyond the degree. */
    const BigInt& coeff(std::size_t i) const;

    BigInt eval_at_one() const;
    BigInt max_abs_coeff() const;
    BigInt abs_coeff_sum() const;

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator-() const;
    /* Schoolbook product; quadratic, meant for small operands. */
    IntPolynomial operator*(const IntPolynomial& other) const;
    /* this * q^d */
    IntPolynomial shifted(std::size_t d) const;

    bool operator==(const IntPolynomial& other) const = default;

    /* Index of the first differing coefficient, or nullopt if equal. */
    static std::optional<std::size_t> first_mismatch(const IntPolynomial& a,
                                                     const IntPolynomial& b);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/* poly * (1 - q^m)^times via the shift-and-subtract pass
 * c[i] -= c[i-m], i descending, repeated `times` times.  Throws
 * BudgetError if the result would store more than `budget`
 * coefficients. */
IntPolynomial mul_by_sparse_factor(const IntPolynomial& poly, std::int64_t m,
                                   std::int64_t times,
                                   std::size_t budget = kDefaultCoefficientBudget);

/* Full expansion of $T_{p,s,n}$, multiplying factors in increasing
 * exponent order.  Throws BudgetError if deg T + 1 > budget. */
IntPolynomial expand_product(const ProductSpec& spec,
                             std::size_t budget = kDefaultCoefficientBudget);

} // namespace borwein

#endif
