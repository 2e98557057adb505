#include "borwein/polynomial.hpp"

#include <algorithm>
#include <string>

#include "borwein/errors.hpp"

namespace borwein {

namespace {
const BigInt kZero = 0;
} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({BigInt(1)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t d) {
    if (c == 0) return IntPolynomial();
    std::vector<BigInt> coeffs(d + 1, BigInt(0));
    coeffs[d] = std::move(c);
    return IntPolynomial(std::move(coeffs));
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigInt IntPolynomial::eval_at_one() const {
    BigInt sum = 0;
    for (const BigInt& c : coeffs_) sum += c;
    return sum;
}

BigInt IntPolynomial::max_abs_coeff() const {
    BigInt best = 0;
    for (const BigInt& c : coeffs_) {
        BigInt a = abs(c);
        if (a > best) best = std::move(a);
    }
    return best;
}

BigInt IntPolynomial::abs_coeff_sum() const {
    BigInt sum = 0;
    for (const BigInt& c : coeffs_) sum += abs(c);
    return sum;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> out = coeffs_;
    for (BigInt& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return IntPolynomial();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(std::size_t d) const {
    if (is_zero() || d == 0) {
        IntPolynomial out;
        out.coeffs_ = coeffs_;
        return out;
    }
    std::vector<BigInt> out(coeffs_.size() + d, BigInt(0));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(d));
    return IntPolynomial(std::move(out));
}

std::optional<std::size_t> IntPolynomial::first_mismatch(const IntPolynomial& a,
                                                         const IntPolynomial& b) {
    const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.coeff(i) != b.coeff(i)) return i;
    }
    return std::nullopt;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial mul_by_sparse_factor(const IntPolynomial& poly, std::int64_t m,
                                   std::int64_t times, std::size_t budget) {
    if (m < 1) throw SpecError("factor exponent must be >= 1, got " + std::to_string(m));
    if (times < 1) throw SpecError("factor multiplicity must be >= 1, got " + std::to_string(times));
    if (poly.is_zero()) return IntPolynomial();

    const std::size_t new_size =
        poly.coefficients().size() + static_cast<std::size_t>(m) * static_cast<std::size_t>(times);
    if (new_size > budget) {
        throw BudgetError("coefficient budget exceeded: need " + std::to_string(new_size) +
                          ", budget " + std::to_string(budget));
    }

    std::vector<BigInt> c(new_size, BigInt(0));
    std::copy(poly.coefficients().begin(), poly.coefficients().end(), c.begin());
    /* One pass of c[i] -= c[i-m] (i descending) multiplies by 1 - q^m. */
    std::size_t deg = poly.coefficients().size() - 1;
    for (std::int64_t t = 0; t < times; ++t) {
        deg += static_cast<std::size_t>(m);
        for (std::size_t i = deg; i >= static_cast<std::size_t>(m); --i) {
            c[i] -= c[i - static_cast<std::size_t>(m)];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial expand_product(const ProductSpec& spec, std::size_t budget) {
    const std::size_t size = static_cast<std::size_t>(spec.degree()) + 1;
    if (size > budget) {
        throw BudgetError("coefficient budget exceeded: T has " + std::to_string(size) +
                          " coefficients, budget " + std::to_string(budget));
    }

    std::vector<BigInt> c(size, BigInt(0));
    c[0] = 1;
    std::size_t deg = 0;
    for (const std::int64_t m : spec.exponents()) {
        const std::size_t um = static_cast<std::size_t>(m);
        for (std::int64_t t = 0; t < spec.s(); ++t) {
            deg += um;
            for (std::size_t i = deg; i >= um; --i) {
                c[i] -= c[i - um];
            }
        }
    }
    return IntPolynomial(std::move(c));
}

} // namespace borwein
