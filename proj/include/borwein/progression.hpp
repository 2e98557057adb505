#ifndef BORWEIN_PROGRESSION_HPP
#define BORWEIN_PROGRESSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "borwein/big_int.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/product_spec.hpp"

namespace borwein {

/* The arithmetic progression d, d+a, d+2a, ... of coefficient indices.
 * The modulus a must be a multiple of p so the progression stays inside
 * one residue class mod p; that class is residue(). */
class ProgressionQuery {
public:
    ProgressionQuery(std::int64_t modulus, std::int64_t offset, std::int64_t p);

    std::int64_t modulus() const { return modulus_; }
    std::int64_t offset() const { return offset_; }
    std::int64_t residue() const { return offset_ % p_; }

private:
    std::int64_t modulus_;
    std::int64_t offset_;
    std::int64_t p_;
};

/* Sum of the coefficients of `poly` whose index lies in the progression. */
BigInt direct_progression_sum(const IntPolynomial& poly, const ProgressionQuery& query);

/* The residue decomposition $T(q) = \sum_{j=0}^{p-1} q^j T_j(q^p)$:
 * parts[j][m] is the coefficient of $q^{pm+j}$ in T. */
std::vector<IntPolynomial> split_residues(const IntPolynomial& poly,
                                          const ProductSpec& spec);

/* $M_{p,s,n}(b) = \sum_{\ell \ge 0} t_{N_p \ell + b}$ computed by direct
 * summation over the expanded coefficients; 0 <= b < N_p. */
BigInt m_direct(const IntPolynomial& poly, const ProductSpec& spec, std::int64_t b);

/* Convenience overload that expands the product first. */
BigInt m_direct(const ProductSpec& spec, std::int64_t b,
                std::size_t budget = kDefaultCoefficientBudget);

/* The residue parts of the classically studied cases under their
 * customary names and signs:
 *   (p,s) = (3,1):  T = A(q^3) - q B(q^3) - q^2 C(q^3)
 *   (p,s) = (3,2):  T = alpha(q^3) - q beta(q^3) - q^2 gamma(q^3)
 *   (p,s) = (5,1):  T = nu(q^5) - q phi(q^5) - q^2 chi(q^5)
 *                       - q^3 psi(q^5) - q^4 omega(q^5)
 * All named parts are conjecturally nonnegative. */
struct NamedPart {
    std::string name;
    IntPolynomial poly;
};

std::vector<NamedPart> extract_borwein_polynomials(const std::vector<IntPolynomial>& parts,
                                                   const ProductSpec& spec);

/* One level of the coupled recursion for the (3,1) parts.  With
 * $A_n, B_n, C_n$ extracted from $T_{3,1,n}$ the identities are
 *
 *   A_n = (1+q^{2n+1}) A_{n-1} + q^{n+1} (B_{n-1} + C_{n-1})
 *   B_n = q^n A_{n-1} + (1+q^{2n+1}) B_{n-1} - q^{n+1} C_{n-1}
 *   C_n = q^n A_{n-1} - q^n B_{n-1} + (1+q^{2n+1}) C_{n-1}
 *
 * which follow from T_n = (1-q^{3n+1})(1-q^{3n+2}) T_{n-1} split by
 * residue class. */
struct RecursionCheck {
    std::int64_t n = 0;
    bool passed = false;
    /* On failure: which part ("A"/"B"/"C") and the first differing
     * coefficient index. */
    std::string failed_part;
    std::int64_t mismatch_index = -1;
};

RecursionCheck check_andrews_step(std::int64_t n,
                                  const IntPolynomial& a_prev,
                                  const IntPolynomial& b_prev,
                                  const IntPolynomial& c_prev,
                                  const IntPolynomial& a_cur,
                                  const IntPolynomial& b_cur,
                                  const IntPolynomial& c_cur);

/* Verifies the recursion for n = 1..n_max against freshly expanded
 * products.  Throws nothing; inspect the per-step results. */
std::vector<RecursionCheck> check_andrews_recursions(std::int64_t n_max,
                                                     std::size_t budget = kDefaultCoefficientBudget);

} // namespace borwein

#endif
