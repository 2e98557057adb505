#include "borwein/progression.hpp"

#include <string>

#include "borwein/errors.hpp"

namespace borwein {

ProgressionQuery::ProgressionQuery(std::int64_t modulus, std::int64_t offset, std::int64_t p)
    : modulus_(modulus), offset_(offset), p_(p) {
    if (p < 2 || modulus < p || modulus % p != 0) {
        throw SpecError("progression modulus must be a positive multiple of p");
    }
    if (offset < 0 || offset >= modulus) {
        throw SpecError("progression offset must satisfy 0 <= d < a, got " +
                        std::to_string(offset));
    }
}

BigInt direct_progression_sum(const IntPolynomial& poly, const ProgressionQuery& query) {
    BigInt sum = 0;
    const auto& c = poly.coefficients();
    for (std::size_t i = static_cast<std::size_t>(query.offset()); i < c.size();
         i += static_cast<std::size_t>(query.modulus())) {
        sum += c[i];
    }
    return sum;
}

std::vector<IntPolynomial> split_residues(const IntPolynomial& poly, const ProductSpec& spec) {
    if (poly.degree() != spec.degree()) {
        throw SpecError("polynomial degree " + std::to_string(poly.degree()) +
                        " does not match spec degree " + std::to_string(spec.degree()));
    }
    const std::size_t p = static_cast<std::size_t>(spec.p());
    std::vector<std::vector<BigInt>> parts(p);
    const auto& c = poly.coefficients();
    for (std::size_t j = 0; j < p; ++j) {
        parts[j].reserve(c.size() / p + 1);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        parts[i % p].push_back(c[i]);
    }
    std::vector<IntPolynomial> out;
    out.reserve(p);
    for (auto& part : parts) {
        out.emplace_back(std::move(part));
    }
    return out;
}

BigInt m_direct(const IntPolynomial& poly, const ProductSpec& spec, std::int64_t b) {
    if (b < 0 || b >= spec.modulus()) {
        throw SpecError("residue b must satisfy 0 <= b < N_p, got " + std::to_string(b));
    }
    return direct_progression_sum(poly, ProgressionQuery(spec.modulus(), b, spec.p()));
}

BigInt m_direct(const ProductSpec& spec, std::int64_t b, std::size_t budget) {
    return m_direct(expand_product(spec, budget), spec, b);
}

std::vector<NamedPart> extract_borwein_polynomials(const std::vector<IntPolynomial>& parts,
                                                   const ProductSpec& spec) {
    if (parts.size() != static_cast<std::size_t>(spec.p())) {
        throw SpecError("residue split has wrong number of parts");
    }
    std::vector<std::string> names;
    if (spec.p() == 3 && spec.s() == 1) {
        names = {"A", "B", "C"};
    } else if (spec.p() == 3 && spec.s() == 2) {
        names = {"alpha", "beta", "gamma"};
    } else if (spec.p() == 5 && spec.s() == 1) {
        names = {"nu", "phi", "chi", "psi", "omega"};
    } else {
        throw SpecError("no named decomposition for (p,s) = (" + std::to_string(spec.p()) +
                        "," + std::to_string(spec.s()) + ")");
    }
    /* The names absorb the minus signs of the alternating decomposition
     * T = parts[0](q^p) + q parts[1](q^p) + ..., so every part beyond
     * the first is negated. */
    std::vector<NamedPart> out;
    out.reserve(names.size());
    for (std::size_t j = 0; j < names.size(); ++j) {
        out.push_back({names[j], j == 0 ? parts[j] : -parts[j]});
    }
    return out;
}

RecursionCheck check_andrews_step(std::int64_t n,
                                  const IntPolynomial& a_prev,
                                  const IntPolynomial& b_prev,
                                  const IntPolynomial& c_prev,
                                  const IntPolynomial& a_cur,
                                  const IntPolynomial& b_cur,
                                  const IntPolynomial& c_cur) {
    const std::size_t un = static_cast<std::size_t>(n);
    const IntPolynomial with_band = a_prev + a_prev.shifted(2 * un + 1);  /* (1+q^{2n+1})A */
    const IntPolynomial a_rhs = with_band + (b_prev + c_prev).shifted(un + 1);
    const IntPolynomial b_rhs =
        a_prev.shifted(un) + b_prev + b_prev.shifted(2 * un + 1) - c_prev.shifted(un + 1);
    const IntPolynomial c_rhs =
        a_prev.shifted(un) - b_prev.shifted(un) + c_prev + c_prev.shifted(2 * un + 1);

    RecursionCheck result;
    result.n = n;
    result.passed = true;
    const std::pair<const IntPolynomial*, const IntPolynomial*> sides[] = {
        {&a_cur, &a_rhs}, {&b_cur, &b_rhs}, {&c_cur, &c_rhs}};
    const char* names[] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        if (auto idx = IntPolynomial::first_mismatch(*sides[i].first, *sides[i].second)) {
            result.passed = false;
            result.failed_part = names[i];
            result.mismatch_index = static_cast<std::int64_t>(*idx);
            break;
        }
    }
    return result;
}

std::vector<RecursionCheck> check_andrews_recursions(std::int64_t n_max, std::size_t budget) {
    if (n_max < 1) throw SpecError("recursion check requires n_max >= 1");
    std::vector<RecursionCheck> out;
    out.reserve(static_cast<std::size_t>(n_max));

    ProductSpec prev_spec(3, 1, 0);
    std::vector<NamedPart> prev =
        extract_borwein_polynomials(split_residues(expand_product(prev_spec, budget), prev_spec),
                                    prev_spec);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        ProductSpec cur_spec(3, 1, n);
        std::vector<NamedPart> cur =
            extract_borwein_polynomials(split_residues(expand_product(cur_spec, budget), cur_spec),
                                        cur_spec);
        out.push_back(check_andrews_step(n, prev[0].poly, prev[1].poly, prev[2].poly,
                                         cur[0].poly, cur[1].poly, cur[2].poly));
        prev = std::move(cur);
    }
    return out;
}

} // namespace borwein
