#ifndef BORWEIN_SERIALIZATION_HPP
#define BORWEIN_SERIALIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "borwein/big_int.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/product_spec.hpp"
#include "borwein/progression.hpp"
#include "borwein/supnorm.hpp"
#include "borwein/verification.hpp"

namespace borwein {

using Json = nlohmann::ordered_json;

/* Big integers serialize as decimal strings in both JSON and CSV so no
 * consumer ever squeezes them through a 53-bit double. */
std::string to_decimal(const BigInt& value);
BigInt from_decimal(const std::string& text);

/* {"p":..,"s":..,"n":..,"degree":..,"coeffs":["1","-1",..]} */
Json polynomial_json(const ProductSpec& spec, const IntPolynomial& poly);
IntPolynomial polynomial_from_json(const Json& j);
/* index,coeff rows. */
std::string polynomial_csv(const ProductSpec& spec, const IntPolynomial& poly);

struct MsumRow {
    std::int64_t p = 0;
    std::int64_t s = 0;
    std::int64_t n = 0;
    /* Progression modulus and offset; modulus == N_p when querying the
     * canonical residues, but the CLI also allows other multiples of p. */
    std::int64_t modulus = 0;
    std::int64_t offset = 0;
    std::optional<BigInt> m_direct;
    std::optional<BigInt> m_charsum;
};

std::string msum_csv(const std::vector<MsumRow>& rows);
Json msum_json(const std::vector<MsumRow>& rows);

/* Header: p,s,n,b,m_direct,m_charsum,main_num,main_den,bound_ok,sign_ok */
std::string verification_csv(const std::vector<VerificationRow>& rows);
Json verification_json(const std::vector<VerificationRow>& rows);

std::string ratio_csv(const std::vector<RatioRow>& rows);
Json ratio_json(const std::vector<RatioRow>& rows);

/* Header: n,max_abs_coeff,log_p_ratio,supnorm_estimate,samples */
std::string spectral_csv(const std::vector<SpectralRow>& rows, bool with_trend);
Json spectral_json(const std::vector<SpectralRow>& rows, bool with_trend);

std::string recursions_csv(const std::vector<RecursionCheck>& rows);
Json recursions_json(const std::vector<RecursionCheck>& rows);

/* Deterministic double rendering (shortest round-trip form). */
std::string format_double(double value);

std::string iso8601_utc_now();

} // namespace borwein

#endif
