#include "borwein/serialization.hpp"

#include <charconv>
#include <ctime>
#include <sstream>

#include "borwein/errors.hpp"

namespace borwein {

namespace {

/* True when every row queries the canonical modulus N_p, in which case
 * the offset column is the residue b. */
bool canonical_offsets(const std::vector<MsumRow>& rows) {
    for (const MsumRow& row : rows) {
        if (row.modulus != row.p * (row.n + 1)) return false;
    }
    return true;
}

const char* bool_str(bool v) { return v ? "true" : "false"; }

} // namespace

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt from_decimal(const std::string& text) {
    const std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
    if (text.size() == start) throw SpecError("not a decimal integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw SpecError("not a decimal integer: '" + text + "'");
        }
    }
    return BigInt(text);
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

Json polynomial_json(const ProductSpec& spec, const IntPolynomial& poly) {
    Json j;
    j["p"] = spec.p();
    j["s"] = spec.s();
    j["n"] = spec.n();
    j["degree"] = poly.degree();
    Json coeffs = Json::array();
    for (const BigInt& c : poly.coefficients()) coeffs.push_back(to_decimal(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

IntPolynomial polynomial_from_json(const Json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(from_decimal(c.get<std::string>()));
    }
    return IntPolynomial(std::move(coeffs));
}

std::string polynomial_csv(const ProductSpec& spec, const IntPolynomial& poly) {
    (void)spec;
    std::ostringstream out;
    out << "index,coeff\n";
    const auto& coeffs = poly.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out << i << ',' << to_decimal(coeffs[i]) << '\n';
    }
    return out.str();
}

std::string msum_csv(const std::vector<MsumRow>& rows) {
    const bool canonical = canonical_offsets(rows);
    std::ostringstream out;
    out << (canonical ? "p,s,n,b" : "p,s,n,a,d");
    const bool direct = !rows.empty() && rows.front().m_direct.has_value();
    const bool charsum = !rows.empty() && rows.front().m_charsum.has_value();
    if (direct) out << ",m_direct";
    if (charsum) out << ",m_charsum";
    out << '\n';
    for (const MsumRow& row : rows) {
        out << row.p << ',' << row.s << ',' << row.n << ',';
        if (!canonical) out << row.modulus << ',';
        out << row.offset;
        if (direct) out << ',' << to_decimal(row.m_direct.value());
        if (charsum) out << ',' << to_decimal(row.m_charsum.value());
        out << '\n';
    }
    return out.str();
}

Json msum_json(const std::vector<MsumRow>& rows) {
    const bool canonical = canonical_offsets(rows);
    Json arr = Json::array();
    for (const MsumRow& row : rows) {
        Json j;
        j["p"] = row.p;
        j["s"] = row.s;
        j["n"] = row.n;
        if (canonical) {
            j["b"] = row.offset;
        } else {
            j["a"] = row.modulus;
            j["d"] = row.offset;
        }
        if (row.m_direct) j["m_direct"] = to_decimal(*row.m_direct);
        if (row.m_charsum) j["m_charsum"] = to_decimal(*row.m_charsum);
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string verification_csv(const std::vector<VerificationRow>& rows) {
    std::ostringstream out;
    out << "p,s,n,b,m_direct,m_charsum,main_num,main_den,bound_ok,sign_ok\n";
    for (const VerificationRow& row : rows) {
        out << row.p << ',' << row.s << ',' << row.n << ',' << row.b << ','
            << to_decimal(row.m_direct) << ',' << to_decimal(row.m_charsum) << ','
            << to_decimal(numerator(row.main)) << ',' << to_decimal(denominator(row.main)) << ','
            << bool_str(row.within_bound) << ',' << bool_str(row.sign_ok) << '\n';
    }
    return out.str();
}

Json verification_json(const std::vector<VerificationRow>& rows) {
    Json arr = Json::array();
    for (const VerificationRow& row : rows) {
        Json j;
        j["p"] = row.p;
        j["s"] = row.s;
        j["n"] = row.n;
        j["b"] = row.b;
        j["m_direct"] = to_decimal(row.m_direct);
        j["m_charsum"] = to_decimal(row.m_charsum);
        j["main_num"] = to_decimal(numerator(row.main));
        j["main_den"] = to_decimal(denominator(row.main));
        j["bound_ok"] = row.within_bound;
        j["sign_ok"] = row.sign_ok;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "n,ratio_num,ratio_den,ratio\n";
    for (const RatioRow& row : rows) {
        out << row.n << ',' << to_decimal(numerator(row.ratio)) << ','
            << to_decimal(denominator(row.ratio)) << ',' << format_double(row.ratio_value)
            << '\n';
    }
    return out.str();
}

Json ratio_json(const std::vector<RatioRow>& rows) {
    Json arr = Json::array();
    for (const RatioRow& row : rows) {
        Json j;
        j["n"] = row.n;
        j["ratio_num"] = to_decimal(numerator(row.ratio));
        j["ratio_den"] = to_decimal(denominator(row.ratio));
        j["ratio"] = row.ratio_value;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string spectral_csv(const std::vector<SpectralRow>& rows, bool with_trend) {
    std::ostringstream out;
    out << "n,max_abs_coeff,log_p_ratio,supnorm_estimate,samples";
    if (with_trend) out << ",trend";
    out << '\n';
    for (const SpectralRow& row : rows) {
        out << row.n << ',' << to_decimal(row.max_abs) << ',' << format_double(row.log_p_ratio)
            << ',' << format_double(row.supnorm.value) << ',' << row.supnorm.samples;
        if (with_trend) out << ',' << format_double(row.trend);
        out << '\n';
    }
    return out.str();
}

Json spectral_json(const std::vector<SpectralRow>& rows, bool with_trend) {
    Json arr = Json::array();
    for (const SpectralRow& row : rows) {
        Json j;
        j["n"] = row.n;
        j["max_abs_coeff"] = to_decimal(row.max_abs);
        j["log_p_ratio"] = row.log_p_ratio;
        j["supnorm_estimate"] = row.supnorm.value;
        j["samples"] = row.supnorm.samples;
        if (with_trend) j["trend"] = row.trend;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string recursions_csv(const std::vector<RecursionCheck>& rows) {
    std::ostringstream out;
    out << "n,passed,failed_part,mismatch_index\n";
    for (const RecursionCheck& row : rows) {
        out << row.n << ',' << bool_str(row.passed) << ',' << row.failed_part << ','
            << row.mismatch_index << '\n';
    }
    return out.str();
}

Json recursions_json(const std::vector<RecursionCheck>& rows) {
    Json arr = Json::array();
    for (const RecursionCheck& row : rows) {
        Json j;
        j["n"] = row.n;
        j["passed"] = row.passed;
        if (!row.passed) {
            j["failed_part"] = row.failed_part;
            j["mismatch_index"] = row.mismatch_index;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return std::string(buf);
}

} // namespace borwein
