#include <doctest.h>

#include <cctype>
#include <charconv>
#include <string>

#include "borwein/errors.hpp"
#include "borwein/polynomial.hpp"
#include "borwein/product_spec.hpp"
#include "borwein/progression.hpp"
#include "borwein/serialization.hpp"
#include "borwein/verification.hpp"

using namespace borwein;

TEST_CASE("big integers round-trip through decimal strings") {
    CHECK(to_decimal(BigInt(0)) == "0");
    CHECK(to_decimal(BigInt(-42)) == "-42");
    const BigInt wide("123456789012345678901234567890");
    CHECK(from_decimal(to_decimal(wide)) == wide);
    CHECK(from_decimal("-7") == -7);
    CHECK_THROWS_AS(from_decimal("12x"), SpecError);
    CHECK_THROWS_AS(from_decimal(""), SpecError);
}

TEST_CASE("polynomial json schema and round trip") {
    ProductSpec spec(3, 1, 1);
    IntPolynomial poly = expand_product(spec);
    Json j = polynomial_json(spec, poly);

    CHECK(j["p"] == 3);
    CHECK(j["s"] == 1);
    CHECK(j["n"] == 1);
    CHECK(j["degree"] == 12);
    REQUIRE(j["coeffs"].is_array());
    REQUIRE(j["coeffs"].size() == 13);
    CHECK(j["coeffs"][0] == "1");
    CHECK(j["coeffs"][1] == "-1");
    CHECK(j["coeffs"][6] == "2");

    auto it = j.begin();
    CHECK(it.key() == "p");
    ++it;
    CHECK(it.key() == "s");

    CHECK(polynomial_from_json(j) == poly);
}

TEST_CASE("polynomial csv layout") {
    ProductSpec spec(3, 1, 0);
    std::string csv = polynomial_csv(spec, expand_product(spec));
    CHECK(csv == "index,coeff\n0,1\n1,-1\n2,-1\n3,1\n");
}

TEST_CASE("progression sum csv layouts") {
    MsumRow canonical;
    canonical.p = 3;
    canonical.s = 1;
    canonical.n = 1;
    canonical.modulus = 6;
    canonical.offset = 0;
    canonical.m_direct = BigInt(4);
    canonical.m_charsum = BigInt(4);
    CHECK(msum_csv({canonical}) == "p,s,n,b,m_direct,m_charsum\n3,1,1,0,4,4\n");

    MsumRow direct_only = canonical;
    direct_only.m_charsum.reset();
    CHECK(msum_csv({direct_only}) == "p,s,n,b,m_direct\n3,1,1,0,4\n");

    MsumRow general = canonical;
    general.modulus = 12;
    general.offset = 7;
    general.m_direct = BigInt(-1);
    general.m_charsum.reset();
    CHECK(msum_csv({general}) == "p,s,n,a,d,m_direct\n3,1,1,12,7,-1\n");

    Json j = msum_json({canonical});
    REQUIRE(j.is_array());
    CHECK(j[0]["b"] == 0);
    CHECK(j[0]["m_direct"] == "4");
    CHECK(j[0]["m_charsum"] == "4");
}

TEST_CASE("verification csv header and row format") {
    auto rows = verify_grid({3}, {1}, 1);
    std::string csv = verification_csv(rows);
    CHECK(csv.rfind("p,s,n,b,m_direct,m_charsum,main_num,main_den,bound_ok,sign_ok\n", 0)
          == 0);
    CHECK(csv.find("3,1,1,0,4,4,3,1,true,true\n") != std::string::npos);
    CHECK(csv.find("3,1,1,1,-1,-1,-3,2,true,true\n") != std::string::npos);

    Json j = verification_json(rows);
    REQUIRE(j.is_array());
    CHECK(j.size() == rows.size());
    CHECK(j[0]["p"] == 3);
    CHECK(j[0]["m_direct"].is_string());
    CHECK(j[0]["bound_ok"].is_boolean());
}

TEST_CASE("ratio csv layout") {
    auto rows = ratio_trend(3, 1, 0, 1);
    std::string csv = ratio_csv(rows);
    CHECK(csv.rfind("n,ratio_num,ratio_den,ratio\n", 0) == 0);
    CHECK(csv.find("\n1,4,3,") != std::string::npos);
}

TEST_CASE("spectral and recursion csv headers") {
    auto rows = borw1_check(3, 1, 0, 1);
    std::string csv = spectral_csv(rows, false);
    CHECK(csv.rfind("n,max_abs_coeff,log_p_ratio,supnorm_estimate,samples\n", 0) == 0);
    std::string with_trend = spectral_csv(borw2_check(17, 1, 0, 0), true);
    CHECK(with_trend.rfind("n,max_abs_coeff,log_p_ratio,supnorm_estimate,samples,trend\n", 0)
          == 0);

    auto rec = check_andrews_recursions(2);
    std::string rec_csv = recursions_csv(rec);
    CHECK(rec_csv.rfind("n,passed,failed_part,mismatch_index\n", 0) == 0);
    CHECK(rec_csv.find("1,true,,-1\n") != std::string::npos);
}

TEST_CASE("doubles render in shortest round-trip form") {
    for (double v : {3.0792014356780038, 1e-9, 0.1, 4.0 / 3.0, 0.0}) {
        std::string text = format_double(v);
        double parsed = 0.0;
        auto res = std::from_chars(text.data(), text.data() + text.size(), parsed);
        REQUIRE(res.ec == std::errc());
        CHECK(parsed == v);
    }
}

TEST_CASE("timestamps are iso8601 utc") {
    std::string ts = iso8601_utc_now();
    REQUIRE(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[7] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts[13] == ':');
    CHECK(ts[16] == ':');
    CHECK(ts[19] == 'Z');
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u, 11u, 12u, 14u, 15u, 17u, 18u}) {
        CHECK(std::isdigit(static_cast<unsigned char>(ts[i])));
    }
}
