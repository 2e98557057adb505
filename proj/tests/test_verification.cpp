#include <doctest.h>

#include <cstdint>
#include <tuple>
#include <vector>

#include "borwein/errors.hpp"
#include "borwein/product_spec.hpp"
#include "borwein/verification.hpp"

using namespace borwein;

namespace {

bool rows_equal(const VerificationRow& a, const VerificationRow& b) {
    return a.p == b.p && a.s == b.s && a.n == b.n && a.b == b.b &&
           a.m_direct == b.m_direct && a.m_charsum == b.m_charsum &&
           a.main == b.main && a.error_bound == b.error_bound &&
           a.error_bound_is_integer == b.error_bound_is_integer &&
           a.within_bound == b.within_bound &&
           a.sign_expected == b.sign_expected &&
           a.sign_observed == b.sign_observed &&
           a.sign_required == b.sign_required && a.sign_ok == b.sign_ok;
}

} // namespace

TEST_CASE("main term worked values") {
    CHECK(main_term(ProductSpec(3, 1, 1), 0) == BigRational(3));
    CHECK(main_term(ProductSpec(3, 1, 2), 0) == BigRational(6));
    CHECK(main_term(ProductSpec(3, 1, 1), 1) == BigRational(-3, 2));
    CHECK(main_term(ProductSpec(3, 2, 1), 3) == BigRational(27));
    CHECK(main_term(ProductSpec(5, 1, 1), 1) == BigRational(-5, 2));
    CHECK(main_term(ProductSpec(5, 1, 1), 5) == BigRational(10));

    CHECK_THROWS_AS(main_term(ProductSpec(3, 1, 1), 6), SpecError);
    CHECK_THROWS_AS(main_term(ProductSpec(3, 1, 1), -1), SpecError);
    CHECK_THROWS_AS(main_term(ProductSpec(2, 1, 1), 0), SpecError);
}

TEST_CASE("error bound decided in exact integers") {
    ProductSpec spec(3, 1, 1);
    CHECK(error_bound_holds(spec, 0, BigInt(4)));
    CHECK(error_bound_holds(spec, 0, BigInt(3)));
    CHECK(error_bound_holds(spec, 1, BigInt(-1)));
    CHECK(error_bound_holds(spec, 0, BigInt(6)));
    CHECK_FALSE(error_bound_holds(spec, 0, BigInt(7)));
    CHECK_FALSE(error_bound_holds(spec, 0, BigInt(8)));
    CHECK_FALSE(error_bound_holds(spec, 1, BigInt(2)));
    CHECK_THROWS_AS(error_bound_holds(spec, 6, BigInt(0)), SpecError);
    CHECK_THROWS_AS(error_bound_holds(ProductSpec(2, 1, 1), 0, BigInt(0)), SpecError);
}

TEST_CASE("sign thresholds") {
    CHECK(sign_threshold(3, 1, ResidueClass::kNondivisible) == 4);
    CHECK(sign_threshold(3, 1, ResidueClass::kDivisible) == 2);
    CHECK(sign_threshold(5, 1, ResidueClass::kNondivisible) == 3);
    CHECK(sign_threshold(5, 1, ResidueClass::kDivisible) == 1);
    CHECK_THROWS_AS(sign_threshold(2, 1, ResidueClass::kDivisible), SpecError);
    CHECK_THROWS_AS(sign_threshold(4, 1, ResidueClass::kDivisible), SpecError);
    CHECK_THROWS_AS(sign_threshold(3, 0, ResidueClass::kDivisible), SpecError);
}

TEST_CASE("sign thresholds shrink as p or s grows") {
    for (ResidueClass cls : {ResidueClass::kDivisible, ResidueClass::kNondivisible}) {
        for (std::int64_t p : {3, 5, 7, 11, 13}) {
            for (std::int64_t s = 1; s <= 2; ++s) {
                CHECK(sign_threshold(p, s + 1, cls) <= sign_threshold(p, s, cls));
            }
        }
        const std::vector<std::int64_t> primes = {3, 5, 7, 11, 13};
        for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
            for (std::int64_t s = 1; s <= 3; ++s) {
                CHECK(sign_threshold(primes[i + 1], s, cls)
                      <= sign_threshold(primes[i], s, cls));
            }
        }
    }
}

TEST_CASE("verification grid over small cells") {
    auto rows = verify_grid({3, 5}, {1, 2}, 3);
    REQUIRE(rows.size() == 160);

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& a = rows[i - 1];
        const auto& c = rows[i];
        const auto key = [](const VerificationRow& r) {
            return std::tuple(r.p, r.s, r.n, r.b);
        };
        CHECK(key(a) < key(c));
    }

    for (const auto& row : rows) {
        INFO("p=" << row.p << " s=" << row.s << " n=" << row.n << " b=" << row.b);
        CHECK(row.m_direct == row.m_charsum);
        CHECK(row.within_bound);
        CHECK(row.sign_ok);
        CHECK(row.sign_expected == ((row.b % row.p == 0) ? 1 : -1));
    }

    const auto& first = rows.front();
    CHECK(first.p == 3);
    CHECK(first.s == 1);
    CHECK(first.n == 0);
    CHECK(first.b == 0);

    bool found = false;
    for (const auto& row : rows) {
        if (row.p == 3 && row.s == 1 && row.n == 1 && row.b == 0) {
            found = true;
            CHECK(row.m_direct == 4);
            CHECK(row.main == BigRational(3));
            CHECK(row.error_bound == 3.0);
            CHECK(row.error_bound_is_integer);
            CHECK(row.sign_observed == 1);
            CHECK(row.sign_required);
        }
        if (row.p == 3 && row.s == 1 && row.n == 0) {
            CHECK_FALSE(row.sign_required);
        }
    }
    CHECK(found);
}

TEST_CASE("verification grid is deterministic across thread counts") {
    auto serial = verify_grid({3, 5}, {1}, 4, kDefaultCoefficientBudget, 1);
    auto parallel = verify_grid({3, 5}, {1}, 4, kDefaultCoefficientBudget, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(rows_equal(serial[i], parallel[i]));
    }
}

TEST_CASE("verification grid normalizes duplicated unsorted inputs") {
    auto canonical = verify_grid({3, 5}, {1, 2}, 2);
    auto messy = verify_grid({5, 3, 3, 5}, {2, 1, 1}, 2);
    REQUIRE(canonical.size() == messy.size());
    for (std::size_t i = 0; i < canonical.size(); ++i) {
        CHECK(rows_equal(canonical[i], messy[i]));
    }
}

TEST_CASE("verification grid rejects invalid primes") {
    CHECK_THROWS_AS(verify_grid({2}, {1}, 1), SpecError);
    CHECK_THROWS_AS(verify_grid({4}, {1}, 1), SpecError);
}

TEST_CASE("ratio trend rows") {
    auto rows = ratio_trend(3, 1, 0, 3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 0);
    CHECK(rows[0].ratio == BigRational(1));
    CHECK(rows[1].n == 1);
    CHECK(rows[1].ratio == BigRational(4, 3));
    CHECK(rows[1].ratio_value == doctest::Approx(4.0 / 3.0));

    auto skipped = ratio_trend(3, 1, 7, 3);
    REQUIRE(skipped.size() == 2);
    CHECK(skipped[0].n == 2);
    CHECK(skipped[1].n == 3);

    CHECK_THROWS_AS(ratio_trend(2, 1, 0, 3), SpecError);
}
