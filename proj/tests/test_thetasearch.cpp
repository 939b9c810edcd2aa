#include "doctest.h"
#include "test_util.hpp"

using namespace quatcm;

TEST_CASE("compute_m0") {
    CHECK(compute_m0(Int(6), ImagQuadField{Int(1)}) == 3);
    CHECK(compute_m0(Int(10), ImagQuadField{Int(2)}) == 5);
    CHECK(compute_m0(Int(6), ImagQuadField{Int(3)}) == 1);  // 3 divides disc(L)
    CHECK(compute_m0(Int(1), ImagQuadField{Int(1)}) == 1);
}

TEST_CASE("check_theta") {
    ImagQuadField Qi{Int(1)};

    ThetaCheck good = check_theta(Int(3), Int(6), Qi);
    CHECK(good.verdict);
    CHECK(good.fast_path);
    CHECK(!good.discrepancy);

    // v_3(m) odd violates the even-valuation condition at 3 | m0.
    ThetaCheck nine = check_theta(Int(9), Int(6), Qi);
    CHECK(!nine.verdict);
    CHECK(!nine.fast_path);
    CHECK(!nine.discrepancy);
    REQUIRE(nine.m0_primes.has_value());
    CHECK(!*nine.m0_primes);

    // Negative theta fails positivity (the algebra would be definite).
    ThetaCheck neg = check_theta(Int(-3), Int(6), Qi);
    CHECK(!neg.verdict);
    REQUIRE(neg.positive.has_value());
    CHECK(!*neg.positive);
    CHECK(!neg.discrepancy);

    // m0 does not divide theta.
    ThetaCheck nodiv = check_theta(Int(2), Int(6), Qi);
    CHECK(!nodiv.m0_divides);
    CHECK(!nodiv.verdict);

    CHECK_THROWS_AS(check_theta(Int(0), Int(6), Qi), std::invalid_argument);
}

TEST_CASE("find_theta_pair at disc 6 over Q(i)") {
    ThetaPair pair = find_theta_pair(Int(6), ImagQuadField{Int(1)});
    CHECK(pair.m0 == 3);
    CHECK(pair.s == 0);
    CHECK(pair.m1 == 1);
    CHECK(pair.theta1 == 3);
    CHECK(pair.m2 == 5);
    CHECK(pair.theta2 == 15);
}

TEST_CASE("find_theta_pair at disc 10 over Q(sqrt(-2))") {
    ImagQuadField L{Int(2)};
    ThetaPair pair = find_theta_pair(Int(10), L);
    CHECK(pair.m0 == 5);
    CHECK(pair.s == 0);
    CHECK(check_theta(pair.theta1, Int(10), L).verdict);
    CHECK(check_theta(pair.theta2, Int(10), L).verdict);
    CHECK(gcd_int(pair.m1, pair.m2) == 1);
    CHECK(gcd_int(pair.m1, Int(2 * pair.m0 * abs(L.disc()))) == 1);
    CHECK(gcd_int(pair.m2, Int(2 * pair.m0 * abs(L.disc()))) == 1);
}

TEST_CASE("find_theta_pair with the two-power factor") {
    // disc(L) = -3 = 5 mod 8 and 2 | 6 force s = 1.
    ImagQuadField L{Int(3)};
    ThetaPair pair = find_theta_pair(Int(6), L);
    CHECK(pair.m0 == 1);
    CHECK(pair.s == 1);
    CHECK(pair.m1 == 1);
    CHECK(pair.theta1 == 2);
    CHECK(pair.m2 == 7);
    CHECK(check_theta(pair.theta2, Int(6), L).verdict);
}

TEST_CASE("find_theta_pair rejects non-splitting fields") {
    CHECK_THROWS_AS(find_theta_pair(Int(6), ImagQuadField{Int(7)}), std::domain_error);
    CHECK_THROWS_AS(find_theta_pair(Int(3), ImagQuadField{Int(1)}), std::invalid_argument);
}

TEST_CASE("iso_criterion") {
    CHECK(iso_criterion(Int(6), ImagQuadField{Int(1)}));
    CHECK(iso_criterion(Int(10), ImagQuadField{Int(2)}));
    CHECK(iso_criterion(Int(1), ImagQuadField{Int(1)}));
    CHECK_THROWS_AS(iso_criterion(Int(6), ImagQuadField{Int(7)}), std::domain_error);
}

TEST_CASE("fast path matches ground truth on a sample grid") {
    for (long disc : {6L, 10L, 15L}) {
        for (long d = 1; d <= 20; ++d) {
            if (!is_squarefree(Int(d))) continue;
            ImagQuadField L{Int(d)};
            if (!splits(L, Int(disc))) continue;
            for (long theta = 1; theta <= 120; ++theta)
                CHECK(!check_theta(Int(theta), Int(disc), L).discrepancy);
        }
    }
}

TEST_CASE("theta pairs are deterministic") {
    ImagQuadField L{Int(1)};
    ThetaPair a = find_theta_pair(Int(6), L);
    ThetaPair b = find_theta_pair(Int(6), L);
    CHECK(a.m1 == b.m1);
    CHECK(a.m2 == b.m2);
    CHECK(a.theta1 == b.theta1);
    CHECK(a.theta2 == b.theta2);
}
