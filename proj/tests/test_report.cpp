#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace quatcm;

TEST_CASE("degree bound formulas") {
    CHECK(degree_bound_general(2, Rat(4)) == 256);
    CHECK(degree_bound_general(4, Rat(1)) == 256);
    CHECK(degree_bound_general(2, make_rat(3, 2)) == make_rat(36, 1));
    CHECK_THROWS_AS(degree_bound_general(3, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(degree_bound_general(2, Rat(-1)), std::invalid_argument);

    CHECK(degree_bound_surface(Int(1), Int(1)) == 16);
    CHECK(degree_bound_surface(Int(2), Int(3)) == 2304);
    CHECK(degree_bound_tilde(Int(1), Int(1), Int(3)) == 48);
}

TEST_CASE("factor-16 relation between the two bounds") {
    for (long c = 1; c <= 20; ++c)
        for (long d = 1; d <= 20; ++d) {
            Rat general = degree_bound_general(2, Rat(4 * c * c * d));
            CHECK(general == Rat(16) * Rat(degree_bound_surface(Int(c), Int(d))));
        }
}

TEST_CASE("bounds are monotone") {
    for (long c = 1; c < 10; ++c)
        for (long d = 1; d < 10; ++d) {
            CHECK(degree_bound_surface(Int(c + 1), Int(d)) > degree_bound_surface(Int(c), Int(d)));
            CHECK(degree_bound_surface(Int(c), Int(d + 1)) > degree_bound_surface(Int(c), Int(d)));
            CHECK(degree_bound_tilde(Int(c), Int(d), Int(2)) >
                  degree_bound_surface(Int(c), Int(d)));
        }
}

TEST_CASE("assemble_report for a splitting field") {
    ReportRow row = assemble_report(Int(6), ImagQuadField{Int(1)}, Int(1));
    CHECK(row.splits);
    CHECK(row.m0 == 3);
    CHECK(row.s == 0);
    REQUIRE(row.theta1.has_value());
    CHECK(*row.theta1 == 3);
    REQUIRE(row.theta2.has_value());
    CHECK(*row.theta2 == 15);
    REQUIRE(row.m_used.has_value());
    CHECK(*row.m_used == 1);
    REQUIRE(row.iso_flag.has_value());
    CHECK(*row.iso_flag);
    CHECK(row.opt_embed_exists);
    CHECK(row.h == 1);
    CHECK(row.id_set_size == 1);
    CHECK(row.bound_general == 256);
    CHECK(row.bound_surface == 16);
    REQUIRE(row.bound_tilde.has_value());
    CHECK(*row.bound_tilde == 16);
    CHECK(row.annotation.empty());
}

TEST_CASE("assemble_report records a failed embedding criterion") {
    ReportRow row = assemble_report(Int(6), ImagQuadField{Int(1)}, Int(2));
    CHECK(row.splits);
    CHECK(!row.opt_embed_exists);
    CHECK(row.bound_surface == 256);  // (4*4*1)^2
    CHECK(row.h == class_number(Int(-16)));
    CHECK(row.id_set_size == 2);
}

TEST_CASE("assemble_report for a non-splitting field") {
    ReportRow row = assemble_report(Int(6), ImagQuadField{Int(7)}, Int(1));
    CHECK(!row.splits);
    CHECK(row.annotation == "not a splitting field");
    CHECK(!row.theta1.has_value());
    CHECK(!row.iso_flag.has_value());
    CHECK(!row.bound_tilde.has_value());
    CHECK(!row.opt_embed_exists);
}

TEST_CASE("split algebra is annotated") {
    ReportRow row = assemble_report(Int(1), ImagQuadField{Int(1)}, Int(1));
    CHECK(row.splits);
    CHECK(row.annotation == "split algebra");
    REQUIRE(row.iso_flag.has_value());
    CHECK(*row.iso_flag);
}

TEST_CASE("csv output shape and determinism") {
    std::string header(kTabulateHeader);
    CHECK(std::count(header.begin(), header.end(), ',') == 14);
    ReportRow row = assemble_report(Int(6), ImagQuadField{Int(7)}, Int(1));
    std::string line = csv_line(row);
    CHECK(std::count(line.begin(), line.end(), ',') == 14);

    std::string t1 = tabulate_csv({Int(6)}, 5, 2);
    std::string t2 = tabulate_csv({Int(6)}, 5, 2);
    CHECK(t1 == t2);
    CHECK(t1.substr(0, header.size()) == header);
    // 1 header + (d in {1,2,3,5}) x (c in {1,2}) rows.
    CHECK(std::count(t1.begin(), t1.end(), '\n') == 9);
}
