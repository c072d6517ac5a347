#include "doctest.h"
#include "tilecount/shapes.hpp"

using namespace tilecount;

namespace {
StrictPartition sp(std::vector<int> v) { return StrictPartition(std::move(v)); }
Partition pt(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("shape families") {
    CHECK(std::get<StrictPartition>(
              make_shape(ShapeFamily::shifted_double_staircase(2, 1))) == sp({3, 1}));
    CHECK(std::get<StrictPartition>(
              make_shape(ShapeFamily::shifted_double_staircase(6, 3))) ==
          sp({9, 7, 5, 3, 2, 1}));
    CHECK(std::get<Partition>(make_shape(ShapeFamily::arithmetic_progression(3, 1, 2))) ==
          pt({2, 1}));
    CHECK(std::get<Partition>(make_shape(ShapeFamily::rectangle(2, 3))) == pt({3, 3}));
    CHECK(std::get<Partition>(make_shape(ShapeFamily::staircase(2, 3))) == pt({3, 2}));
    CHECK(std::get<StrictPartition>(make_shape(ShapeFamily::shifted_trapezoid(5, 2))) ==
          sp({5, 3}));
    CHECK_THROWS_AS(make_shape(ShapeFamily::shifted_double_staircase(2, 3)),
                    parameter_error);
    CHECK_THROWS_AS(make_shape(ShapeFamily::staircase(4, 3)), parameter_error);
    CHECK_THROWS_AS(make_shape(ShapeFamily::arithmetic_progression(3, 2, 2)),
                    parameter_error);
    CHECK_THROWS_AS(make_shape(ShapeFamily::shifted_trapezoid(4, 3)), parameter_error);
}

TEST_CASE("family degenerations") {
    // k = 0 double staircase is the shifted staircase
    for (long n = 1; n <= 6; ++n)
        CHECK(make_shape(ShapeFamily::shifted_double_staircase(n, 0)) ==
              make_shape(ShapeFamily::shifted_staircase(n)));
    // d = 0 progression is a rectangle, d = 1 a staircase
    CHECK(make_shape(ShapeFamily::arithmetic_progression(4, 0, 3)) ==
          make_shape(ShapeFamily::rectangle(3, 4)));
    CHECK(make_shape(ShapeFamily::arithmetic_progression(5, 1, 3)) ==
          make_shape(ShapeFamily::staircase(3, 4)));
}

TEST_CASE("double shape") {
    CHECK(double_shape(sp({1})) == pt({1}));
    CHECK(double_shape(sp({2, 1})) == pt({2, 2}));
    CHECK(double_shape(sp({3, 1})) == pt({3, 2, 1}));
    // self-conjugacy and cell count for a spread of strict shapes
    std::vector<StrictPartition> shapes = {sp({1}),          sp({2}),       sp({2, 1}),
                                           sp({4, 2, 1}),    sp({5, 3, 2}), sp({6, 4, 2, 1}),
                                           sp({8, 6, 5, 2})};
    for (const auto& lam : shapes) {
        Partition d = double_shape(lam);
        CHECK(d.self_conjugate());
        CHECK(d.cell_count() == 2 * lam.cell_count() - lam.rows());
    }
}

TEST_CASE("content and cells") {
    CHECK(content(1, 1) == 0);
    CHECK(content(1, 3) == 2);
    CHECK(content(3, 1) == -2);
    CHECK(pt({3, 1}).contains(1, 3));
    CHECK(!pt({3, 1}).contains(2, 2));
    CHECK(sp({3, 1}).contains_shifted(2, 2));
    CHECK(!sp({3, 1}).contains_shifted(2, 1));
    CHECK(pt({}).rows() == 0);
    CHECK(pt({}).cols() == 0);
}

TEST_CASE("shape syntax") {
    CHECK(ShapeFamily::parse("sds:2,1").str() == "sds:2,1");
    CHECK(std::get<StrictPartition>(make_shape(ShapeFamily::parse("sstair:3"))) ==
          sp({3, 2, 1}));
    CHECK(std::get<Partition>(make_shape(ShapeFamily::parse("custom:4,2,2"))) ==
          pt({4, 2, 2}));
    CHECK_THROWS_AS(ShapeFamily::parse("frob:1"), parameter_error);
    CHECK_THROWS_AS(ShapeFamily::parse("rect:1"), parameter_error);
    CHECK_THROWS_AS(ShapeFamily::parse("rect:a,b"), parameter_error);
}
