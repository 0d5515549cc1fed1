#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "adpt/core.hpp"
#include "support.hpp"

using namespace adpt;

TEST_CASE("iou examples") {
    CHECK(iou({0, 0, 10, 10}, {0, 0, 10, 10}) == 1.0);
    CHECK(iou({0, 0, 5, 5}, {10, 10, 5, 5}) == 0.0);
    CHECK(iou({0, 0, 2, 2}, {1, 1, 2, 2}) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
    // touching edges share no area
    CHECK(iou({0, 0, 2, 2}, {2, 0, 2, 2}) == 0.0);
}

TEST_CASE("iou is symmetric, bounded and reflexive") {
    CounterRng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const BoundingBox a = testing::random_box(rng), b = testing::random_box(rng);
        const double ab = iou(a, b);
        CHECK(ab == iou(b, a));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(iou(a, a) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("center conversion") {
    const CenterBox c = to_center({0, 0, 2, 4});
    CHECK(c == CenterBox{1, 2, 2, 4});
    CHECK(from_center(1, 2, 2, 4) == BoundingBox(0, 0, 2, 4));
    const BoundingBox b(3.5, -1.0, 7.0, 2.5);
    CHECK(from_center(to_center(b)) == b);

    CounterRng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const BoundingBox r = testing::random_box(rng);
        const BoundingBox back = from_center(to_center(r));
        CHECK(std::abs(back.left() - r.left()) <= 1e-12);
        CHECK(std::abs(back.top() - r.top()) <= 1e-12);
        CHECK(std::abs(back.width() - r.width()) <= 1e-12);
        CHECK(std::abs(back.height() - r.height()) <= 1e-12);
    }
    CHECK_THROWS_AS(from_center(0, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("bounding box validation") {
    CHECK_THROWS_AS(BoundingBox(0, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(BoundingBox(0, 0, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(BoundingBox(std::nan(""), 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(BoundingBox(0, std::numeric_limits<double>::infinity(), 1, 1), std::invalid_argument);
    const BoundingBox b(1, 2, 3, 4);
    CHECK(b.right() == 4);
    CHECK(b.bottom() == 6);
    CHECK(b.area() == 12);
}

TEST_CASE("feature vectors are unit norm") {
    const FeatureVec f({3, 4});
    CHECK(f[0] == doctest::Approx(0.6));
    CHECK(f[1] == doctest::Approx(0.8));

    CounterRng rng(3);
    for (int i = 0; i < 500; ++i) {
        std::vector<double> raw(2 + rng.next_u64() % 30);
        for (double& x : raw) x = rng.uniform(-1e3, 1e3);
        const FeatureVec v(raw);
        double sq = 0.0;
        for (double x : v.values()) sq += x * x;
        CHECK(std::abs(std::sqrt(sq) - 1.0) <= 1e-9);
    }
    CHECK_THROWS_AS(FeatureVec({0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(FeatureVec({1}), std::invalid_argument);
    CHECK_THROWS_AS(FeatureVec({1, std::nan("")}), std::invalid_argument);
}

TEST_CASE("detection validation") {
    CHECK_NOTHROW(testing::det(1, 0, 0, 1, 1, testing::unit(0), 0.0));
    CHECK_THROWS_AS(testing::det(1, 0, 0, 1, 1, testing::unit(0), 1.5), std::invalid_argument);
    CHECK_THROWS_AS(testing::det(-1, 0, 0, 1, 1), std::invalid_argument);
}
