#include <doctest.h>

#include <vector>

#include "platoon/collision.hpp"
#include "platoon/metrics.hpp"

using namespace platoon;

namespace {

// Vehicles spaced `gap` metres bumper to bumper, all at `speed`.
std::vector<VehicleState> column(std::size_t n, double gap, double speed) {
    std::vector<VehicleState> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i].index = i;
        s[i].speed = speed;
        s[i].position = static_cast<double>(n - 1 - i) * (4.0 + gap);
    }
    return s;
}

} // namespace

TEST_CASE("a column with 5 m gaps has no collision") {
    CHECK_FALSE(detect_first_collision(column(8, 5.0, 20.0)).has_value());
}

TEST_CASE("the smallest rear index wins on multi-contact states") {
    auto s = column(8, 5.0, 20.0);
    // Close the gaps in front of vehicles 4 and 6.
    for (std::size_t i = 4; i < 8; ++i) s[i].position += 5.0;
    for (std::size_t i = 6; i < 8; ++i) s[i].position += 5.0;
    s[4].speed = 25.0;
    s[6].speed = 30.0;
    const auto hit = detect_first_collision(s);
    REQUIRE(hit.has_value());
    CHECK(hit->rear_index == 4);
    CHECK(hit->delta_v == 5.0);
}

TEST_CASE("contact is inclusive at zero gap and excludes positive gaps") {
    auto s = column(2, 0.0, 10.0);
    CHECK(detect_first_collision(s).has_value());
    s[1].position -= 1e-9;
    CHECK_FALSE(detect_first_collision(s).has_value());
}

TEST_CASE("delta v is rear minus front speed") {
    VehicleState front, rear;
    front.speed = 20.0;
    rear.speed = 25.0;
    CHECK(delta_v_at_collision(front, rear) == 5.0);
}
