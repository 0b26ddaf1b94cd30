#include "fixedpoint/families.hpp"

#include <gtest/gtest.h>

using namespace fixedpoint;

TEST(Sphere2, Examples) {
    EXPECT_EQ(sphere2(1), (Datum{{1}, {-1}}));
    EXPECT_EQ(sphere2(3), (Datum{{3}, {-3}}));
    EXPECT_THROW(sphere2(0), std::invalid_argument);
    EXPECT_THROW(sphere2(-1), std::invalid_argument);
}

TEST(Sphere6, Examples) {
    EXPECT_EQ(sphere6(1, 1), canonicalize(Datum{{1, 1, -2}, {2, -1, -1}}));
    EXPECT_EQ(to_string(sphere6(1, 2)), "[{2,1,-3},{3,-1,-2}]");
    EXPECT_EQ(sphere6(1, 2), sphere6(2, 1));
    EXPECT_THROW(sphere6(0, 1), std::invalid_argument);
    EXPECT_THROW(sphere6(1, -1), std::invalid_argument);
}

TEST(Cp2Triple, Examples) {
    EXPECT_EQ(cp2_triple(1, 1), (Datum{{2, 1}, {-1, 1}, {-1, -2}}));
    EXPECT_EQ(to_string(cp2_triple(1, 2)), "[{3,1},{2,-1},{-2,-3}]");
    EXPECT_THROW(cp2_triple(1, 0), std::invalid_argument);
}

TEST(Families, Canonical) {
    for (Weight a = 1; a <= 4; ++a)
        for (Weight b = 1; b <= 4; ++b) {
            EXPECT_EQ(canonicalize(cp2_triple(a, b)), cp2_triple(a, b));
            EXPECT_EQ(canonicalize(sphere6(a, b)), sphere6(a, b));
        }
}

TEST(Family, Dispatch) {
    EXPECT_EQ(family("sphere2", 2), sphere2(2));
    EXPECT_EQ(family("sphere6", 1, 3), sphere6(1, 3));
    EXPECT_EQ(family("cp2", 2, 1), cp2_triple(2, 1));
    EXPECT_THROW(family("torus", 1, 1), std::invalid_argument);
    EXPECT_THROW(family("cp2", 0, 1), std::invalid_argument);
}
