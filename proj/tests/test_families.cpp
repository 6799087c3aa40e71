#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "strongcp/families.hpp"

namespace strongcp {
namespace {

std::vector<Vectord> directions(const OrientationFamilyd& f) {
  std::vector<Vectord> out;
  for (const auto& u : f) out.push_back(u.direction());
  return out;
}

TEST(AxisBox, Examples) {
  EXPECT_EQ(directions(axis_box_family(1)), (std::vector<Vectord>{Vectord{{1.0}}, Vectord{{-1.0}}}));
  EXPECT_EQ(directions(axis_box_family(2)),
            (std::vector<Vectord>{Vectord{{1.0, 0.0}}, Vectord{{-1.0, 0.0}}, Vectord{{0.0, 1.0}},
                                  Vectord{{0.0, -1.0}}}));
  EXPECT_EQ(axis_box_family(3).k(), 6u);
  EXPECT_THROW(axis_box_family(0), InvalidArgument);
}

TEST(Skyline, Examples) {
  EXPECT_EQ(directions(skyline_family(1)), (std::vector<Vectord>{Vectord{{1.0}}}));
  EXPECT_EQ(directions(skyline_family(2)),
            (std::vector<Vectord>{Vectord{{1.0, 0.0}}, Vectord{{-1.0, 0.0}}, Vectord{{0.0, 1.0}}}));
  EXPECT_EQ(skyline_family(3).k(), 5u);
}

TEST(Orthant, Examples) {
  EXPECT_EQ(directions(orthant_family(1)), (std::vector<Vectord>{Vectord{{1.0}}}));
  EXPECT_EQ(directions(orthant_family(2)),
            (std::vector<Vectord>{Vectord{{1.0, 0.0}}, Vectord{{0.0, 1.0}}}));
  EXPECT_EQ(orthant_family(4).k(), 4u);
}

TEST(DownwardTriangle, NormalsAtNinetyTwoTenThreeThirty) {
  const auto f = downward_triangle_family();
  ASSERT_EQ(f.k(), 3u);
  const double angles[] = {90.0, 210.0, 330.0};
  for (std::size_t i = 0; i < 3; ++i) {
    const double a = angles[i] * std::numbers::pi / 180.0;
    EXPECT_NEAR(f[i][0], std::cos(a), 1e-15);
    EXPECT_NEAR(f[i][1], std::sin(a), 1e-15);
    EXPECT_NEAR(f[i].direction().norm(), 1.0, 1e-15);
  }
}

TEST(Homothet, Examples) {
  EXPECT_EQ(homothet_family<double>({Vectord{{1.0, 0.0}}, Vectord{{-1.0, 0.0}}, Vectord{{0.0, 1.0}},
                                     Vectord{{0.0, -1.0}}}),
            axis_box_family(2));
  EXPECT_EQ(homothet_family<double>(directions(downward_triangle_family())),
            downward_triangle_family());
  std::vector<Vectord> pentagon;
  for (int i = 0; i < 5; ++i) {
    const double a = 2 * std::numbers::pi * i / 5 + 0.3;
    pentagon.push_back(Vectord{{3 * std::cos(a), 3 * std::sin(a)}});
  }
  EXPECT_EQ(homothet_family(pentagon).k(), 5u);
  EXPECT_THROW(homothet_family<double>({Vectord{{1.0, 0.0}}, Vectord{{0.0, 1.0}}}), InvalidArgument);
}

TEST(Builders, SatisfyFamilyInvariants) {
  std::vector<OrientationFamilyd> all{downward_triangle_family()};
  for (int d = 1; d <= 5; ++d) {
    all.push_back(axis_box_family(d));
    all.push_back(skyline_family(d));
    all.push_back(orthant_family(d));
  }
  for (const auto& f : all) {
    for (std::size_t i = 0; i < f.k(); ++i) {
      EXPECT_NEAR(f[i].direction().norm(), 1.0, 1e-15);
      for (std::size_t j = i + 1; j < f.k(); ++j) {
        EXPECT_FALSE(same_orientation(f[i], f[j]));
      }
    }
  }
}

TEST(Builders, IntegerModeMatchesFloatMode) {
  for (int d = 1; d <= 4; ++d) {
    const auto fi = axis_box_family<std::int64_t>(d);
    const auto fd = axis_box_family<double>(d);
    ASSERT_EQ(fi.k(), fd.k());
    for (std::size_t i = 0; i < fi.k(); ++i) {
      EXPECT_EQ(fi[i].direction().cast<double>(), fd[i].direction());
    }
  }
}

// Family thresholds written as a fraction num/den independent of k.
void expect_threshold(std::size_t k, std::int64_t num, std::int64_t den) {
  for (std::int64_t n = 1; n <= 400; ++n) {
    for (std::int64_t c = 0; c <= n; ++c) {
      ASSERT_EQ(heavy_threshold_exceeded(c, n, k), c * den > num * n)
          << "k=" << k << " n=" << n << " c=" << c;
    }
  }
}

TEST(FamilyThresholds, MatchStatedFractions) {
  expect_threshold(downward_triangle_family().k(), 2, 3);
  expect_threshold(skyline_family(2).k(), 2, 3);
  expect_threshold(skyline_family(3).k(), 4, 5);
  expect_threshold(orthant_family(2).k(), 1, 2);
  expect_threshold(orthant_family(3).k(), 2, 3);
  for (int d = 1; d <= 6; ++d) {
    expect_threshold(skyline_family(d).k(), 2 * d - 2, 2 * d - 1);
    expect_threshold(orthant_family(d).k(), d - 1, d);
  }
}

}  // namespace
}  // namespace strongcp
