#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace ph = polarhull;
namespace ts = testsupport;

namespace {

constexpr std::array<ph::DatasetFamily, 7> kFamilies = {
    ph::DatasetFamily::DiskUniform, ph::DatasetFamily::CircleRing,  ph::DatasetFamily::Blobs,
    ph::DatasetFamily::Clusters,    ph::DatasetFamily::Sinusoid,    ph::DatasetFamily::SquareGrid,
    ph::DatasetFamily::ConvexPosition};

}  // namespace

TEST(GrahamScan, MatchesTheRationalOracle) {
  for (const ph::DatasetFamily family : kFamilies) {
    for (const std::size_t n : {3u, 10u, 57u}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto pts = ph::generate_dataset(family, n, seed);
        const ph::Hull got = ph::graham_scan(pts);
        const ph::Hull expect = ts::rational_gift_wrap(pts);
        EXPECT_EQ(got.vertices, expect.vertices)
            << ph::family_name(family) << " n=" << n << " seed=" << seed;
      }
    }
  }
}

TEST(GrahamScan, RationalOracleOnCollinearAndDuplicateSets) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto flat = ts::collinear_set(40, seed);
    EXPECT_EQ(ph::graham_scan(flat).vertices, ts::rational_gift_wrap(flat).vertices);
    const auto dup = ts::with_duplicates(
        ph::generate_dataset(ph::DatasetFamily::Clusters, 60, seed), 40, seed + 100);
    EXPECT_EQ(ph::graham_scan(dup).vertices, ts::rational_gift_wrap(dup).vertices);
  }
}

TEST(JarvisMarch, MatchesGrahamEverywhere) {
  for (const ph::DatasetFamily family : kFamilies) {
    for (const std::size_t n : {3u, 16u, 120u, 300u}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto pts = ph::generate_dataset(family, n, seed);
        EXPECT_EQ(ph::jarvis_march(pts).vertices, ph::graham_scan(pts).vertices)
            << ph::family_name(family) << " n=" << n << " seed=" << seed;
      }
    }
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto flat = ts::collinear_set(30, seed);
    EXPECT_EQ(ph::jarvis_march(flat).vertices, ph::graham_scan(flat).vertices);
    const auto dup = ts::with_duplicates(
        ph::generate_dataset(ph::DatasetFamily::Blobs, 80, seed), 50, seed + 7);
    EXPECT_EQ(ph::jarvis_march(dup).vertices, ph::graham_scan(dup).vertices);
  }
}

TEST(BruteForceHull, MatchesGrahamAndTheRationalOracle) {
  for (const ph::DatasetFamily family : kFamilies) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto pts = ph::generate_dataset(family, 90, seed);
      const ph::Hull brute = ph::brute_force_hull(pts);
      EXPECT_EQ(brute.vertices, ph::graham_scan(pts).vertices);
      EXPECT_EQ(brute.vertices, ts::rational_gift_wrap(pts).vertices);
    }
  }
}

TEST(BruteForceHull, GuardsItsLimits) {
  EXPECT_THROW(ph::brute_force_hull({}), ph::EmptyInput);
  const auto big = ph::generate_dataset(ph::DatasetFamily::DiskUniform, 5001, 1);
  EXPECT_THROW(ph::brute_force_hull(big), ph::ConfigError);
}

TEST(HullAlgorithms, DegenerateInputs) {
  const auto one = ts::make_points({{2, 3}});
  EXPECT_EQ(ph::graham_scan(one).vertices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(ph::jarvis_march(one).vertices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(ph::brute_force_hull(one).vertices, (std::vector<std::size_t>{0}));

  const auto two = ts::make_points({{5, 1}, {2, 3}});
  const std::vector<std::size_t> lex_pair{1, 0};  // (2,3) before (5,1)
  EXPECT_EQ(ph::graham_scan(two).vertices, lex_pair);
  EXPECT_EQ(ph::jarvis_march(two).vertices, lex_pair);
  EXPECT_EQ(ph::brute_force_hull(two).vertices, lex_pair);

  const auto same = ts::make_points({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  EXPECT_EQ(ph::graham_scan(same).vertices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(ph::jarvis_march(same).vertices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(ph::brute_force_hull(same).vertices, (std::vector<std::size_t>{0}));

  const auto two_spots = ts::make_points({{4, 4}, {1, 1}, {4, 4}, {1, 1}, {4, 4}});
  const std::vector<std::size_t> spots{1, 0};
  EXPECT_EQ(ph::graham_scan(two_spots).vertices, spots);
  EXPECT_EQ(ph::jarvis_march(two_spots).vertices, spots);
  EXPECT_EQ(ph::brute_force_hull(two_spots).vertices, spots);
}

TEST(HullAlgorithms, SubsetOverloadsMatchTheSubsetOracle) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto pts = ph::generate_dataset(ph::DatasetFamily::DiskUniform, 140, seed);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < pts.size(); i += 2) subset.push_back(i);
    const ph::Hull expect = ts::rational_gift_wrap(pts, subset);
    EXPECT_EQ(ph::graham_scan(pts, subset).vertices, expect.vertices);
    EXPECT_EQ(ph::jarvis_march(pts, subset).vertices, expect.vertices);
  }
}

TEST(HullAlgorithms, RestrictionToHullVerticesIsIdempotent) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto pts = ph::generate_dataset(ph::DatasetFamily::Blobs, 250, seed);
    const ph::Hull full = ph::graham_scan(pts);
    std::vector<std::size_t> vertices = full.vertices;
    std::sort(vertices.begin(), vertices.end());
    EXPECT_EQ(ph::graham_scan(pts, vertices).vertices, full.vertices);
    EXPECT_EQ(ph::jarvis_march(pts, vertices).vertices, full.vertices);
  }
}

TEST(ContourScanHull, BuildsTheHullFromAnOrderedFence) {
  const auto pts = ts::make_points({{2, 0}, {0, 2}, {-2, 0}, {0, -2}, {0.1, 0.1}});
  const ph::Center c{0.0, 0.0};
  const auto polar = ph::to_polar(pts, c);
  const ph::FencePointList fence = ph::build_fence({0, 1, 2, 3}, ph::BoundaryPoints{}, {}, polar);
  const ph::FencePointList post = ph::enforce_convexity(fence, pts, c);
  const ph::Hull h = ph::contour_scan_hull(post, pts);
  EXPECT_EQ(h.vertices, ph::graham_scan(pts).vertices);
}
