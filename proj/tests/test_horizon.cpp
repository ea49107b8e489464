#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

namespace ph = polarhull;
namespace ts = testsupport;

namespace {

// Anchor on the unit circle with the polar origin at (0, 0); the terminal
// sits 120 degrees around, giving an anchor-to-terminal angle of exactly
// 60 degrees.  Probe 2 clears the threshold comfortably, probe 3 barely,
// probe 4 fails it.
const double kTerminalY = 0.8660254037844386;

std::vector<ph::Point> frozen_points() {
  return ts::make_points({{1.0, 0.0},                                      // 0: anchor
                          {0.5, kTerminalY},                               // 1: terminal
                          {0.8573651497465943, 0.495},                     // 2: member, extracted
                          {0.6363961030678928, 0.6363961030678928},        // 3: member, dropped
                          {0.3, 0.2}});                                    // 4: below the horizon
}

std::vector<ph::PolarView> radial_views(const std::vector<ph::Point>& pts) {
  std::vector<ph::PolarView> v;
  v.reserve(pts.size());
  for (const ph::Point& p : pts) {
    v.push_back(ph::PolarView{std::hypot(p.x, p.y), std::atan2(p.y, p.x), p.index, 0.0});
  }
  return v;
}

}  // namespace

TEST(ComputeHorizonSet, KeepsExactlyThePointsOnOrAboveTheThreshold) {
  const auto pts = frozen_points();
  const ph::Center c{0.0, 0.0};
  const ph::HorizonSet set = ph::compute_horizon_set(0, 1, {2, 3, 4}, pts, c);
  EXPECT_EQ(set.anchor, 0u);
  EXPECT_EQ(set.terminal, 1u);
  ASSERT_EQ(set.members.size(), 2u);
  EXPECT_EQ(set.members[0].index, 2u);
  EXPECT_EQ(set.members[1].index, 3u);
  const double threshold = ph::horizon_angle(pts[0], pts[1], c);
  EXPECT_NEAR(threshold, std::numbers::pi / 3.0, 1e-12);
  for (const ph::HorizonMember& m : set.members) {
    EXPECT_GE(m.angle, threshold);
    EXPECT_EQ(m.angle, ph::horizon_angle(pts[0], pts[m.index], c));
  }
}

TEST(ComputeHorizonSet, CandidateEqualToTerminalIsKeptNonStrictly) {
  auto pts = frozen_points();
  pts.push_back(ph::Point{0.5, kTerminalY, pts.size()});  // exact copy of the terminal
  const ph::Center c{0.0, 0.0};
  const ph::HorizonSet set = ph::compute_horizon_set(0, 1, {4, 5}, pts, c);
  ASSERT_EQ(set.members.size(), 1u);
  EXPECT_EQ(set.members[0].index, 5u);
  EXPECT_EQ(set.members[0].angle, ph::horizon_angle(pts[0], pts[1], c));
}

TEST(ComputeHorizonSet, CandidateOnAnchorThrows) {
  auto pts = frozen_points();
  pts.push_back(ph::Point{1.0, 0.0, pts.size()});  // coincides with the anchor
  const ph::Center c{0.0, 0.0};
  EXPECT_THROW(ph::compute_horizon_set(0, 1, {5}, pts, c), ph::ZeroLengthLeg);
}

TEST(ExtractHorizonPoints, FrozenWalkExtractsOnlyTheOuterMember) {
  const auto pts = frozen_points();
  const ph::Center c{0.0, 0.0};
  const auto polar = radial_views(pts);
  const ph::HorizonSet set = ph::compute_horizon_set(0, 1, {2, 3, 4}, pts, c);
  const ph::HorizonPointSequence seq = ph::extract_horizon_points(set, polar, pts, c);
  EXPECT_EQ(seq.points, (std::vector<std::size_t>{2}));
}

TEST(ExtractHorizonPoints, AngleTiesPreferLargerRadiusThenSmallerIndex) {
  // Candidates 2, 3, 4 all subtend exactly pi/2 at the anchor (vertical rays
  // from (1, 0)); 3 is the farthest from the origin and 4 duplicates it.
  const auto pts = ts::make_points({{1.0, 0.0},    // 0: anchor
                                    {0.0, 1.0},    // 1: terminal (threshold pi/4)
                                    {1.0, 0.5},    // 2: same angle, smaller radius
                                    {1.0, 2.0},    // 3: extracted first
                                    {1.0, 2.0}});  // 4: exact duplicate of 3
  const ph::Center c{0.0, 0.0};
  const auto polar = radial_views(pts);
  const ph::HorizonSet set = ph::compute_horizon_set(0, 1, {2, 3, 4}, pts, c);
  ASSERT_EQ(set.members.size(), 3u);
  EXPECT_EQ(set.members[0].angle, std::numbers::pi / 2.0);
  EXPECT_EQ(set.members[1].angle, std::numbers::pi / 2.0);
  const ph::HorizonPointSequence seq = ph::extract_horizon_points(set, polar, pts, c);
  ASSERT_FALSE(seq.points.empty());
  EXPECT_EQ(seq.points[0], 3u);  // radius beats 2, index beats 4
  // The duplicate of the new anchor is skipped rather than re-measured; the
  // remaining member (1, 0.5) still clears the re-filtered threshold.
  EXPECT_EQ(seq.points, (std::vector<std::size_t>{3, 2}));
}

TEST(ExtractHorizonPoints, CandidateBelowTheFirstHorizonRisesAboveTheNext) {
  // Four points on a shallow convex arc; the wedge runs from the farthest
  // point (0) to the far boundary extreme (3).  Vertex 2 sits below that
  // pair's horizon, but above the horizon of the first extracted point (1),
  // so the walk must re-screen the whole pool after each extraction.
  const auto pts = ph::generate_dataset(ph::DatasetFamily::ConvexPosition, 4, 2);
  const ph::Center c = ph::compute_center(pts);
  const auto polar = ph::to_polar(pts, c);

  const double threshold = ph::horizon_angle(pts[0], pts[3], c);
  EXPECT_LT(ph::horizon_angle(pts[0], pts[2], c), threshold);
  EXPECT_GT(ph::horizon_angle(pts[1], pts[2], c), ph::horizon_angle(pts[1], pts[3], c));

  const ph::HorizonPointSequence seq = ph::extract_horizon_points(0, 3, {1, 2}, polar, pts, c);
  EXPECT_EQ(seq.points, (std::vector<std::size_t>{1, 2}));
}

TEST(HorizonComputation, RecoversAVertexShadowedInItsBin) {
  // W out-radiuses the true vertex V inside the first 90-degree bin, so the
  // fence skips V; the horizon walk between W and B must recover it.
  const auto pts = ts::make_points({{2.0, 0.0},      // 0: A, boundary max-x
                                    {0.0, 2.0},      // 1: B, boundary max-y
                                    {1.45, 1.45},    // 2: V, shadowed vertex
                                    {-2.0, 0.0},     // 3: D, boundary min-x
                                    {0.0, -2.0},     // 4: E, boundary min-y
                                    {1.5, 1.4}});    // 5: W, bin-maximal
  const ph::Center c{0.0, 0.0};
  const auto polar = ph::to_polar(pts, c);
  const ph::BinConfig cfg = ph::BinConfig::from_interval(std::numbers::pi / 2.0);
  const ph::BinTable table = ph::assign_bins(polar, cfg, true);
  const ph::BoundaryPoints boundary = ph::compute_boundary_points(pts);
  const ph::FencePointList fence =
      ph::build_fence(ph::maximal_union(table), boundary, {}, polar);

  std::vector<std::size_t> fence_idx;
  for (const ph::FenceEntry& e : fence.entries) fence_idx.push_back(e.index);
  EXPECT_TRUE(std::find(fence_idx.begin(), fence_idx.end(), 2u) == fence_idx.end())
      << "V must start outside the fence for this scenario";

  ph::WorkTally tally;
  std::size_t candidates = 0;
  const std::vector<std::size_t> found =
      ph::horizon_computation(table, fence, polar, pts, c, &tally, &candidates);
  EXPECT_EQ(found, (std::vector<std::size_t>{2}));
  EXPECT_EQ(tally.horizon, 1u);
  EXPECT_EQ(candidates, 1u);
}

TEST(HorizonComputation, WedgeCandidatesStayWithinTheOpenInterval) {
  // Candidates exactly on a fence ray are never gathered: same theta means
  // same bin, and the open wedge excludes both endpoint rays.
  const auto pts = ph::generate_dataset(ph::DatasetFamily::CircleRing, 500, 21);
  const ph::Center c = ph::compute_center(pts);
  const auto polar = ph::to_polar(pts, c);
  const ph::BinTable table = ph::assign_bins(polar, ph::BinConfig::from_interval(0.3), true);
  const ph::BoundaryPoints boundary = ph::compute_boundary_points(pts);
  const ph::FencePointList fence =
      ph::build_fence(ph::maximal_union(table), boundary, {}, polar);

  std::size_t candidates = 0;
  const std::vector<std::size_t> found =
      ph::horizon_computation(table, fence, polar, pts, c, nullptr, &candidates);
  EXPECT_LE(candidates, pts.size());  // open wedges are disjoint
  for (std::size_t idx : found) {
    for (const ph::FenceEntry& e : fence.entries) EXPECT_NE(idx, e.index);
  }
}

TEST(HorizonComputation, NoOccupancyShortCircuits) {
  const auto pts = frozen_points();
  const ph::Center c{0.0, 0.0};
  const auto polar = radial_views(pts);
  const ph::BinTable table =
      ph::assign_bins(polar, ph::BinConfig::from_interval(0.5), false);  // no occupancy
  ph::FencePointList fence;
  fence.entries.push_back(ph::FenceEntry{0, 0.0, ph::FenceSource::MaximalBin});
  fence.entries.push_back(ph::FenceEntry{1, 1.0, ph::FenceSource::MaximalBin});
  EXPECT_TRUE(ph::horizon_computation(table, fence, polar, pts, c).empty());
}
