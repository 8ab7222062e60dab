#include <gtest/gtest.h>

#include <set>

#include "chowlab/fans.hpp"
#include "chowlab/symfunc.hpp"

using namespace chowlab;

TEST(Fans, BergmanComplexes) {
  EXPECT_EQ(f_vector(bergman_complex(make_boolean(3))), (std::vector<std::int64_t>{6, 6}));
  EXPECT_EQ(f_vector(bergman_complex(make_uniform(3, 2))), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(f_vector(bergman_complex(make_boolean(2))), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(bergman_cones(make_boolean(3)).front().flag, Flag{});
}

TEST(Fans, BergmanRayNormalization) {
  EXPECT_EQ(bergman_ray(3, Subset{1}), (RayVector{1, 0, 0}));
  EXPECT_EQ(bergman_ray(3, Subset{2, 3}), (RayVector{-1, 0, 0}));
}

TEST(Fans, AugmentedFanOfB2) {
  const auto cones = aug_bergman_cones(make_boolean(2));
  ASSERT_EQ(cones.size(), 11u);
  std::size_t zero = 0, rays = 0, two = 0;
  for (const auto& c : cones) {
    zero += c.pair.dimension() == 0;
    rays += c.pair.dimension() == 1;
    two += c.pair.dimension() == 2;
  }
  EXPECT_EQ(zero, 1u);
  EXPECT_EQ(rays, 5u);
  EXPECT_EQ(two, 5u);
  EXPECT_EQ(f_vector(aug_bergman_complex(make_boolean(2))), (std::vector<std::int64_t>{5, 5}));
}

TEST(Fans, AugmentedFanSmallCases) {
  const auto b1 = aug_bergman_cones(make_boolean(1));
  ASSERT_EQ(b1.size(), 3u);
  std::set<CompatiblePair> got;
  for (const auto& c : b1) got.insert(c.pair);
  EXPECT_EQ(got, (std::set<CompatiblePair>{{Subset(), {}}, {Subset{1}, {}}, {Subset(), {Subset()}}}));
  EXPECT_EQ(f_vector(aug_bergman_complex(make_uniform(3, 2))).front(), 7);
}

TEST(Fans, AugmentedRays) {
  EXPECT_EQ(augmented_ray(3, AugmentedRay::of_element(2)), (RayVector{0, 1, 0}));
  EXPECT_EQ(augmented_ray(3, AugmentedRay::of_flat(Subset{1})), (RayVector{0, -1, -1}));
  EXPECT_EQ(augmented_ray(3, AugmentedRay::of_flat(Subset())), (RayVector{-1, -1, -1}));
}

TEST(Fans, MaximalConesSimplicialAndRaysDistinct) {
  for (int n = 1; n <= 4; ++n) {
    const auto cones = aug_bergman_cones(make_boolean(n));
    std::set<RayVector> rays;
    std::size_t ray_cones = 0;
    int top = 0;
    for (const auto& c : cones) top = std::max(top, c.pair.dimension());
    EXPECT_EQ(top, n);
    for (const auto& c : cones) {
      EXPECT_EQ(c.rays.size(), static_cast<std::size_t>(c.pair.dimension()));
      if (c.rays.size() == 1) {
        ++ray_cones;
        rays.insert(c.rays.front());
      }
    }
    // Every ray has entries in {-1,0,1} and a nonzero entry, so distinct means non-parallel.
    EXPECT_EQ(rays.size(), ray_cones);
  }
}

TEST(Fans, HVectorIsBinomialEulerian) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(h_vector(f_vector(aug_bergman_complex(make_boolean(n)))), binomial_eulerian(n));
  }
}

TEST(Fans, NestedToPairExample) {
  const Matroid b6 = make_boolean(6);
  const FiniteLattice aug = augmented_lattice(b6);
  const BuildingSet g = aug_building_set(b6, aug);
  NestedSet n{aug.index_of(Label::independent(Subset{1})), aug.index_of(Label::independent(Subset{3})),
              aug.index_of(Label::starred(Subset{1, 3, 6})), aug.index_of(Label::starred(Subset{1, 3, 5, 6})),
              aug.index_of(Label::starred(Subset{1, 3, 4, 5, 6}))};
  std::sort(n.begin(), n.end());
  const CompatiblePair p = nested_to_pair(b6, aug, g, n);
  EXPECT_EQ(p.independent, (Subset{1, 3}));
  EXPECT_EQ(p.flag, (Flag{Subset{1, 3, 6}, Subset{1, 3, 5, 6}, Subset{1, 3, 4, 5, 6}}));
  EXPECT_EQ(pair_to_nested(b6, aug, g, p), n);
}

TEST(Fans, NestedToPairTrivialCases) {
  const Matroid b2 = make_boolean(2);
  const FiniteLattice aug = augmented_lattice(b2);
  const BuildingSet g = aug_building_set(b2, aug);
  EXPECT_EQ(nested_to_pair(b2, aug, g, {}), (CompatiblePair{Subset(), {}}));
  const NestedSet two{aug.index_of(Label::independent(Subset{2}))};
  EXPECT_EQ(nested_to_pair(b2, aug, g, two), (CompatiblePair{Subset{2}, {}}));
  EXPECT_EQ(pair_to_nested(b2, aug, g, CompatiblePair{Subset{2}, {}}), two);
  // {1}_* and {2}_* are incomparable with join [2]_* in G.
  NestedSet bad{aug.index_of(Label::starred(Subset{1})), aug.index_of(Label::starred(Subset{2}))};
  std::sort(bad.begin(), bad.end());
  EXPECT_THROW(nested_to_pair(b2, aug, g, bad), InputError);
  EXPECT_THROW(pair_to_nested(b2, aug, g, CompatiblePair{Subset{2}, {Subset{1}}}), InputError);
}

TEST(Fans, NestedSetsMatchCompatiblePairs) {
  for (const Matroid& m : {make_boolean(3), make_boolean(4), make_uniform(3, 2), make_uniform(4, 2)}) {
    const FiniteLattice aug = augmented_lattice(m);
    const BuildingSet g = aug_building_set(m, aug);
    std::set<CompatiblePair> from_nested;
    for (const NestedSet& n : nested_sets(aug, g)) {
      if (std::find(n.begin(), n.end(), aug.top()) != n.end()) continue;
      const CompatiblePair p = nested_to_pair(m, aug, g, n);
      EXPECT_EQ(pair_to_nested(m, aug, g, p), n);
      from_nested.insert(p);
    }
    std::set<CompatiblePair> cones;
    for (const auto& c : aug_bergman_cones(m)) cones.insert(c.pair);
    EXPECT_EQ(from_nested, cones);
  }
}

TEST(Fans, StarNestedToPair) {
  const StarBuilding sb = star_building_set(2);
  auto at = [&](Subset s) { return sb.lattice.index_of(Label::vertices(s, 3)); };
  EXPECT_EQ(star_nested_to_pair(sb, {at({1, 3})}), (CompatiblePair{Subset(), {Subset{1}}}));
  NestedSet n12{at({1}), at({2})};
  std::sort(n12.begin(), n12.end());
  EXPECT_EQ(star_nested_to_pair(sb, n12), (CompatiblePair{Subset{1, 2}, {}}));
  EXPECT_EQ(star_nested_to_pair(sb, {}), (CompatiblePair{Subset(), {}}));
  EXPECT_EQ(star_nested_to_pair(sb, {at({3})}), (CompatiblePair{Subset(), {Subset()}}));
  NestedSet bad{at({1, 3}), at({2, 3})};
  std::sort(bad.begin(), bad.end());
  EXPECT_THROW(star_nested_to_pair(sb, bad), InputError);
}

TEST(Fans, StarComplexIsomorphicToAugmentedComplex) {
  for (int n = 1; n <= 4; ++n) {
    const StarBuilding sb = star_building_set(n);
    const auto nested = reduced_nested_complex(sb.lattice, sb.building);
    const auto aug = aug_bergman_complex(make_boolean(n));
    EXPECT_TRUE(complexes_isomorphic(nested, aug, [&](int v) { return star_tube_to_ray(sb, v); })) << n;
  }
}

TEST(Fans, ComplementedStarMapIsNotAnIsomorphism) {
  const StarBuilding sb = star_building_set(2);
  const auto nested = reduced_nested_complex(sb.lattice, sb.building);
  const auto aug = aug_bergman_complex(make_boolean(2));
  auto complement = [&](int v) {
    AugmentedRay r = star_tube_to_ray(sb, v);
    if (r.is_flat) r.flat = Subset::full(2) - r.flat;
    return r;
  };
  EXPECT_FALSE(complexes_isomorphic(nested, aug, complement));
}

TEST(Fans, ConeLine) {
  const Subset i{1};
  EXPECT_EQ(cone_line({Subset{1}}, {{1, 0}, {0, -1}}, &i), "I={1} ; flag=[{1}] ; rays=[[1,0],[0,-1]]");
  EXPECT_EQ(cone_line({}, {}, nullptr), "flag=[] ; rays=[]");
}
