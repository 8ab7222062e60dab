#include <gtest/gtest.h>

#include "chowlab/matroid.hpp"
#include "chowlab/permutation.hpp"

using namespace chowlab;

TEST(Subset, BasicsAndOrder) {
  Subset s{1, 3};
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.to_string(), "{1,3}");
  EXPECT_EQ(s.compact(), "13");
  EXPECT_EQ(Subset().compact(), "{}");
  EXPECT_EQ(Subset{10}.compact(), "(10)");
  EXPECT_TRUE(Subset{} < Subset{1});
  EXPECT_TRUE((Subset{1, 2} < Subset{1, 3}));
  EXPECT_TRUE((Subset{1, 2} < Subset{2}));
  EXPECT_EQ(all_subsets(3).size(), 8u);
  EXPECT_THROW(Subset().insert(0), InputError);
  EXPECT_THROW(Subset().insert(kMaxGroundSize + 1), InputError);
}

TEST(Matroid, Boolean) {
  EXPECT_EQ(make_boolean(2).bases(), std::vector<Subset>{(Subset{1, 2})});
  const Matroid b3 = make_boolean(3);
  EXPECT_EQ(flats(b3).flats.size(), 8u);
  const Matroid b1 = make_boolean(1);
  EXPECT_EQ(b1.rank(), 1);
  EXPECT_EQ(flat_list(b1), (std::vector<Subset>{Subset{}, Subset{1}}));
  EXPECT_THROW(make_boolean(0), InputError);
  EXPECT_EQ(b3.rank(Subset{1, 3}), 2);
  for (Subset s : all_subsets(3)) EXPECT_EQ(b3.closure(s), s);
}

TEST(Matroid, Uniform) {
  const Matroid u32 = make_uniform(3, 2);
  EXPECT_EQ(u32.bases(), (std::vector<Subset>{Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}));
  const FlatLattice f = flats(u32);
  EXPECT_EQ(f.flats.size(), 5u);
  EXPECT_EQ(f.ranks, (std::vector<int>{0, 1, 1, 1, 2}));
  EXPECT_EQ(u32.rank(Subset{1, 2, 3}), 2);
  EXPECT_EQ(u32.closure(Subset{1, 2}), (Subset{1, 2, 3}));
  EXPECT_EQ(make_uniform(4, 4), make_boolean(4));
  EXPECT_EQ(make_uniform(4, 2).bases().size(), 6u);
  EXPECT_EQ(flat_list(make_uniform(4, 2)).size(), 6u);
  EXPECT_THROW(make_uniform(3, 0), InputError);
  EXPECT_THROW(make_uniform(3, 4), InputError);
}

TEST(Matroid, FromBasesValidation) {
  EXPECT_EQ(from_bases(3, {Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}), make_uniform(3, 2));
  EXPECT_THROW(from_bases(3, {Subset{1, 2}, Subset{3}}), InputError);
  try {
    from_bases(2, {Subset{1}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("loop detected"), std::string::npos);
  }
  try {
    // {1,2} and {3,4} violate exchange: removing 1 from {1,2} needs {2,3} or {2,4}.
    from_bases(4, {Subset{1, 2}, Subset{3, 4}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not a matroid"), std::string::npos);
  }
}

TEST(Matroid, IndependentSets) {
  EXPECT_EQ(independent_sets(make_uniform(3, 2)).size(), 7u);
  EXPECT_EQ(independent_sets(make_boolean(2)).size(), 4u);
  EXPECT_EQ(independent_sets(make_uniform(4, 2)).size(), 11u);
}

TEST(Matroid, ClosureAxiomsAndSubmodularity) {
  std::vector<Matroid> ms{make_boolean(4), make_uniform(4, 2), make_uniform(5, 3), make_uniform(6, 4),
                          from_bases(4, {Subset{1, 3}, Subset{1, 4}, Subset{2, 3}, Subset{2, 4}})};
  for (const Matroid& m : ms) {
    const auto all = all_subsets(m.n());
    for (Subset a : all) {
      const Subset ca = m.closure(a);
      EXPECT_TRUE(a.is_subset_of(ca));
      EXPECT_EQ(m.closure(ca), ca);
      for (Subset b : all) {
        if (a.is_subset_of(b)) {
          EXPECT_TRUE(ca.is_subset_of(m.closure(b)));
        }
        if (m.n() <= 5) {
          EXPECT_GE(m.rank(a) + m.rank(b), m.rank(a | b) + m.rank(a & b));
        }
      }
    }
  }
}

TEST(Matroid, IndependentSetsDownwardClosedWithBasesMaximal) {
  for (const Matroid& m : {make_uniform(4, 2), make_uniform(5, 3), make_boolean(3)}) {
    const auto ind = independent_sets(m);
    std::set<Subset> s(ind.begin(), ind.end());
    std::vector<Subset> maximal;
    for (Subset i : ind) {
      bool is_max = true;
      for (int e = 1; e <= m.n(); ++e) {
        if (!i.contains(e)) {
          Subset j = i;
          j.insert(e);
          is_max = is_max && s.count(j) == 0;
        }
        Subset k = i;
        k.erase(e);
        EXPECT_EQ(s.count(k), 1u);
      }
      if (is_max) maximal.push_back(i);
    }
    std::sort(maximal.begin(), maximal.end());
    EXPECT_EQ(maximal, m.bases());
  }
}

TEST(Permutation, GroupLaws) {
  const auto all = all_permutations(4);
  EXPECT_EQ(all.size(), 24u);
  for (const auto& a : all) {
    EXPECT_EQ(compose(a, inverse(a)), identity_permutation(4));
    for (const auto& b : all) {
      for (Subset s : all_subsets(4)) EXPECT_EQ(chowlab::apply(compose(a, b), s), chowlab::apply(a, chowlab::apply(b, s)));
    }
  }
  EXPECT_EQ(transposition(3, 1, 2), (Permutation{2, 1, 3}));
  EXPECT_FALSE(is_permutation({1, 1, 3}));
}
