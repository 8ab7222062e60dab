#include <gtest/gtest.h>

#include "chowlab/chow.hpp"
#include "chowlab/io.hpp"
#include "chowlab/symfunc.hpp"

using namespace chowlab;

namespace {

std::vector<std::string> names(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& v : p.variables) out.push_back(v.name());
  return out;
}

std::vector<std::string> monomials(const Presentation& p, int d) {
  std::vector<std::string> out;
  for (const auto& m : sr_monomials(p, d)) out.push_back(to_string(p, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> strings(const std::vector<FYMonomial>& v) {
  std::vector<std::string> out;
  for (const auto& u : v) out.push_back(to_string(u));
  return out;
}

}  // namespace

TEST(Presentation, ChowB2) {
  const Presentation p = chow_presentation(make_boolean(2));
  EXPECT_EQ(names(p), (std::vector<std::string>{"x_{1}", "x_{2}", "x_{12}"}));
  EXPECT_EQ(p.nonfaces, (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(p.linear_forms, (std::vector<std::vector<std::pair<int, int>>>{{{0, 1}, {2, 1}}, {{1, 1}, {2, 1}}}));
}

TEST(Presentation, Sizes) {
  const Presentation b3 = chow_presentation(make_boolean(3));
  EXPECT_EQ(b3.variables.size(), 7u);
  EXPECT_EQ(b3.nonfaces.size(), 9u);
  const Presentation u = chow_presentation(make_uniform(3, 2));
  EXPECT_EQ(u.variables.size(), 4u);
  EXPECT_EQ(u.nonfaces.size(), 3u);
  EXPECT_EQ(u.linear_forms.size(), 3u);
  const Presentation au = aug_chow_presentation(make_uniform(3, 2));
  EXPECT_EQ(au.variables.size(), 7u);
}

TEST(Presentation, AugmentedSmall) {
  const Presentation b1 = aug_chow_presentation(make_boolean(1));
  EXPECT_EQ(names(b1), (std::vector<std::string>{"y_1", "x_{}"}));
  EXPECT_EQ(b1.nonfaces, (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(b1.linear_forms, (std::vector<std::vector<std::pair<int, int>>>{{{0, 1}, {1, -1}}}));

  const Presentation b2 = aug_chow_presentation(make_boolean(2));
  EXPECT_EQ(names(b2), (std::vector<std::string>{"y_1", "y_2", "x_{}", "x_{1}", "x_{2}"}));
  std::set<std::pair<std::string, std::string>> nf;
  for (auto [a, b] : b2.nonfaces) nf.emplace(b2.variables[a].name(), b2.variables[b].name());
  EXPECT_EQ(nf, (std::set<std::pair<std::string, std::string>>{
                    {"x_{1}", "x_{2}"}, {"y_1", "x_{2}"}, {"y_2", "x_{1}"}, {"y_1", "x_{}"}, {"y_2", "x_{}"}}));
}

TEST(Oracle, StanleyReisnerMonomials) {
  const Presentation p = chow_presentation(make_boolean(2));
  EXPECT_EQ(monomials(p, 1), (std::vector<std::string>{"x_{12}", "x_{1}", "x_{2}"}));
  EXPECT_EQ(monomials(p, 2),
            (std::vector<std::string>{"x_{12}^2", "x_{1}^2", "x_{1}x_{12}", "x_{2}^2", "x_{2}x_{12}"}));
  EXPECT_EQ(monomials(aug_chow_presentation(make_boolean(1)), 1), (std::vector<std::string>{"x_{}", "y_1"}));
}

TEST(Oracle, HilbertFunctions) {
  EXPECT_EQ(hilbert_quotient_series(chow_presentation(make_boolean(3)), 3), (std::vector<std::int64_t>{1, 4, 1, 0}));
  EXPECT_EQ(hilbert_quotient_series(aug_chow_presentation(make_boolean(2)), 3),
            (std::vector<std::int64_t>{1, 3, 1, 0}));
  EXPECT_EQ(hilbert_quotient(chow_presentation(make_uniform(4, 2)), 0), 1);
}

TEST(Oracle, AgreesWithBases) {
  for (const Matroid& m : {make_boolean(3), make_boolean(4), make_uniform(3, 2), make_uniform(4, 2), make_uniform(4, 3),
                           make_uniform(5, 3)}) {
    auto fy = hilbert_series_fy(fy_basis_matroid(m));
    auto aug = hilbert_series_fy(aug_fy_basis(m));
    const auto h = hilbert_quotient_series(chow_presentation(m), static_cast<int>(fy.size()));
    const auto ha = hilbert_quotient_series(aug_chow_presentation(m), static_cast<int>(aug.size()));
    fy.push_back(0);
    aug.push_back(0);
    EXPECT_EQ(h, fy);
    EXPECT_EQ(ha, aug);
  }
}

TEST(FYBasis, GenericOnBooleanLattice) {
  const FiniteLattice l = boolean_lattice(3);
  EXPECT_EQ(hilbert_series_fy(fy_basis_lattice(l, maximal_building_set(l))), (std::vector<std::int64_t>{1, 4, 1}));
}

TEST(FYBasis, GenericOnAugmentedB1) {
  const Matroid b1 = make_boolean(1);
  const FiniteLattice l = augmented_lattice(b1);
  const auto basis = fy_basis_lattice(l, aug_building_set(b1, l));
  EXPECT_EQ(hilbert_series_fy(basis), (std::vector<std::int64_t>{1, 1}));
  const auto& deg1 = basis.by_degree.at(1);
  ASSERT_EQ(deg1.size(), 1u);
  EXPECT_EQ(l.label(deg1.front().chain.front()), Label::starred(Subset{1}));
}

TEST(FYBasis, GenericOnTwoChain) {
  const FiniteLattice l = lattice_of_flats(make_boolean(1));
  EXPECT_EQ(hilbert_series_fy(fy_basis_lattice(l, maximal_building_set(l))), (std::vector<std::int64_t>{1}));
}

TEST(FYBasis, GenericAgreesWithMatroidBases) {
  for (const Matroid& m : {make_boolean(2), make_boolean(4), make_boolean(5), make_uniform(3, 2), make_uniform(4, 2),
                           make_uniform(4, 3)}) {
    const FiniteLattice l = lattice_of_flats(m);
    EXPECT_EQ(translate_basis(l, fy_basis_lattice(l, maximal_building_set(l))), fy_basis_matroid(m));
    const FiniteLattice la = augmented_lattice(m);
    if (m.n() <= 4) {
      EXPECT_EQ(translate_basis(la, fy_basis_lattice(la, aug_building_set(m, la))), aug_fy_basis(m));
    }
  }
}

TEST(FYBasis, DegreeTwoOfB4) {
  const auto b = fy_basis_matroid(make_boolean(4));
  std::vector<std::string> got = strings(b.by_degree.at(2));
  std::sort(got.begin(), got.end());
  std::vector<std::string> want{"x_{12}x_{1234}", "x_{13}x_{1234}", "x_{14}x_{1234}", "x_{23}x_{1234}",
                                "x_{24}x_{1234}", "x_{34}x_{1234}", "x_{123}^2",      "x_{124}^2",
                                "x_{134}^2",      "x_{234}^2",      "x_{1234}^2"};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(strings(b.by_degree.at(0)), std::vector<std::string>{"1"});
  EXPECT_EQ(hilbert_series_fy(fy_basis_matroid(make_boolean(3))), (std::vector<std::int64_t>{1, 4, 1}));
}

TEST(FYBasis, AugmentedB3) {
  const auto b = aug_fy_basis(make_boolean(3));
  EXPECT_EQ(b.total(), 16u);
  EXPECT_EQ(hilbert_series_fy(b), (std::vector<std::int64_t>{1, 7, 7, 1}));
  std::vector<std::string> deg1 = strings(b.by_degree.at(1));
  std::sort(deg1.begin(), deg1.end());
  EXPECT_EQ(deg1, (std::vector<std::string>{"x_{123}", "x_{12}", "x_{13}", "x_{1}", "x_{23}", "x_{2}", "x_{3}"}));
  for (const auto& [d, v] : b.by_degree) {
    for (const auto& u : v) EXPECT_NE(to_string(u), "x_{1}x_{12}");
  }
}

TEST(FYBasis, AugmentedSmall) {
  EXPECT_EQ(hilbert_series_fy(aug_fy_basis(make_boolean(1))), (std::vector<std::int64_t>{1, 1}));
  const auto u = aug_fy_basis(make_uniform(3, 2));
  EXPECT_EQ(hilbert_series_fy(u), (std::vector<std::int64_t>{1, 4, 1}));
  EXPECT_EQ(strings(u.by_degree.at(2)), std::vector<std::string>{"x_{123}^2"});
}

TEST(FYBasis, Palindromic) {
  for (int n = 1; n <= 7; ++n) {
    const auto a = hilbert_series_fy(fy_basis_matroid(make_boolean(n)));
    const auto b = hilbert_series_fy(aug_fy_basis(make_boolean(n)));
    EXPECT_TRUE(std::equal(a.begin(), a.end(), a.rbegin())) << n;
    EXPECT_TRUE(std::equal(b.begin(), b.end(), b.rbegin())) << n;
    EXPECT_EQ(a, eulerian(n));
    EXPECT_EQ(b, binomial_eulerian(n));
  }
}

TEST(FYBasis, MembershipChecker) {
  const Matroid b4 = make_boolean(4);
  EXPECT_TRUE(in_fy_basis(b4, parse_monomial("x_{12}x_{1234}")));
  EXPECT_FALSE(in_fy_basis(b4, parse_monomial("x_{12}^2")));
  EXPECT_FALSE(in_fy_basis(b4, parse_monomial("x_{1}")));
  EXPECT_TRUE(in_aug_fy_basis(b4, parse_monomial("x_{1}")));
  EXPECT_FALSE(in_aug_fy_basis(b4, parse_monomial("x_{1}x_{12}")));
  EXPECT_FALSE(in_aug_fy_basis(make_uniform(3, 2), parse_monomial("x_{12}")));
}

TEST(FYBasis, Action) {
  const FYMonomial u = parse_monomial("x_{12}x_{1234}");
  EXPECT_EQ(act_fy(transposition(4, 1, 2), u), u);
  EXPECT_EQ(to_string(act_fy(transposition(4, 2, 3), u)), "x_{13}x_{1234}");
  EXPECT_EQ(act_fy(identity_permutation(4), u), u);
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    const Matroid b = make_boolean(n);
    for (const auto& [d, v] : aug_fy_basis(b).by_degree) {
      for (const auto& w : v) {
        for (const auto& s : perms) {
          const FYMonomial sw = act_fy(s, w);
          EXPECT_EQ(sw.degree(), d);
          EXPECT_TRUE(in_aug_fy_basis(b, sw));
          for (const auto& t : perms) EXPECT_EQ(act_fy(t, sw), act_fy(compose(t, s), w));
        }
      }
    }
  }
}
