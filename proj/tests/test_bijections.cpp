#include <gtest/gtest.h>

#include "chowlab/bijections.hpp"
#include "chowlab/io.hpp"

using namespace chowlab;

TEST(Phi, Examples) {
  EXPECT_EQ(to_text(phi(4, parse_monomial("x_{12}x_{1234}"))), "11*22*");
  EXPECT_EQ(to_text(phi(4, parse_monomial("x_{123}^2"))), "111*0");
  EXPECT_EQ(to_text(phi(3, parse_monomial("1"))), "000");
  EXPECT_EQ(to_string(phi_inv(4, parse_code_text<false>("22*11*"))), "x_{34}x_{1234}");
  EXPECT_EQ(to_string(phi_inv(3, parse_code_text<false>("000"))), "1");
}

TEST(PhiTilde, Examples) {
  EXPECT_EQ(to_text(phi_tilde(9, parse_monomial("x_{14}x_{1247}x_{1245679}^2"))), "01z0221*z2*");
  EXPECT_EQ(to_text(phi_tilde(9, parse_monomial("x_{14}^2x_{1247}x_{1245679}^2"))), "12z1*332*z3*");
  EXPECT_EQ(to_text(phi_tilde(3, parse_monomial("1"))), "zzz");
  EXPECT_EQ(to_string(phi_tilde_inv(3, parse_code_text<true>("zzz"))), "1");
  EXPECT_EQ(to_string(phi_tilde_inv(9, parse_code_text<true>("12z1*332*z3*"))), "x_{14}^2x_{1247}x_{1245679}^2");
}

TEST(PhiTilde, RejectsNonBasisInput) {
  EXPECT_THROW(phi_tilde(3, parse_monomial("x_{1}x_{12}")), InputError);
}

TEST(Bijections, RoundTripsAndGrading) {
  for (int n = 1; n <= 5; ++n) {
    const Matroid b = make_boolean(n);
    std::set<Code> seen;
    for (const auto& [d, v] : fy_basis_matroid(b).by_degree) {
      for (const auto& u : v) {
        const Code c = phi(n, u);
        EXPECT_EQ(code_index(c), d);
        EXPECT_EQ(phi_inv(n, c), u);
        seen.insert(c);
      }
    }
    std::size_t codes = 0;
    for (const auto& [j, v] : enumerate_codes(n)) codes += v.size();
    EXPECT_EQ(seen.size(), codes);

    std::set<ExtendedCode> seen_ext;
    for (const auto& [d, v] : aug_fy_basis(b).by_degree) {
      for (const auto& u : v) {
        const ExtendedCode c = phi_tilde(n, u);
        EXPECT_EQ(code_index(c), d - 1);
        EXPECT_EQ(phi_tilde_inv(n, c), u);
        seen_ext.insert(c);
      }
    }
    std::size_t ext = 0;
    for (const auto& [j, v] : enumerate_extended_codes(n)) ext += v.size();
    EXPECT_EQ(seen_ext.size(), ext);
  }
}

TEST(Bijections, EquivariantExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = check_equivariance(n, all_permutations(n));
    EXPECT_TRUE(r.pass) << r.counterexample;
  }
}

TEST(Bijections, EquivariantRandomSix) {
  const auto sample = random_sample(6, 20, 7);
  const auto r = check_equivariance(6, sample);
  EXPECT_TRUE(r.pass) << r.counterexample;
  EXPECT_GT(r.checked, 0u);
}

TEST(Bijections, UninvertedActionFails) {
  for (int n = 3; n <= 4; ++n) {
    bool found = false;
    for (const auto& s : all_permutations(n)) {
      for (const auto& [d, v] : fy_basis_matroid(make_boolean(n)).by_degree) {
        for (const auto& u : v) found = found || phi(n, act_fy(s, u)) != act_code(s, phi(n, u));
      }
    }
    EXPECT_TRUE(found) << n;
  }
}
