#include <gtest/gtest.h>

#include <random>

#include "flagcalc/convolution.hpp"
#include "flagcalc/nilhecke.hpp"

using namespace flagcalc;

namespace {

Poly X(int i) { return Poly::var(Block::X, i); }

const Block kX[] = {Block::X};

struct Case {
  Family family;
  int rank;
};

const std::vector<Case> kCases = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                  {Family::B, 2}, {Family::C, 2}, {Family::D, 3}};

// x-monomials of total degree ≤ d in the ambient variables.
std::vector<Poly> x_monomials(int dim, int d) {
  std::vector<Poly> out;
  SignedRenaming r;
  r.set_block(Block::T, Block::X);
  for (const Poly& m : t_monomials(dim, d)) out.push_back(r.apply(m));
  return out;
}

Poly s_act(const RootSystem& rs, int i, const Poly& p) {
  return weyl_act(p, WeylElement::generator(std::make_shared<RootSystem>(rs), i), Block::X);
}

}  // namespace

TEST(Demazure, Examples) {
  const RootSystem a2(Family::A, 2);
  EXPECT_EQ(demazure(a2, 1, Block::X, X(1)), Poly(1));
  EXPECT_TRUE(demazure(a2, 1, Block::X, X(1) * X(2)).is_zero());
  const RootSystem b2(Family::B, 2);
  EXPECT_EQ(demazure(b2, 2, Block::X, X(2)), Poly(2));  // (x2 + x2) / x2
  const RootSystem c2(Family::C, 2);
  EXPECT_EQ(demazure(c2, 2, Block::X, X(2)), Poly(1));  // (x2 + x2) / 2x2
}

TEST(Demazure, MultiplyBackAndSquareZero) {
  std::mt19937_64 rng(1);
  for (const Case& c : kCases) {
    const RootSystem rs(c.family, c.rank);
    for (int k = 0; k < 30; ++k) {
      const Poly p = random_poly(rng, kX, rs.ambient_dim(), 5, 6);
      for (int i = 1; i <= c.rank; ++i) {
        const Poly d = demazure(rs, i, Block::X, p);
        EXPECT_EQ(d * root_form(rs.simple_root(i), Block::X).to_poly(), p - s_act(rs, i, p));
        if (!d.is_zero() && p.is_homogeneous()) {
          EXPECT_EQ(d.degree(), p.degree() - 1);
        }
        EXPECT_TRUE(demazure(rs, i, Block::X, d).is_zero());
      }
    }
  }
}

TEST(Demazure, TwistedLinearity) {
  std::mt19937_64 rng(2);
  for (const Case& c : kCases) {
    const RootSystem rs(c.family, c.rank);
    for (int k = 0; k < 20; ++k) {
      const Poly f = random_poly(rng, kX, rs.ambient_dim(), 3, 4);
      const Poly g = random_poly(rng, kX, rs.ambient_dim(), 3, 4);
      for (int i = 1; i <= c.rank; ++i) {
        EXPECT_EQ(demazure(rs, i, Block::X, f * g),
                  demazure(rs, i, Block::X, f) * g + s_act(rs, i, f) * demazure(rs, i, Block::X, g));
      }
    }
  }
}

TEST(Demazure, ActsOnChosenBlockOnly) {
  const RootSystem a2(Family::A, 2);
  const Poly p = X(1) * Poly::var(Block::T, 1);
  EXPECT_EQ(demazure(a2, 1, Block::T, p), X(1));
  EXPECT_EQ(demazure(a2, 1, Block::X, p), Poly::var(Block::T, 1));
}

TEST(DemazureWord, IdentityAndNonReduced) {
  std::mt19937_64 rng(3);
  const auto g = make_weyl_group(Family::A, 2);
  const Poly p = random_poly(rng, kX, 3, 4, 6);
  EXPECT_EQ(demazure_w(g->identity(), Block::X, p), p);
  EXPECT_EQ(demazure_word(g->root_system(), Word{}, Block::X, p), p);
  EXPECT_TRUE(demazure_word(g->root_system(), Word{1, 1}, Block::X, p).is_zero());
}

TEST(DemazureWord, BraidInvarianceA2) {
  std::mt19937_64 rng(4);
  const RootSystem a2(Family::A, 2);
  for (int k = 0; k < 50; ++k) {
    const Poly p = random_poly(rng, kX, 3, 4, 6);
    EXPECT_EQ(demazure_word(a2, Word{1, 2, 1}, Block::X, p), demazure_word(a2, Word{2, 1, 2}, Block::X, p));
  }
}

TEST(DemazureWord, AllReducedWordsAgree) {
  std::mt19937_64 rng(5);
  for (const Case& c : std::vector<Case>{{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 3}}) {
    const auto g = make_weyl_group(c.family, c.rank);
    const int dim = g->root_system().ambient_dim();
    const Poly p = random_poly(rng, kX, dim, g->longest().length(), 8);
    for (const WeylElement& w : g->elements()) {
      const Poly expected = demazure_w(w, Block::X, p);
      for (const Word& word : all_reduced_words(w).words) {
        ASSERT_EQ(demazure_word(g->root_system(), word, Block::X, p), expected);
      }
    }
  }
}

TEST(DemazureWord, NilPropertyExhaustive) {
  std::mt19937_64 rng(6);
  for (const Case& c : std::vector<Case>{{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 2}}) {
    const auto g = make_weyl_group(c.family, c.rank);
    const RootSystemPtr& rs = g->root_system_ptr();
    const Poly p = random_poly(rng, kX, rs->ambient_dim(), g->longest().length() + 1, 6);
    std::vector<Word> layer{{}};
    for (int len = 1; len <= g->longest().length() + 1; ++len) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        for (int i = 1; i <= c.rank; ++i) {
          Word v = w;
          v.push_back(i);
          next.push_back(v);
        }
      }
      layer = std::move(next);
      for (const Word& w : layer) {
        if (WeylElement::from_word(rs, w).length() == len) continue;
        ASSERT_TRUE(demazure_word(*rs, w, Block::X, p).is_zero()) << format_word(w);
      }
    }
  }
}

TEST(LeibnizExpand, Examples) {
  const auto g = make_weyl_group(Family::A, 2);
  const WeylElement s1 = WeylElement::generator(g->root_system_ptr(), 1);
  EXPECT_EQ(leibniz_expand(g, 1, Poly(1)), NilHeckeElement::term(g, s1, Poly(1)));
  const NilHeckeElement e = leibniz_expand(g, 1, X(1));
  NilHeckeElement expected = NilHeckeElement::multiplication(g, Poly(1));
  expected.add_term(s1, X(2));
  EXPECT_EQ(e, expected);
  EXPECT_EQ(e.to_string(), "(1) d[] + (x2) d[1]");
  EXPECT_EQ(e.to_json().dump(), R"([[[],"1"],[[1],"x2"]])");
  EXPECT_EQ(e.apply(X(1)), X(1) + X(2));
  EXPECT_EQ(demazure(g->root_system(), 1, Block::X, X(1) * X(1)), X(1) + X(2));
  EXPECT_EQ(NilHeckeElement(g).to_string(), "0");
}

TEST(LeibnizExpand, ActsAsDemazureOfProduct) {
  std::mt19937_64 rng(7);
  for (const Case& c : kCases) {
    const auto g = make_weyl_group(c.family, c.rank);
    const int dim = g->root_system().ambient_dim();
    for (int k = 0; k < 10; ++k) {
      const Poly f = random_poly(rng, kX, dim, 3, 4);
      const Poly h = random_poly(rng, kX, dim, 3, 4);
      for (int i = 1; i <= c.rank; ++i) {
        EXPECT_EQ(leibniz_expand(g, i, f).apply(h), demazure(g->root_system(), i, Block::X, f * h));
      }
    }
  }
}

TEST(NilHecke, ProductExamples) {
  const auto g = make_weyl_group(Family::A, 2);
  const RootSystemPtr& rs = g->root_system_ptr();
  const WeylElement s1 = WeylElement::generator(rs, 1);
  const WeylElement s2 = WeylElement::generator(rs, 2);
  const auto d1 = NilHeckeElement::term(g, s1, Poly(1));
  const auto d2 = NilHeckeElement::term(g, s2, Poly(1));
  EXPECT_TRUE(nh_multiply(d1, d1).is_zero());
  EXPECT_EQ(nh_multiply(d1, d2), NilHeckeElement::term(g, s1 * s2, Poly(1)));
  EXPECT_EQ(nh_multiply(NilHeckeElement::multiplication(g, X(1)), NilHeckeElement::multiplication(g, X(2))),
            NilHeckeElement::multiplication(g, X(1) * X(2)));
}

TEST(NilHecke, BasisProductsFollowLengthAdditivity) {
  const auto g = make_weyl_group(Family::B, 2);
  for (const WeylElement& u : g->elements()) {
    for (const WeylElement& v : g->elements()) {
      const auto p = nh_multiply(NilHeckeElement::term(g, u, Poly(1)), NilHeckeElement::term(g, v, Poly(1)));
      if ((u * v).length() == u.length() + v.length()) {
        EXPECT_EQ(p, NilHeckeElement::term(g, u * v, Poly(1)));
      } else {
        EXPECT_TRUE(p.is_zero());
      }
    }
  }
}

TEST(NilHecke, ProductIsFaithfulComposition) {
  std::mt19937_64 rng(8);
  for (const Case& c : std::vector<Case>{{Family::A, 2}, {Family::B, 2}}) {
    const auto g = make_weyl_group(c.family, c.rank);
    const int dim = g->root_system().ambient_dim();
    const std::vector<Poly> tests = x_monomials(dim, g->longest().length() + 1);
    for (int k = 0; k < 10; ++k) {
      NilHeckeElement a(g), b(g);
      for (int j = 0; j < 3; ++j) {
        a.add_term((*g)[rng() % g->size()], random_poly(rng, kX, dim, 2, 2));
        b.add_term((*g)[rng() % g->size()], random_poly(rng, kX, dim, 2, 2));
      }
      const NilHeckeElement ab = nh_multiply(a, b);
      for (const Poly& m : tests) ASSERT_EQ(ab.apply(m), a.apply(b.apply(m)));
    }
  }
}

TEST(NilHecke, DemazureTimesIsNormalForm) {
  std::mt19937_64 rng(9);
  const auto g = make_weyl_group(Family::A, 2);
  const std::vector<Poly> tests = x_monomials(3, 4);
  for (const WeylElement& w : g->elements()) {
    const Poly f = random_poly(rng, kX, 3, 3, 3);
    const NilHeckeElement nf = demazure_times(g, w, f);
    for (const Poly& m : tests) ASSERT_EQ(nf.apply(m), demazure_w(w, Block::X, f * m));
  }
}

TEST(TotalLeibniz, ConstantF) {
  for (const Case& c : kCases) {
    const auto g = make_weyl_group(c.family, c.rank);
    const auto [left, right] = total_leibniz_sides(g, Poly(1));
    NilHeckeElement expected = NilHeckeElement::term(g, g->longest(), Poly(g->longest().length() % 2 ? -1 : 1));
    EXPECT_EQ(left, expected);
    EXPECT_EQ(right, expected);
  }
}

TEST(TotalLeibniz, RankOneByHand) {
  // A1, F = x1: the left side acts as g ↦ -∂1(x2 g).
  const auto g = make_weyl_group(Family::A, 1);
  const auto [left, right] = total_leibniz_sides(g, X(1));
  const RootSystem& rs = g->root_system();
  for (const Poly& v : {Poly(1), X(1)}) {
    const Poly direct = -demazure(rs, 1, Block::X, X(2) * v);
    EXPECT_EQ(left.apply(v), direct);
    EXPECT_EQ(right.apply(v), direct);
  }
  EXPECT_EQ(left.apply(Poly(1)), Poly(1));
  EXPECT_TRUE(left.apply(X(1)).is_zero());
}

TEST(TotalLeibniz, AllMonomialsSmallRanks) {
  for (const Case& c : std::vector<Case>{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}}) {
    const auto g = make_weyl_group(c.family, c.rank);
    for (const Poly& F : x_monomials(g->root_system().ambient_dim(), g->longest().length())) {
      const auto [left, right] = total_leibniz_sides(g, F);
      ASSERT_EQ(left, right) << F.to_string();
    }
  }
}

TEST(TotalLeibniz, PolynomialFormMatchesDirectComputation) {
  std::mt19937_64 rng(10);
  for (const Case& c : std::vector<Case>{{Family::A, 2}, {Family::B, 2}, {Family::C, 2}}) {
    const auto g = make_weyl_group(c.family, c.rank);
    const int dim = g->root_system().ambient_dim();
    const int top = g->longest().length();
    for (int k = 0; k < 20; ++k) {
      const Poly F = random_poly(rng, kX, dim, top, 3);
      const Poly G = random_poly(rng, kX, dim, top, 3);
      const auto [left, right] = total_leibniz_polynomial_sides(*g, F, G);
      Poly direct = demazure_w(g->longest(), Block::X, weyl_act(F, g->longest(), Block::X) * G);
      if (top % 2) direct = -direct;
      EXPECT_EQ(left, direct);
      EXPECT_EQ(right, direct);
    }
  }
}

TEST(Symmetrization, TopOperatorGivesInvariants) {
  std::mt19937_64 rng(11);
  for (const Case& c : kCases) {
    const auto g = make_weyl_group(c.family, c.rank);
    const Poly p = random_poly(rng, kX, g->root_system().ambient_dim(), g->longest().length() + 2, 6);
    EXPECT_TRUE(is_symmetric(demazure_w(g->longest(), Block::X, p), Block::X, g->root_system()));
  }
}
