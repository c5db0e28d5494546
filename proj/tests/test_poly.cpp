#include <gtest/gtest.h>

#include <random>

#include "flagcalc/errors.hpp"
#include "flagcalc/nilhecke.hpp"
#include "flagcalc/poly.hpp"

using namespace flagcalc;

namespace {

using Point = std::array<Rational, kNumVars>;

Rational eval(const Poly& p, const Point& pt) {
  Rational sum = 0;
  for (const Term& t : p.terms()) {
    Rational v = t.coef;
    for (int k = 0; k < kNumVars; ++k) {
      for (int e = 0; e < t.mon.exp[k]; ++e) v *= pt[k];
    }
    sum += v;
  }
  return sum;
}

Point random_point(std::mt19937_64& rng) {
  Point pt;
  for (Rational& r : pt) {
    r = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
    r.canonicalize();
  }
  return pt;
}

Poly X(int i) { return Poly::var(Block::X, i); }
Poly Y(int i) { return Poly::var(Block::Y, i); }
Poly T(int i) { return Poly::var(Block::T, i); }

const Block kAll[] = {Block::X, Block::Y, Block::T};

}  // namespace

TEST(Poly, Examples) {
  EXPECT_TRUE(add(X(1), -X(1)).is_zero());
  EXPECT_EQ(mul(X(1) - T(1), X(1) + T(1)), X(1) * X(1) - T(1) * T(1));
  EXPECT_EQ(scale(2 * X(1), Rational(1, 2)), X(1));
  EXPECT_EQ(Poly(0), Poly());
  EXPECT_EQ((X(1) + T(2)).pow(2), X(1) * X(1) + 2 * X(1) * T(2) + T(2) * T(2));
}

TEST(Poly, CanonicalTextForm) {
  const Poly p = X(1) * X(1) * T(2) - Rational(3, 2) * Y(1);
  EXPECT_EQ(p.to_string(), "x1^2*t2 - 3/2*y1");
  EXPECT_EQ(Poly().to_string(), "0");
  EXPECT_EQ(Poly(-1).to_string(), "-1");
  EXPECT_EQ((X(2) + X(1)).to_string(), "x1 + x2");
  EXPECT_EQ((T(1) + X(3)).to_string(), "x3 + t1");
  EXPECT_EQ((X(2) * X(2) + X(1)).to_string(), "x2^2 + x1");
  EXPECT_EQ((Rational(1, 2) * X(1) * X(1)).to_latex(), "\\frac{1}{2} x_{1}^{2}");
}

TEST(Poly, ParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Poly p = random_poly(rng, kAll, 4, 5, 6);
    p *= Rational(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1);
    EXPECT_EQ(parse_poly(p.to_string()), p) << p.to_string();
  }
  EXPECT_EQ(parse_poly(" 2 * x1 ^2*t2-3/2*y1 "), 2 * X(1) * X(1) * T(2) - Rational(3, 2) * Y(1));
  EXPECT_EQ(parse_poly("-(x1 - t1)*(x1 + t1)"), T(1) * T(1) - X(1) * X(1));
  EXPECT_THROW(parse_poly("x1 +"), UsageError);
  EXPECT_THROW(parse_poly("z1"), UsageError);
  EXPECT_THROW(parse_poly("x9"), UsageError);
  EXPECT_THROW(parse_poly("1/0"), UsageError);
}

TEST(Poly, RingAxiomsByEvaluation) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Poly p = random_poly(rng, kAll, 3, 4, 5);
    const Poly q = random_poly(rng, kAll, 3, 4, 5);
    const Poly r = random_poly(rng, kAll, 3, 4, 5);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
    const Point pt = random_point(rng);
    EXPECT_EQ(eval(p * q, pt), eval(p, pt) * eval(q, pt));
    EXPECT_EQ(eval(p + q, pt), eval(p, pt) + eval(q, pt));
    for (std::size_t i = 1; i < (p * q).terms().size(); ++i) {
      EXPECT_TRUE(grlex_greater((p * q).terms()[i - 1].mon, (p * q).terms()[i].mon));
      EXPECT_NE((p * q).terms()[i].coef, 0);
    }
  }
}

TEST(Poly, DegreeAndBlocks) {
  const Poly p = X(1) * X(2) + T(3);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.blocks_used(), (1u << 0) | (1u << 2));
  EXPECT_EQ(p.max_index(), 3);
  EXPECT_EQ((p + 5).constant_term(), 5);
}

TEST(WeylAct, Examples) {
  const auto a2 = build_root_system(Family::A, 2);
  EXPECT_EQ(weyl_act(X(1), WeylElement::generator(a2, 1), Block::X), X(2));
  const WeylGroup g(a2);
  for (const WeylElement& w : g.elements()) {
    EXPECT_EQ(weyl_act(X(1) + X(2) + X(3), w, Block::X), X(1) + X(2) + X(3));
  }
  const auto b1 = build_root_system(Family::B, 1);
  EXPECT_EQ(weyl_act(X(1), WeylElement::generator(b1, 1), Block::X), -X(1));
  EXPECT_EQ(weyl_act(X(1) + T(1), WeylElement::generator(a2, 1), Block::T), X(1) + T(2));
  EXPECT_THROW(weyl_act(X(4), g.longest(), Block::X), UsageError);
}

TEST(WeylAct, LeftActionAndInverse) {
  std::mt19937_64 rng(5);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::C, 2}, {Family::D, 3}}) {
    const WeylGroup g(build_root_system(f, r));
    const int dim = g.root_system().ambient_dim();
    for (int k = 0; k < 100; ++k) {
      const Poly p = random_poly(rng, kAll, dim, 4, 5);
      const WeylElement& a = g[rng() % g.size()];
      const WeylElement& b = g[rng() % g.size()];
      EXPECT_EQ(weyl_act(weyl_act(p, a, Block::X), a.inverse(), Block::X), p);
      EXPECT_EQ(weyl_act(weyl_act(p, a, Block::T), b, Block::T), weyl_act(p, b * a, Block::T));
      // Evaluation oracle: (a·p)(z) = p(z') with z'_i = ±z_{|a(i)|}.
      const Point pt = random_point(rng);
      Point moved = pt;
      for (int i = 0; i < dim; ++i) {
        const int img = a.images()[i];
        const int j = std::abs(img) - 1;
        moved[var_id(Block::X, i)] = img > 0 ? pt[var_id(Block::X, j)] : Rational(-pt[var_id(Block::X, j)]);
      }
      EXPECT_EQ(eval(weyl_act(p, a, Block::X), pt), eval(p, moved));
    }
  }
}

TEST(Substitute, Examples) {
  LinearForm y1{Block::Y, {1, 0}}, y2{Block::Y, {0, 1}};
  const std::vector<LinearForm> to_y = {y1, y2};
  EXPECT_EQ(substitute_block(X(1) - T(1), Block::X, to_y), Y(1) - T(1));
  const std::vector<LinearForm> zero = {LinearForm{Block::T, {0, 0}}, LinearForm{Block::T, {0, 0}}};
  EXPECT_EQ(substitute_block(X(1) - T(1), Block::X, zero), -T(1));
  // u = s1 in A1: x_i ↦ t_{u(i)}
  const std::vector<LinearForm> ut = {LinearForm{Block::T, {0, 1}}, LinearForm{Block::T, {1, 0}}};
  EXPECT_EQ(substitute_block(X(1) - T(1), Block::X, ut), T(2) - T(1));
}

TEST(Substitute, ComposesAndMatchesEvaluation) {
  std::mt19937_64 rng(3);
  const Block xs[] = {Block::X};
  for (int k = 0; k < 50; ++k) {
    const Poly p = random_poly(rng, xs, 3, 4, 5);
    std::vector<LinearForm> to_y, y_to_t, to_t;
    for (int i = 0; i < 3; ++i) {
      LinearForm a{Block::Y, {0, 0, 0}};
      a.coeffs[i] = 1;
      to_y.push_back(a);
      LinearForm b{Block::T, {0, 0, 0}};
      b.coeffs[i] = 1;
      y_to_t.push_back(b);
      to_t.push_back(b);
    }
    EXPECT_EQ(substitute_block(substitute_block(p, Block::X, to_y), Block::Y, y_to_t),
              substitute_block(p, Block::X, to_t));
    // A generic linear substitution against evaluation.
    std::vector<LinearForm> gen;
    for (int i = 0; i < 3; ++i) {
      LinearForm f{Block::T, {}};
      for (int j = 0; j < 3; ++j) f.coeffs.push_back(Rational(static_cast<long>(rng() % 7) - 3));
      gen.push_back(f);
    }
    const Point pt = random_point(rng);
    Point image = pt;
    for (int i = 0; i < 3; ++i) {
      Rational v = 0;
      for (int j = 0; j < 3; ++j) v += gen[i].coeffs[j] * pt[var_id(Block::T, j)];
      image[var_id(Block::X, i)] = v;
    }
    EXPECT_EQ(eval(substitute_block(p, Block::X, gen), pt), eval(p, image));
  }
}

TEST(DivideExact, Examples) {
  const LinearForm d{Block::X, {1, -1}};
  EXPECT_EQ(divide_exact(X(1) * X(1) - X(2) * X(2), d), X(1) + X(2));
  EXPECT_TRUE(divide_exact(Poly(), d).is_zero());
  EXPECT_EQ(divide_exact((X(1) - T(1)) * (X(1) - X(2)), d), X(1) - T(1));
  EXPECT_THROW(divide_exact(X(1), d), DivisibilityError);
  EXPECT_THROW(divide_exact(X(1) * X(2) + 1, d), DivisibilityError);
}

TEST(DivideExact, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const Poly q = random_poly(rng, kAll, 3, 4, 6);
    const Block b = kAll[rng() % 3];
    LinearForm d{b, {0, 0, 0}};
    while (d.is_zero()) {
      for (Rational& c : d.coeffs) c = Rational(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 2) + 1);
    }
    EXPECT_EQ(divide_exact(q * d.to_poly(), d), q);
    const Poly bumped = q * d.to_poly() + Poly::var(b == Block::X ? Block::Y : Block::X, 1);
    EXPECT_THROW(divide_exact(bumped, d), DivisibilityError);
  }
}

TEST(Symmetric, Examples) {
  const RootSystem a2(Family::A, 2);
  EXPECT_TRUE(is_symmetric(X(1) * X(2) * X(3), Block::X, a2));
  EXPECT_FALSE(is_symmetric(X(1), Block::X, a2));
  std::mt19937_64 rng(17);
  const WeylGroup g(build_root_system(Family::A, 2));
  const Block xs[] = {Block::X};
  for (int k = 0; k < 20; ++k) {
    const Poly p = random_poly(rng, xs, 3, 3, 6);
    EXPECT_TRUE(is_symmetric(demazure_w(g.longest(), Block::X, p), Block::X, a2));
  }
  const RootSystem b2(Family::B, 2);
  EXPECT_TRUE(is_symmetric(X(1) * X(1) + X(2) * X(2), Block::X, b2));
  EXPECT_FALSE(is_symmetric(X(1) + X(2), Block::X, b2));
}

TEST(RandomPoly, DeterministicForSeed) {
  std::mt19937_64 a(42), b(42);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(random_poly(a, kAll, 3, 4, 5), random_poly(b, kAll, 3, 4, 5));
}
