#include <gtest/gtest.h>

#include <random>

#include "flagcalc/errors.hpp"
#include "flagcalc/gkm.hpp"
#include "flagcalc/schubert.hpp"

using namespace flagcalc;

namespace {

Poly T(int i) { return Poly::var(Block::T, i); }

WeylGroupPtr group(Family f, int r) { return make_weyl_group(f, r); }

// Billey's subword formula: ξ_w(u) = Σ over reduced subwords of a fixed
// reduced word of u that multiply to w, of Π (-β_j)(t), where
// β_j = s_{a_1} ... s_{a_{j-1}}(α_{a_j}). Returns the column w ↦ ξ_w(u).
std::vector<Poly> billey_column(const WeylGroup& g, const WeylElement& u) {
  const RootSystemPtr& rs = g.root_system_ptr();
  const Word a = u.reduced_word();
  std::vector<Poly> beta;
  WeylElement prefix = WeylElement::identity(rs);
  for (int letter : a) {
    beta.push_back(-root_form(prefix.apply(rs->simple_root(letter)), Block::T).to_poly());
    prefix = prefix * WeylElement::generator(rs, letter);
  }
  std::vector<Poly> out(g.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()); ++mask) {
    Word sub;
    Poly weight(1);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      sub.push_back(a[j]);
      weight *= beta[j];
    }
    const WeylElement w = WeylElement::from_word(rs, sub);
    if (w.length() == static_cast<int>(sub.size())) out[g.index_of(w)] += weight;
  }
  return out;
}

struct Case {
  Family family;
  int rank;
};

const Case kCases[] = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 2},
                       {Family::B, 3}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};

}  // namespace

TEST(GKMConvention, SearchIsUnique) {
  const auto survivors = surviving_gkm_conventions();
  ASSERT_EQ(survivors.size(), 1u);
  EXPECT_EQ(survivors[0], GKMConvention{});
  EXPECT_EQ(search_gkm_convention(), GKMConvention{});
  EXPECT_EQ(gkm_convention_candidates().size(), 8u);
  const GKMConvention c{-1, 1, false};
  EXPECT_EQ(GKMConvention::from_json(c.to_json()), c);
}

TEST(GKMConvention, WrongChoicesAreRejected) {
  for (const GKMConvention& c : gkm_convention_candidates()) {
    if (c == GKMConvention{}) continue;
    bool rejected = false;
    try {
      const GKMSchubertTable t(group(Family::A, 2), c, false);
      rejected = !t.characterize().ok() || !agrees_with_polynomial_model(t, SchubertTable(group(Family::A, 2)));
    } catch (const Error&) {
      rejected = true;
    }
    EXPECT_TRUE(rejected) << c.describe();
  }
}

TEST(GKMClass, ConstantAndDemazure) {
  const auto g = group(Family::A, 1);
  const GKMClass one = GKMClass::constant(g, Poly(1));
  EXPECT_TRUE(is_gkm_compatible(one));
  EXPECT_TRUE(demazure_gkm(1, one).is_zero());
  const GKMClass pt = point_class(g);
  EXPECT_TRUE(pt.value(g->identity()).is_zero());
  EXPECT_EQ(pt.value(g->longest()), T(2) - T(1));
  EXPECT_EQ(demazure_gkm(1, pt), one);
  const GKMClass bad(g, {Poly(0), T(1)});
  EXPECT_FALSE(is_gkm_compatible(bad));
  EXPECT_THROW(demazure_gkm(1, bad), DivisibilityError);
}

TEST(GKMClass, SquareZeroOnRandomClasses) {
  std::mt19937_64 rng(31);
  for (const Case c : {Case{Family::A, 2}, Case{Family::B, 2}, Case{Family::C, 3}}) {
    const auto g = group(c.family, c.rank);
    const GKMSchubertTable table(g);
    for (int k = 0; k < 10; ++k) {
      // Random Q[t]-combinations of Schubert classes are GKM.
      std::vector<Poly> vals(g->size());
      const Block tb[] = {Block::T};
      for (std::size_t w = 0; w < g->size(); ++w) {
        if (rng() % 3) continue;
        const Poly coef = random_poly(rng, tb, g->root_system().ambient_dim(), 1, 2);
        for (std::size_t u = 0; u < g->size(); ++u) vals[u] += coef * table[w].value(u);
      }
      const GKMClass cls(g, vals);
      ASSERT_TRUE(is_gkm_compatible(cls));
      for (int i = 1; i <= c.rank; ++i) {
        const GKMClass d = demazure_gkm(i, cls);
        EXPECT_TRUE(is_gkm_compatible(d));
        EXPECT_TRUE(demazure_gkm(i, d).is_zero());
      }
    }
  }
}

TEST(GKMSchubert, MatchesSubwordFormula) {
  for (const Case c : kCases) {
    const auto g = group(c.family, c.rank);
    const GKMSchubertTable table(g);
    for (std::size_t u = 0; u < g->size(); ++u) {
      const std::vector<Poly> column = billey_column(*g, (*g)[u]);
      for (std::size_t w = 0; w < g->size(); ++w) {
        ASSERT_EQ(table[w].value(u), column[w])
            << g->root_system().name() << " w=" << format_word(g->word(w)) << " u=" << format_word(g->word(u));
      }
    }
  }
}

TEST(GKMSchubert, Characterization) {
  for (const Case c : kCases) {
    const auto g = group(c.family, c.rank);
    const GKMSchubertTable table(g);
    EXPECT_TRUE(table.characterize().ok()) << g->root_system().name();
    EXPECT_EQ(table[0], GKMClass::constant(g, Poly(1)));
    if (c.rank > 3) continue;
    for (std::size_t w = 0; w < g->size(); ++w) {
      const WeylElement& ww = (*g)[w];
      EXPECT_FALSE(table[w].value(ww).is_zero());
      for (std::size_t u = 0; u < g->size(); ++u) {
        const Poly& v = table[w].value(u);
        EXPECT_EQ(!v.is_zero(), bruhat_leq(ww, (*g)[u]));
        if (!v.is_zero()) {
          EXPECT_TRUE(v.is_homogeneous());
          EXPECT_EQ(v.degree(), ww.length());
        }
      }
    }
  }
}

TEST(GKMSchubert, EdgeConditionRankThree) {
  for (const Case c : {Case{Family::A, 3}, Case{Family::B, 3}, Case{Family::C, 3}, Case{Family::D, 3}}) {
    const auto g = group(c.family, c.rank);
    const GKMSchubertTable table(g, {}, false);
    for (std::size_t w = 0; w < g->size(); ++w) EXPECT_TRUE(is_gkm_compatible(table[w]));
  }
}

TEST(GKMSchubert, DemazureActionOnClasses) {
  for (const Case c : {Case{Family::A, 3}, Case{Family::B, 3}, Case{Family::C, 3}, Case{Family::D, 3}}) {
    const auto g = group(c.family, c.rank);
    const GKMSchubertTable table(g);
    for (const WeylElement& w : g->elements()) {
      for (const WeylElement& v : g->elements()) {
        const WeylElement wv = w * v.inverse();
        const GKMClass got = demazure_gkm(v, table.schubert(w));
        if (wv.length() + v.length() == w.length()) {
          EXPECT_EQ(got, table.schubert(wv));
        } else {
          EXPECT_TRUE(got.is_zero());
        }
      }
    }
  }
}

TEST(GKMSchubert, B2LongestIsPointClass) {
  const auto g = group(Family::B, 2);
  const GKMSchubertTable table(g);
  const GKMClass& top = table.schubert(g->longest());
  Poly prod(1);
  for (const Root& r : g->root_system().positive_roots()) prod *= -root_form(r, Block::T).to_poly();
  for (std::size_t u = 0; u < g->size(); ++u) {
    EXPECT_EQ(top.value(u), u + 1 == g->size() ? prod : Poly(0));
  }
  EXPECT_EQ(top, point_class(g));
}

TEST(GKMSchubert, AgreesWithPolynomialModel) {
  for (int n = 2; n <= 4; ++n) {
    const auto g = group(Family::A, n - 1);
    EXPECT_TRUE(agrees_with_polynomial_model(GKMSchubertTable(g), SchubertTable(g))) << n;
  }
}

TEST(GKMSchubert, Json) {
  const auto g = group(Family::A, 1);
  const auto j = GKMSchubertTable(g)[1].to_json();
  EXPECT_EQ(j.dump(), R"([[[],"0"],[[1],"-t1 + t2"]])");
}

TEST(GKMCoproduct, Examples) {
  const auto a1 = group(Family::A, 1);
  const GKMSchubertTable t1(a1);
  EXPECT_TRUE(verify_coproduct_gkm(t1, a1->identity()).pass);
  const Report r = verify_coproduct_gkm(t1, a1->longest());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.substitutions, 4u);
  // Hand check at (a, b) = (s1, s1): 0 = 1·s1(t2 - t1) + (t2 - t1)·1.
  EXPECT_EQ(weyl_act(T(2) - T(1), a1->longest(), Block::T) + (T(2) - T(1)), Poly(0));
}

TEST(GKMCoproduct, Sweeps) {
  for (const Case c : {Case{Family::A, 2}, Case{Family::B, 2}, Case{Family::C, 2}, Case{Family::D, 3}}) {
    const auto g = group(c.family, c.rank);
    const GKMSchubertTable table(g);
    for (const WeylElement& w : g->elements()) EXPECT_TRUE(verify_coproduct_gkm(table, w).pass);
  }
}

TEST(GKMAntipode, ExamplesAndSweeps) {
  const auto a1 = group(Family::A, 1);
  const GKMSchubertTable t1(a1);
  EXPECT_TRUE(verify_antipode_gkm(t1, a1->identity()).pass);
  EXPECT_TRUE(verify_antipode_gkm(t1, a1->longest()).pass);
  EXPECT_EQ(-weyl_act(T(2) - T(1), a1->longest(), Block::T), T(2) - T(1));
  for (const Case c : {Case{Family::B, 3}, Case{Family::C, 3}, Case{Family::D, 4}}) {
    const auto g = group(c.family, c.rank);
    const GKMSchubertTable table(g);
    for (const WeylElement& w : g->elements()) EXPECT_TRUE(verify_antipode_gkm(table, w).pass);
  }
}
