#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "flagcalc/weyl.hpp"

namespace flagcalc {

using Rational = mpq_class;

/// Variable blocks, in the global variable order x < y < t.
enum class Block : std::uint8_t { X = 0, Y = 1, T = 2 };

char block_letter(Block b);

inline constexpr int kMaxAmbient = 8;
inline constexpr int kNumVars = 3 * kMaxAmbient;

/// Flat variable id: block * kMaxAmbient + index (0-based).
constexpr int var_id(Block b, int index) { return static_cast<int>(b) * kMaxAmbient + index; }

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  int degree() const;
  int block_degree(Block b) const;
  std::uint16_t operator[](int var) const { return exp[var]; }
  bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic order, x1 > x2 > ... > y1 > ... > t1 > ...
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mon;
  Rational coef;
};

/// Sparse polynomial over Q in the variables x_i, y_i, t_i.
///
/// Terms are kept sorted by descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(Block b, int index);  // 1-based index
  static Poly monomial(const Monomial& m, const Rational& c = 1);
  /// Builds from arbitrary (possibly repeated, zero) terms.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;
  /// Bitmask of blocks in use: bit k set for Block(k).
  unsigned blocks_used() const;
  /// Largest 1-based index appearing in any block, 0 for constants.
  int max_index() const;
  Rational constant_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, long c) { return a *= Rational(c); }
  friend Poly operator*(long c, Poly a) { return a *= Rational(c); }

  bool operator==(const Poly& other) const;

  Poly pow(unsigned k) const;

  /// Canonical text form, e.g. `x1^2*t2 - 3/2*y1`; `0` for the zero polynomial.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::vector<Term> terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const Rational& c);

/// Parses the canonical text form (and the usual variations of spacing and
/// explicit `*`/`^`). Throws UsageError on malformed input.
Poly parse_poly(const std::string& text);

/// Rational linear form over the variables of one block.
struct LinearForm {
  Block block = Block::X;
  std::vector<Rational> coeffs;  // coeffs[i] multiplies block variable i+1

  bool is_zero() const;
  Poly to_poly() const;
};

/// The root `alpha` written as a linear form in `block`.
LinearForm root_form(const Root& alpha, Block block);

/// A variable renaming with signs: variable v maps to sign[v] * var target[v].
/// Several variables may share a target; exponents then add up.
class SignedRenaming {
 public:
  SignedRenaming();
  void set(int var, int target, int sign);
  void set_block(Block from, Block to);
  Poly apply(const Poly& p) const;

 private:
  std::array<std::uint8_t, kNumVars> target_{};
  std::array<std::int8_t, kNumVars> sign_{};
};

/// Renaming that lets w act on the variables of `block`: var_i ↦ w·var_i.
SignedRenaming weyl_renaming(const WeylElement& w, Block block);

/// Left action of W on one block: (w·p)(vars) with var_i ↦ ±var_{|w(i)|}.
/// Satisfies weyl_act(weyl_act(p, a), b) = weyl_act(p, b*a).
Poly weyl_act(const Poly& p, const WeylElement& w, Block block);

/// Simultaneous substitution of arbitrary polynomials for selected variables.
class Substitution {
 public:
  void set(int var, Poly image);
  void set_block(Block block, std::span<const LinearForm> images);
  Poly apply(const Poly& p) const;

 private:
  std::array<std::optional<Poly>, kNumVars> images_{};
};

Poly substitute_block(const Poly& p, Block block, std::span<const LinearForm> images);

/// Exact quotient p / d; throws DivisibilityError when d does not divide p.
Poly divide_exact(const Poly& p, const LinearForm& d);

bool is_symmetric(const Poly& p, Block block, const RootSystem& rs);

/// Up to `max_terms` monomials in the first `nvars` variables of each listed
/// block, total degree ≤ max_degree, integer coefficients in [-3, 3].
/// Draws only raw 64-bit outputs, so a seed gives the same polynomial everywhere.
Poly random_poly(std::mt19937_64& rng, std::span<const Block> blocks, int nvars, int max_degree, int max_terms);

}  // namespace flagcalc
