#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagcalc/poly.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// ∂_i p = (p - s_i p) / α_i, acting on the variables of `block`.
Poly demazure(const RootSystem& rs, int i, Block block, const Poly& p);

/// ∂_{i1} ∘ ... ∘ ∂_{ir} for word = [i1, ..., ir]; the rightmost letter acts first.
Poly demazure_word(const RootSystem& rs, std::span<const int> word, Block block, const Poly& p);

/// ∂_w through the least reduced word of w.
Poly demazure_w(const WeylElement& w, Block block, const Poly& p);

/// Element Σ_w c_w(x) ∂_w of the nil-Hecke algebra, coefficients on the left.
///
/// Stored densely over the canonical order of W.
class NilHeckeElement {
 public:
  explicit NilHeckeElement(WeylGroupPtr group);

  /// c · ∂_w
  static NilHeckeElement term(WeylGroupPtr group, const WeylElement& w, Poly c);
  /// Multiplication operator by f, i.e. f · ∂_e.
  static NilHeckeElement multiplication(WeylGroupPtr group, Poly f);

  const WeylGroup& group() const { return *group_; }
  const WeylGroupPtr& group_ptr() const { return group_; }
  const Poly& coeff(std::size_t idx) const { return coeffs_[idx]; }
  const Poly& coeff(const WeylElement& w) const { return coeffs_[group_->index_of(w)]; }
  bool is_zero() const;

  void add_term(const WeylElement& w, const Poly& c);

  /// Σ_w c_w · ∂_w(g) on the x-block.
  Poly apply(const Poly& g) const;

  NilHeckeElement& operator+=(const NilHeckeElement& other);
  NilHeckeElement& operator-=(const NilHeckeElement& other);
  NilHeckeElement& operator*=(const Rational& c);
  friend NilHeckeElement operator+(NilHeckeElement a, const NilHeckeElement& b) { return a += b; }
  friend NilHeckeElement operator-(NilHeckeElement a, const NilHeckeElement& b) { return a -= b; }
  bool operator==(const NilHeckeElement& other) const { return coeffs_ == other.coeffs_; }

  /// `(c_w) d[word] + ...` over the nonzero terms, in canonical order.
  std::string to_string() const;
  /// List of [reduced word, polynomial string] pairs.
  nlohmann::json to_json() const;

 private:
  WeylGroupPtr group_;
  std::vector<Poly> coeffs_;
};

/// Normal form of ∂_i · f: (∂_i f) ∂_e + (s_i f) ∂_i.
NilHeckeElement leibniz_expand(const WeylGroupPtr& group, int i, const Poly& f);

/// Normal form of ∂_w · f, by repeated Leibniz rewriting along a reduced word.
NilHeckeElement demazure_times(const WeylGroupPtr& group, const WeylElement& w, const Poly& f);

NilHeckeElement nh_multiply(const NilHeckeElement& a, const NilHeckeElement& b);

/// Both sides of the total Leibniz identity for F(x):
///   left  = (-1)^{ℓ(w0)} ∂_{w0} · (w0·F)
///   right = Σ_w (∂_{w w0} F) · (-1)^{ℓ(w)} ∂_w
std::pair<NilHeckeElement, NilHeckeElement> total_leibniz_sides(const WeylGroupPtr& group, const Poly& F);

/// Polynomial form: left = (-1)^{ℓ(w0)} ∂_{w0}((w0·F) G), right = Σ_w ∂_{w w0}F · (-1)^{ℓ(w)} ∂_w G.
std::pair<Poly, Poly> total_leibniz_polynomial_sides(const WeylGroup& group, const Poly& F, const Poly& G);

}  // namespace flagcalc
