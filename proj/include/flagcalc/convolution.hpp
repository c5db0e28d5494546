#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagcalc/poly.hpp"
#include "flagcalc/report.hpp"
#include "flagcalc/schubert.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// A class in H_G(G/B × G/B), written as a polynomial in the x and t blocks.
struct ConvolutionClass {
  WeylGroupPtr group;
  Poly poly;
};

/// f * g = ∂^y_{w0}( g(x,y) f(y,t) ) |_{y=t}
ConvolutionClass convolve(const ConvolutionClass& f, const ConvolutionClass& g);

/// Module action on Q[t]: ∂^y_{w0}( g(y) f(y,t) ) |_{y=t}
Poly act(const ConvolutionClass& f, const Poly& g);

/// [Ψ_w] = S_{w0 w}(x, w0 t).
ConvolutionClass psi_class(const SchubertTable& table, const WeylElement& w);

/// One candidate for how psi classes act: act(psi(σ(w)), g) = sign · ∂_{τ(w)} g.
struct DemazureConvention {
  std::string psi_map = "w";       // σ
  std::string demazure_map = "w";  // τ
  int sign = 1;

  bool operator==(const DemazureConvention&) const = default;
  std::string describe() const;
  nlohmann::ordered_json to_json() const;
  static DemazureConvention from_json(const nlohmann::json& j);
};

/// Names of the candidate maps W → W, in search order.
const std::vector<std::string>& element_map_names();
WeylElement apply_element_map(const std::string& name, const WeylElement& w, const WeylElement& w0);

std::vector<DemazureConvention> demazure_convention_candidates();

struct DemazureActionSearch {
  std::vector<DemazureConvention> matching;  // every candidate consistent for all w
  std::size_t distinct = 0;                  // matches that differ as relations σ(w) ↦ τ(w)
  std::optional<DemazureConvention> chosen;  // first match, when distinct == 1
  std::size_t checks = 0;
  bool unique() const { return distinct == 1; }
};

/// Compares every candidate against ∂ on all t-monomials of degree ≤ ℓ(w0).
DemazureActionSearch search_demazure_action(const SchubertTable& table);

/// Checks one convention at one element over the same spanning set.
Report verify_demazure_action(const SchubertTable& table, const DemazureConvention& conv, const WeylElement& w);

/// Direct convolution action vs. the expanded Leibniz sum
///   (-1)^{ℓ(w0)} Σ_u (-1)^{ℓ(u)} ∂_u g(y) · ∂_{u w0}( f(w0 y, t) ) |_{y=t}.
struct LeibnizPair {
  Poly direct;
  Poly expanded;
};
LeibnizPair total_leibniz_via_convolution(const WeylGroup& group, const Poly& f, const Poly& g);
Report verify_total_leibniz_via_convolution(const WeylGroup& group, const Poly& f, const Poly& g);

/// ∂_{w0 v w0}(w0·g) == w0·((-1)^{ℓ(v)} ∂_v g) on the t-block.
bool commuting_square_holds(const WeylGroup& group, const WeylElement& v, const Poly& g);

/// (a*b)*c ≡ a*(b*c) modulo the two-block ideal.
bool associative_mod_ideal(const ConvolutionClass& a, const ConvolutionClass& b, const ConvolutionClass& c);

/// All monomials in the t-block of total degree ≤ max_degree in n variables.
std::vector<Poly> t_monomials(int n, int max_degree);

}  // namespace flagcalc
