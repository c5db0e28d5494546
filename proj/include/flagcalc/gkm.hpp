#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagcalc/poly.hpp"
#include "flagcalc/report.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

class SchubertTable;

/// Sign and placement choices of the localized model.
///
///  - epsilon: (∂_i c)(u) = (c(u) - c(u s_i)) / (epsilon · u(α_i)(t))
///  - root_sign: the point class takes the value Π_{α>0} (root_sign · α)(t)
///  - at_longest: the point class sits at w0 (otherwise at e)
struct GKMConvention {
  int epsilon = 1;
  int root_sign = -1;
  bool at_longest = true;

  bool operator==(const GKMConvention&) const = default;
  std::string describe() const;
  nlohmann::ordered_json to_json() const;
  static GKMConvention from_json(const nlohmann::json& j);
};

/// All combinations of the three choices, in a fixed order.
std::vector<GKMConvention> gkm_convention_candidates();

/// An equivariant class given by its restrictions to the fixed points, W → Q[t].
class GKMClass {
 public:
  explicit GKMClass(WeylGroupPtr group);
  GKMClass(WeylGroupPtr group, std::vector<Poly> values);
  static GKMClass constant(WeylGroupPtr group, const Poly& c);

  const WeylGroup& group() const { return *group_; }
  const WeylGroupPtr& group_ptr() const { return group_; }
  const Poly& value(std::size_t idx) const { return values_[idx]; }
  const Poly& value(const WeylElement& u) const { return values_[group_->index_of(u)]; }
  const std::vector<Poly>& values() const { return values_; }
  bool is_zero() const;

  bool operator==(const GKMClass& other) const { return values_ == other.values_; }

  /// List of [element word, polynomial string] pairs in canonical order.
  nlohmann::ordered_json to_json() const;

 private:
  WeylGroupPtr group_;
  std::vector<Poly> values_;
};

/// Edge condition: c(u) - c(u s_α) divisible by u(α)(t) for every u and α > 0.
bool is_gkm_compatible(const GKMClass& c);

/// Localized Demazure operator; throws DivisibilityError on a non-GKM input.
GKMClass demazure_gkm(int i, const GKMClass& c, const GKMConvention& conv = {});
/// ∂_v through the least reduced word of v.
GKMClass demazure_gkm(const WeylElement& v, const GKMClass& c, const GKMConvention& conv = {});

GKMClass point_class(const WeylGroupPtr& group, const GKMConvention& conv = {});

struct Characterization {
  bool normalization = true;
  bool support = true;
  bool degree = true;
  bool demazure_action = true;
  bool compatible = true;
  bool ok() const { return normalization && support && degree && demazure_action && compatible; }
  std::string describe() const;
};

/// Schubert classes ξ_w for every w, descending from the point class.
class GKMSchubertTable {
 public:
  /// Throws ConventionError when `validate` is set and the classes fail the
  /// characterization properties.
  explicit GKMSchubertTable(WeylGroupPtr group, GKMConvention conv = {}, bool validate = true);

  const WeylGroup& group() const { return *group_; }
  const WeylGroupPtr& group_ptr() const { return group_; }
  const GKMConvention& convention() const { return conv_; }
  const GKMClass& operator[](std::size_t idx) const { return classes_[idx]; }
  const GKMClass& schubert(const WeylElement& w) const { return classes_[group_->index_of(w)]; }

  Characterization characterize() const;

 private:
  WeylGroupPtr group_;
  GKMConvention conv_;
  std::vector<GKMClass> classes_;
};

/// ξ_w(u) == localize(S_w, u) for all (w, u). Type A only.
bool agrees_with_polynomial_model(const GKMSchubertTable& gkm, const SchubertTable& poly);

/// Checks every candidate convention on A1, A2 and B2 (characterization plus
/// agreement with the polynomial model in type A) and returns the ones that survive.
std::vector<GKMConvention> surviving_gkm_conventions();

/// The unique surviving convention; throws ConventionError otherwise.
GKMConvention search_gkm_convention();

/// ξ_w(ab) = Σ_{w=u⊙v} ξ_u(a) · a(ξ_v(b)) for all (a, b).
Report verify_coproduct_gkm(const GKMSchubertTable& table, const WeylElement& w);
/// ξ_w(u) = (-1)^{ℓ(w)} u(ξ_{w^{-1}}(u^{-1})) for all u.
Report verify_antipode_gkm(const GKMSchubertTable& table, const WeylElement& w);

}  // namespace flagcalc
