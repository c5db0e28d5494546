#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagcalc/poly.hpp"
#include "flagcalc/report.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// Π_{i+j<=n} (x_i - t_j), the stable representative of the point class in GL_n.
Poly top_double_schubert(int n);

/// Memoized double Schubert polynomials S_w(x,t) for every w in S_n.
///
/// The table descends from the top class through S_{w s_i} = ∂_i^x S_w, so
/// S_w = ∂^x_{w^{-1} w0} S_{w0}. Built once in the constructor; read-only
/// afterwards and safe to share between threads.
class SchubertTable {
 public:
  explicit SchubertTable(WeylGroupPtr group);

  int n() const { return n_; }
  const WeylGroup& group() const { return *group_; }
  const WeylGroupPtr& group_ptr() const { return group_; }

  const Poly& double_schubert(const WeylElement& w) const { return table_[group_->index_of(w)]; }
  const Poly& operator[](std::size_t idx) const { return table_[idx]; }
  /// S_w(x, 0).
  Poly single_schubert(const WeylElement& w) const;

  /// Standalone LaTeX tabular of S_w(x,t) indexed by one-line notation.
  std::string latex_table() const;

 private:
  WeylGroupPtr group_;
  int n_;
  std::vector<Poly> table_;
};

/// Restriction to the fixed point u: x_i ↦ u·t_i.
Poly localize(const Poly& p, const WeylElement& u);

enum class IdealVariant {
  TwoBlock,    // <f(x) - f(t)>
  ThreeBlock,  // <f(x) - f(y), f(t) - f(y)>
  Split,       // <Q[x]^W_+> + <Q[t]^W_+>
};

const char* ideal_variant_name(IdealVariant v);

struct IdealSpec {
  IdealVariant variant;
  WeylGroupPtr group;
};

struct Membership {
  bool member = true;
  std::size_t substitutions = 0;
  std::vector<Witness> witnesses;
};

/// Membership by localization (two/three block) or coinvariant normal form
/// (split). At most `max_witnesses` failing points are recorded.
Membership check_membership(const Poly& p, const IdealSpec& spec, std::size_t max_witnesses = 8);
bool ideal_member(const Poly& p, const IdealSpec& spec);

/// Remainder of p modulo the coinvariant ideal of S_n in `block`, using the
/// lexicographic Gröbner basis {h_{n-i+1}(v_1..v_i)}. The remainder is
/// supported on staircase monomials (exponent of v_i at most n-i).
Poly coinvariant_normal_form(const Poly& p, Block block, int n);

/// Normal form for the split ideal: x-block, then t-block.
Poly split_normal_form(const Poly& p, int n);

Report verify_coproduct(const SchubertTable& table, const WeylElement& w);
Report verify_antipode(const SchubertTable& table, const WeylElement& w);
Report verify_specialized(const SchubertTable& table, const WeylElement& w);
Report verify_support(const SchubertTable& table, const WeylElement& w);
Report verify_delta(const SchubertTable& table, const WeylElement& w);
/// ∂_v S_w = S_{w v^{-1}} for length-additive v, and 0 otherwise, for all v.
/// Exact polynomial equality first; falls back to two-block membership.
Report verify_demazure_compatibility(const SchubertTable& table, const WeylElement& w);

// Pullbacks between the two- and three-block presentations.
Poly mu_star(const Poly& p);   // f(x,t) ↦ f(x,t)
Poly pi1_star(const Poly& p);  // f(x,t) ↦ f(y,t)
Poly pi2_star(const Poly& p);  // f(x,t) ↦ f(x,y)
Poly nu_star(const Poly& p);   // f(x,t) ↦ f(-t,-x)

/// The sign s with nu_star(S_w) ≡ s·S_{w^{-1}} modulo the two-block ideal,
/// or 0 when neither sign works.
int nu_star_sign(const SchubertTable& table, const WeylElement& w);

/// ∂^y_{w0}( S_{w0}(w0 y, x) · S_w(y, t) ), the symmetrized product from the
/// algebraic proof of the coproduct identity.
Poly symmetrized_product(const SchubertTable& table, const WeylElement& w);

}  // namespace flagcalc
