#include "flagcalc/gkm.hpp"

#include <cstdlib>

#include "flagcalc/errors.hpp"
#include "flagcalc/schubert.hpp"

namespace flagcalc {

std::string GKMConvention::describe() const {
  return "epsilon=" + std::to_string(epsilon) + " root_sign=" + std::to_string(root_sign) +
         " point=" + (at_longest ? "w0" : "e");
}

nlohmann::ordered_json GKMConvention::to_json() const {
  nlohmann::ordered_json j;
  j["epsilon"] = epsilon;
  j["root_sign"] = root_sign;
  j["point_at"] = at_longest ? "longest" : "identity";
  return j;
}

GKMConvention GKMConvention::from_json(const nlohmann::json& j) {
  GKMConvention c;
  c.epsilon = j.at("epsilon").get<int>();
  c.root_sign = j.at("root_sign").get<int>();
  const std::string at = j.at("point_at").get<std::string>();
  if (at != "longest" && at != "identity") throw ConfigError("bad point_at value '" + at + "'");
  c.at_longest = at == "longest";
  if (std::abs(c.epsilon) != 1 || std::abs(c.root_sign) != 1) throw ConfigError("GKM signs must be +1 or -1");
  return c;
}

std::vector<GKMConvention> gkm_convention_candidates() {
  std::vector<GKMConvention> out;
  for (bool at_longest : {true, false}) {
    for (int eps : {1, -1}) {
      for (int rs : {1, -1}) out.push_back({eps, rs, at_longest});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GKMClass::GKMClass(WeylGroupPtr group) : group_(std::move(group)), values_(group_->size()) {}

GKMClass::GKMClass(WeylGroupPtr group, std::vector<Poly> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->size()) throw UsageError("GKM class needs one value per Weyl group element");
}

GKMClass GKMClass::constant(WeylGroupPtr group, const Poly& c) {
  const std::size_t n = group->size();
  return GKMClass(std::move(group), std::vector<Poly>(n, c));
}

bool GKMClass::is_zero() const {
  for (const Poly& p : values_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

nlohmann::ordered_json GKMClass::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < values_.size(); ++k) {
    out.push_back(nlohmann::ordered_json::array({group_->word(k), values_[k].to_string()}));
  }
  return out;
}

namespace {

LinearForm moved_root(const WeylElement& u, const Root& alpha) { return root_form(u.apply(alpha), Block::T); }

}  // namespace

bool is_gkm_compatible(const GKMClass& c) {
  const WeylGroup& group = c.group();
  const RootSystem& rs = group.root_system();
  for (const Root& alpha : rs.positive_roots()) {
    const WeylElement refl = WeylElement::from_images(group.root_system_ptr(), rs.reflection_images(alpha));
    for (std::size_t k = 0; k < group.size(); ++k) {
      const WeylElement& u = group[k];
      const Poly diff = c.value(k) - c.value(u * refl);
      if (diff.is_zero()) continue;
      try {
        (void)divide_exact(diff, moved_root(u, alpha));
      } catch (const DivisibilityError&) {
        return false;
      }
    }
  }
  return true;
}

GKMClass demazure_gkm(int i, const GKMClass& c, const GKMConvention& conv) {
  const WeylGroup& group = c.group();
  const RootSystem& rs = group.root_system();
  const WeylElement s = WeylElement::generator(group.root_system_ptr(), i);
  std::vector<Poly> out(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) {
    const WeylElement& u = group[k];
    const Poly diff = c.value(k) - c.value(u * s);
    if (diff.is_zero()) continue;
    Poly q = divide_exact(diff, moved_root(u, rs.simple_root(i)));
    out[k] = conv.epsilon < 0 ? -q : q;
  }
  return GKMClass(c.group_ptr(), std::move(out));
}

GKMClass demazure_gkm(const WeylElement& v, const GKMClass& c, const GKMConvention& conv) {
  const Word word = v.reduced_word();
  GKMClass out = c;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_gkm(*it, out, conv);
  return out;
}

GKMClass point_class(const WeylGroupPtr& group, const GKMConvention& conv) {
  Poly value(1);
  for (const Root& alpha : group->root_system().positive_roots()) {
    Poly a = root_form(alpha, Block::T).to_poly();
    value *= conv.root_sign < 0 ? -a : a;
  }
  std::vector<Poly> values(group->size());
  values[conv.at_longest ? group->size() - 1 : 0] = std::move(value);
  return GKMClass(group, std::move(values));
}

std::string Characterization::describe() const {
  std::string out;
  auto flag = [&](const char* name, bool ok) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + (ok ? "=ok" : "=FAIL");
  };
  flag("normalization", normalization);
  flag("support", support);
  flag("degree", degree);
  flag("demazure", demazure_action);
  flag("gkm", compatible);
  return out;
}

GKMSchubertTable::GKMSchubertTable(WeylGroupPtr group, GKMConvention conv, bool validate)
    : group_(std::move(group)), conv_(conv) {
  const RootSystem& rs = group_->root_system();
  classes_.assign(group_->size(), GKMClass(group_));
  classes_.back() = point_class(group_, conv_);
  for (std::size_t k = group_->size() - 1; k-- > 0;) {
    const WeylElement& v = (*group_)[k];
    for (int i = 1; i <= rs.rank(); ++i) {
      if (v.has_right_descent(i)) continue;
      const WeylElement up = v * WeylElement::generator(group_->root_system_ptr(), i);
      classes_[k] = demazure_gkm(i, classes_[group_->index_of(up)], conv_);
      break;
    }
  }
  if (validate) {
    const Characterization ch = characterize();
    if (!ch.ok()) {
      throw ConventionError("GKM convention " + conv_.describe() + " fails on " + rs.name() + ": " + ch.describe());
    }
  }
}

Characterization GKMSchubertTable::characterize() const {
  Characterization ch;
  const WeylGroup& group = *group_;
  const RootSystem& rs = group.root_system();
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (!(classes_[0].value(k) == Poly(1))) ch.normalization = false;
  }
  for (std::size_t kw = 0; kw < group.size(); ++kw) {
    const WeylElement& w = group[kw];
    const GKMClass& xi = classes_[kw];
    for (std::size_t ku = 0; ku < group.size(); ++ku) {
      const Poly& value = xi.value(ku);
      if (value.is_zero()) {
        if (ku == kw) ch.support = false;
        continue;
      }
      if (!bruhat_leq(w, group[ku])) ch.support = false;
      if (!value.is_homogeneous() || value.degree() != w.length()) ch.degree = false;
    }
    for (int i = 1; i <= rs.rank(); ++i) {
      GKMClass image(group_);
      try {
        image = demazure_gkm(i, xi, conv_);
      } catch (const DivisibilityError&) {
        ch.compatible = false;
        continue;
      }
      const bool down = w.has_right_descent(i);
      const GKMClass expected =
          down ? classes_[group.index_of(w * WeylElement::generator(group.root_system_ptr(), i))] : GKMClass(group_);
      if (!(image == expected)) ch.demazure_action = false;
    }
    if (ch.compatible && !is_gkm_compatible(xi)) ch.compatible = false;
  }
  return ch;
}

bool agrees_with_polynomial_model(const GKMSchubertTable& gkm, const SchubertTable& poly) {
  const WeylGroup& group = gkm.group();
  for (std::size_t kw = 0; kw < group.size(); ++kw) {
    const Poly& s = poly[kw];
    for (std::size_t ku = 0; ku < group.size(); ++ku) {
      if (!(gkm[kw].value(ku) == localize(s, group[ku]))) return false;
    }
  }
  return true;
}

std::vector<GKMConvention> surviving_gkm_conventions() {
  const std::vector<WeylGroupPtr> groups = {make_weyl_group(Family::A, 1), make_weyl_group(Family::A, 2),
                                            make_weyl_group(Family::B, 2)};
  std::vector<SchubertTable> type_a;
  for (const auto& g : groups) {
    if (g->root_system().family() == Family::A) type_a.emplace_back(g);
  }
  std::vector<GKMConvention> survivors;
  for (const GKMConvention& conv : gkm_convention_candidates()) {
    bool ok = true;
    for (const auto& g : groups) {
      try {
        GKMSchubertTable table(g, conv, false);
        if (!table.characterize().ok()) ok = false;
        for (const SchubertTable& poly : type_a) {
          if (ok && poly.group_ptr() == g && !agrees_with_polynomial_model(table, poly)) ok = false;
        }
      } catch (const DivisibilityError&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) survivors.push_back(conv);
  }
  return survivors;
}

GKMConvention search_gkm_convention() {
  const std::vector<GKMConvention> survivors = surviving_gkm_conventions();
  if (survivors.size() != 1) {
    throw ConventionError("expected exactly one GKM convention, found " + std::to_string(survivors.size()));
  }
  return survivors.front();
}

// ---------------------------------------------------------------------------

namespace {

Report start_report(const GKMSchubertTable& table, const WeylElement& w, const char* identity) {
  Report r;
  r.identity = identity;
  r.element = table.group().word(table.group().index_of(w));
  return r;
}

constexpr std::size_t kMaxWitnesses = 8;

}  // namespace

Report verify_coproduct_gkm(const GKMSchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "gkm-coproduct");
  const WeylGroup& group = table.group();
  struct Factor {
    std::size_t u;
    std::size_t v;
  };
  std::vector<Factor> factors;
  for (const auto& [u, v] : length_additive_factorizations(group, w)) {
    factors.push_back({group.index_of(u), group.index_of(v)});
    r.factorizations.emplace_back(group.word(factors.back().u), group.word(factors.back().v));
  }
  const GKMClass& xi_w = table.schubert(w);
  for (std::size_t ka = 0; ka < group.size(); ++ka) {
    const WeylElement& a = group[ka];
    const SignedRenaming act_a = weyl_renaming(a, Block::T);
    // Only factors with ξ_u(a) ≠ 0 contribute.
    std::vector<Factor> live;
    for (const Factor& f : factors) {
      if (!table[f.u].value(ka).is_zero()) live.push_back(f);
    }
    for (std::size_t kb = 0; kb < group.size(); ++kb) {
      ++r.substitutions;
      Poly rhs;
      for (const Factor& f : live) {
        const Poly& vb = table[f.v].value(kb);
        if (vb.is_zero()) continue;
        rhs += table[f.u].value(ka) * act_a.apply(vb);
      }
      const Poly diff = xi_w.value(a * group[kb]) - rhs;
      if (diff.is_zero()) continue;
      r.pass = false;
      if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back({{group.word(ka), group.word(kb)}, diff.to_string()});
    }
  }
  return r;
}

Report verify_antipode_gkm(const GKMSchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "gkm-antipode");
  const WeylGroup& group = table.group();
  const GKMClass& xi_w = table.schubert(w);
  const GKMClass& xi_inv = table.schubert(w.inverse());
  for (std::size_t ku = 0; ku < group.size(); ++ku) {
    const WeylElement& u = group[ku];
    ++r.substitutions;
    Poly rhs = weyl_act(xi_inv.value(u.inverse()), u, Block::T);
    if (w.length() % 2) rhs = -rhs;
    const Poly diff = xi_w.value(ku) - rhs;
    if (diff.is_zero()) continue;
    r.pass = false;
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back({{group.word(ku)}, diff.to_string()});
  }
  return r;
}

}  // namespace flagcalc
