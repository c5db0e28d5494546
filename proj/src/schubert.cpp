#include "flagcalc/schubert.hpp"

#include <cstdlib>
#include <map>

#include "flagcalc/errors.hpp"
#include "flagcalc/nilhecke.hpp"

namespace flagcalc {

Poly top_double_schubert(int n) {
  if (n < 1 || n > kMaxAmbient) throw ConfigError("top_double_schubert: n out of range");
  Poly out(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n; ++j) out *= Poly::var(Block::X, i) - Poly::var(Block::T, j);
  }
  return out;
}

SchubertTable::SchubertTable(WeylGroupPtr group) : group_(std::move(group)) {
  const RootSystem& rs = group_->root_system();
  if (rs.family() != Family::A) throw ConfigError("double Schubert polynomials require type A, got " + rs.name());
  n_ = rs.ambient_dim();
  table_.resize(group_->size());
  table_.back() = top_double_schubert(n_);
  // Canonical order is by length, so walking backwards always meets w s_i before w.
  for (std::size_t k = group_->size() - 1; k-- > 0;) {
    const WeylElement& v = (*group_)[k];
    for (int i = 1; i <= rs.rank(); ++i) {
      if (v.has_right_descent(i)) continue;
      const WeylElement up = v * WeylElement::generator(group_->root_system_ptr(), i);
      table_[k] = demazure(rs, i, Block::X, table_[group_->index_of(up)]);
      break;
    }
  }
}

Poly SchubertTable::single_schubert(const WeylElement& w) const {
  std::vector<LinearForm> zero(n_, LinearForm{Block::T, std::vector<Rational>(n_)});
  return substitute_block(double_schubert(w), Block::T, zero);
}

std::string SchubertTable::latex_table() const {
  std::string out = "\\begin{tabular}{ll}\n$w$ & $\\mathfrak{S}_w(x,t)$ \\\\\n\\hline\n";
  for (std::size_t k = 0; k < group_->size(); ++k) {
    std::string one_line;
    for (int img : (*group_)[k].images()) one_line += std::to_string(img);
    out += "$" + one_line + "$ & $" + table_[k].to_latex() + "$ \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

Poly localize(const Poly& p, const WeylElement& u) {
  SignedRenaming r;
  const auto images = u.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int img = images[i];
    r.set(var_id(Block::X, static_cast<int>(i)), var_id(Block::T, std::abs(img) - 1), img < 0 ? -1 : 1);
  }
  return r.apply(p);
}

const char* ideal_variant_name(IdealVariant v) {
  switch (v) {
    case IdealVariant::TwoBlock: return "two_block";
    case IdealVariant::ThreeBlock: return "three_block";
    case IdealVariant::Split: return "split";
  }
  return "?";
}

namespace {

constexpr unsigned kMaskY = 1u << static_cast<int>(Block::Y);

SignedRenaming block_to_t(const WeylElement& u, Block from) {
  SignedRenaming r;
  const auto images = u.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int img = images[i];
    r.set(var_id(from, static_cast<int>(i)), var_id(Block::T, std::abs(img) - 1), img < 0 ? -1 : 1);
  }
  return r;
}

}  // namespace

Membership check_membership(const Poly& p, const IdealSpec& spec, std::size_t max_witnesses) {
  Membership result;
  const WeylGroup& group = *spec.group;
  switch (spec.variant) {
    case IdealVariant::TwoBlock: {
      if (p.blocks_used() & kMaskY) throw UsageError("two_block membership expects a polynomial in x and t only");
      for (std::size_t k = 0; k < group.size(); ++k) {
        ++result.substitutions;
        Poly value = localize(p, group[k]);
        if (value.is_zero()) continue;
        result.member = false;
        if (result.witnesses.size() < max_witnesses) result.witnesses.push_back({{group.word(k)}, value.to_string()});
      }
      break;
    }
    case IdealVariant::ThreeBlock: {
      // y ↦ a(t), x ↦ b(t) for all (a, b) ∈ W × W
      for (std::size_t ka = 0; ka < group.size(); ++ka) {
        const Poly pa = block_to_t(group[ka], Block::Y).apply(p);
        for (std::size_t kb = 0; kb < group.size(); ++kb) {
          ++result.substitutions;
          Poly value = localize(pa, group[kb]);
          if (value.is_zero()) continue;
          result.member = false;
          if (result.witnesses.size() < max_witnesses) {
            result.witnesses.push_back({{group.word(ka), group.word(kb)}, value.to_string()});
          }
        }
      }
      break;
    }
    case IdealVariant::Split: {
      if (p.blocks_used() & kMaskY) throw UsageError("split membership expects a polynomial in x and t only");
      if (group.root_system().family() != Family::A) throw ConfigError("split normal form is implemented for type A");
      Poly nf = split_normal_form(p, group.root_system().ambient_dim());
      result.substitutions = 1;
      if (!nf.is_zero()) {
        result.member = false;
        result.witnesses.push_back({{}, nf.to_string()});
      }
      break;
    }
  }
  return result;
}

bool ideal_member(const Poly& p, const IdealSpec& spec) { return check_membership(p, spec, 0).member; }

namespace {

// Lex order on the block variables with v_n most significant, ties broken by
// the full exponent vector so the order is total.
struct EliminationGreater {
  int base;
  int n;
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (int i = n - 1; i >= 0; --i) {
      const auto ea = a.exp[base + i];
      const auto eb = b.exp[base + i];
      if (ea != eb) return ea > eb;
    }
    return a.exp > b.exp;
  }
};

void complete_homogeneous(int degree, int first_var, int count, Monomial& cur, std::vector<Monomial>& out) {
  if (count == 0) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  if (count == 1) {
    cur.exp[first_var] = static_cast<std::uint16_t>(degree);
    out.push_back(cur);
    cur.exp[first_var] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.exp[first_var] = static_cast<std::uint16_t>(e);
    complete_homogeneous(degree - e, first_var + 1, count - 1, cur, out);
  }
  cur.exp[first_var] = 0;
}

}  // namespace

Poly coinvariant_normal_form(const Poly& p, Block block, int n) {
  if (n < 1 || n > kMaxAmbient) throw ConfigError("coinvariant_normal_form: n out of range");
  const int base = var_id(block, 0);

  // tails[i] = h_{n-i}(v_1..v_{i+1}) - v_{i+1}^{n-i}, i.e. the basis element minus its leading term.
  std::vector<std::vector<Monomial>> tails(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Monomial> mons;
    Monomial cur;
    complete_homogeneous(n - i, base, i + 1, cur, mons);
    for (const Monomial& m : mons) {
      if (m.exp[base + i] == n - i) continue;
      tails[i].push_back(m);
    }
  }

  std::map<Monomial, Rational, EliminationGreater> work(EliminationGreater{base, n});
  for (const Term& t : p.terms()) work.emplace(t.mon, t.coef);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Rational c = it->second;
    work.erase(it);
    int reducer = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (m.exp[base + i] >= n - i) {
        reducer = i;
        break;
      }
    }
    if (reducer < 0) {
      remainder.push_back({m, c});
      continue;
    }
    Monomial q = m;
    q.exp[base + reducer] = static_cast<std::uint16_t>(q.exp[base + reducer] - (n - reducer));
    for (const Monomial& tail : tails[reducer]) {
      Monomial r = q;
      for (int v = 0; v < kNumVars; ++v) r.exp[v] = static_cast<std::uint16_t>(r.exp[v] + tail.exp[v]);
      auto [slot, inserted] = work.try_emplace(r, 0);
      slot->second -= c;
      if (sgn(slot->second) == 0) work.erase(slot);
    }
  }
  return Poly::from_terms(std::move(remainder));
}

Poly split_normal_form(const Poly& p, int n) {
  return coinvariant_normal_form(coinvariant_normal_form(p, Block::X, n), Block::T, n);
}

// ---------------------------------------------------------------------------
// Identity checks

namespace {

Report start_report(const SchubertTable& table, const WeylElement& w, const char* identity) {
  Report r;
  r.identity = identity;
  r.element = table.group().word(table.group().index_of(w));
  return r;
}

void absorb(Report& r, Membership m) {
  r.pass = r.pass && m.member;
  r.substitutions += m.substitutions;
  for (Witness& w : m.witnesses) r.witnesses.push_back(std::move(w));
}

Poly rename_block(const Poly& p, Block from, Block to) {
  SignedRenaming r;
  r.set_block(from, to);
  return r.apply(p);
}

Poly swap_xt(const Poly& p) {
  SignedRenaming r;
  r.set_block(Block::X, Block::T);
  r.set_block(Block::T, Block::X);
  return r.apply(p);
}

}  // namespace

Report verify_coproduct(const SchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "coproduct");
  const WeylGroup& group = table.group();
  Poly diff = table.double_schubert(w);
  for (const auto& [u, v] : length_additive_factorizations(group, w)) {
    r.factorizations.emplace_back(group.word(group.index_of(u)), group.word(group.index_of(v)));
    const Poly sv_xy = pi2_star(table.double_schubert(v));
    const Poly su_yt = pi1_star(table.double_schubert(u));
    diff -= sv_xy * su_yt;
  }
  absorb(r, check_membership(diff, {IdealVariant::ThreeBlock, table.group_ptr()}));
  return r;
}

Report verify_antipode(const SchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "antipode");
  Poly rhs = swap_xt(table.double_schubert(w.inverse()));
  if (w.length() % 2) rhs = -rhs;
  absorb(r, check_membership(table.double_schubert(w) - rhs, {IdealVariant::TwoBlock, table.group_ptr()}));
  return r;
}

Report verify_specialized(const SchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "specialized");
  const WeylGroup& group = table.group();
  Poly diff = table.double_schubert(w);
  for (const auto& [u, v] : length_additive_factorizations(group, w)) {
    r.factorizations.emplace_back(group.word(group.index_of(u)), group.word(group.index_of(v)));
    Poly term = table.single_schubert(v) * rename_block(table.single_schubert(u.inverse()), Block::X, Block::T);
    if (u.length() % 2) term = -term;
    diff -= term;
  }
  absorb(r, check_membership(diff, {IdealVariant::Split, table.group_ptr()}));
  return r;
}

Report verify_support(const SchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "support");
  const WeylGroup& group = table.group();
  const Poly& s = table.double_schubert(w);
  for (std::size_t k = 0; k < group.size(); ++k) {
    const WeylElement& u = group[k];
    ++r.substitutions;
    Poly value = localize(s, u);
    const bool above = bruhat_leq(w, u);
    // Nonzero restrictions only above w, and the restriction at w itself is nonzero.
    if ((!value.is_zero() && !above) || (u == w && value.is_zero())) {
      r.pass = false;
      r.witnesses.push_back({{group.word(k)}, value.to_string()});
    }
  }
  return r;
}

Report verify_delta(const SchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "delta");
  r.substitutions = 1;
  const Poly value = localize(table.double_schubert(w), table.group().identity());
  const Poly expected = w.is_identity() ? Poly(1) : Poly();
  if (!(value == expected)) {
    r.pass = false;
    r.witnesses.push_back({{Word{}}, value.to_string()});
  }
  return r;
}

Report verify_demazure_compatibility(const SchubertTable& table, const WeylElement& w) {
  Report r = start_report(table, w, "demazure");
  const WeylGroup& group = table.group();
  const Poly& s = table.double_schubert(w);
  for (std::size_t k = 0; k < group.size(); ++k) {
    const WeylElement& v = group[k];
    const WeylElement rest = w * v.inverse();
    const Poly image = demazure_word(group.root_system(), group.word(k), Block::X, s);
    const Poly expected = rest.length() + v.length() == w.length() ? table.double_schubert(rest) : Poly();
    ++r.substitutions;
    if (image == expected) continue;
    Membership m = check_membership(image - expected, {IdealVariant::TwoBlock, table.group_ptr()}, 1);
    r.substitutions += m.substitutions;
    if (!m.member) {
      r.pass = false;
      r.witnesses.push_back({{group.word(k)}, (image - expected).to_string()});
    }
  }
  return r;
}

Poly mu_star(const Poly& p) { return p; }

Poly pi1_star(const Poly& p) { return rename_block(p, Block::X, Block::Y); }

Poly pi2_star(const Poly& p) { return rename_block(p, Block::T, Block::Y); }

Poly nu_star(const Poly& p) {
  SignedRenaming r;
  for (int i = 0; i < kMaxAmbient; ++i) {
    r.set(var_id(Block::X, i), var_id(Block::T, i), -1);
    r.set(var_id(Block::T, i), var_id(Block::X, i), -1);
  }
  return r.apply(p);
}

int nu_star_sign(const SchubertTable& table, const WeylElement& w) {
  const IdealSpec spec{IdealVariant::TwoBlock, table.group_ptr()};
  const Poly image = nu_star(table.double_schubert(w));
  const Poly& target = table.double_schubert(w.inverse());
  if (ideal_member(image - target, spec)) return 1;
  if (ideal_member(image + target, spec)) return -1;
  return 0;
}

Poly symmetrized_product(const SchubertTable& table, const WeylElement& w) {
  const WeylElement& w0 = table.group().longest();
  // S_{w0}(x,t) -> S_{w0}(y,x) -> S_{w0}(w0 y, x)
  SignedRenaming r;
  r.set_block(Block::X, Block::Y);
  r.set_block(Block::T, Block::X);
  const Poly top = weyl_act(r.apply(table.double_schubert(w0)), w0, Block::Y);
  const Poly sw = pi1_star(table.double_schubert(w));
  return demazure_w(w0, Block::Y, top * sw);
}

}  // namespace flagcalc
