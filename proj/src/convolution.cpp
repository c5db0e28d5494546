#include "flagcalc/convolution.hpp"

#include <algorithm>
#include <map>

#include "flagcalc/errors.hpp"
#include "flagcalc/nilhecke.hpp"

namespace flagcalc {

namespace {

Poly rename(const Poly& p, Block from, Block to) {
  SignedRenaming r;
  r.set_block(from, to);
  return r.apply(p);
}

void require_same_group(const ConvolutionClass& a, const ConvolutionClass& b) {
  if (a.group->root_system().family() != b.group->root_system().family() ||
      a.group->root_system().rank() != b.group->root_system().rank()) {
    throw UsageError("convolution classes over different flag varieties");
  }
}

}  // namespace

ConvolutionClass convolve(const ConvolutionClass& f, const ConvolutionClass& g) {
  require_same_group(f, g);
  const Poly g_xy = rename(g.poly, Block::T, Block::Y);
  const Poly f_yt = rename(f.poly, Block::X, Block::Y);
  const Poly pushed = demazure_w(f.group->longest(), Block::Y, g_xy * f_yt);
  return {f.group, rename(pushed, Block::Y, Block::T)};
}

Poly act(const ConvolutionClass& f, const Poly& g) {
  if (g.blocks_used() & ~(1u << static_cast<int>(Block::T))) throw UsageError("act expects g in the t-block only");
  const Poly g_y = rename(g, Block::T, Block::Y);
  const Poly f_yt = rename(f.poly, Block::X, Block::Y);
  const Poly pushed = demazure_w(f.group->longest(), Block::Y, g_y * f_yt);
  return rename(pushed, Block::Y, Block::T);
}

ConvolutionClass psi_class(const SchubertTable& table, const WeylElement& w) {
  const WeylElement& w0 = table.group().longest();
  return {table.group_ptr(), weyl_act(table.double_schubert(w0 * w), w0, Block::T)};
}

// ---------------------------------------------------------------------------

std::string DemazureConvention::describe() const {
  return "act(psi(" + psi_map + "), g) = " + (sign < 0 ? "-" : "+") + "d[" + demazure_map + "] g";
}

nlohmann::ordered_json DemazureConvention::to_json() const {
  nlohmann::ordered_json j;
  j["psi_index"] = psi_map;
  j["demazure_index"] = demazure_map;
  j["sign"] = sign;
  return j;
}

DemazureConvention DemazureConvention::from_json(const nlohmann::json& j) {
  DemazureConvention c;
  c.psi_map = j.at("psi_index").get<std::string>();
  c.demazure_map = j.at("demazure_index").get<std::string>();
  c.sign = j.at("sign").get<int>();
  const auto& names = element_map_names();
  if (std::find(names.begin(), names.end(), c.psi_map) == names.end() ||
      std::find(names.begin(), names.end(), c.demazure_map) == names.end() || (c.sign != 1 && c.sign != -1)) {
    throw ConfigError("malformed Demazure convention");
  }
  return c;
}

const std::vector<std::string>& element_map_names() {
  static const std::vector<std::string> names = {"w",     "w^-1",     "w0*w",        "w*w0",
                                                 "w0*w*w0", "w0*w^-1", "w^-1*w0", "w0*w^-1*w0"};
  return names;
}

WeylElement apply_element_map(const std::string& name, const WeylElement& w, const WeylElement& w0) {
  if (name == "w") return w;
  if (name == "w^-1") return w.inverse();
  if (name == "w0*w") return w0 * w;
  if (name == "w*w0") return w * w0;
  if (name == "w0*w*w0") return w0 * w * w0;
  if (name == "w0*w^-1") return w0 * w.inverse();
  if (name == "w^-1*w0") return w.inverse() * w0;
  if (name == "w0*w^-1*w0") return w0 * w.inverse() * w0;
  throw UsageError("unknown element map '" + name + "'");
}

std::vector<DemazureConvention> demazure_convention_candidates() {
  std::vector<DemazureConvention> out;
  for (const std::string& sigma : element_map_names()) {
    for (const std::string& tau : element_map_names()) {
      for (int sign : {1, -1}) out.push_back({sigma, tau, sign});
    }
  }
  return out;
}

std::vector<Poly> t_monomials(int n, int max_degree) {
  std::vector<Poly> out;
  std::vector<int> e(n, 0);
  // Odometer over exponent vectors with total degree ≤ max_degree.
  while (true) {
    Monomial m;
    for (int i = 0; i < n; ++i) m.exp[var_id(Block::T, i)] = static_cast<std::uint16_t>(e[i]);
    out.push_back(Poly::monomial(m));
    int k = n - 1;
    while (k >= 0) {
      ++e[k];
      int total = 0;
      for (int v : e) total += v;
      if (total <= max_degree) break;
      e[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return grlex_greater(b.terms().front().mon, a.terms().front().mon);
  });
  return out;
}

namespace {

// Cached images act(psi(v), g) and ∂_z g over the spanning set.
struct ActionTables {
  std::vector<std::vector<Poly>> psi_action;  // [v][g]
  std::vector<std::vector<Poly>> demazure;    // [z][g]
};

ActionTables build_tables(const SchubertTable& table, const std::vector<Poly>& spanning) {
  const WeylGroup& group = table.group();
  ActionTables t;
  t.psi_action.resize(group.size());
  t.demazure.resize(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) {
    const ConvolutionClass psi = psi_class(table, group[k]);
    for (const Poly& g : spanning) {
      t.psi_action[k].push_back(act(psi, g));
      t.demazure[k].push_back(demazure_word(group.root_system(), group.word(k), Block::T, g));
    }
  }
  return t;
}

bool convention_matches_at(const WeylGroup& group, const ActionTables& t, const DemazureConvention& c,
                           std::size_t kw, std::size_t* checks) {
  const WeylElement& w0 = group.longest();
  const std::size_t ks = group.index_of(apply_element_map(c.psi_map, group[kw], w0));
  const std::size_t kt = group.index_of(apply_element_map(c.demazure_map, group[kw], w0));
  for (std::size_t j = 0; j < t.psi_action[ks].size(); ++j) {
    if (checks) ++*checks;
    const Poly& lhs = t.psi_action[ks][j];
    const Poly& d = t.demazure[kt][j];
    if (!(lhs == (c.sign < 0 ? -d : d))) return false;
  }
  return true;
}

}  // namespace

DemazureActionSearch search_demazure_action(const SchubertTable& table) {
  const WeylGroup& group = table.group();
  const std::vector<Poly> spanning = t_monomials(table.n(), group.longest().length());
  const ActionTables tables = build_tables(table, spanning);
  const WeylElement& w0 = group.longest();

  DemazureActionSearch result;
  std::vector<std::vector<std::size_t>> signatures;
  for (const DemazureConvention& c : demazure_convention_candidates()) {
    bool ok = true;
    for (std::size_t kw = 0; kw < group.size() && ok; ++kw) {
      ok = convention_matches_at(group, tables, c, kw, &result.checks);
    }
    if (!ok) continue;
    result.matching.push_back(c);
    // Candidates are the same statement when they pair the same psi class with
    // the same operator: compare the relations σ(w) ↦ τ(w) on W.
    std::vector<std::size_t> sig(group.size());
    for (std::size_t kw = 0; kw < group.size(); ++kw) {
      sig[group.index_of(apply_element_map(c.psi_map, group[kw], w0))] =
          group.index_of(apply_element_map(c.demazure_map, group[kw], w0));
    }
    sig.push_back(c.sign > 0 ? 1 : 0);
    if (std::find(signatures.begin(), signatures.end(), sig) == signatures.end()) signatures.push_back(sig);
  }
  result.distinct = signatures.size();
  if (result.distinct == 1) result.chosen = result.matching.front();
  return result;
}

Report verify_demazure_action(const SchubertTable& table, const DemazureConvention& conv, const WeylElement& w) {
  const WeylGroup& group = table.group();
  const WeylElement& w0 = group.longest();
  Report r;
  r.identity = "demazure-action";
  r.element = group.word(group.index_of(w));
  r.subject = conv.describe();
  const ConvolutionClass psi = psi_class(table, apply_element_map(conv.psi_map, w, w0));
  const WeylElement tau = apply_element_map(conv.demazure_map, w, w0);
  const Word tau_word = group.word(group.index_of(tau));
  for (const Poly& g : t_monomials(table.n(), w0.length())) {
    ++r.substitutions;
    const Poly lhs = act(psi, g);
    Poly rhs = demazure_word(group.root_system(), tau_word, Block::T, g);
    if (conv.sign < 0) rhs = -rhs;
    if (lhs == rhs) continue;
    r.pass = false;
    if (r.witnesses.size() < 8) r.witnesses.push_back({{}, "g=" + g.to_string() + ": " + (lhs - rhs).to_string()});
  }
  return r;
}

// ---------------------------------------------------------------------------

LeibnizPair total_leibniz_via_convolution(const WeylGroup& group, const Poly& f, const Poly& g) {
  const WeylElement& w0 = group.longest();
  const RootSystem& rs = group.root_system();
  const Poly g_y = rename(g, Block::T, Block::Y);
  const Poly f_yt = rename(f, Block::X, Block::Y);

  LeibnizPair out;
  out.direct = rename(demazure_w(w0, Block::Y, g_y * f_yt), Block::Y, Block::T);

  const Poly f_twisted = weyl_act(f_yt, w0, Block::Y);
  Poly sum;
  for (std::size_t k = 0; k < group.size(); ++k) {
    const WeylElement& u = group[k];
    const Poly dg = demazure_word(rs, group.word(k), Block::Y, g_y);
    if (dg.is_zero()) continue;
    const Poly df = demazure_w(u * w0, Block::Y, f_twisted);
    if (df.is_zero()) continue;
    Poly term = dg * df;
    if (u.length() % 2) term = -term;
    sum += term;
  }
  if (w0.length() % 2) sum = -sum;
  out.expanded = rename(sum, Block::Y, Block::T);
  return out;
}

Report verify_total_leibniz_via_convolution(const WeylGroup& group, const Poly& f, const Poly& g) {
  Report r;
  r.identity = "total-leibniz-convolution";
  r.subject = "f=" + f.to_string() + "; g=" + g.to_string();
  r.substitutions = 1;
  const LeibnizPair sides = total_leibniz_via_convolution(group, f, g);
  if (!(sides.direct == sides.expanded)) {
    r.pass = false;
    r.witnesses.push_back({{}, (sides.direct - sides.expanded).to_string()});
  }
  return r;
}

bool commuting_square_holds(const WeylGroup& group, const WeylElement& v, const Poly& g) {
  const WeylElement& w0 = group.longest();
  const Poly lhs = demazure_w(w0 * v * w0, Block::T, weyl_act(g, w0, Block::T));
  Poly rhs = weyl_act(demazure_w(v, Block::T, g), w0, Block::T);
  if (v.length() % 2) rhs = -rhs;
  return lhs == rhs;
}

bool associative_mod_ideal(const ConvolutionClass& a, const ConvolutionClass& b, const ConvolutionClass& c) {
  const Poly left = convolve(convolve(a, b), c).poly;
  const Poly right = convolve(a, convolve(b, c)).poly;
  return ideal_member(left - right, {IdealVariant::TwoBlock, a.group});
}

}  // namespace flagcalc
