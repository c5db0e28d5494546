#include "flagcalc/nilhecke.hpp"

#include <cstdlib>

#include "flagcalc/errors.hpp"

namespace flagcalc {

namespace {

SignedRenaming generator_renaming(const RootSystem& rs, int i, Block block) {
  SignedRenaming r;
  const std::vector<int>& images = rs.generator_images(i);
  for (std::size_t k = 0; k < images.size(); ++k) {
    r.set(var_id(block, static_cast<int>(k)), var_id(block, std::abs(images[k]) - 1), images[k] < 0 ? -1 : 1);
  }
  return r;
}

}  // namespace

Poly demazure(const RootSystem& rs, int i, Block block, const Poly& p) {
  if (i < 1 || i > rs.rank()) throw UsageError("generator index out of range for " + rs.name());
  Poly diff = p - generator_renaming(rs, i, block).apply(p);
  if (diff.is_zero()) return diff;
  try {
    return divide_exact(diff, root_form(rs.simple_root(i), block));
  } catch (const DivisibilityError& e) {
    throw DivisibilityError(std::string("internal error in Demazure operator: ") + e.what());
  }
}

Poly demazure_word(const RootSystem& rs, std::span<const int> word, Block block, const Poly& p) {
  Poly out = p;
  for (auto it = word.rbegin(); it != word.rend() && !out.is_zero(); ++it) out = demazure(rs, *it, block, out);
  return out;
}

Poly demazure_w(const WeylElement& w, Block block, const Poly& p) {
  const Word word = w.reduced_word();
  return demazure_word(w.root_system(), word, block, p);
}

// ---------------------------------------------------------------------------

NilHeckeElement::NilHeckeElement(WeylGroupPtr group) : group_(std::move(group)), coeffs_(group_->size()) {}

NilHeckeElement NilHeckeElement::term(WeylGroupPtr group, const WeylElement& w, Poly c) {
  NilHeckeElement e(std::move(group));
  e.coeffs_[e.group_->index_of(w)] = std::move(c);
  return e;
}

NilHeckeElement NilHeckeElement::multiplication(WeylGroupPtr group, Poly f) {
  NilHeckeElement e(std::move(group));
  e.coeffs_[0] = std::move(f);
  return e;
}

bool NilHeckeElement::is_zero() const {
  for (const Poly& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void NilHeckeElement::add_term(const WeylElement& w, const Poly& c) { coeffs_[group_->index_of(w)] += c; }

Poly NilHeckeElement::apply(const Poly& g) const {
  Poly out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    out += coeffs_[k] * demazure_word(group_->root_system(), group_->word(k), Block::X, g);
  }
  return out;
}

NilHeckeElement& NilHeckeElement::operator+=(const NilHeckeElement& other) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

NilHeckeElement& NilHeckeElement::operator-=(const NilHeckeElement& other) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

NilHeckeElement& NilHeckeElement::operator*=(const Rational& c) {
  for (Poly& p : coeffs_) p *= c;
  return *this;
}

std::string NilHeckeElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ") d[" + format_word(group_->word(k)) + "]";
  }
  return out.empty() ? "0" : out;
}

nlohmann::json NilHeckeElement::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    out.push_back(nlohmann::json::array({group_->word(k), coeffs_[k].to_string()}));
  }
  return out;
}

NilHeckeElement leibniz_expand(const WeylGroupPtr& group, int i, const Poly& f) {
  const RootSystem& rs = group->root_system();
  NilHeckeElement out(group);
  out.add_term(group->identity(), demazure(rs, i, Block::X, f));
  out.add_term(WeylElement::generator(group->root_system_ptr(), i),
               generator_renaming(rs, i, Block::X).apply(f));
  return out;
}

NilHeckeElement demazure_times(const WeylGroupPtr& group, const WeylElement& w, const Poly& f) {
  const RootSystem& rs = group->root_system();
  const Word word = w.reduced_word();
  NilHeckeElement acc = NilHeckeElement::multiplication(group, f);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const SignedRenaming si = generator_renaming(rs, i, Block::X);
    const WeylElement s = WeylElement::generator(group->root_system_ptr(), i);
    NilHeckeElement next(group);
    for (std::size_t k = 0; k < group->size(); ++k) {
      const Poly& c = acc.coeff(k);
      if (c.is_zero()) continue;
      const WeylElement& v = (*group)[k];
      next.add_term(v, demazure(rs, i, Block::X, c));
      // ∂_i ∂_v = ∂_{s_i v} when the length goes up, 0 otherwise.
      if (!v.has_left_descent(i)) next.add_term(s * v, si.apply(c));
    }
    acc = std::move(next);
  }
  return acc;
}

NilHeckeElement nh_multiply(const NilHeckeElement& a, const NilHeckeElement& b) {
  const WeylGroupPtr& group = a.group_ptr();
  if (group->root_system().family() != b.group().root_system().family() ||
      group->root_system().rank() != b.group().root_system().rank()) {
    throw UsageError("nil-Hecke elements over different Weyl groups");
  }
  NilHeckeElement out(group);
  for (std::size_t ku = 0; ku < group->size(); ++ku) {
    const Poly& au = a.coeff(ku);
    if (au.is_zero()) continue;
    const WeylElement& u = (*group)[ku];
    for (std::size_t kv = 0; kv < group->size(); ++kv) {
      const Poly& bv = b.coeff(kv);
      if (bv.is_zero()) continue;
      const WeylElement& v = (*group)[kv];
      const NilHeckeElement inner = demazure_times(group, u, bv);
      for (std::size_t kz = 0; kz < group->size(); ++kz) {
        const Poly& ez = inner.coeff(kz);
        if (ez.is_zero()) continue;
        const WeylElement& z = (*group)[kz];
        WeylElement zv = z * v;
        if (zv.length() != z.length() + v.length()) continue;
        out.add_term(zv, au * ez);
      }
    }
  }
  return out;
}

std::pair<NilHeckeElement, NilHeckeElement> total_leibniz_sides(const WeylGroupPtr& group, const Poly& F) {
  const WeylElement& w0 = group->longest();
  const Rational sign0 = w0.length() % 2 ? -1 : 1;

  NilHeckeElement left = demazure_times(group, w0, weyl_act(F, w0, Block::X));
  left *= sign0;

  NilHeckeElement right(group);
  for (const WeylElement& w : group->elements()) {
    Poly c = demazure_w(w * w0, Block::X, F);
    if (c.is_zero()) continue;
    if (w.length() % 2) c = -c;
    right.add_term(w, c);
  }
  return {std::move(left), std::move(right)};
}

std::pair<Poly, Poly> total_leibniz_polynomial_sides(const WeylGroup& group, const Poly& F, const Poly& G) {
  const WeylElement& w0 = group.longest();
  Poly left = demazure_w(w0, Block::X, weyl_act(F, w0, Block::X) * G);
  if (w0.length() % 2) left = -left;

  Poly right;
  for (const WeylElement& w : group.elements()) {
    Poly dF = demazure_w(w * w0, Block::X, F);
    if (dF.is_zero()) continue;
    Poly dG = demazure_w(w, Block::X, G);
    if (dG.is_zero()) continue;
    Poly prod = dF * dG;
    if (w.length() % 2) prod = -prod;
    right += prod;
  }
  return {std::move(left), std::move(right)};
}

}  // namespace flagcalc
