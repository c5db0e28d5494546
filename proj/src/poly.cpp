#include "flagcalc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "flagcalc/errors.hpp"

namespace flagcalc {

char block_letter(Block b) {
  switch (b) {
    case Block::X: return 'x';
    case Block::Y: return 'y';
    case Block::T: return 't';
  }
  return '?';
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

int Monomial::block_degree(Block b) const {
  int d = 0;
  const int base = var_id(b, 0);
  for (int i = 0; i < kMaxAmbient; ++i) d += exp[base + i];
  return d;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  for (int v = 0; v < kNumVars; ++v) {
    if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v];
  }
  return false;
}

namespace {

// GMP leaves mpq_class(num, den) unreduced; arithmetic on such values is undefined.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

void normalize(std::vector<Term>& terms) {
  for (Term& t : terms) t.coef.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mon, b.mon); });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t j = k + 1;
    Rational c = std::move(terms[k].coef);
    while (j < terms.size() && terms[j].mon == terms[k].mon) {
      c += terms[j].coef;
      ++j;
    }
    if (sgn(c) != 0) {
      terms[out].mon = terms[k].mon;
      terms[out].coef = std::move(c);
      ++out;
    }
    k = j;
  }
  terms.resize(out);
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].mon, b[j].mon))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].mon, a[i].mon)) {
      out.push_back({b[j].mon, sign > 0 ? Rational(b[j].coef) : Rational(-b[j].coef)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
      if (sgn(c) != 0) out.push_back({a[i].mon, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, canonical(c)});
}

Poly Poly::var(Block b, int index) {
  if (index < 1 || index > kMaxAmbient) throw UsageError("variable index out of range");
  Monomial m;
  m.exp[var_id(b, index - 1)] = 1;
  return monomial(m);
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({m, canonical(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  normalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mon.degree();
  return terms_.back().mon.degree() == d;
}

unsigned Poly::blocks_used() const {
  unsigned mask = 0;
  for (const Term& t : terms_) {
    for (int b = 0; b < 3; ++b) {
      if (t.mon.block_degree(static_cast<Block>(b)) > 0) mask |= 1u << b;
    }
  }
  return mask;
}

int Poly::max_index() const {
  int top = 0;
  for (const Term& t : terms_) {
    for (int v = 0; v < kNumVars; ++v) {
      if (t.mon.exp[v] > 0) top = std::max(top, v % kMaxAmbient + 1);
    }
  }
  return top;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mon.degree() == 0) return terms_.back().coef;
  return 0;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (Term& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      Term r;
      for (int v = 0; v < kNumVars; ++v) r.mon.exp[v] = static_cast<std::uint16_t>(s.mon.exp[v] + t.mon.exp[v]);
      r.coef = s.coef * t.coef;
      prod.push_back(std::move(r));
    }
  }
  return Poly::from_terms(std::move(prod));
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  const Rational k = canonical(c);
  for (Term& t : terms_) t.coef *= k;
  return *this;
}

bool Poly::operator==(const Poly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (!(terms_[k].mon == other.terms_[k].mon) || terms_[k].coef != other.terms_[k].coef) return false;
  }
  return true;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (m.exp[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += block_letter(static_cast<Block>(v / kMaxAmbient));
    out += std::to_string(v % kMaxAmbient + 1);
    if (m.exp[v] > 1) out += '^' + std::to_string(m.exp[v]);
  }
  return out;
}

std::string monomial_latex(const Monomial& m) {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (m.exp[v] == 0) continue;
    if (!out.empty()) out += ' ';
    out += block_letter(static_cast<Block>(v / kMaxAmbient));
    out += "_{" + std::to_string(v % kMaxAmbient + 1) + "}";
    if (m.exp[v] > 1) out += "^{" + std::to_string(m.exp[v]) + "}";
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const bool negative = sgn(t.coef) < 0;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(t.coef);
    const std::string mono = monomial_text(t.mon);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string Poly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    const bool negative = sgn(t.coef) < 0;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(t.coef);
    const std::string mono = monomial_latex(t.mon);
    std::string coef;
    if (mag.get_den() == 1) {
      coef = mag.get_num().get_str();
    } else {
      coef = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    }
    if (mono.empty()) {
      out += coef;
    } else if (mag == 1) {
      out += mono;
    } else {
      out += coef + " " + mono;
    }
  }
  return out;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Poly& p, const Rational& c) { return p * c; }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Poly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Poly result = sum();
    skip();
    if (pos_ != s_.size()) fail(peek() == ')' ? "unbalanced ')'" : "expected '+' or '-'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse polynomial '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  // sum := ['+'|'-'] product (('+'|'-') product)*
  Poly sum() {
    Poly result;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = product();
      result += sign > 0 ? t : -t;
      first = false;
    }
    return result;
  }

  Poly product() {
    Poly t = power();
    while (true) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      t *= power();
    }
    return t;
  }

  Poly power() {
    Poly base = atom();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    const std::string e = digits();
    if (e.size() > 4) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(e)));
  }

  Poly atom() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = sum();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        Rational r(num + "/" + den);
        r.canonicalize();
        return Poly(r);
      }
      return Poly(Rational(num));
    }
    Block b;
    if (c == 'x') {
      b = Block::X;
    } else if (c == 'y') {
      b = Block::Y;
    } else if (c == 't') {
      b = Block::T;
    } else {
      fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }
    ++pos_;
    const std::string idx = digits();
    if (idx.size() > 2) fail("variable index out of range");
    const int index = std::stoi(idx);
    if (index < 1 || index > kMaxAmbient) fail("variable index out of range");
    return Poly::var(b, index);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Linear forms and substitutions

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Poly LinearForm::to_poly() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Monomial m;
    m.exp[var_id(block, static_cast<int>(i))] = 1;
    terms.push_back({m, coeffs[i]});
  }
  return Poly::from_terms(std::move(terms));
}

LinearForm root_form(const Root& alpha, Block block) {
  LinearForm f;
  f.block = block;
  for (int c : alpha) f.coeffs.emplace_back(c);
  return f;
}

SignedRenaming::SignedRenaming() {
  for (int v = 0; v < kNumVars; ++v) {
    target_[v] = static_cast<std::uint8_t>(v);
    sign_[v] = 1;
  }
}

void SignedRenaming::set(int var, int target, int sign) {
  target_[var] = static_cast<std::uint8_t>(target);
  sign_[var] = static_cast<std::int8_t>(sign < 0 ? -1 : 1);
}

void SignedRenaming::set_block(Block from, Block to) {
  for (int i = 0; i < kMaxAmbient; ++i) set(var_id(from, i), var_id(to, i), 1);
}

Poly SignedRenaming::apply(const Poly& p) const {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    Term r;
    bool negate = false;
    for (int v = 0; v < kNumVars; ++v) {
      const auto e = t.mon.exp[v];
      if (e == 0) continue;
      r.mon.exp[target_[v]] = static_cast<std::uint16_t>(r.mon.exp[target_[v]] + e);
      if (sign_[v] < 0 && (e & 1u)) negate = !negate;
    }
    r.coef = negate ? Rational(-t.coef) : t.coef;
    out.push_back(std::move(r));
  }
  return Poly::from_terms(std::move(out));
}

SignedRenaming weyl_renaming(const WeylElement& w, Block block) {
  SignedRenaming r;
  const auto images = w.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int img = images[i];
    r.set(var_id(block, static_cast<int>(i)), var_id(block, std::abs(img) - 1), img < 0 ? -1 : 1);
  }
  return r;
}

Poly weyl_act(const Poly& p, const WeylElement& w, Block block) {
  for (const Term& t : p.terms()) {
    for (int i = w.root_system().ambient_dim(); i < kMaxAmbient; ++i) {
      if (t.mon.exp[var_id(block, i)] > 0) {
        throw UsageError("polynomial uses variables beyond the ambient dimension of " + w.root_system().name());
      }
    }
  }
  return weyl_renaming(w, block).apply(p);
}

void Substitution::set(int var, Poly image) { images_[var] = std::move(image); }

void Substitution::set_block(Block block, std::span<const LinearForm> images) {
  for (std::size_t i = 0; i < images.size(); ++i) set(var_id(block, static_cast<int>(i)), images[i].to_poly());
}

Poly Substitution::apply(const Poly& p) const {
  std::array<std::vector<Poly>, kNumVars> powers;
  auto power = [&](int v, unsigned e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images_[v]);
    return cache[e];
  };
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    Monomial kept;
    bool any = false;
    for (int v = 0; v < kNumVars; ++v) {
      if (t.mon.exp[v] == 0) continue;
      if (images_[v]) {
        any = true;
      } else {
        kept.exp[v] = t.mon.exp[v];
      }
    }
    Poly piece = Poly::monomial(kept, t.coef);
    if (any) {
      for (int v = 0; v < kNumVars && !piece.is_zero(); ++v) {
        if (t.mon.exp[v] == 0 || !images_[v]) continue;
        piece *= power(v, t.mon.exp[v]);
      }
    }
    for (const Term& r : piece.terms()) out.push_back(r);
  }
  return Poly::from_terms(std::move(out));
}

Poly substitute_block(const Poly& p, Block block, std::span<const LinearForm> images) {
  Substitution s;
  s.set_block(block, images);
  return s.apply(p);
}

Poly divide_exact(const Poly& p, const LinearForm& form) {
  LinearForm d = form;
  for (Rational& c : d.coeffs) c.canonicalize();
  int lead = -1;
  for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
    if (sgn(d.coeffs[i]) != 0) {
      lead = static_cast<int>(i);
      break;
    }
  }
  if (lead < 0) throw DivisibilityError("division by the zero linear form");
  const int v = var_id(d.block, lead);
  const Rational inv_lead = 1 / d.coeffs[lead];
  const Poly divisor = d.to_poly();

  // Peel off the top degree in the leading variable of d until nothing is left.
  Poly rem = p;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    int top = 0;
    for (const Term& t : rem.terms()) top = std::max<int>(top, t.mon.exp[v]);
    if (top == 0) throw DivisibilityError("'" + p.to_string() + "' is not divisible by '" + divisor.to_string() + "'");
    std::vector<Term> slice;
    for (const Term& t : rem.terms()) {
      if (t.mon.exp[v] != top) continue;
      Term q = t;
      q.mon.exp[v] = static_cast<std::uint16_t>(top - 1);
      q.coef *= inv_lead;
      slice.push_back(q);
    }
    Poly part = Poly::from_terms(slice);
    rem -= part * divisor;
    for (Term& t : slice) quotient.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(quotient));
}

bool is_symmetric(const Poly& p, Block block, const RootSystem& rs) {
  for (int i = 1; i <= rs.rank(); ++i) {
    const std::vector<int>& images = rs.generator_images(i);
    SignedRenaming r;
    for (std::size_t k = 0; k < images.size(); ++k) {
      r.set(var_id(block, static_cast<int>(k)), var_id(block, std::abs(images[k]) - 1), images[k] < 0 ? -1 : 1);
    }
    if (!(r.apply(p) == p)) return false;
  }
  return true;
}

Poly random_poly(std::mt19937_64& rng, std::span<const Block> blocks, int nvars, int max_degree,
                int max_terms) {
  auto below = [&](std::uint64_t n) { return static_cast<int>(rng() % n); };
  const int terms = 1 + below(static_cast<std::uint64_t>(max_terms));
  Poly out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const int degree = below(static_cast<std::uint64_t>(max_degree) + 1);
    for (int d = 0; d < degree; ++d) {
      const Block b = blocks[below(blocks.size())];
      ++m.exp[var_id(b, below(static_cast<std::uint64_t>(nvars)))];
    }
    int c = below(7) - 3;
    if (c == 0) c = 1;
    out += Poly::monomial(m, c);
  }
  return out;
}

}  // namespace flagcalc
