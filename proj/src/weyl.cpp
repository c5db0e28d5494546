#include "flagcalc/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "flagcalc/errors.hpp"

namespace flagcalc {

Family parse_family(const std::string& name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "B" || name == "b") return Family::B;
  if (name == "C" || name == "c") return Family::C;
  if (name == "D" || name == "d") return Family::D;
  throw ConfigError("unsupported root system family '" + name + "'");
}

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

namespace {

Root unit(int dim, int i, int sign = 1) {
  Root r(dim, 0);
  r[i] = sign;
  return r;
}

Root combo(int dim, int i, int si, int j, int sj) {
  Root r(dim, 0);
  r[i] += si;
  r[j] += sj;
  return r;
}

int dot(const Root& a, const Root& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  if (rank < 1) throw ConfigError("rank must be at least 1");
  if (family == Family::D && rank < 2) throw ConfigError("type D requires rank at least 2");
  ambient_dim_ = family == Family::A ? rank + 1 : rank;
  const int m = ambient_dim_;

  for (int i = 0; i + 1 < m; ++i) simple_roots_.push_back(combo(m, i, 1, i + 1, -1));
  switch (family) {
    case Family::A: break;
    case Family::B: simple_roots_.push_back(unit(m, m - 1)); break;
    case Family::C: simple_roots_.push_back(unit(m, m - 1, 2)); break;
    case Family::D: simple_roots_.push_back(combo(m, m - 2, 1, m - 1, 1)); break;
  }

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      positive_roots_.push_back(combo(m, i, 1, j, -1));
      if (family != Family::A) positive_roots_.push_back(combo(m, i, 1, j, 1));
    }
    if (family == Family::B) positive_roots_.push_back(unit(m, i));
    if (family == Family::C) positive_roots_.push_back(unit(m, i, 2));
  }

  for (const Root& alpha : simple_roots_) generator_images_.push_back(reflection_images(alpha));
}

std::string RootSystem::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

bool RootSystem::is_positive(const Root& r) {
  for (int c : r) {
    if (c != 0) return c > 0;
  }
  return false;
}

std::vector<int> RootSystem::reflection_images(const Root& alpha) const {
  const int m = ambient_dim_;
  const int norm = dot(alpha, alpha);
  std::vector<int> images(m, 0);
  for (int i = 0; i < m; ++i) {
    // s_alpha(e_i) = e_i - (2 alpha_i / |alpha|^2) alpha
    Root v = unit(m, i);
    if (alpha[i] != 0) {
      const int num = 2 * alpha[i];
      if (num % norm != 0) throw ConfigError("reflection is not integral");
      const int factor = num / norm;
      for (int k = 0; k < m; ++k) v[k] -= factor * alpha[k];
    }
    int target = -1;
    for (int k = 0; k < m; ++k) {
      if (v[k] == 0) continue;
      if (target >= 0 || std::abs(v[k]) != 1) throw ConfigError("reflection is not a signed permutation");
      target = k;
    }
    images[i] = v[target] * (target + 1);
  }
  return images;
}

bool RootSystem::contains(std::span<const int> images) const {
  const int m = ambient_dim_;
  if (static_cast<int>(images.size()) != m) return false;
  std::vector<bool> seen(m, false);
  int negatives = 0;
  for (int img : images) {
    const int j = std::abs(img) - 1;
    if (j < 0 || j >= m || seen[j]) return false;
    seen[j] = true;
    if (img < 0) ++negatives;
  }
  if (family_ == Family::A) return negatives == 0;
  if (family_ == Family::D) return negatives % 2 == 0;
  return true;
}

RootSystemPtr build_root_system(Family family, int rank) {
  return std::make_shared<const RootSystem>(family, rank);
}

std::uint64_t weyl_group_order(Family family, int rank) {
  std::uint64_t fact = 1;
  const int n = family == Family::A ? rank + 1 : rank;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
  switch (family) {
    case Family::A: return fact;
    case Family::B:
    case Family::C: return fact << rank;
    case Family::D: return fact << (rank - 1);
  }
  return 0;
}

// ---------------------------------------------------------------------------

WeylElement::WeylElement(RootSystemPtr rs, std::vector<int> images)
    : rs_(std::move(rs)), images_(std::move(images)) {
  int len = 0;
  for (const Root& alpha : rs_->positive_roots()) {
    if (!RootSystem::is_positive(apply(alpha))) ++len;
  }
  length_ = len;
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  std::vector<int> images(rs->ambient_dim());
  for (int i = 0; i < rs->ambient_dim(); ++i) images[i] = i + 1;
  return WeylElement(std::move(rs), std::move(images));
}

WeylElement WeylElement::generator(RootSystemPtr rs, int i) {
  if (i < 1 || i > rs->rank()) {
    throw UsageError("generator index " + std::to_string(i) + " out of range for " + rs->name());
  }
  std::vector<int> images = rs->generator_images(i);
  return WeylElement(std::move(rs), std::move(images));
}

WeylElement WeylElement::from_word(RootSystemPtr rs, std::span<const int> word) {
  WeylElement w = identity(rs);
  for (int i : word) w = w * generator(rs, i);
  return w;
}

WeylElement WeylElement::from_images(RootSystemPtr rs, std::vector<int> images) {
  if (!rs->contains(images)) throw UsageError("signed permutation is not an element of " + rs->name());
  return WeylElement(std::move(rs), std::move(images));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (rs_ != other.rs_ && (rs_->family() != other.rs_->family() || rs_->rank() != other.rs_->rank())) {
    throw UsageError("cannot multiply elements of " + rs_->name() + " and " + other.rs_->name());
  }
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int b = other.images_[i];
    const int a = images_[std::abs(b) - 1];
    images[i] = b < 0 ? -a : a;
  }
  return WeylElement(rs_, std::move(images));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int img = images_[i];
    const int sign = img < 0 ? -1 : 1;
    images[std::abs(img) - 1] = sign * static_cast<int>(i + 1);
  }
  return WeylElement(rs_, std::move(images));
}

Root WeylElement::apply(const Root& r) const {
  Root out(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    const int img = images_[i];
    out[std::abs(img) - 1] += img < 0 ? -r[i] : r[i];
  }
  return out;
}

bool WeylElement::has_left_descent(int i) const {
  return !RootSystem::is_positive(inverse().apply(rs_->simple_root(i)));
}

bool WeylElement::has_right_descent(int i) const {
  return !RootSystem::is_positive(apply(rs_->simple_root(i)));
}

Word WeylElement::reduced_word() const {
  Word word;
  WeylElement w = *this;
  while (!w.is_identity()) {
    for (int i = 1; i <= rs_->rank(); ++i) {
      if (w.has_left_descent(i)) {
        word.push_back(i);
        w = generator(rs_, i) * w;
        break;
      }
    }
  }
  return word;
}

std::size_t WeylElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int img : images_) {
    h ^= static_cast<std::size_t>(img + 64);
    h *= 1099511628211ull;
  }
  return h;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) { return a * b; }
WeylElement inverse(const WeylElement& a) { return a.inverse(); }
int length(const WeylElement& a) { return a.length(); }
Word reduced_word(const WeylElement& w) { return w.reduced_word(); }

std::vector<WeylElement> enumerate_weyl(const RootSystemPtr& rs, std::size_t bound) {
  const std::uint64_t order = weyl_group_order(rs->family(), rs->rank());
  if (order > bound) {
    throw ResourceError("Weyl group " + rs->name() + " has " + std::to_string(order) +
                            " elements, above the enumeration bound " + std::to_string(bound),
                        order);
  }
  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs->rank(); ++i) gens.push_back(WeylElement::generator(rs, i));

  std::vector<WeylElement> out;
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::deque<WeylElement> queue;
  const WeylElement e = WeylElement::identity(rs);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (const WeylElement& s : gens) {
      WeylElement sw = s * w;
      if (seen.insert(sw).second) queue.push_back(sw);
    }
    out.push_back(std::move(w));
  }
  std::vector<std::pair<Word, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) keys.emplace_back(out[k].reduced_word(), k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> sorted;
  sorted.reserve(out.size());
  for (const auto& [word, k] : keys) sorted.push_back(out[k]);
  return sorted;
}

namespace {

void collect_words(const WeylElement& w, Word& prefix, ReducedWords& acc, std::size_t cap) {
  if (acc.truncated) return;
  if (w.is_identity()) {
    if (acc.words.size() >= cap) {
      acc.truncated = true;
      return;
    }
    acc.words.push_back(prefix);
    return;
  }
  const auto& rs = w.root_system_ptr();
  for (int i = 1; i <= rs->rank(); ++i) {
    if (!w.has_left_descent(i)) continue;
    prefix.push_back(i);
    collect_words(WeylElement::generator(rs, i) * w, prefix, acc, cap);
    prefix.pop_back();
    if (acc.truncated) return;
  }
}

}  // namespace

ReducedWords all_reduced_words(const WeylElement& w, std::size_t cap) {
  ReducedWords acc;
  Word prefix;
  collect_words(w, prefix, acc, cap);
  return acc;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  // Deodhar's property Z, peeling one left descent of w at a time.
  WeylElement a = u;
  WeylElement b = w;
  const auto& rs = w.root_system_ptr();
  while (!b.is_identity()) {
    if (a.length() > b.length()) return false;
    int s = 0;
    for (int i = 1; i <= rs->rank(); ++i) {
      if (b.has_left_descent(i)) {
        s = i;
        break;
      }
    }
    const WeylElement g = WeylElement::generator(rs, s);
    if (a.has_left_descent(s)) a = g * a;
    b = g * b;
  }
  return a.is_identity();
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(RootSystemPtr rs, std::size_t bound)
    : rs_(std::move(rs)), elements_(enumerate_weyl(rs_, bound)) {
  words_.reserve(elements_.size());
  index_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    words_.push_back(elements_[k].reduced_word());
    index_.emplace(elements_[k], k);
  }
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw UsageError("element does not belong to " + rs_->name());
  return it->second;
}

WeylGroupPtr make_weyl_group(Family family, int rank, std::size_t bound) {
  return std::make_shared<const WeylGroup>(build_root_system(family, rank), bound);
}

std::vector<std::pair<WeylElement, WeylElement>> length_additive_factorizations(
    const WeylGroup& group, const WeylElement& w) {
  std::vector<std::pair<WeylElement, WeylElement>> out;
  for (const WeylElement& u : group.elements()) {
    if (u.length() > w.length()) break;
    WeylElement v = u.inverse() * w;
    if (u.length() + v.length() == w.length()) out.emplace_back(u, std::move(v));
  }
  return out;
}

std::vector<WeylElement> minimal_coset_reps(const WeylGroup& group, std::span<const int> theta) {
  const auto& rs = group.root_system();
  for (int s : theta) {
    if (s < 1 || s > rs.rank()) throw UsageError("parabolic generator " + std::to_string(s) + " out of range");
  }
  std::vector<WeylElement> out;
  for (const WeylElement& w : group.elements()) {
    bool minimal = true;
    for (int s : theta) {
      if (w.has_right_descent(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

Word parse_word(const std::string& text, int rank) {
  Word word;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw UsageError("empty generator index in word '" + text + "'");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw UsageError("bad generator index '" + token + "'");
    }
    if (used != token.size() || value < 1 || value > rank) {
      throw UsageError("generator index '" + token + "' out of range 1.." + std::to_string(rank));
    }
    word.push_back(value);
  }
  return word;
}

std::string format_word(std::span<const int> word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

}  // namespace flagcalc
