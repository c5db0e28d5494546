#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flagcalc {

enum class Family { A, B, C, D };

Family parse_family(const std::string& name);
char family_letter(Family f);

/// Integer linear form on the ambient coordinates e_1..e_m.
using Root = std::vector<int>;

/// Word in the simple generators, 1-based indices.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultEnumerationBound = 50000;
inline constexpr std::size_t kDefaultReducedWordCap = 1000000;

/// Cartan data of a classical root system realized in standard coordinates.
///
/// A_n lives in R^{n+1}; B_n, C_n and D_n live in R^n. Positive roots are
/// exactly the roots whose first nonzero coordinate is positive, which is
/// what makes the sign test in `is_positive` valid.
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  std::string name() const;

  const std::vector<Root>& simple_roots() const { return simple_roots_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& simple_root(int i) const { return simple_roots_.at(i - 1); }

  static bool is_positive(const Root& r);

  /// Signed images of the basis vectors under the simple reflection s_i.
  const std::vector<int>& generator_images(int i) const { return generator_images_.at(i - 1); }

  /// Signed images of the reflection in the root `alpha`.
  std::vector<int> reflection_images(const Root& alpha) const;

  /// True when `images` is a signed permutation belonging to this group.
  bool contains(std::span<const int> images) const;

 private:
  Family family_;
  int rank_;
  int ambient_dim_;
  std::vector<Root> simple_roots_;
  std::vector<Root> positive_roots_;
  std::vector<std::vector<int>> generator_images_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(Family family, int rank);

/// Known |W| from the closed formulas, without enumerating.
std::uint64_t weyl_group_order(Family family, int rank);

/// An element of W stored as a signed permutation of ambient coordinates.
///
/// images()[i] = ±(j+1) means w(e_{i+1}) = ±e_{j+1}. Products compose as
/// maps: (a*b)(v) = a(b(v)).
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  static WeylElement generator(RootSystemPtr rs, int i);
  static WeylElement from_word(RootSystemPtr rs, std::span<const int> word);
  static WeylElement from_images(RootSystemPtr rs, std::vector<int> images);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  std::span<const int> images() const { return images_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  Root apply(const Root& r) const;

  /// ℓ(s_i w) < ℓ(w).
  bool has_left_descent(int i) const;
  /// ℓ(w s_i) < ℓ(w).
  bool has_right_descent(int i) const;

  /// Lexicographically least reduced word.
  Word reduced_word() const;

  /// One-line notation for type A (1-based values), signed images otherwise.
  std::vector<int> one_line() const { return images_; }

  bool operator==(const WeylElement& other) const { return images_ == other.images_; }

  std::size_t hash() const;

 private:
  WeylElement(RootSystemPtr rs, std::vector<int> images);

  RootSystemPtr rs_;
  std::vector<int> images_;
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);
int length(const WeylElement& a);

std::vector<WeylElement> enumerate_weyl(const RootSystemPtr& rs,
                                        std::size_t bound = kDefaultEnumerationBound);

struct ReducedWords {
  std::vector<Word> words;  // sorted lexicographically
  bool truncated = false;
};

Word reduced_word(const WeylElement& w);
ReducedWords all_reduced_words(const WeylElement& w, std::size_t cap = kDefaultReducedWordCap);

bool bruhat_leq(const WeylElement& u, const WeylElement& w);

/// The finite group W in canonical order (length, then least reduced word)
/// with constant-time index lookup.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystemPtr rs, std::size_t bound = kDefaultEnumerationBound);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](std::size_t idx) const { return elements_[idx]; }
  std::size_t index_of(const WeylElement& w) const;
  const Word& word(std::size_t idx) const { return words_[idx]; }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }

 private:
  RootSystemPtr rs_;
  std::vector<WeylElement> elements_;
  std::vector<Word> words_;
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

WeylGroupPtr make_weyl_group(Family family, int rank,
                             std::size_t bound = kDefaultEnumerationBound);

/// All (u, v) with u*v = w and ℓ(u)+ℓ(v) = ℓ(w), ordered by u in canonical order.
std::vector<std::pair<WeylElement, WeylElement>> length_additive_factorizations(
    const WeylGroup& group, const WeylElement& w);

/// Elements w with ℓ(w s) = ℓ(w)+1 for every s in `theta`.
std::vector<WeylElement> minimal_coset_reps(const WeylGroup& group, std::span<const int> theta);

/// Parses "1,2,1" (or the empty string) into a word; throws UsageError.
Word parse_word(const std::string& text, int rank);
std::string format_word(std::span<const int> word);

}  // namespace flagcalc
