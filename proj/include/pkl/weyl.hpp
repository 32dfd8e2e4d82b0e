#pragma once

// Finite, affine and extended affine Weyl groups.
//
// Every element of W_ex = W x| Lambda is held in the normal form t(lambda) w
// (translation first). The group object owns the finite-group tables and the
// memo caches; elements are plain values.

#include "pkl/rootdata.hpp"

#include <compare>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pkl {

// Index of an element of the finite Weyl group inside its FiniteWeylGroup.
using FiniteIndex = int;

// x = t(translation) * w, w given by its index in the finite Weyl group.
struct ExtAffineElement {
  Weight translation;
  FiniteIndex finite = 0;
  int length = -1;  // cached Iwahori-Matsumoto length; -1 when not computed

  friend bool operator==(const ExtAffineElement& a, const ExtAffineElement& b) {
    return a.finite == b.finite && a.translation == b.translation;
  }
  // Total order used for deterministic container iteration.
  friend std::strong_ordering operator<=>(const ExtAffineElement& a, const ExtAffineElement& b) {
    if (auto c = a.finite <=> b.finite; c != 0) return c;
    return a.translation <=> b.translation;
  }
};

struct ExtAffineHash {
  std::size_t operator()(const ExtAffineElement& x) const noexcept {
    return hash_vector(x.translation.coords) * 31 + static_cast<std::size_t>(x.finite);
  }
};

// Affine simple reflections are numbered 0..rank: 0 is s_0, i >= 1 is the
// finite simple reflection for simple root i-1.
using AffineGenerator = int;

// x = omega * s_{letters[0]} * ... * s_{letters[k-1]}, with l(omega) = 0.
struct ReducedWord {
  ExtAffineElement omega;
  std::vector<AffineGenerator> letters;
};

class FiniteWeylGroup {
 public:
  explicit FiniteWeylGroup(const RootDatum& rd);

  int size() const { return static_cast<int>(matrices_.size()); }
  FiniteIndex identity() const { return 0; }
  FiniteIndex simple_reflection(int i) const { return simple_[i]; }  // i in 0..rank-1
  FiniteIndex longest() const { return longest_; }
  FiniteIndex reflection(int positive_root_index) const { return reflections_[positive_root_index]; }

  FiniteIndex multiply(FiniteIndex a, FiniteIndex b) const { return table_[a * size() + b]; }
  FiniteIndex inverse(FiniteIndex a) const { return inverse_[a]; }
  int length(FiniteIndex a) const { return static_cast<int>(words_[a].size()); }
  // Lexicographically smallest reduced word, letters are simple-root indices 0..rank-1.
  const std::vector<int>& word(FiniteIndex a) const { return words_[a]; }
  const IntMatrix& matrix(FiniteIndex a) const { return matrices_[a]; }
  // True iff a^{-1}(alpha_k) is a negative root.
  bool inverse_sends_negative(FiniteIndex a, int k) const { return negative_[a * num_roots_ + k]; }
  // True iff a(alpha_k) is a positive root.
  bool sends_positive(FiniteIndex a, int k) const { return !inverse_sends_negative(inverse(a), k); }

  Weight act(FiniteIndex a, const Weight& lam) const { return Weight(IntVector(matrices_[a] * lam.coords)); }
  FiniteIndex from_word(const std::vector<int>& letters) const;
  FiniteIndex from_matrix(const IntMatrix& m) const;

 private:
  std::vector<IntMatrix> matrices_;
  std::vector<std::vector<int>> words_;
  std::vector<FiniteIndex> table_;
  std::vector<FiniteIndex> inverse_;
  std::vector<FiniteIndex> simple_;
  std::vector<FiniteIndex> reflections_;
  std::vector<char> negative_;
  std::unordered_map<std::size_t, std::vector<FiniteIndex>> by_hash_;
  FiniteIndex longest_ = 0;
  int num_roots_ = 0;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootDatum> rd);

  const RootDatum& root_datum() const { return *rd_; }
  std::shared_ptr<const RootDatum> root_datum_ptr() const { return rd_; }
  const FiniteWeylGroup& finite() const { return finite_; }
  int rank() const { return rd_->rank(); }
  int num_generators() const { return rd_->rank() + 1; }

  ExtAffineElement make(Weight translation, FiniteIndex w) const;
  ExtAffineElement identity() const { return make(rd_->zero(), finite_.identity()); }
  ExtAffineElement translation(const Weight& lam) const { return make(lam, finite_.identity()); }
  ExtAffineElement finite_element(FiniteIndex w) const { return make(rd_->zero(), w); }
  ExtAffineElement generator(AffineGenerator s) const;

  ExtAffineElement multiply(const ExtAffineElement& x, const ExtAffineElement& y) const;
  ExtAffineElement inverse(const ExtAffineElement& x) const;
  ExtAffineElement right_multiply(const ExtAffineElement& x, AffineGenerator s) const;
  ExtAffineElement left_translate(const Weight& nu, const ExtAffineElement& x) const;
  // w_0 * x
  ExtAffineElement left_longest(const ExtAffineElement& x) const;

  // l(t(lam) w) = sum_{a>0, w^-1 a>0} |<lam,a^>| + sum_{a>0, w^-1 a<0} |<lam,a^> - 1|
  int length(const Weight& translation, FiniteIndex w) const;
  int length(const ExtAffineElement& x) const { return x.length >= 0 ? x.length : length(x.translation, x.finite); }
  bool is_right_descent(const ExtAffineElement& x, AffineGenerator s) const;

  const ReducedWord& reduced_word(const ExtAffineElement& x) const;
  bool bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y) const;

  // Index into omegas() of the length-zero element in the Lambda/Q-coset of x.
  int omega_component(const ExtAffineElement& x) const;
  bool same_omega_component(const ExtAffineElement& x, const ExtAffineElement& y) const;
  const std::vector<ExtAffineElement>& omegas() const { return omegas_; }

  // x .n lam = w(lam + rho) + n*nu - rho for x = t(nu) w.
  Weight dot_action(const ExtAffineElement& x, const Weight& lam, std::int64_t n) const;
  // The element x with x .l 0 = mu, if mu lies in the orbit of 0.
  std::optional<ExtAffineElement> from_dot_image(const Weight& mu, std::int64_t n) const;

  // Semi-infinite length <lam, 2 rhocheck> - l(w) of t(lam) w; each generating
  // cover of the semi-infinite order changes it by exactly one.
  std::int64_t semi_infinite_length(const ExtAffineElement& x) const;

  // "t(a1,...,ar)*w[i1 i2 ...]" with 1-based simple-reflection indices and the
  // lexicographically smallest reduced word of the finite part.
  std::string format(const ExtAffineElement& x) const;
  // Accepts the format() grammar plus "e", a bare "t(...)" or a bare "w[...]".
  ExtAffineElement parse(const std::string& text) const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  FiniteWeylGroup finite_;
  std::vector<ExtAffineElement> omegas_;
  std::vector<IntVector> omega_keys_;

  mutable std::shared_mutex word_mutex_;
  mutable std::unordered_map<ExtAffineElement, ReducedWord, ExtAffineHash> word_cache_;
  struct PairHash {
    std::size_t operator()(const std::pair<ExtAffineElement, ExtAffineElement>& p) const noexcept {
      return ExtAffineHash{}(p.first) * 1000003 ^ ExtAffineHash{}(p.second);
    }
  };
  mutable std::shared_mutex bruhat_mutex_;
  mutable std::unordered_map<std::pair<ExtAffineElement, ExtAffineElement>, bool, PairHash> bruhat_cache_;
};

}  // namespace pkl
