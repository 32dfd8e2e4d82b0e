#include "pkl/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <mutex>

namespace pkl {

namespace {

std::size_t hash_matrix(const IntMatrix& m) {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Eigen::Index i = 0; i < m.size(); ++i) h = (h ^ static_cast<std::size_t>(m.data()[i])) * 0x100000001b3ULL;
  return h;
}

}  // namespace

FiniteWeylGroup::FiniteWeylGroup(const RootDatum& rd) {
  const int n = rd.rank();
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) {
    // s_i(lam) = lam - <lam, coroot_i> alpha_i
    IntMatrix s = IntMatrix::Identity(n, n);
    s.col(i) -= rd.cartan().col(i);
    gens.push_back(s);
  }
  auto lookup = [&](const IntMatrix& m) -> FiniteIndex {
    auto it = by_hash_.find(hash_matrix(m));
    if (it == by_hash_.end()) return -1;
    for (FiniteIndex k : it->second)
      if (matrices_[k] == m) return k;
    return -1;
  };
  auto insert = [&](IntMatrix m, std::vector<int> w) {
    by_hash_[hash_matrix(m)].push_back(size());
    matrices_.push_back(std::move(m));
    words_.push_back(std::move(w));
  };
  // Breadth-first in shortlex order: the first word reaching an element is its
  // lexicographically smallest reduced word.
  insert(IntMatrix::Identity(n, n), {});
  for (std::size_t head = 0; head < matrices_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntMatrix m = matrices_[head] * gens[i];
      if (lookup(m) >= 0) continue;
      auto w = words_[head];
      w.push_back(i);
      insert(std::move(m), std::move(w));
    }
  }
  const int sz = size();
  table_.assign(static_cast<std::size_t>(sz) * sz, -1);
  inverse_.assign(sz, -1);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      FiniteIndex c = lookup(matrices_[a] * matrices_[b]);
      table_[a * sz + b] = c;
      if (c == 0) inverse_[a] = b;
    }
  for (int i = 0; i < n; ++i) simple_.push_back(lookup(gens[i]));
  longest_ = static_cast<FiniteIndex>(std::max_element(words_.begin(), words_.end(), [](auto& x, auto& y) {
                                        return x.size() < y.size();
                                      }) - words_.begin());

  num_roots_ = rd.num_positive_roots();
  negative_.assign(static_cast<std::size_t>(sz) * num_roots_, 0);
  for (int a = 0; a < sz; ++a) {
    const IntMatrix& inv = matrices_[inverse_[a]];
    for (int k = 0; k < num_roots_; ++k)
      negative_[a * num_roots_ + k] = rd.height2(Weight(IntVector(inv * rd.positive_roots()[k].coords))) < 0;
  }
  for (int k = 0; k < num_roots_; ++k) {
    // s_beta(lam) = lam - <lam, beta^> beta
    IntMatrix r = IntMatrix::Identity(n, n) - rd.positive_roots()[k].coords * rd.positive_coroots()[k].coords.transpose();
    reflections_.push_back(lookup(r));
  }
}

FiniteIndex FiniteWeylGroup::from_word(const std::vector<int>& letters) const {
  FiniteIndex w = identity();
  for (int i : letters) {
    if (i < 0 || i >= static_cast<int>(simple_.size())) throw InputError("simple reflection index out of range");
    w = multiply(w, simple_[i]);
  }
  return w;
}

FiniteIndex FiniteWeylGroup::from_matrix(const IntMatrix& m) const {
  auto it = by_hash_.find(hash_matrix(m));
  if (it != by_hash_.end())
    for (FiniteIndex k : it->second)
      if (matrices_[k] == m) return k;
  throw InputError("matrix is not an element of the finite Weyl group");
}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootDatum> rd) : rd_(std::move(rd)), finite_(*rd_) {
  // Length-zero elements: <lam, a^> in {0, 1} for all positive a, so lam has
  // fundamental coordinates in {0, 1}.
  const int n = rank();
  for (int mask = 0; mask < (1 << n); ++mask) {
    Weight lam = rd_->zero();
    for (int i = 0; i < n; ++i) lam.coords(i) = (mask >> i) & 1;
    IntVector key = rd_->coset_key(lam);
    if (std::find(omega_keys_.begin(), omega_keys_.end(), key) != omega_keys_.end()) continue;
    for (FiniteIndex w = 0; w < finite_.size(); ++w) {
      if (length(lam, w) == 0) {
        omegas_.push_back(make(lam, w));
        omega_keys_.push_back(key);
        break;
      }
    }
  }
  if (static_cast<std::int64_t>(omegas_.size()) != rd_->lattice_index_e())
    throw InternalError("length-zero subgroup does not match Lambda/Q");
}

ExtAffineElement AffineWeylGroup::make(Weight translation, FiniteIndex w) const {
  rd_->check_rank(translation);
  if (w < 0 || w >= finite_.size()) throw InputError("finite Weyl group index out of range");
  int len = length(translation, w);
  return ExtAffineElement{std::move(translation), w, len};
}

ExtAffineElement AffineWeylGroup::generator(AffineGenerator s) const {
  if (s < 0 || s > rank()) throw InputError("affine generator index out of range");
  if (s == 0) return make(rd_->affine_root(), finite_.reflection(rd_->affine_root_index()));
  return finite_element(finite_.simple_reflection(s - 1));
}

ExtAffineElement AffineWeylGroup::multiply(const ExtAffineElement& x, const ExtAffineElement& y) const {
  // (t(lam) w)(t(mu) u) = t(lam + w mu) wu
  if (x.translation.rank() != y.translation.rank()) throw InputError("elements belong to different root data");
  return make(x.translation + finite_.act(x.finite, y.translation), finite_.multiply(x.finite, y.finite));
}

ExtAffineElement AffineWeylGroup::inverse(const ExtAffineElement& x) const {
  FiniteIndex winv = finite_.inverse(x.finite);
  return make(-finite_.act(winv, x.translation), winv);
}

ExtAffineElement AffineWeylGroup::right_multiply(const ExtAffineElement& x, AffineGenerator s) const {
  if (s == 0) {
    int b = rd_->affine_root_index();
    return make(x.translation + finite_.act(x.finite, rd_->affine_root()), finite_.multiply(x.finite, finite_.reflection(b)));
  }
  return make(x.translation, finite_.multiply(x.finite, finite_.simple_reflection(s - 1)));
}

ExtAffineElement AffineWeylGroup::left_translate(const Weight& nu, const ExtAffineElement& x) const {
  return make(nu + x.translation, x.finite);
}

ExtAffineElement AffineWeylGroup::left_longest(const ExtAffineElement& x) const {
  FiniteIndex w0 = finite_.longest();
  return make(finite_.act(w0, x.translation), finite_.multiply(w0, x.finite));
}

int AffineWeylGroup::length(const Weight& translation, FiniteIndex w) const {
  std::int64_t total = 0;
  const auto& coroots = rd_->positive_coroots();
  for (int k = 0; k < static_cast<int>(coroots.size()); ++k) {
    std::int64_t p = translation.coords.dot(coroots[k].coords);
    if (finite_.inverse_sends_negative(w, k)) p -= 1;
    total += std::abs(p);
  }
  return static_cast<int>(total);
}

bool AffineWeylGroup::is_right_descent(const ExtAffineElement& x, AffineGenerator s) const {
  return length(right_multiply(x, s)) < length(x);
}

const ReducedWord& AffineWeylGroup::reduced_word(const ExtAffineElement& x) const {
  {
    std::shared_lock lock(word_mutex_);
    auto it = word_cache_.find(x);
    if (it != word_cache_.end()) return it->second;
  }
  ReducedWord rw;
  ExtAffineElement cur = make(x.translation, x.finite);
  while (length(cur) > 0) {
    AffineGenerator s = 0;
    while (!is_right_descent(cur, s)) ++s;
    rw.letters.push_back(s);
    cur = right_multiply(cur, s);
  }
  std::reverse(rw.letters.begin(), rw.letters.end());
  rw.omega = cur;
  std::unique_lock lock(word_mutex_);
  return word_cache_.try_emplace(x, std::move(rw)).first->second;
}

bool AffineWeylGroup::bruhat_leq(const ExtAffineElement& x, const ExtAffineElement& y) const {
  int lx = length(x), ly = length(y);
  if (lx > ly) return false;
  if (ly == 0) return x == y;
  if (lx == ly) return x == y;
  if (!same_omega_component(x, y)) return false;
  auto key = std::pair{x, y};
  {
    std::shared_lock lock(bruhat_mutex_);
    auto it = bruhat_cache_.find(key);
    if (it != bruhat_cache_.end()) return it->second;
  }
  // For a right descent s of y: x <= y iff min(x, xs) <= ys.
  AffineGenerator s = reduced_word(y).letters.back();
  ExtAffineElement ys = right_multiply(y, s);
  ExtAffineElement xs = right_multiply(x, s);
  const ExtAffineElement& lower = length(xs) < lx ? xs : x;
  bool result = bruhat_leq(lower, ys);
  std::unique_lock lock(bruhat_mutex_);
  bruhat_cache_.emplace(std::move(key), result);
  return result;
}

int AffineWeylGroup::omega_component(const ExtAffineElement& x) const {
  IntVector key = rd_->coset_key(x.translation);
  for (std::size_t i = 0; i < omega_keys_.size(); ++i)
    if (omega_keys_[i] == key) return static_cast<int>(i);
  throw InternalError("translation in no Lambda/Q coset");
}

bool AffineWeylGroup::same_omega_component(const ExtAffineElement& x, const ExtAffineElement& y) const {
  return rd_->in_root_lattice(x.translation - y.translation);
}

Weight AffineWeylGroup::dot_action(const ExtAffineElement& x, const Weight& lam, std::int64_t n) const {
  const Weight& rho = rd_->rho();
  return finite_.act(x.finite, lam + rho) + n * x.translation - rho;
}

std::optional<ExtAffineElement> AffineWeylGroup::from_dot_image(const Weight& mu, std::int64_t n) const {
  if (n == 0) throw InputError("dilation must be nonzero");
  const Weight& rho = rd_->rho();
  for (FiniteIndex w = 0; w < finite_.size(); ++w) {
    Weight d = mu + rho - finite_.act(w, rho);
    bool divisible = true;
    for (int i = 0; i < d.rank(); ++i)
      if (d.coords(i) % n != 0) divisible = false;
    if (divisible) return make(Weight(IntVector(d.coords / n)), w);
  }
  return std::nullopt;
}

std::int64_t AffineWeylGroup::semi_infinite_length(const ExtAffineElement& x) const {
  return rd_->height2(x.translation) - finite_.length(x.finite);
}

std::string AffineWeylGroup::format(const ExtAffineElement& x) const {
  std::string out = "t" + x.translation.to_string() + "*w[";
  const auto& word = finite_.word(x.finite);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i] + 1);
  }
  return out + "]";
}

ExtAffineElement AffineWeylGroup::parse(const std::string& text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || (!s.empty() && s.back() != ' ')) s += c;
  while (!s.empty() && s.back() == ' ') s.pop_back();
  auto fail = [&]() -> ExtAffineElement { throw InputError("cannot parse element: '" + text + "'"); };
  if (s == "e") return identity();

  Weight lam = rd_->zero();
  std::size_t i = 0;
  bool have_t = false, have_w = false;
  if (s.compare(0, 2, "t(") == 0) {
    have_t = true;
    std::size_t close = s.find(')');
    if (close == std::string::npos) return fail();
    std::string body = s.substr(2, close - 2);
    std::vector<std::int64_t> coords;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
      if (tok.empty()) return fail();
      std::size_t used = 0;
      try {
        coords.push_back(std::stoll(tok, &used));
      } catch (const std::exception&) {
        return fail();
      }
      if (used != tok.size()) return fail();
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (static_cast<int>(coords.size()) != rank())
      throw InputError("element '" + text + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                       std::to_string(rank()));
    for (int k = 0; k < rank(); ++k) lam.coords(k) = coords[k];
    i = close + 1;
    while (i < s.size() && s[i] == ' ') ++i;
    if (i < s.size()) {
      if (s[i] != '*') return fail();
      ++i;
      while (i < s.size() && s[i] == ' ') ++i;
    }
  }
  std::vector<int> letters;
  if (i < s.size()) {
    if (s.compare(i, 2, "w[") != 0 || s.back() != ']') return fail();
    have_w = true;
    std::string body = s.substr(i + 2, s.size() - i - 3);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] == ' ') {
        ++pos;
        continue;
      }
      std::size_t end = body.find(' ', pos);
      std::string tok = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return fail();
      int k = std::stoi(tok);
      if (k < 1 || k > rank()) throw InputError("simple reflection index " + tok + " out of range in '" + text + "'");
      letters.push_back(k - 1);
      pos = end == std::string::npos ? body.size() : end;
    }
  }
  if (!have_t && !have_w) return fail();
  return make(lam, finite_.from_word(letters));
}

}  // namespace pkl
