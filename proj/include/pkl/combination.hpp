#pragma once

// Finite Z[v, v^-1]-linear combinations of basis vectors indexed by W_ex.
//
// The tag keeps algebra elements (basis H_x) and periodic-module elements
// (basis H^{inf/2}_x) apart at compile time; both share this storage.

#include "pkl/laurent.hpp"
#include "pkl/weyl.hpp"

#include <map>
#include <utility>

namespace pkl {

template <class Tag, class Scalar = BigInt>
class Combination {
 public:
  using poly_type = LaurentPoly<Scalar>;
  using storage_type = std::map<ExtAffineElement, poly_type>;

  Combination() = default;
  static Combination basis(const ExtAffineElement& x, poly_type coeff = poly_type(1)) {
    Combination c;
    c.add(x, coeff);
    return c;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const storage_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  poly_type coefficient(const ExtAffineElement& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? poly_type() : it->second;
  }

  void add(const ExtAffineElement& x, const poly_type& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [x, p] : o.terms_) add(x, p);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [x, p] : o.terms_) add(x, -p);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  Combination operator-() const {
    Combination r;
    for (const auto& [x, p] : terms_) r.terms_.emplace_hint(r.terms_.end(), x, -p);
    return r;
  }
  // Scalar (Laurent polynomial) multiplication.
  friend Combination operator*(const poly_type& c, const Combination& a) {
    Combination r;
    if (c.is_zero()) return r;
    for (const auto& [x, p] : a.terms_) r.add(x, c * p);
    return r;
  }

  // Apply v -> v^-1 to every coefficient, keeping the basis vectors.
  Combination bar_coefficients() const {
    Combination r;
    for (const auto& [x, p] : terms_) r.terms_.emplace_hint(r.terms_.end(), x, p.bar());
    return r;
  }

  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

 private:
  storage_type terms_;
};

struct HeckeTag {};
struct PeriodicTag {};

using HeckeElement = Combination<HeckeTag>;
using PeriodicElement = Combination<PeriodicTag>;

}  // namespace pkl
