#pragma once

// Integer-coefficient Laurent polynomials in one variable v.
//
// Sparse storage: exponent -> nonzero coefficient. The empty map is zero.

#include "pkl/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace pkl {

template <class Scalar>
class LaurentPoly {
 public:
  using scalar_type = Scalar;
  using storage_type = std::map<int, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(int constant) {  // NOLINT(implicit): integers embed as constants
    if (constant != 0) terms_.emplace(0, Scalar(constant));
  }
  LaurentPoly(std::initializer_list<std::pair<const int, Scalar>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly monomial(int exponent, Scalar coeff = Scalar(1)) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
  }
  static LaurentPoly v() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  const storage_type& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar constant_term() const { return coefficient(0); }

  // Precondition: nonzero.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const Scalar& coeff) {
    if (coeff == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& p) {
    LaurentPoly r;
    if (s == Scalar(0)) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), e, s * c);
    return r;
  }

  // Multiplication by v^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  // v -> v^{-1}.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  // v -> v^k (k may be zero, which evaluates at v = 1).
  LaurentPoly substitute_power(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  // True iff every exponent is >= 1; the zero polynomial qualifies.
  bool in_v_times_Zv() const { return terms_.empty() || min_degree() >= 1; }
  bool in_Zv() const { return terms_.empty() || min_degree() >= 0; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Canonical text: terms in ascending exponent, e.g. "-v^-1 + 1 + 3*v^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool negative = c < Scalar(0);
      std::string mag = to_decimal(negative ? Scalar(-c) : c);
      std::string mono = e == 0 ? "" : (e == 1 ? "v" : "v^" + std::to_string(e));
      std::string body;
      if (mono.empty()) body = mag;
      else if (mag == "1") body = mono;
      else body = mag + "*" + mono;
      if (first) out += (negative ? "-" : "") + body;
      else out += (negative ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

  // Inverse of to_string(); also tolerates missing or extra spaces.
  static LaurentPoly parse(const std::string& text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    LaurentPoly r;
    std::size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("cannot parse polynomial: " + text); };
    while (i < s.size()) {
      bool negative = false;
      if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
      } else if (i != 0) {
        fail();
      }
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      int exponent = 0;
      bool has_v = false;
      if (i < s.size() && s[i] == '*') {
        if (digits.empty()) fail();
        ++i;
        if (i >= s.size() || s[i] != 'v') fail();
      }
      if (i < s.size() && s[i] == 'v') {
        has_v = true;
        ++i;
        exponent = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::string exp;
          if (i < s.size() && (s[i] == '-' || s[i] == '+')) exp += s[i++];
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) exp += s[i++];
          if (exp.empty() || exp == "-" || exp == "+") fail();
          exponent = std::stoi(exp);
        }
      }
      if (digits.empty() && !has_v) fail();
      Scalar coeff = digits.empty() ? Scalar(1) : scalar_from_decimal<Scalar>(digits);
      r.add_term(exponent, negative ? Scalar(-coeff) : coeff);
    }
    return r;
  }

 private:
  storage_type terms_;
};

using Poly = LaurentPoly<BigInt>;

}  // namespace pkl
