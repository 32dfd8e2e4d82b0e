#include "pkl/hecke.hpp"

#include <mutex>

namespace pkl {

namespace {

const Poly kV = Poly::monomial(1);
const Poly kVinvMinusV = Poly{{-1, 1}, {1, -1}};  // v^-1 - v
const Poly kVMinusVinv = Poly{{-1, -1}, {1, 1}};  // v - v^-1

// Symmetric polynomial sharing the non-positive part of p.
Poly symmetric_correction(const Poly& p) {
  Poly c;
  for (const auto& [e, a] : p.terms()) {
    if (e > 0) break;
    c.add_term(e, a);
    if (e < 0) c.add_term(-e, a);
  }
  return c;
}

}  // namespace

HeckeElement HeckeAlgebra::kl_generator(AffineGenerator s) const {
  HeckeElement c = basis(g_->generator(s));
  c.add(g_->identity(), kV);
  return c;
}

HeckeElement HeckeAlgebra::mul_by_generator(const HeckeElement& h, AffineGenerator s) const {
  HeckeElement r;
  for (const auto& [x, p] : h) {
    ExtAffineElement xs = g_->right_multiply(x, s);
    bool up = g_->length(xs) > g_->length(x);
    r.add(xs, p);
    if (!up) r.add(x, kVinvMinusV * p);
  }
  return r;
}

HeckeElement HeckeAlgebra::mul_by_generator_inverse(const HeckeElement& h, AffineGenerator s) const {
  HeckeElement r = mul_by_generator(h, s);
  r += kVMinusVinv * h;
  return r;
}

HeckeElement HeckeAlgebra::mul_by_omega(const HeckeElement& h, const ExtAffineElement& omega) const {
  if (g_->length(omega) != 0) throw InputError("mul_by_omega needs a length-zero element");
  HeckeElement r;
  for (const auto& [x, p] : h) r.add(g_->multiply(x, omega), p);
  return r;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement r;
  for (const auto& [y, q] : b) {
    const ReducedWord& rw = g_->reduced_word(y);
    HeckeElement t = mul_by_omega(a, rw.omega);
    for (AffineGenerator s : rw.letters) t = mul_by_generator(t, s);
    r += q * t;
  }
  return r;
}

HeckeElement HeckeAlgebra::inverse_basis(const ExtAffineElement& x) const {
  // (H_omega H_s1 ... H_sk)^-1 = H_sk^-1 ... H_s1^-1 H_omega^-1
  const ReducedWord& rw = g_->reduced_word(x);
  HeckeElement r = one();
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) r = mul_by_generator_inverse(r, *it);
  return mul_by_omega(r, g_->inverse(rw.omega));
}

HeckeElement HeckeAlgebra::bar_basis(const ExtAffineElement& x) const {
  // bar(H_omega H_s1 ... H_sk) = H_omega H_s1^-1 ... H_sk^-1
  const ReducedWord& rw = g_->reduced_word(x);
  HeckeElement r = basis(rw.omega);
  for (AffineGenerator s : rw.letters) r = mul_by_generator_inverse(r, s);
  return r;
}

HeckeElement HeckeAlgebra::bar_involution(const HeckeElement& h) const {
  HeckeElement r;
  for (const auto& [x, p] : h) r += p.bar() * bar_basis(x);
  return r;
}

HeckeElement HeckeAlgebra::kl_basis_element(const ExtAffineElement& x, int max_length) const {
  const int len = g_->length(x);
  if (len > max_length)
    throw ResourceError("KL basis element of length " + std::to_string(len) + " exceeds the bound " +
                        std::to_string(max_length));
  {
    std::shared_lock lock(kl_mutex_);
    auto it = kl_cache_.find(x);
    if (it != kl_cache_.end()) return it->second;
  }
  HeckeElement c;
  if (len == 0) {
    c = basis(x);
  } else {
    AffineGenerator s = g_->reduced_word(x).letters.back();
    c = mul(kl_basis_element(g_->right_multiply(x, s), max_length), kl_generator(s));
    while (true) {
      const ExtAffineElement* worst = nullptr;
      int worst_len = -1;
      for (const auto& [y, p] : c) {
        if (y == x || p.in_v_times_Zv()) continue;
        int ly = g_->length(y);
        if (ly > worst_len) {
          worst = &y;
          worst_len = ly;
        }
      }
      if (!worst) break;
      ExtAffineElement y = *worst;
      Poly mu = symmetric_correction(c.coefficient(y));
      c -= mu * kl_basis_element(y, max_length);
    }
  }
  std::unique_lock lock(kl_mutex_);
  return kl_cache_.try_emplace(x, std::move(c)).first->second;
}

std::string HeckeAlgebra::certify_kl(const ExtAffineElement& x, const HeckeElement& c) const {
  if (c.coefficient(x) != Poly(1)) return "coefficient at " + g_->format(x) + " is not 1";
  for (const auto& [y, p] : c) {
    if (y == x) continue;
    if (!p.in_v_times_Zv()) return "coefficient at " + g_->format(y) + " is " + p.to_string() + ", not in vZ[v]";
    if (!g_->bruhat_leq(y, x)) return g_->format(y) + " is not Bruhat-below " + g_->format(x);
  }
  if (!(bar_involution(c) == c)) return "element is not bar-invariant";
  return {};
}

HeckeElement HeckeAlgebra::bernstein_theta(const Weight& lam, const Weight& nu) const {
  const RootDatum& rd = g_->root_datum();
  Weight mu = lam + nu;
  if (!rd.is_dominant(mu) || !rd.is_dominant(nu))
    throw InputError("theta decomposition " + mu.to_string() + " - " + nu.to_string() + " is not dominant");
  return mul(basis(g_->translation(mu)), inverse_basis(g_->translation(nu)));
}

HeckeElement HeckeAlgebra::bernstein_theta(const Weight& lam) const {
  const RootDatum& rd = g_->root_datum();
  Weight nu = rd.zero();
  for (int i = 0; i < rd.rank(); ++i)
    if (lam[i] < 0) nu.coords(i) = -lam[i];
  return bernstein_theta(lam, nu);
}

}  // namespace pkl
