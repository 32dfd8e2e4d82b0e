#pragma once

// The extended affine Hecke algebra in Soergel's normalization:
//   (H_s + v)(H_s - v^-1) = 0,   H_x H_y = H_xy when lengths add.
// Products expand the right factor as omega * s_1 ... s_k and multiply one
// generator at a time.

#include "pkl/combination.hpp"

#include <memory>
#include <shared_mutex>
#include <unordered_map>

namespace pkl {

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group) : g_(std::move(group)) {}

  const AffineWeylGroup& group() const { return *g_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return g_; }

  HeckeElement one() const { return HeckeElement::basis(g_->identity()); }
  HeckeElement basis(const ExtAffineElement& x) const { return HeckeElement::basis(x); }
  // C_s = H_s + v.
  HeckeElement kl_generator(AffineGenerator s) const;

  // h * H_s
  HeckeElement mul_by_generator(const HeckeElement& h, AffineGenerator s) const;
  // h * H_s^-1, with H_s^-1 = H_s + (v - v^-1).
  HeckeElement mul_by_generator_inverse(const HeckeElement& h, AffineGenerator s) const;
  // h * H_omega for a length-zero omega.
  HeckeElement mul_by_omega(const HeckeElement& h, const ExtAffineElement& omega) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;

  // (H_x)^-1
  HeckeElement inverse_basis(const ExtAffineElement& x) const;
  // bar(sum p_x H_x) = sum bar(p_x) (H_{x^-1})^-1
  HeckeElement bar_involution(const HeckeElement& h) const;
  HeckeElement bar_basis(const ExtAffineElement& x) const;

  // Kazhdan-Lusztig basis element C_x in H_x + sum_{y<x} vZ[v] H_y. Throws
  // ResourceError when l(x) exceeds max_length.
  HeckeElement kl_basis_element(const ExtAffineElement& x, int max_length = 24) const;
  // Checks bar invariance, leading coefficient 1, off-diagonal coefficients
  // in vZ[v] and Bruhat-lower support. Returns an empty string on success.
  std::string certify_kl(const ExtAffineElement& x, const HeckeElement& c) const;

  // theta_lambda = H_{t(mu)} (H_{t(nu)})^-1 with lambda = mu - nu, mu and nu dominant.
  HeckeElement bernstein_theta(const Weight& lam) const;
  HeckeElement bernstein_theta(const Weight& lam, const Weight& nu) const;

 private:
  std::shared_ptr<const AffineWeylGroup> g_;
  mutable std::shared_mutex kl_mutex_;
  mutable std::unordered_map<ExtAffineElement, HeckeElement, ExtAffineHash> kl_cache_;
};

}  // namespace pkl
