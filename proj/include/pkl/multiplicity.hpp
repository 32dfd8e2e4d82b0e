#pragma once

// Block labels of the principal level-l dot action and the graded
// multiplicity tables of the principal block, read off the p, q and q' tables.

#include "pkl/periodic.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pkl {

struct BlockLabel {
  Weight representative;                  // lies in the closed fundamental alcove
  std::vector<AffineGenerator> stabilizer;  // simple affine reflections fixing it under ._l
  bool regular = false;
  int extended_class = 0;  // index of the first label in the same W_ex orbit

  std::string stabilizer_string() const;  // e.g. "{}" or "{s0}"
};

// All lambda with 0 <= <lambda + rho, a^> <= l for every positive coroot,
// sorted by representative.
std::vector<BlockLabel> enumerate_blocks(const AffineWeylGroup& g);

// A label whose W_af-stabilizer is exactly {1, s}; nullopt when l is too small.
std::optional<BlockLabel> omega_s(const AffineWeylGroup& g, AffineGenerator s);

// W_af orbits of (Lambda, ._l) restricted to weights with |<lambda, a_i^>| <= bound,
// found by closing under the simple affine reflections inside a ball that
// contains every reflection path from the box to the closed alcove.
// Each orbit is returned sorted; orbits are sorted by their first element.
std::vector<std::vector<Weight>> brute_force_orbits(const AffineWeylGroup& g, std::int64_t bound);

enum class MultiplicityKind { simple_in_verma, verma_in_projective, baby_verma_in_projective, simple_in_baby_verma };
std::string to_string(MultiplicityKind k);
MultiplicityKind parse_multiplicity_kind(const std::string& s);

struct MultiplicityTable {
  MultiplicityKind kind = MultiplicityKind::simple_in_verma;
  std::string datum;
  int l = 0;
  Window window;
  std::optional<Weight> nu;  // truncation, verma_in_projective only
  std::map<std::pair<ExtAffineElement, ExtAffineElement>, Poly> entries;  // (x, y), zero entries omitted

  friend bool operator==(const MultiplicityTable& a, const MultiplicityTable& b) {
    return a.kind == b.kind && a.datum == b.datum && a.l == b.l && a.window.height == b.window.height &&
           a.window.coset == b.window.coset && a.nu == b.nu && a.entries == b.entries;
  }
};

// Views over the p, q and q' tables of one window. Lookups return nullopt
// when x or y lies outside the window.
class MultiplicityTables {
 public:
  MultiplicityTables(std::shared_ptr<const SelfDualBasis> basis, std::shared_ptr<const KostantPartition> kostant,
                     Window window, int threads = 1);

  const AffineWeylGroup& group() const { return basis_->group(); }
  const Window& window() const { return p_.window; }
  const PolynomialTable& table(TableKind kind) const;

  // [M(x ._l 0) : L(y ._l 0)] = q_{w0 x, w0 y}
  std::optional<Poly> simple_in_verma(const ExtAffineElement& x, const ExtAffineElement& y) const;
  // (P : M(x ._l 0)) = q'_{w0 y, w0 x} if y ._l 0 <= l nu, else 0
  std::optional<Poly> verma_in_projective(const ExtAffineElement& x, const ExtAffineElement& y,
                                          const Weight& nu) const;
  // (P_y : Z_x) = p_{w0 x, w0 y}
  std::optional<Poly> baby_verma_in_projective(const ExtAffineElement& x, const ExtAffineElement& y) const;
  // [Z_x : L_y] = p_{w0 x, w0 y}
  std::optional<Poly> simple_in_baby_verma(const ExtAffineElement& x, const ExtAffineElement& y) const;

  MultiplicityTable build(MultiplicityKind kind, const std::optional<Weight>& nu = std::nullopt) const;

 private:
  std::shared_ptr<const SelfDualBasis> basis_;
  std::shared_ptr<const KostantPartition> kostant_;
  PolynomialTable p_, q_, qprime_;
};

}  // namespace pkl
