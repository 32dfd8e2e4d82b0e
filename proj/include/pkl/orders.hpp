#pragma once

// The semi-infinite order on W_ex.
//
// Generating covers: xs < x whenever x .l 0 >= xs .l 0 (dominance order), for
// every affine simple reflection s. Two evaluation strategies are provided:
// an interval-bounded upward search through generating covers, and the Bruhat
// order after a sufficiently dominant left translation.

#include "pkl/weyl.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pkl {

// Finite box of W_ex: all t(lam) w with |lam_i| <= height in fundamental
// coordinates, optionally restricted to one Lambda/Q coset (index into omegas()).
struct Window {
  int height = 0;
  std::optional<int> coset;

  bool contains(const AffineWeylGroup& g, const ExtAffineElement& x) const;
  // Sorted by (finite, translation).
  std::vector<ExtAffineElement> elements(const AffineWeylGroup& g) const;
  std::string describe() const;
};

// Which relations generate the order. `simple` uses only x vs xs for affine
// simple reflections s; `reflections` uses x vs xr for every affine reflection
// r = t(k gamma) s_gamma. The first relation is contained in the second, and
// they coincide in rank one.
enum class Covers { simple, reflections };

enum class OrderAnswer { less_or_equal, not_less_or_equal, indeterminate, different_cosets };

std::string to_string(OrderAnswer a);

// x < xs in the semi-infinite order, decided through dot images at level l.
bool semiinf_up_by_dot(const AffineWeylGroup& g, const ExtAffineElement& x, AffineGenerator s, std::int64_t l);
// Same answer without dot images: for finite s_i, iff w(alpha_i) < 0; for s_0,
// iff w(beta) > 0, where x = t(lam) w.
bool semiinf_up(const AffineWeylGroup& g, const ExtAffineElement& x, AffineGenerator s);

// Transitive closure of the generating covers at level l. Any chain from x to
// y stays in the dominance interval [x .l 0, y .l 0], so the search is exact;
// it reports indeterminate only when it would need to visit more than
// node_budget elements, or leave `bound` when one is given.
OrderAnswer semiinf_leq_generated(const AffineWeylGroup& g, const ExtAffineElement& x, const ExtAffineElement& y,
                                  std::int64_t l, const Window* bound = nullptr, std::size_t node_budget = 1 << 20,
                                  Covers covers = Covers::reflections);

// Violations of "t(mu) z maps the fundamental alcove into the dominant chamber".
struct AlcoveCertificate {
  struct Violation {
    ExtAffineElement element;  // t(mu) z
    int root_index;            // positive root whose inequality fails
    std::int64_t pairing;      // <translation, coroot>
    std::int64_t required;     // minimum admissible pairing
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe(const AffineWeylGroup& g) const;
};

AlcoveCertificate dominant_alcove_certificate(const AffineWeylGroup& g, const Weight& mu,
                                              const std::vector<ExtAffineElement>& elements);

// bruhat_leq(t(mu) x, t(mu) y). Throws InputError carrying the certificate when
// mu is not dominant enough for x and y.
bool semiinf_leq_via_translation(const AffineWeylGroup& g, const ExtAffineElement& x, const ExtAffineElement& y,
                                 const Weight& mu);

// Smallest multiple of rho that certifies every element of the list.
Weight sufficient_translation(const AffineWeylGroup& g, const std::vector<ExtAffineElement>& elements);

// The generated order restricted to a window, with its Hasse diagram.
class SemiInfinitePoset {
 public:
  SemiInfinitePoset(const AffineWeylGroup& g, Window window, std::int64_t l, Covers covers = Covers::reflections);

  const std::vector<ExtAffineElement>& elements() const { return elements_; }
  const Window& window() const { return window_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const ExtAffineElement& x) const;

  OrderAnswer relation(std::size_t i, std::size_t j) const { return rel_[i * size() + j]; }
  bool leq(std::size_t i, std::size_t j) const { return relation(i, j) == OrderAnswer::less_or_equal; }
  // Covering pairs (lower, upper) of the restricted order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  std::size_t indeterminate_count() const;

 private:
  Window window_;
  std::vector<ExtAffineElement> elements_;
  std::vector<OrderAnswer> rel_;
};

}  // namespace pkl
