#pragma once

// The periodic Hecke module P (basis H^{inf/2}_x, right H_ex-action twisted by
// the semi-infinite order), its self-dual basis and the generic polynomials.
//
// Left translations <nu> commute with the right action, so the self-dual basis
// satisfies Hs_{t(nu) x} = <nu> Hs_x and only the |W| representatives Hs_w,
// w in W, are stored.

#include "pkl/combination.hpp"
#include "pkl/hecke.hpp"
#include "pkl/orders.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace pkl {

class PeriodicModule {
 public:
  explicit PeriodicModule(std::shared_ptr<const AffineWeylGroup> group) : g_(std::move(group)) {}

  const AffineWeylGroup& group() const { return *g_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return g_; }

  // m * H_s
  PeriodicElement act_generator(const PeriodicElement& m, AffineGenerator s) const;
  // m * (H_s + v)
  PeriodicElement act_kl_generator(const PeriodicElement& m, AffineGenerator s) const;
  PeriodicElement act_omega(const PeriodicElement& m, const ExtAffineElement& omega) const;
  PeriodicElement act(const PeriodicElement& m, const HeckeElement& h) const;

  // e(lam) = sum_w v^{l(w)} H_{t(lam) w}
  PeriodicElement e_element(const Weight& lam) const;
  // <eta>: H_x -> H_{t(eta) x}
  PeriodicElement translate(const PeriodicElement& m, const Weight& eta) const;

 private:
  std::shared_ptr<const AffineWeylGroup> g_;
};

struct SelfDualOptions {
  int initial_depth = 4;  // truncation depth in semi-infinite length below each representative
  int max_depth = 64;
};

// Outcome of the exact certification of a family of representatives.
struct SelfDualCertificate {
  bool ok = false;
  std::string failure;  // first failed check, empty when ok
  int edges_checked = 0;
};

class SelfDualBasis {
 public:
  // Computes and certifies the representatives. Throws ResourceError if no
  // truncation depth up to options.max_depth certifies.
  explicit SelfDualBasis(std::shared_ptr<const PeriodicModule> module, SelfDualOptions options = {});
  // Adopts precomputed representatives (indexed by FiniteIndex) after
  // certifying them; throws InternalError when certification fails.
  SelfDualBasis(std::shared_ptr<const PeriodicModule> module, std::vector<PeriodicElement> representatives);

  const PeriodicModule& module() const { return *module_; }
  const AffineWeylGroup& group() const { return module_->group(); }
  const std::vector<PeriodicElement>& representatives() const { return reps_; }
  int depth() const { return depth_; }
  const SelfDualCertificate& certificate() const { return cert_; }

  // The self-dual element for x.
  PeriodicElement element(const ExtAffineElement& x) const;
  // p_{y,x}
  Poly p(const ExtAffineElement& y, const ExtAffineElement& x) const;

  // Leading coefficient 1, off-diagonal coefficients in vZ[v] and support in
  // the semi-infinite ideal below x. Empty string on success.
  std::string certify_element(const ExtAffineElement& x) const;

  // Recursion tree over W: child w is reached from parent u through the
  // generator s with u < us = t(lam) w.
  struct TreeEdge {
    FiniteIndex parent;
    AffineGenerator s;
    FiniteIndex child;
    Weight shift;  // lam
  };
  const std::vector<TreeEdge>& tree() const { return tree_; }

  static SelfDualCertificate certify(const PeriodicModule& module, const std::vector<TreeEdge>& tree,
                                     const std::vector<PeriodicElement>& reps);
  static std::vector<TreeEdge> build_tree(const AffineWeylGroup& g);

 private:
  std::shared_ptr<const PeriodicModule> module_;
  std::vector<TreeEdge> tree_;
  std::vector<PeriodicElement> reps_;
  int depth_ = 0;
  SelfDualCertificate cert_;
};

enum class GenericKind { q, qprime };
std::string to_string(GenericKind k);

// Kostant partition generating functions on the root lattice:
//   K_v(gamma) = sum over (k_a) with sum k_a a = gamma of v^{2 sum k_a},
//   K_1(gamma) = number of such (k_a).
class KostantPartition {
 public:
  explicit KostantPartition(const RootDatum& rd);
  // gamma in simple-root coordinates; zero outside Q+.
  const Poly& graded(const IntVector& gamma) const;
  BigInt count(const IntVector& gamma) const;
  const Poly& graded_weight(const Weight& gamma) const;

 private:
  const Poly& compute(const IntVector& gamma, std::size_t first_root) const;
  const RootDatum* rd_;
  std::vector<IntVector> roots_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::vector<std::int64_t>, std::size_t>, Poly> memo_;
};

// q_{y,x} or q'_{y,x}, exact.
Poly generic_polynomial(const SelfDualBasis& basis, const KostantPartition& kostant, const ExtAffineElement& y,
                        const ExtAffineElement& x, GenericKind kind);

// Coefficient at y of prod_{a>0} (1 - v^2 <-a>) applied to the series with
// coefficients `series`.
Poly koszul_coefficient(const AffineWeylGroup& g, const std::function<Poly(const ExtAffineElement&)>& series,
                        const ExtAffineElement& y);
// The same operator on a finite element.
PeriodicElement koszul_operator(const PeriodicModule& module, const PeriodicElement& m);

// Orbit elements z with z .l 0 in the dominance interval [lo .l 0, hi .l 0].
std::vector<ExtAffineElement> dominance_interval(const AffineWeylGroup& g, const ExtAffineElement& lo,
                                                 const ExtAffineElement& hi);

struct InversionReport {
  struct Deviation {
    ExtAffineElement y, z;
    Poly value;
  };
  std::size_t pairs_checked = 0;
  std::vector<Deviation> deviations;
  bool ok() const { return deviations.empty(); }
};

// Evaluates sum_x (-1)^{l(x)+l(y)} q_{x,y} p_{w0 x, w0 z} against delta_{y,z} for
// all y, z in the window. The sum is finite (x runs over the dominance interval
// between z and y) and is evaluated exactly.
InversionReport inversion_check(const SelfDualBasis& basis, const KostantPartition& kostant, const Window& window);

enum class TableKind { periodic_p, generic_q, generic_qprime };
std::string to_string(TableKind k);
TableKind parse_table_kind(const std::string& s);

// Entries (y, x) -> polynomial for y, x in a window; zero entries are omitted.
struct PolynomialTable {
  TableKind kind = TableKind::periodic_p;
  std::string datum;  // e.g. "A1"
  int l = 0;
  Window window;
  std::map<std::pair<ExtAffineElement, ExtAffineElement>, Poly> entries;

  // nullopt when y or x lies outside the window.
  std::optional<Poly> lookup(const AffineWeylGroup& g, const ExtAffineElement& y, const ExtAffineElement& x) const;
  friend bool operator==(const PolynomialTable& a, const PolynomialTable& b) {
    return a.kind == b.kind && a.datum == b.datum && a.l == b.l && a.window.height == b.window.height &&
           a.window.coset == b.window.coset && a.entries == b.entries;
  }
};

PolynomialTable build_table(const SelfDualBasis& basis, const KostantPartition& kostant, TableKind kind,
                            const Window& window, int threads = 1);

}  // namespace pkl
