#include "pkl/orders.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace pkl {

namespace {

bool componentwise_leq(const IntVector& a, const IntVector& b) { return (a.array() <= b.array()).all(); }

// All elements reachable upward from x through generating covers whose dot
// image stays within x .l 0 + [0, box] (root coordinates). Returns false if
// the budget is exhausted or `bound` cuts the search.
bool upward_closure(const AffineWeylGroup& g, const ExtAffineElement& x, std::int64_t l, const IntVector& box,
                    const Window* bound, std::size_t budget, Covers covers,
                    std::unordered_set<ExtAffineElement, ExtAffineHash>& seen) {
  const RootDatum& rd = g.root_datum();
  const FiniteWeylGroup& fin = g.finite();
  // |l k - <rho, gamma^>| is bounded by the box, which bounds k.
  const std::int64_t kmax = (box.size() ? box.maxCoeff() : 0) / l + rd.coxeter_number() / l + 1;
  const Weight base = g.dot_action(x, rd.zero(), l);
  std::deque<ExtAffineElement> queue{x};
  seen.insert(x);
  bool complete = true;
  while (!queue.empty()) {
    ExtAffineElement z = std::move(queue.front());
    queue.pop_front();
    const Weight zdot = g.dot_action(z, rd.zero(), l);
    std::vector<ExtAffineElement> neighbours;
    if (covers == Covers::simple) {
      for (AffineGenerator s = 0; s < g.num_generators(); ++s) neighbours.push_back(g.right_multiply(z, s));
    } else {
      for (int j = 0; j < rd.num_positive_roots(); ++j) {
        Weight wg = fin.act(z.finite, rd.positive_roots()[j]);
        FiniteIndex ws = fin.multiply(z.finite, fin.reflection(j));
        for (std::int64_t k = -kmax; k <= kmax; ++k) neighbours.push_back(g.make(z.translation + k * wg, ws));
      }
    }
    for (auto& zs : neighbours) {
      const Weight zsdot = g.dot_action(zs, rd.zero(), l);
      if (zsdot == zdot || !rd.dominance_leq(zdot, zsdot)) continue;
      auto offset = rd.root_coordinates(zsdot - base);
      if (!offset || !componentwise_leq(*offset, box)) continue;
      if (seen.contains(zs)) continue;
      if (bound && !bound->contains(g, zs)) {
        complete = false;
        continue;
      }
      if (seen.size() >= budget) return false;
      seen.insert(zs);
      queue.push_back(std::move(zs));
    }
  }
  return complete;
}

}  // namespace

bool Window::contains(const AffineWeylGroup& g, const ExtAffineElement& x) const {
  if ((x.translation.coords.array().abs() > height).any()) return false;
  return !coset || g.omega_component(x) == *coset;
}

std::vector<ExtAffineElement> Window::elements(const AffineWeylGroup& g) const {
  if (height < 0) throw InputError("window height must be nonnegative");
  const int r = g.rank();
  std::vector<ExtAffineElement> out;
  IntVector c = IntVector::Constant(r, -height);
  while (true) {
    Weight lam(c);
    for (FiniteIndex w = 0; w < g.finite().size(); ++w) {
      auto x = g.make(lam, w);
      if (!coset || g.omega_component(x) == *coset) out.push_back(std::move(x));
    }
    int i = 0;
    while (i < r && c(i) == height) c(i++) = -height;
    if (i == r) break;
    ++c(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Window::describe() const {
  std::string s = "height=" + std::to_string(height);
  if (coset) s += ",coset=" + std::to_string(*coset);
  return s;
}

std::string to_string(OrderAnswer a) {
  switch (a) {
    case OrderAnswer::less_or_equal: return "true";
    case OrderAnswer::not_less_or_equal: return "false";
    case OrderAnswer::indeterminate: return "indeterminate";
    case OrderAnswer::different_cosets: return "different-cosets";
  }
  return "?";
}

bool semiinf_up_by_dot(const AffineWeylGroup& g, const ExtAffineElement& x, AffineGenerator s, std::int64_t l) {
  const RootDatum& rd = g.root_datum();
  Weight a = g.dot_action(x, rd.zero(), l);
  Weight b = g.dot_action(g.right_multiply(x, s), rd.zero(), l);
  return a != b && rd.dominance_leq(a, b);
}

bool semiinf_up(const AffineWeylGroup& g, const ExtAffineElement& x, AffineGenerator s) {
  const RootDatum& rd = g.root_datum();
  if (s == 0) return rd.height2(g.finite().act(x.finite, rd.affine_root())) > 0;
  return rd.height2(g.finite().act(x.finite, rd.simple_root(s - 1))) < 0;
}

OrderAnswer semiinf_leq_generated(const AffineWeylGroup& g, const ExtAffineElement& x, const ExtAffineElement& y,
                                  std::int64_t l, const Window* bound, std::size_t node_budget, Covers covers) {
  if (!g.same_omega_component(x, y)) return OrderAnswer::different_cosets;
  if (x == y) return OrderAnswer::less_or_equal;
  const RootDatum& rd = g.root_datum();
  auto diff = rd.root_coordinates(g.dot_action(y, rd.zero(), l) - g.dot_action(x, rd.zero(), l));
  if (!diff || (diff->array() < 0).any()) return OrderAnswer::not_less_or_equal;
  std::unordered_set<ExtAffineElement, ExtAffineHash> seen;
  bool complete = upward_closure(g, x, l, *diff, bound, node_budget, covers, seen);
  if (seen.contains(y)) return OrderAnswer::less_or_equal;
  return complete ? OrderAnswer::not_less_or_equal : OrderAnswer::indeterminate;
}

std::string AlcoveCertificate::describe(const AffineWeylGroup& g) const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += g.format(v.element) + ": <lambda, coroot of " + g.root_datum().positive_roots()[v.root_index].to_string() +
         "> = " + std::to_string(v.pairing) + " < " + std::to_string(v.required);
  }
  return s;
}

AlcoveCertificate dominant_alcove_certificate(const AffineWeylGroup& g, const Weight& mu,
                                              const std::vector<ExtAffineElement>& elements) {
  const RootDatum& rd = g.root_datum();
  AlcoveCertificate cert;
  for (const auto& z : elements) {
    Weight nu = mu + z.translation;
    for (int k = 0; k < rd.num_positive_roots(); ++k) {
      std::int64_t p = rd.pairing(nu, rd.positive_coroots()[k]);
      std::int64_t need = g.finite().inverse_sends_negative(z.finite, k) ? 1 : 0;
      if (p < need) cert.violations.push_back({g.make(nu, z.finite), k, p, need});
    }
  }
  return cert;
}

bool semiinf_leq_via_translation(const AffineWeylGroup& g, const ExtAffineElement& x, const ExtAffineElement& y,
                                 const Weight& mu) {
  auto cert = dominant_alcove_certificate(g, mu, {x, y});
  if (!cert.ok()) throw InputError("translation " + mu.to_string() + " is not dominant enough: " + cert.describe(g));
  return g.bruhat_leq(g.left_translate(mu, x), g.left_translate(mu, y));
}

Weight sufficient_translation(const AffineWeylGroup& g, const std::vector<ExtAffineElement>& elements) {
  const RootDatum& rd = g.root_datum();
  std::int64_t n = 0;
  for (const auto& z : elements)
    for (int k = 0; k < rd.num_positive_roots(); ++k) {
      std::int64_t need = g.finite().inverse_sends_negative(z.finite, k) ? 1 : 0;
      std::int64_t gap = need - rd.pairing(z.translation, rd.positive_coroots()[k]);
      std::int64_t per = rd.pairing(rd.rho(), rd.positive_coroots()[k]);
      if (gap > 0) n = std::max(n, (gap + per - 1) / per);
    }
  return n * rd.rho();
}

SemiInfinitePoset::SemiInfinitePoset(const AffineWeylGroup& g, Window window, std::int64_t l, Covers covers)
    : window_(std::move(window)), elements_(window_.elements(g)) {
  const RootDatum& rd = g.root_datum();
  const std::size_t n = elements_.size();
  rel_.assign(n * n, OrderAnswer::not_less_or_equal);
  std::vector<Weight> dots;
  for (const auto& x : elements_) dots.push_back(g.dot_action(x, rd.zero(), l));
  for (std::size_t i = 0; i < n; ++i) {
    // One upward search per element, boxed by the union of its dominance intervals.
    IntVector box = IntVector::Zero(g.rank());
    std::vector<std::size_t> targets;
    for (std::size_t j = 0; j < n; ++j) {
      if (!g.same_omega_component(elements_[i], elements_[j])) {
        rel_[i * n + j] = OrderAnswer::different_cosets;
        continue;
      }
      auto d = rd.root_coordinates(dots[j] - dots[i]);
      if (d && (d->array() >= 0).all()) {
        box = box.cwiseMax(*d);
        targets.push_back(j);
      }
    }
    std::unordered_set<ExtAffineElement, ExtAffineHash> seen;
    bool complete = upward_closure(g, elements_[i], l, box, nullptr, std::size_t{1} << 22, covers, seen);
    for (std::size_t j : targets)
      rel_[i * n + j] = seen.contains(elements_[j])
                            ? OrderAnswer::less_or_equal
                            : (complete ? OrderAnswer::not_less_or_equal : OrderAnswer::indeterminate);
  }
}

std::optional<std::size_t> SemiInfinitePoset::index_of(const ExtAffineElement& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> SemiInfinitePoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

std::size_t SemiInfinitePoset::indeterminate_count() const {
  return static_cast<std::size_t>(std::count(rel_.begin(), rel_.end(), OrderAnswer::indeterminate));
}

}  // namespace pkl
