#include "pkl/multiplicity.hpp"

#include <algorithm>
#include <cmath>

namespace pkl {

std::string BlockLabel::stabilizer_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < stabilizer.size(); ++i) out += (i ? "," : "") + ("s" + std::to_string(stabilizer[i]));
  return out + "}";
}

std::vector<BlockLabel> enumerate_blocks(const AffineWeylGroup& g) {
  const RootDatum& rd = g.root_datum();
  const std::int64_t l = rd.l();
  const int r = rd.rank();
  std::vector<BlockLabel> out;
  // mu = lambda + rho has coordinates in [0, l].
  IntVector m = IntVector::Zero(r);
  while (true) {
    Weight mu(m);
    bool inside = true;
    for (const auto& c : rd.positive_coroots()) inside = inside && rd.pairing(mu, c) <= l;
    if (inside) {
      BlockLabel b;
      b.representative = mu - rd.rho();
      for (AffineGenerator s = 0; s < g.num_generators(); ++s)
        if (g.dot_action(g.generator(s), b.representative, l) == b.representative) b.stabilizer.push_back(s);
      b.regular = b.stabilizer.empty();
      out.push_back(std::move(b));
    }
    int i = 0;
    while (i < r && m(i) == l) m(i++) = 0;
    if (i == r) break;
    ++m(i);
  }
  std::sort(out.begin(), out.end(),
            [](const BlockLabel& a, const BlockLabel& b) { return a.representative < b.representative; });
  // Length-zero elements permute the closed alcove; their orbits are the W_ex classes.
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].extended_class = static_cast<int>(i);
    for (const auto& omega : g.omegas()) {
      Weight image = g.dot_action(omega, out[i].representative, l);
      for (std::size_t j = 0; j < i; ++j)
        if (out[j].representative == image) out[i].extended_class = std::min(out[i].extended_class, out[j].extended_class);
    }
  }
  return out;
}

std::optional<BlockLabel> omega_s(const AffineWeylGroup& g, AffineGenerator s) {
  for (auto& b : enumerate_blocks(g))
    if (b.stabilizer == std::vector<AffineGenerator>{s}) return b;
  return std::nullopt;
}

std::vector<std::vector<Weight>> brute_force_orbits(const AffineWeylGroup& g, std::int64_t bound) {
  const RootDatum& rd = g.root_datum();
  const std::int64_t l = rd.l();
  const int r = rd.rank();
  auto norm = [&](const Weight& lam) {
    Weight mu = lam + rd.rho();
    return std::sqrt(static_cast<double>(rd.scaled_symmetric_pairing(mu, mu)));
  };
  std::vector<Weight> inner;
  IntVector c = IntVector::Constant(r, -bound);
  while (true) {
    inner.emplace_back(c);
    int i = 0;
    while (i < r && c(i) == bound) c(i++) = -bound;
    if (i == r) break;
    ++c(i);
  }
  // Reflecting across a wall that separates a weight from the alcove brings it
  // closer to every alcove point, so the path from any box weight to its alcove
  // representative stays inside this ball around -rho.
  double radius = 0, alcove = 0;
  for (const auto& lam : inner) radius = std::max(radius, norm(lam));
  for (const auto& b : enumerate_blocks(g)) alcove = std::max(alcove, norm(b.representative));
  radius += 2 * alcove + 1e-6;

  std::map<Weight, std::size_t> index;
  std::vector<Weight> points;
  std::vector<std::size_t> parent;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto visit = [&](const Weight& lam) {
    auto [it, inserted] = index.try_emplace(lam, points.size());
    if (inserted) {
      points.push_back(lam);
      parent.push_back(it->second);
    }
    return std::pair{it->second, inserted};
  };
  std::vector<std::size_t> queue;
  for (const auto& lam : inner) queue.push_back(visit(lam).first);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Weight lam = points[queue[head]];
    for (AffineGenerator s = 0; s < g.num_generators(); ++s) {
      Weight image = g.dot_action(g.generator(s), lam, l);
      if (norm(image) > radius) continue;
      auto [j, inserted] = visit(image);
      if (inserted) queue.push_back(j);
      parent[find(queue[head])] = find(j);
    }
  }
  std::map<std::size_t, std::vector<Weight>> groups;
  for (const auto& lam : inner) groups[find(index.at(lam))].push_back(lam);
  std::vector<std::vector<Weight>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string to_string(MultiplicityKind k) {
  switch (k) {
    case MultiplicityKind::simple_in_verma: return "simple-in-verma";
    case MultiplicityKind::verma_in_projective: return "verma-in-projective";
    case MultiplicityKind::baby_verma_in_projective: return "baby-verma-in-projective";
    case MultiplicityKind::simple_in_baby_verma: return "simple-in-baby-verma";
  }
  return "?";
}

MultiplicityKind parse_multiplicity_kind(const std::string& s) {
  for (auto k : {MultiplicityKind::simple_in_verma, MultiplicityKind::verma_in_projective,
                 MultiplicityKind::baby_verma_in_projective, MultiplicityKind::simple_in_baby_verma})
    if (to_string(k) == s) return k;
  throw InputError("unknown multiplicity kind '" + s + "'");
}

MultiplicityTables::MultiplicityTables(std::shared_ptr<const SelfDualBasis> basis,
                                       std::shared_ptr<const KostantPartition> kostant, Window window, int threads)
    : basis_(std::move(basis)), kostant_(std::move(kostant)) {
  p_ = build_table(*basis_, *kostant_, TableKind::periodic_p, window, threads);
  q_ = build_table(*basis_, *kostant_, TableKind::generic_q, window, threads);
  qprime_ = build_table(*basis_, *kostant_, TableKind::generic_qprime, window, threads);
}

const PolynomialTable& MultiplicityTables::table(TableKind kind) const {
  switch (kind) {
    case TableKind::periodic_p: return p_;
    case TableKind::generic_q: return q_;
    case TableKind::generic_qprime: return qprime_;
  }
  throw InternalError("unknown table kind");
}

// The window box is stable under w0, so w0 x stays inside whenever x does.
std::optional<Poly> MultiplicityTables::simple_in_verma(const ExtAffineElement& x, const ExtAffineElement& y) const {
  const auto& g = group();
  return q_.lookup(g, g.left_longest(x), g.left_longest(y));
}

std::optional<Poly> MultiplicityTables::verma_in_projective(const ExtAffineElement& x, const ExtAffineElement& y,
                                                            const Weight& nu) const {
  const auto& g = group();
  const RootDatum& rd = g.root_datum();
  rd.check_rank(nu);
  auto q = qprime_.lookup(g, g.left_longest(y), g.left_longest(x));
  if (!q) return std::nullopt;
  if (!rd.dominance_leq(g.dot_action(y, rd.zero(), rd.l()), rd.l() * nu)) return Poly();
  return q;
}

std::optional<Poly> MultiplicityTables::baby_verma_in_projective(const ExtAffineElement& x,
                                                                 const ExtAffineElement& y) const {
  const auto& g = group();
  return p_.lookup(g, g.left_longest(x), g.left_longest(y));
}

std::optional<Poly> MultiplicityTables::simple_in_baby_verma(const ExtAffineElement& x, const ExtAffineElement& y) const {
  const auto& g = group();
  return p_.lookup(g, g.left_longest(x), g.left_longest(y));
}

MultiplicityTable MultiplicityTables::build(MultiplicityKind kind, const std::optional<Weight>& nu) const {
  const auto& g = group();
  if (kind == MultiplicityKind::verma_in_projective && !nu)
    throw InputError("verma-in-projective needs a truncation weight nu");
  MultiplicityTable t;
  t.kind = kind;
  t.datum = p_.datum;
  t.l = p_.l;
  t.window = p_.window;
  if (kind == MultiplicityKind::verma_in_projective) t.nu = nu;
  auto elements = p_.window.elements(g);
  for (const auto& x : elements)
    for (const auto& y : elements) {
      std::optional<Poly> value;
      switch (kind) {
        case MultiplicityKind::simple_in_verma: value = simple_in_verma(x, y); break;
        case MultiplicityKind::verma_in_projective: value = verma_in_projective(x, y, *nu); break;
        case MultiplicityKind::baby_verma_in_projective: value = baby_verma_in_projective(x, y); break;
        case MultiplicityKind::simple_in_baby_verma: value = simple_in_baby_verma(x, y); break;
      }
      if (value && !value->is_zero()) t.entries.emplace(std::pair{x, y}, std::move(*value));
    }
  return t;
}

}  // namespace pkl
