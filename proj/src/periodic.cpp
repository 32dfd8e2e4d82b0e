#include "pkl/periodic.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace pkl {

namespace {

const Poly kV = Poly::v();
const Poly kVinvMinusV = Poly{{-1, 1}, {1, -1}};

PeriodicElement truncate_below(const AffineWeylGroup& g, const PeriodicElement& m, const ExtAffineElement& top,
                               int depth) {
  const std::int64_t top_len = g.semi_infinite_length(top);
  PeriodicElement r;
  for (const auto& [y, p] : m)
    if (top_len - g.semi_infinite_length(y) <= depth) r.add(y, p);
  return r;
}

// Right-hand side of the recursion for one tree edge:
//   Hs_x C_s - sum_{z != xs} [v^0](Hs_x C_s)_z Hs_z
PeriodicElement edge_rhs(const PeriodicModule& module, const std::vector<PeriodicElement>& reps,
                         const SelfDualBasis::TreeEdge& edge, const ExtAffineElement& target) {
  PeriodicElement product = module.act_kl_generator(reps[edge.parent], edge.s);
  PeriodicElement r = product;
  for (const auto& [z, c] : product) {
    if (z == target) continue;
    BigInt mu = c.constant_term();
    if (mu == 0) continue;
    r -= Poly::monomial(0, mu) * module.translate(reps[z.finite], z.translation);
  }
  return r;
}

}  // namespace

PeriodicElement PeriodicModule::act_generator(const PeriodicElement& m, AffineGenerator s) const {
  PeriodicElement r;
  for (const auto& [x, p] : m) {
    ExtAffineElement xs = g_->right_multiply(x, s);
    r.add(xs, p);
    if (!semiinf_up(*g_, x, s)) r.add(x, kVinvMinusV * p);
  }
  return r;
}

PeriodicElement PeriodicModule::act_kl_generator(const PeriodicElement& m, AffineGenerator s) const {
  PeriodicElement r = act_generator(m, s);
  r += kV * m;
  return r;
}

PeriodicElement PeriodicModule::act_omega(const PeriodicElement& m, const ExtAffineElement& omega) const {
  if (g_->length(omega) != 0) throw InputError("act_omega needs a length-zero element");
  PeriodicElement r;
  for (const auto& [x, p] : m) r.add(g_->multiply(x, omega), p);
  return r;
}

PeriodicElement PeriodicModule::act(const PeriodicElement& m, const HeckeElement& h) const {
  PeriodicElement r;
  for (const auto& [y, q] : h) {
    const ReducedWord& rw = g_->reduced_word(y);
    PeriodicElement t = act_omega(m, rw.omega);
    for (AffineGenerator s : rw.letters) t = act_generator(t, s);
    r += q * t;
  }
  return r;
}

PeriodicElement PeriodicModule::e_element(const Weight& lam) const {
  g_->root_datum().check_rank(lam);
  PeriodicElement r;
  for (FiniteIndex w = 0; w < g_->finite().size(); ++w) r.add(g_->make(lam, w), Poly::monomial(g_->finite().length(w)));
  return r;
}

PeriodicElement PeriodicModule::translate(const PeriodicElement& m, const Weight& eta) const {
  if (eta.is_zero()) return m;
  PeriodicElement r;
  for (const auto& [x, p] : m) r.add(g_->left_translate(eta, x), p);
  return r;
}

std::vector<SelfDualBasis::TreeEdge> SelfDualBasis::build_tree(const AffineWeylGroup& g) {
  const FiniteWeylGroup& fin = g.finite();
  std::vector<char> seen(fin.size(), 0);
  std::vector<FiniteIndex> queue{fin.identity()};
  seen[fin.identity()] = 1;
  std::vector<TreeEdge> tree;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    FiniteIndex u = queue[head];
    ExtAffineElement x = g.finite_element(u);
    for (AffineGenerator s = 0; s < g.num_generators(); ++s) {
      if (!semiinf_up(g, x, s)) continue;
      ExtAffineElement xs = g.right_multiply(x, s);
      if (seen[xs.finite]) continue;
      seen[xs.finite] = 1;
      queue.push_back(xs.finite);
      tree.push_back({u, s, xs.finite, xs.translation});
    }
  }
  if (static_cast<int>(queue.size()) != fin.size())
    throw InternalError("upward recursion tree does not reach every element of W");
  return tree;
}

SelfDualCertificate SelfDualBasis::certify(const PeriodicModule& module, const std::vector<TreeEdge>& tree,
                                           const std::vector<PeriodicElement>& reps) {
  const AffineWeylGroup& g = module.group();
  SelfDualCertificate cert;
  auto fail = [&](std::string why) {
    cert.ok = false;
    cert.failure = std::move(why);
    return cert;
  };
  if (static_cast<int>(reps.size()) != g.finite().size()) return fail("wrong number of representatives");
  if (!(reps[g.finite().identity()] == module.e_element(g.root_datum().zero())))
    return fail("representative of the identity differs from e(0)");
  for (FiniteIndex w = 0; w < g.finite().size(); ++w) {
    ExtAffineElement top = g.finite_element(w);
    const std::int64_t top_len = g.semi_infinite_length(top);
    if (reps[w].coefficient(top) != Poly(1)) return fail("leading coefficient of " + g.format(top) + " is not 1");
    for (const auto& [y, p] : reps[w]) {
      if (y == top) continue;
      if (!p.in_v_times_Zv())
        return fail("coefficient " + p.to_string() + " at " + g.format(y) + " below " + g.format(top));
      if (g.semi_infinite_length(y) >= top_len)
        return fail(g.format(y) + " is not below " + g.format(top) + " in semi-infinite length");
    }
  }
  for (const auto& edge : tree) {
    ExtAffineElement target = g.make(edge.shift, edge.child);
    PeriodicElement rhs = edge_rhs(module, reps, edge, target);
    if (!(rhs == module.translate(reps[edge.child], edge.shift)))
      return fail("recursion identity fails on the edge to " + g.format(target));
    ++cert.edges_checked;
  }
  cert.ok = true;
  return cert;
}

SelfDualBasis::SelfDualBasis(std::shared_ptr<const PeriodicModule> module, SelfDualOptions options)
    : module_(std::move(module)) {
  const AffineWeylGroup& g = module_->group();
  tree_ = build_tree(g);
  const int n = g.finite().size();
  reps_.resize(n);
  for (FiniteIndex w = 0; w < n; ++w) reps_[w] = PeriodicElement::basis(g.finite_element(w));
  reps_[g.finite().identity()] = module_->e_element(g.root_datum().zero());

  for (int depth = std::max(1, options.initial_depth); depth <= options.max_depth; depth *= 2) {
    // Gauss-Seidel sweeps in tree order. Each sweep pushes the error at least
    // one step deeper, so depth + 2 sweeps reach the fixpoint when the true
    // elements fit within the truncation depth.
    for (int sweep = 0; sweep < depth + 2; ++sweep) {
      bool changed = false;
      for (const auto& edge : tree_) {
        ExtAffineElement target = g.make(edge.shift, edge.child);
        PeriodicElement next = module_->translate(edge_rhs(*module_, reps_, edge, target), -edge.shift);
        next = truncate_below(g, next, g.finite_element(edge.child), depth);
        if (!(next == reps_[edge.child])) {
          reps_[edge.child] = std::move(next);
          changed = true;
        }
      }
      if (!changed) break;
    }
    cert_ = certify(*module_, tree_, reps_);
    if (cert_.ok) {
      depth_ = depth;
      return;
    }
  }
  throw ResourceError("self-dual basis for " + g.root_datum().name() + " not certified within truncation depth " +
                      std::to_string(options.max_depth) + ": " + cert_.failure);
}

SelfDualBasis::SelfDualBasis(std::shared_ptr<const PeriodicModule> module, std::vector<PeriodicElement> representatives)
    : module_(std::move(module)), tree_(build_tree(module_->group())), reps_(std::move(representatives)) {
  cert_ = certify(*module_, tree_, reps_);
  if (!cert_.ok) throw InternalError("cached self-dual basis failed certification: " + cert_.failure);
  const AffineWeylGroup& g = group();
  for (FiniteIndex w = 0; w < static_cast<FiniteIndex>(reps_.size()); ++w) {
    const std::int64_t top = g.semi_infinite_length(g.finite_element(w));
    for (const auto& term : reps_[w])
      depth_ = std::max(depth_, static_cast<int>(top - g.semi_infinite_length(term.first)));
  }
}

PeriodicElement SelfDualBasis::element(const ExtAffineElement& x) const {
  return module_->translate(reps_[x.finite], x.translation);
}

Poly SelfDualBasis::p(const ExtAffineElement& y, const ExtAffineElement& x) const {
  return reps_[x.finite].coefficient(group().left_translate(-x.translation, y));
}

std::string SelfDualBasis::certify_element(const ExtAffineElement& x) const {
  const AffineWeylGroup& g = group();
  PeriodicElement h = element(x);
  if (h.coefficient(x) != Poly(1)) return "leading coefficient of " + g.format(x) + " is not 1";
  for (const auto& [y, p] : h) {
    if (y == x) continue;
    if (!p.in_v_times_Zv()) return "p at " + g.format(y) + " is " + p.to_string();
    if (semiinf_leq_generated(g, y, x, g.root_datum().l()) != OrderAnswer::less_or_equal)
      return g.format(y) + " is not below " + g.format(x);
  }
  return {};
}

std::string to_string(GenericKind k) { return k == GenericKind::q ? "q" : "qprime"; }

KostantPartition::KostantPartition(const RootDatum& rd) : rd_(&rd), roots_(rd.positive_root_coords()) {}

const Poly& KostantPartition::compute(const IntVector& gamma, std::size_t first_root) const {
  static const Poly zero;
  if ((gamma.array() < 0).any()) return zero;
  std::pair<std::vector<std::int64_t>, std::size_t> key{{gamma.data(), gamma.data() + gamma.size()}, first_root};
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Poly r;
  if (first_root == roots_.size()) {
    if (gamma.isZero()) r = Poly(1);
  } else {
    IntVector rest = gamma;
    for (int k = 0; (rest.array() >= 0).all(); ++k, rest -= roots_[first_root])
      r += compute(rest, first_root + 1).shifted(2 * k);
  }
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(r)).first->second;
}

const Poly& KostantPartition::graded(const IntVector& gamma) const { return compute(gamma, 0); }

BigInt KostantPartition::count(const IntVector& gamma) const {
  BigInt n = 0;
  for (const auto& [e, c] : graded(gamma).terms()) n += c;
  return n;
}

const Poly& KostantPartition::graded_weight(const Weight& gamma) const {
  static const Poly zero;
  auto rc = rd_->root_coordinates(gamma);
  if (!rc) return zero;
  return graded(*rc);
}

Poly generic_polynomial(const SelfDualBasis& basis, const KostantPartition& kostant, const ExtAffineElement& y,
                        const ExtAffineElement& x, GenericKind kind) {
  Poly q;
  for (const auto& [z, p] : basis.representatives()[x.finite]) {
    if (z.finite != y.finite) continue;
    Weight gamma = z.translation + x.translation - y.translation;
    const Poly& k = kostant.graded_weight(gamma);
    if (k.is_zero()) continue;
    if (kind == GenericKind::q) {
      q += p * k;
    } else {
      BigInt n = 0;
      for (const auto& [e, c] : k.terms()) n += c;
      q += n * p;
    }
  }
  return q;
}

Poly koszul_coefficient(const AffineWeylGroup& g, const std::function<Poly(const ExtAffineElement&)>& series,
                        const ExtAffineElement& y) {
  const RootDatum& rd = g.root_datum();
  const int n = rd.num_positive_roots();
  Poly r;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Weight gamma = rd.zero();
    int size = 0;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) {
        gamma += rd.positive_roots()[k];
        ++size;
      }
    Poly c = series(g.left_translate(gamma, y));
    if (c.is_zero()) continue;
    r += Poly::monomial(2 * size, size % 2 ? BigInt(-1) : BigInt(1)) * c;
  }
  return r;
}

PeriodicElement koszul_operator(const PeriodicModule& module, const PeriodicElement& m) {
  const AffineWeylGroup& g = module.group();
  const RootDatum& rd = g.root_datum();
  const int n = rd.num_positive_roots();
  PeriodicElement r;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Weight gamma = rd.zero();
    int size = 0;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) {
        gamma -= rd.positive_roots()[k];
        ++size;
      }
    r += Poly::monomial(2 * size, size % 2 ? BigInt(-1) : BigInt(1)) * module.translate(m, gamma);
  }
  return r;
}

std::vector<ExtAffineElement> dominance_interval(const AffineWeylGroup& g, const ExtAffineElement& lo,
                                                 const ExtAffineElement& hi) {
  const RootDatum& rd = g.root_datum();
  const std::int64_t l = rd.l();
  Weight a = g.dot_action(lo, rd.zero(), l), b = g.dot_action(hi, rd.zero(), l);
  std::vector<ExtAffineElement> out;
  auto d = rd.root_coordinates(b - a);
  if (!d || (d->array() < 0).any()) return out;
  const int r = rd.rank();
  IntVector n = IntVector::Zero(r);
  while (true) {
    if (auto z = g.from_dot_image(a + rd.from_root_coords(n), l)) out.push_back(*z);
    int i = 0;
    while (i < r && n(i) == (*d)(i)) n(i++) = 0;
    if (i == r) break;
    ++n(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

InversionReport inversion_check(const SelfDualBasis& basis, const KostantPartition& kostant, const Window& window) {
  const AffineWeylGroup& g = basis.group();
  auto elements = window.elements(g);
  InversionReport report;
  std::map<std::pair<ExtAffineElement, ExtAffineElement>, Poly> q_cache;
  auto q = [&](const ExtAffineElement& x, const ExtAffineElement& y) -> const Poly& {
    auto key = std::pair{x, y};
    auto it = q_cache.find(key);
    if (it == q_cache.end()) it = q_cache.emplace(key, generic_polynomial(basis, kostant, x, y, GenericKind::q)).first;
    return it->second;
  };
  for (const auto& z : elements) {
    // p_{w0 x, w0 z} vanishes unless w0 x lies in the support of Hs_{w0 z}.
    PeriodicElement hz = basis.element(g.left_longest(z));
    for (const auto& y : elements) {
      if (!g.same_omega_component(y, z)) continue;
      Poly total;
      for (const auto& [u, p] : hz) {
        ExtAffineElement x = g.left_longest(u);
        const Poly& qxy = q(x, y);
        if (qxy.is_zero()) continue;
        Poly term = qxy * p;
        total += (g.length(x) + g.length(y)) % 2 ? -term : term;
      }
      ++report.pairs_checked;
      Poly expected = y == z ? Poly(1) : Poly();
      if (!(total == expected)) report.deviations.push_back({y, z, total});
    }
  }
  return report;
}

std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::periodic_p: return "p";
    case TableKind::generic_q: return "q";
    case TableKind::generic_qprime: return "qprime";
  }
  return "?";
}

TableKind parse_table_kind(const std::string& s) {
  if (s == "p") return TableKind::periodic_p;
  if (s == "q") return TableKind::generic_q;
  if (s == "qprime") return TableKind::generic_qprime;
  throw InputError("unknown table kind '" + s + "' (expected p, q or qprime)");
}

std::optional<Poly> PolynomialTable::lookup(const AffineWeylGroup& g, const ExtAffineElement& y,
                                            const ExtAffineElement& x) const {
  if (!window.contains(g, y) || !window.contains(g, x)) return std::nullopt;
  auto it = entries.find({y, x});
  return it == entries.end() ? Poly() : it->second;
}

PolynomialTable build_table(const SelfDualBasis& basis, const KostantPartition& kostant, TableKind kind,
                            const Window& window, int threads) {
  const AffineWeylGroup& g = basis.group();
  PolynomialTable table;
  table.kind = kind;
  table.datum = g.root_datum().name();
  table.l = g.root_datum().l();
  table.window = window;
  auto elements = window.elements(g);

  using Column = std::vector<std::pair<ExtAffineElement, Poly>>;
  std::vector<Column> columns(elements.size());
  auto fill = [&](std::size_t i) {
    const auto& x = elements[i];
    Column& col = columns[i];
    if (kind == TableKind::periodic_p) {
      for (const auto& [y, p] : basis.element(x))
        if (window.contains(g, y)) col.emplace_back(y, p);
    } else {
      GenericKind gk = kind == TableKind::generic_q ? GenericKind::q : GenericKind::qprime;
      for (const auto& y : elements) {
        if (!g.same_omega_component(x, y)) continue;
        Poly q = generic_polynomial(basis, kostant, y, x, gk);
        if (!q.is_zero()) col.emplace_back(y, std::move(q));
      }
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < elements.size(); ++i) fill(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < elements.size(); i += threads) fill(i);
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (auto& [y, p] : columns[i]) table.entries.emplace(std::pair{y, elements[i]}, std::move(p));
  return table;
}

}  // namespace pkl
