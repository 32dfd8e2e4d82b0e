#include "pkl/rootdata.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pkl {

std::strong_ordering lex_compare(const IntVector& a, const IntVector& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (auto c = a(i) <=> b(i); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t hash_vector(const IntVector& v) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Eigen::Index i = 0; i < v.size(); ++i) h = (h ^ static_cast<std::size_t>(v(i))) * 0x100000001b3ULL;
  return h;
}

Weight::Weight(std::initializer_list<std::int64_t> c) : coords(static_cast<Eigen::Index>(c.size())) {
  Eigen::Index i = 0;
  for (auto x : c) coords(i++) = x;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw InputError("weight rank mismatch");
  coords += o.coords;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw InputError("weight rank mismatch");
  coords -= o.coords;
  return *this;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords(i));
  }
  return s + ")";
}

char type_letter(CartanType t) { return "ABCDEFG"[static_cast<int>(t)]; }

CartanType parse_type_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return CartanType::A;
    case 'B': return CartanType::B;
    case 'C': return CartanType::C;
    case 'D': return CartanType::D;
    case 'E': return CartanType::E;
    case 'F': return CartanType::F;
    case 'G': return CartanType::G;
  }
  throw InputError(std::string("unknown Cartan type letter '") + c + "'");
}

std::string describe(LViolation v) {
  switch (v) {
    case LViolation::not_positive: return "l must be a positive integer";
    case LViolation::even: return "l must be odd";
    case LViolation::not_above_coxeter_number: return "l must exceed the Coxeter number";
    case LViolation::not_coprime_to_e: return "l must be coprime to e = |Lambda/Q|";
    case LViolation::not_coprime_to_3: return "l must be coprime to 3 for type G2";
  }
  return "?";
}

std::string describe(LWarning w) {
  switch (w) {
    case LWarning::not_prime_power: return "l is not a prime power (not required for the combinatorics computed here)";
  }
  return "?";
}

bool LValidation::has(LViolation v) const { return std::find(violations.begin(), violations.end(), v) != violations.end(); }
bool LValidation::has(LWarning w) const { return std::find(warnings.begin(), warnings.end(), w) != warnings.end(); }

namespace {

IntMatrix build_cartan(CartanType type, int n) {
  auto bad = [&] { return InputError(std::string("unsupported root system ") + type_letter(type) + std::to_string(n)); };
  const int max_rank = type == CartanType::A ? 5 : 4;
  if (n < 1 || n > max_rank) throw bad();
  IntMatrix c = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) { c(i, j) = c(j, i) = -1; };
  switch (type) {
    case CartanType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case CartanType::C:
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case CartanType::D:
      if (n != 4) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case CartanType::G:
      if (n != 2) throw bad();
      c(0, 1) = -3;  // alpha_1 short
      c(1, 0) = -1;
      break;
    default:
      throw bad();
  }
  return c;
}

// Smallest positive integers d with d_i c(i,j) = d_j c(j,i).
IntVector build_symmetrizer(const IntMatrix& c) {
  const int n = static_cast<int>(c.rows());
  // d_i as fractions num/den, propagated along the (connected) Dynkin graph.
  std::vector<std::int64_t> num(n, 0), den(n, 1);
  num[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || c(i, j) == 0 || num[j] != 0) continue;
      num[j] = num[i] * c(i, j);
      den[j] = den[i] * c(j, i);
      if (den[j] < 0) num[j] = -num[j], den[j] = -den[j];
      auto g = std::gcd(num[j], den[j]);
      num[j] /= g, den[j] /= g;
      stack.push_back(j);
    }
  }
  std::int64_t lcm = 1;
  for (int i = 0; i < n; ++i) lcm = std::lcm(lcm, den[i]);
  IntVector d(n);
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) {
    d(i) = num[i] * (lcm / den[i]);
    g = std::gcd(g, d(i));
  }
  return d / g;
}

}  // namespace

RootDatum RootDatum::make(CartanType type, int rank, int l) {
  RootDatum rd;
  rd.type_ = type;
  rd.rank_ = rank;
  rd.l_ = l;
  rd.cartan_ = build_cartan(type, rank);
  rd.d_ = build_symmetrizer(rd.cartan_);

  Eigen::MatrixXd cd = rd.cartan_.cast<double>();
  rd.e_ = std::llround(cd.determinant());
  Eigen::MatrixXd adj = cd.inverse() * static_cast<double>(rd.e_);
  rd.adjugate_ = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rd.adjugate_(i, j) = std::llround(adj(i, j));
  if (rd.cartan_ * rd.adjugate_ != rd.e_ * IntMatrix::Identity(rank, rank))
    throw InternalError("integer adjugate of the Cartan matrix is inexact");

  // Positive roots: closure of simple roots under simple reflections, carried
  // with their coroots.
  std::map<std::vector<std::int64_t>, std::pair<IntVector, IntVector>> found;
  auto key = [](const IntVector& v) { return std::vector<std::int64_t>(v.data(), v.data() + v.size()); };
  std::vector<std::pair<IntVector, IntVector>> frontier;
  for (int i = 0; i < rank; ++i) {
    IntVector a = IntVector::Zero(rank), b = IntVector::Zero(rank);
    a(i) = 1, b(i) = 1;
    found.emplace(key(a), std::pair{a, b});
    frontier.emplace_back(a, b);
  }
  while (!frontier.empty()) {
    auto [a, b] = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < rank; ++i) {
      std::int64_t pa = 0, pb = 0;  // <alpha, coroot_i>, <alpha_i, coroot>
      for (int j = 0; j < rank; ++j) pa += rd.cartan_(i, j) * a(j), pb += rd.cartan_(j, i) * b(j);
      IntVector a2 = a, b2 = b;
      a2(i) -= pa;
      b2(i) -= pb;
      if ((a2.array() < 0).any()) continue;
      if (found.emplace(key(a2), std::pair{a2, b2}).second) frontier.emplace_back(a2, b2);
    }
  }
  std::vector<std::pair<IntVector, IntVector>> sorted;
  for (auto& [k, v] : found) sorted.push_back(v);
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    auto hx = x.first.sum(), hy = y.first.sum();
    if (hx != hy) return hx < hy;
    return lex_compare(x.first, y.first) > 0;
  });
  rd.two_rhocheck_ = IntVector::Zero(rank);
  for (auto& [a, b] : sorted) {
    rd.root_coords_.push_back(a);
    rd.roots_.push_back(Weight(IntVector(rd.cartan_ * a)));
    rd.coroots_.push_back(Coroot{b});
    rd.two_rhocheck_ += b;
  }
  rd.rho_ = Weight(IntVector::Ones(rank));
  rd.coxeter_number_ = static_cast<int>(2 * rd.roots_.size() / rank);

  std::int64_t best = -1;
  for (int k = 0; k < rd.num_positive_roots(); ++k) {
    auto h = rd.coroots_[k].coords.sum();
    if (h > best) best = h, rd.affine_root_ = k;
  }
  return rd;
}

RootDatum RootDatum::from_config(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<CartanType> type;
  std::optional<int> rank, l;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw InputError("config line without '=': " + line);
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    try {
      if (k == "type") {
        if (v.size() != 1) throw InputError("type must be a single letter");
        type = parse_type_letter(v[0]);
      } else if (k == "rank") {
        rank = std::stoi(v);
      } else if (k == "l") {
        l = std::stoi(v);
      } else {
        throw InputError("unknown config key: " + k);
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InputError*>(&e)) throw;
      throw InputError("bad value for " + k + ": " + v);
    }
  }
  if (!type || !rank || !l) throw InputError("config must set type, rank and l");
  return make(*type, *rank, *l);
}

std::string RootDatum::name() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

Weight RootDatum::fundamental_weight(int i) const {
  Weight w = zero();
  w.coords(i) = 1;
  return w;
}

Weight RootDatum::simple_root(int i) const { return Weight(IntVector(cartan_.col(i))); }

Coroot RootDatum::simple_coroot(int i) const {
  Coroot c{IntVector::Zero(rank_)};
  c.coords(i) = 1;
  return c;
}

std::int64_t RootDatum::pairing(const Weight& lam, const Coroot& coroot) const {
  check_rank(lam);
  if (coroot.coords.size() != rank_) throw InputError("coroot rank mismatch");
  return lam.coords.dot(coroot.coords);
}

std::int64_t RootDatum::pairing(const Weight& lam, int simple_index) const {
  check_rank(lam);
  if (simple_index < 0 || simple_index >= rank_) throw InputError("simple coroot index out of range");
  return lam.coords(simple_index);
}

std::int64_t RootDatum::scaled_symmetric_pairing(const Weight& lam, const Weight& mu) const {
  check_rank(lam);
  check_rank(mu);
  // (lam, alpha_t) = d_t <lam, coroot_t>, and e * mu = sum_t (adj mu)_t alpha_t.
  IntVector b = adjugate_ * mu.coords;
  std::int64_t s = 0;
  for (int t = 0; t < rank_; ++t) s += b(t) * d_(t) * lam.coords(t);
  return s;
}

IntMatrix RootDatum::symmetrized_cartan() const { return d_.asDiagonal() * cartan_; }

std::int64_t RootDatum::height2(const Weight& mu) const {
  check_rank(mu);
  return mu.coords.dot(two_rhocheck_);
}

std::optional<IntVector> RootDatum::root_coordinates(const Weight& lam) const {
  check_rank(lam);
  IntVector a = adjugate_ * lam.coords;
  for (int i = 0; i < rank_; ++i)
    if (a(i) % e_ != 0) return std::nullopt;
  return IntVector(a / e_);
}

IntVector RootDatum::coset_key(const Weight& lam) const {
  check_rank(lam);
  IntVector a = adjugate_ * lam.coords;
  for (int i = 0; i < rank_; ++i) a(i) = ((a(i) % e_) + e_) % e_;
  return a;
}

bool RootDatum::dominance_leq(const Weight& mu, const Weight& lam) const {
  auto a = root_coordinates(lam - mu);
  return a && (a->array() >= 0).all();
}

bool RootDatum::is_dominant(const Weight& lam) const {
  check_rank(lam);
  return (lam.coords.array() >= 0).all();
}

Weight RootDatum::reflect(const Weight& lam, int i) const {
  check_rank(lam);
  return Weight(IntVector(lam.coords - lam.coords(i) * cartan_.col(i)));
}

Weight RootDatum::from_root_coords(const IntVector& a) const { return Weight(IntVector(cartan_ * a)); }

LValidation RootDatum::validate_l() const {
  LValidation r;
  if (l_ <= 0) {
    r.violations.push_back(LViolation::not_positive);
    return r;
  }
  if (l_ % 2 == 0) r.violations.push_back(LViolation::even);
  if (l_ <= coxeter_number_) r.violations.push_back(LViolation::not_above_coxeter_number);
  if (std::gcd<std::int64_t>(l_, e_) != 1) r.violations.push_back(LViolation::not_coprime_to_e);
  if (has_g2_component() && l_ % 3 == 0) r.violations.push_back(LViolation::not_coprime_to_3);
  int m = l_, p = 0;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      p = q;
      break;
    }
  if (p == 0) p = m;
  while (m % p == 0) m /= p;
  if (l_ > 1 && m != 1) r.warnings.push_back(LWarning::not_prime_power);
  return r;
}

}  // namespace pkl
