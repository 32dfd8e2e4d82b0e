#pragma once

// Root data of simply-connected semisimple groups, in fundamental-weight
// coordinates.
//
// Conventions:
//   cartan()(i, j) = <coroot_i, root_j>
//   Weight::coords  = (<lambda, coroot_i>)_i          (fundamental-weight basis)
//   Coroot::coords  = coefficients on simple coroots  (so pairing is a dot product)
//   root_coords     = coefficients on simple roots

#include "pkl/errors.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pkl {

inline constexpr int kMaxRank = 8;

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

std::strong_ordering lex_compare(const IntVector& a, const IntVector& b);
std::size_t hash_vector(const IntVector& v);

// Element of the weight lattice in fundamental-weight coordinates.
struct Weight {
  IntVector coords;

  Weight() = default;
  explicit Weight(IntVector c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c);
  static Weight zero(int rank) { return Weight(IntVector::Zero(rank)); }

  int rank() const { return static_cast<int>(coords.size()); }
  std::int64_t operator[](int i) const { return coords(i); }
  bool is_zero() const { return coords.isZero(); }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const { return Weight(IntVector(-coords)); }
  friend Weight operator*(std::int64_t k, const Weight& w) { return Weight(IntVector(k * w.coords)); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) { return lex_compare(a.coords, b.coords); }

  // "(a1,...,ar)"
  std::string to_string() const;
};

// Coroot in simple-coroot coordinates.
struct Coroot {
  IntVector coords;
  friend bool operator==(const Coroot& a, const Coroot& b) { return a.coords == b.coords; }
};

enum class CartanType { A, B, C, D, E, F, G };

char type_letter(CartanType t);
CartanType parse_type_letter(char c);

enum class LViolation { not_positive, even, not_above_coxeter_number, not_coprime_to_e, not_coprime_to_3 };
enum class LWarning { not_prime_power };

std::string describe(LViolation v);
std::string describe(LWarning w);

// Diagnostic report on the root-of-unity order l.
struct LValidation {
  std::vector<LViolation> violations;
  std::vector<LWarning> warnings;
  bool ok() const { return violations.empty(); }
  bool has(LViolation v) const;
  bool has(LWarning w) const;
};

class RootDatum {
 public:
  // Supported: A_n (1<=n<=5), B_n and C_n (2<=n<=4), D_4, G_2.
  static RootDatum make(CartanType type, int rank, int l);
  static std::shared_ptr<const RootDatum> make_shared(CartanType type, int rank, int l) {
    return std::make_shared<const RootDatum>(make(type, rank, l));
  }
  // Plain-text config: "key = value" lines with keys type, rank, l; '#' comments.
  static RootDatum from_config(const std::string& text);

  CartanType cartan_type() const { return type_; }
  int rank() const { return rank_; }
  int l() const { return l_; }
  std::string name() const;  // e.g. "A2"

  const IntMatrix& cartan() const { return cartan_; }
  const IntVector& symmetrizer() const { return d_; }
  std::int64_t lattice_index_e() const { return e_; }
  int coxeter_number() const { return coxeter_number_; }
  bool has_g2_component() const { return type_ == CartanType::G; }

  Weight zero() const { return Weight::zero(rank_); }
  Weight fundamental_weight(int i) const;
  Weight simple_root(int i) const;
  Coroot simple_coroot(int i) const;
  const Weight& rho() const { return rho_; }

  // Positive roots sorted by height, with matching coroots and simple-root coordinates.
  const std::vector<Weight>& positive_roots() const { return roots_; }
  const std::vector<Coroot>& positive_coroots() const { return coroots_; }
  const std::vector<IntVector>& positive_root_coords() const { return root_coords_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }

  // Index of the positive root whose coroot is the highest coroot; the affine
  // simple reflection is s_0 = t(beta) s_beta for this beta.
  int affine_root_index() const { return affine_root_; }
  const Weight& affine_root() const { return roots_[affine_root_]; }
  const Coroot& affine_coroot() const { return coroots_[affine_root_]; }

  std::int64_t pairing(const Weight& lam, const Coroot& coroot) const;
  std::int64_t pairing(const Weight& lam, int simple_index) const;

  // e * (lam, mu), an integer.
  std::int64_t scaled_symmetric_pairing(const Weight& lam, const Weight& mu) const;
  // The integer matrix (alpha_s, alpha_t) = d_s <coroot_s, alpha_t>.
  IntMatrix symmetrized_cartan() const;

  // <mu, 2 rhocheck> = sum of <mu, coroot> over positive coroots. Strictly
  // positive on nonzero sums of simple roots.
  std::int64_t height2(const Weight& mu) const;

  std::optional<IntVector> root_coordinates(const Weight& lam) const;
  bool in_root_lattice(const Weight& lam) const { return root_coordinates(lam).has_value(); }
  // Canonical label of lam + Q in Lambda/Q.
  IntVector coset_key(const Weight& lam) const;

  // mu <= lam iff lam - mu is a nonnegative integer combination of simple roots.
  bool dominance_leq(const Weight& mu, const Weight& lam) const;
  bool is_dominant(const Weight& lam) const;

  Weight reflect(const Weight& lam, int simple_index) const;
  Weight from_root_coords(const IntVector& a) const;

  LValidation validate_l() const;

  void check_rank(const Weight& lam) const {
    if (lam.rank() != rank_) throw InputError("weight of rank " + std::to_string(lam.rank()) + " used with datum " + name());
  }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_ && a.l_ == b.l_;
  }

 private:
  RootDatum() = default;

  CartanType type_ = CartanType::A;
  int rank_ = 0;
  int l_ = 0;
  IntMatrix cartan_;
  IntVector d_;
  std::int64_t e_ = 1;
  IntMatrix adjugate_;  // e * cartan^{-1}
  int coxeter_number_ = 0;
  Weight rho_;
  IntVector two_rhocheck_;  // simple-coroot coordinates
  std::vector<Weight> roots_;
  std::vector<Coroot> coroots_;
  std::vector<IntVector> root_coords_;
  int affine_root_ = 0;
};

}  // namespace pkl

template <>
struct std::hash<pkl::Weight> {
  std::size_t operator()(const pkl::Weight& w) const noexcept { return pkl::hash_vector(w.coords); }
};
