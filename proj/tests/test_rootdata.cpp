#include "pkl/rootdata.hpp"
#include "pkl/weyl.hpp"

#include <doctest.h>

#include <Eigen/Cholesky>

using namespace pkl;

namespace {

struct TypeCase {
  CartanType type;
  int rank;
  int num_positive;
  int coxeter;
  int e;
};

const TypeCase kTypes[] = {
    {CartanType::A, 1, 1, 2, 2}, {CartanType::A, 2, 3, 3, 3}, {CartanType::A, 3, 6, 4, 4},
    {CartanType::B, 2, 4, 4, 2}, {CartanType::C, 2, 4, 4, 2}, {CartanType::G, 2, 6, 6, 1},
    {CartanType::B, 3, 9, 6, 2}, {CartanType::C, 3, 9, 6, 2}, {CartanType::D, 4, 12, 6, 4},
};

}  // namespace

TEST_CASE("pairing with fundamental weights, rho and simple roots") {
  auto a1 = RootDatum::make(CartanType::A, 1, 3);
  CHECK(a1.pairing(a1.fundamental_weight(0), a1.simple_coroot(0)) == 1);
  CHECK(a1.pairing(a1.rho(), a1.simple_coroot(0)) == 1);
  auto a2 = RootDatum::make(CartanType::A, 2, 5);
  CHECK(a2.pairing(a2.simple_root(0), a2.simple_coroot(0)) == 2);
  CHECK_THROWS_AS(a2.pairing(Weight{1}, a2.simple_coroot(0)), InputError);
}

TEST_CASE("dominance order") {
  auto a1 = RootDatum::make(CartanType::A, 1, 3);
  CHECK(a1.dominance_leq(a1.zero(), a1.simple_root(0)));
  CHECK_FALSE(a1.dominance_leq(a1.fundamental_weight(0), a1.zero()));
  auto a2 = RootDatum::make(CartanType::A, 2, 5);
  CHECK(a2.dominance_leq(a2.simple_root(0), a2.simple_root(0) + a2.simple_root(1)));
  CHECK_FALSE(a2.dominance_leq(a2.simple_root(0) + a2.simple_root(1), a2.simple_root(0)));
}

TEST_CASE("validate_l") {
  auto ok = RootDatum::make(CartanType::A, 1, 3).validate_l();
  CHECK(ok.ok());
  auto bad = RootDatum::make(CartanType::A, 2, 3).validate_l();
  CHECK(bad.has(LViolation::not_above_coxeter_number));
  CHECK(bad.has(LViolation::not_coprime_to_e));
  CHECK_FALSE(bad.has(LViolation::even));
  auto five = RootDatum::make(CartanType::A, 2, 5).validate_l();
  CHECK(five.ok());
  CHECK_FALSE(five.has(LWarning::not_prime_power));
  auto fifteen = RootDatum::make(CartanType::A, 2, 35).validate_l();
  CHECK(fifteen.ok());
  CHECK(fifteen.has(LWarning::not_prime_power));
  CHECK(RootDatum::make(CartanType::G, 2, 9).validate_l().has(LViolation::not_coprime_to_3));
  CHECK(RootDatum::make(CartanType::A, 1, 4).validate_l().has(LViolation::even));
}

TEST_CASE("root system invariants for every supported type") {
  for (const auto& tc : kTypes) {
    auto rd = RootDatum::make(tc.type, tc.rank, 101);
    CAPTURE(rd.name());
    CHECK(rd.num_positive_roots() == tc.num_positive);
    CHECK(rd.coxeter_number() == tc.coxeter);
    CHECK(rd.lattice_index_e() == tc.e);

    Weight sum = rd.zero();
    for (const auto& a : rd.positive_roots()) sum += a;
    CHECK(sum == 2 * rd.rho());
    for (int i = 0; i < rd.rank(); ++i) CHECK(rd.pairing(rd.rho(), rd.simple_coroot(i)) == 1);

    IntMatrix b = rd.symmetrized_cartan();
    CHECK(b == b.transpose());
    CHECK(Eigen::MatrixXd(b.cast<double>()).llt().info() == Eigen::Success);

    // Roots pair to 2 with their own coroots.
    for (int k = 0; k < rd.num_positive_roots(); ++k)
      CHECK(rd.pairing(rd.positive_roots()[k], rd.positive_coroots()[k]) == 2);

    AffineWeylGroup g(std::make_shared<const RootDatum>(rd));
    CHECK(g.finite().length(g.finite().longest()) == rd.num_positive_roots());
    CHECK(static_cast<int>(g.omegas().size()) == tc.e);
  }
}

TEST_CASE("symmetrizer is coprime and matches root lengths") {
  auto b2 = RootDatum::make(CartanType::B, 2, 5);
  CHECK(b2.symmetrizer()(0) == 2);
  CHECK(b2.symmetrizer()(1) == 1);
  auto g2 = RootDatum::make(CartanType::G, 2, 7);
  CHECK(g2.symmetrizer()(0) == 1);
  CHECK(g2.symmetrizer()(1) == 3);
}

TEST_CASE("scaled symmetric pairing") {
  auto a1 = RootDatum::make(CartanType::A, 1, 3);
  // (alpha, alpha) = 2, so e * (alpha, alpha) = 4; (w, w) = 1/2 -> 1.
  CHECK(a1.scaled_symmetric_pairing(a1.simple_root(0), a1.simple_root(0)) == 4);
  CHECK(a1.scaled_symmetric_pairing(a1.fundamental_weight(0), a1.fundamental_weight(0)) == 1);
  auto a2 = RootDatum::make(CartanType::A, 2, 5);
  auto w1 = a2.fundamental_weight(0), w2 = a2.fundamental_weight(1);
  CHECK(a2.scaled_symmetric_pairing(w1, w2) == a2.scaled_symmetric_pairing(w2, w1));
}

TEST_CASE("root coordinates and cosets") {
  auto a2 = RootDatum::make(CartanType::A, 2, 5);
  auto rc = a2.root_coordinates(a2.simple_root(0) + 2 * a2.simple_root(1));
  REQUIRE(rc);
  CHECK((*rc)(0) == 1);
  CHECK((*rc)(1) == 2);
  CHECK_FALSE(a2.root_coordinates(a2.fundamental_weight(0)));
  CHECK(a2.coset_key(a2.fundamental_weight(0)) == a2.coset_key(a2.fundamental_weight(0) + a2.simple_root(1)));
  CHECK(a2.coset_key(a2.fundamental_weight(0)) != a2.coset_key(a2.fundamental_weight(1)));
}

TEST_CASE("config parsing") {
  auto rd = RootDatum::from_config("# datum\ntype = B\nrank = 2\nl = 7\n");
  CHECK(rd.name() == "B2");
  CHECK(rd.l() == 7);
  CHECK_THROWS_AS(RootDatum::from_config("type = A\nrank = 2\n"), InputError);
  CHECK_THROWS_AS(RootDatum::from_config("type = Q\nrank = 2\nl = 5"), InputError);
  CHECK_THROWS_AS(RootDatum::from_config("type = E\nrank = 6\nl = 13"), InputError);
  CHECK_THROWS_AS(RootDatum::from_config("type = A\nrank = x\nl = 5"), InputError);
}
