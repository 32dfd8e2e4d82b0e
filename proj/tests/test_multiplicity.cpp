#include "pkl/multiplicity.hpp"

#include <doctest.h>

using namespace pkl;

namespace {

struct Setup {
  std::shared_ptr<AffineWeylGroup> g;
  std::shared_ptr<SelfDualBasis> basis;
  std::shared_ptr<KostantPartition> kostant;
};

Setup setup(CartanType t, int rank, int l) {
  Setup s;
  s.g = std::make_shared<AffineWeylGroup>(RootDatum::make_shared(t, rank, l));
  s.basis = std::make_shared<SelfDualBasis>(std::make_shared<PeriodicModule>(s.g));
  s.kostant = std::make_shared<KostantPartition>(s.g->root_datum());
  return s;
}

// Each orbit meets the closed alcove exactly once.
void check_orbits_against_blocks(const AffineWeylGroup& g, std::int64_t bound) {
  auto blocks = enumerate_blocks(g);
  auto orbits = brute_force_orbits(g, bound);
  CHECK(orbits.size() == blocks.size());
  for (const auto& orbit : orbits) {
    int hits = 0;
    for (const auto& b : blocks)
      hits += static_cast<int>(std::count(orbit.begin(), orbit.end(), b.representative));
    CHECK(hits == 1);
  }
}

}  // namespace

TEST_CASE("A1 l=3 blocks") {
  auto g = std::make_shared<AffineWeylGroup>(RootDatum::make_shared(CartanType::A, 1, 3));
  auto blocks = enumerate_blocks(*g);
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].representative == Weight{-1});
  CHECK(blocks[0].stabilizer == std::vector<AffineGenerator>{1});
  CHECK(blocks[1].representative == Weight{0});
  CHECK(blocks[1].regular);
  CHECK(blocks[2].representative == Weight{1});
  CHECK(blocks[2].regular);
  CHECK(blocks[3].representative == Weight{2});
  CHECK(blocks[3].stabilizer == std::vector<AffineGenerator>{0});
  CHECK(blocks[3].stabilizer_string() == "{s0}");
  // The length-zero element swaps the two singular and the two regular labels.
  CHECK(blocks[3].extended_class == 0);
  CHECK(blocks[2].extended_class == 1);

  check_orbits_against_blocks(*g, 9);
  CHECK(omega_s(*g, 0)->representative == Weight{2});
  CHECK(omega_s(*g, 1)->representative == Weight{-1});
}

TEST_CASE("rank two blocks") {
  for (auto [t, l] : {std::pair{CartanType::A, 5}, {CartanType::B, 5}, {CartanType::G, 7}}) {
    auto g = std::make_shared<AffineWeylGroup>(RootDatum::make_shared(t, 2, l));
    CAPTURE(g->root_datum().name());
    check_orbits_against_blocks(*g, 3 * l);
    int regular = 0;
    for (const auto& b : enumerate_blocks(*g)) {
      regular += b.regular;
      CHECK(b.regular == b.stabilizer.empty());
    }
    CHECK(regular > 0);
    for (AffineGenerator s = 0; s < g->num_generators(); ++s) {
      auto b = omega_s(*g, s);
      REQUIRE(b);
      CHECK(b->stabilizer == std::vector<AffineGenerator>{s});
    }
  }
}

TEST_CASE("multiplicity tables") {
  auto s = setup(CartanType::A, 1, 3);
  const auto& g = *s.g;
  MultiplicityTables tables(s.basis, s.kostant, Window{3});
  auto elements = tables.window().elements(g);
  const Weight rho = g.root_datum().rho();
  for (const auto& x : elements) {
    CHECK(tables.simple_in_verma(x, x) == Poly(1));
    CHECK(tables.baby_verma_in_projective(x, x) == Poly(1));
    for (const auto& y : elements) {
      CHECK(tables.baby_verma_in_projective(x, y) == tables.simple_in_baby_verma(x, y));
      CHECK(tables.baby_verma_in_projective(x, y) == s.basis->p(g.left_longest(x), g.left_longest(y)));
      CHECK(tables.simple_in_verma(x, y) ==
            generic_polynomial(*s.basis, *s.kostant, g.left_longest(x), g.left_longest(y), GenericKind::q));
    }
  }
  auto far = g.translation(Weight{7});
  CHECK_FALSE(tables.simple_in_verma(far, g.identity()).has_value());
  CHECK_FALSE(tables.verma_in_projective(far, g.identity(), rho).has_value());
  CHECK_FALSE(tables.baby_verma_in_projective(g.identity(), far).has_value());
}

TEST_CASE("verma-in-projective truncation") {
  auto s = setup(CartanType::A, 1, 3);
  const auto& g = *s.g;
  MultiplicityTables tables(s.basis, s.kostant, Window{3});
  auto elements = tables.window().elements(g);
  const auto& rd = g.root_datum();
  for (std::int64_t n = -2; n <= 4; ++n) {
    Weight nu{n}, bigger{n + 2};  // nu + alpha
    for (const auto& x : elements)
      for (const auto& y : elements) {
        Poly value = *tables.verma_in_projective(x, y, nu);
        bool allowed = rd.dominance_leq(g.dot_action(y, rd.zero(), 3), 3 * nu);
        if (!allowed) CHECK(value.is_zero());
        else CHECK(value == generic_polynomial(*s.basis, *s.kostant, g.left_longest(y), g.left_longest(x),
                                              GenericKind::qprime));
        if (x == y && allowed) CHECK(value == Poly(1));
        // Enlarging nu keeps nonzero entries.
        if (!value.is_zero()) CHECK_FALSE(tables.verma_in_projective(x, y, bigger)->is_zero());
      }
  }
}

TEST_CASE("translation invariance of multiplicity tables") {
  auto s = setup(CartanType::A, 2, 5);
  const auto& g = *s.g;
  MultiplicityTables tables(s.basis, s.kostant, Window{2}, 4);
  auto inner = Window{1}.elements(g);
  Weight nu = g.root_datum().fundamental_weight(0);
  Weight trunc = g.root_datum().rho();
  for (const auto& x : inner)
    for (const auto& y : inner) {
      auto tx = g.left_translate(nu, x), ty = g.left_translate(nu, y);
      CHECK(tables.simple_in_verma(tx, ty) == tables.simple_in_verma(x, y));
      CHECK(tables.baby_verma_in_projective(tx, ty) == tables.baby_verma_in_projective(x, y));
      // Translating by nu moves y ._l 0 by l nu, so the truncation moves by nu.
      CHECK(tables.verma_in_projective(tx, ty, trunc + nu) == tables.verma_in_projective(x, y, trunc));
    }
}

TEST_CASE("simple-in-verma inverts the signed baby-verma matrix") {
  auto s = setup(CartanType::A, 1, 3);
  const auto& g = *s.g;
  MultiplicityTables tables(s.basis, s.kostant, Window{3});
  auto all = tables.window().elements(g);
  for (const auto& y : Window{1}.elements(g))
    for (const auto& z : Window{1}.elements(g)) {
      // sum_x (-1)^{l(x)+l(y)} q_{x,y} p_{w0 x, w0 z}
      Poly total;
      for (const auto& x : all) {
        Poly term = *tables.simple_in_verma(g.left_longest(x), g.left_longest(y)) * *tables.baby_verma_in_projective(x, z);
        total += (g.length(x) + g.length(y)) % 2 ? -term : term;
      }
      CHECK(total == (y == z ? Poly(1) : Poly()));
    }
}

TEST_CASE("build and kind names") {
  auto s = setup(CartanType::A, 1, 3);
  MultiplicityTables tables(s.basis, s.kostant, Window{1});
  for (auto kind : {MultiplicityKind::simple_in_verma, MultiplicityKind::baby_verma_in_projective,
                    MultiplicityKind::simple_in_baby_verma}) {
    CHECK(parse_multiplicity_kind(to_string(kind)) == kind);
    auto t = tables.build(kind);
    CHECK(t.entries.size() >= tables.window().elements(*s.g).size());
  }
  CHECK_THROWS_AS(tables.build(MultiplicityKind::verma_in_projective), InputError);
  auto t = tables.build(MultiplicityKind::verma_in_projective, Weight{1});
  CHECK(t.nu == Weight{1});
  CHECK_THROWS_AS(parse_multiplicity_kind("x"), InputError);
}
