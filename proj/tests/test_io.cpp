#include "pkl/io.hpp"

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

}  // namespace

TEST_CASE("polynomial encoding") {
  Poly p = Poly::parse("-v^-1 + 3 + 2*v^5");
  auto j = io::to_json(p);
  CHECK(j.dump() == R"({"-1":-1,"0":3,"5":2})");
  CHECK(io::poly_from_json(j) == p);
  CHECK(io::poly_from_json(io::to_json(Poly())) == Poly());
  Poly big = Poly::monomial(2, scalar_from_decimal<BigInt>("123456789012345678901234567890"));
  CHECK(io::to_json(big)["2"].is_string());
  CHECK(io::poly_from_json(io::to_json(big)) == big);
  CHECK(io::poly_from_json(nlohmann::json("1 + v")) == Poly{{0, 1}, {1, 1}});
  CHECK_THROWS_AS(io::poly_from_json(nlohmann::json::parse(R"({"0":0})")), InputError);
  CHECK_THROWS_AS(io::poly_from_json(nlohmann::json::parse(R"({"a":1})")), InputError);
  CHECK_THROWS_AS(io::poly_from_json(nlohmann::json(3)), InputError);
}

TEST_CASE("combination round trip") {
  auto s = setup(CartanType::A, 2, 5);
  for (const auto& r : s.basis->representatives()) {
    auto j = io::to_json(*s.g, r);
    CHECK(io::combination_from_json<PeriodicTag>(*s.g, j) == r);
  }
  auto reps = io::representatives_from_json(*s.g, io::representatives_to_json(*s.g, s.basis->representatives()));
  CHECK(reps == s.basis->representatives());
  auto a1 = std::make_shared<AffineWeylGroup>(RootDatum::make_shared(CartanType::A, 1, 3));
  CHECK_THROWS_AS(io::representatives_from_json(*a1, io::representatives_to_json(*s.g, reps)), InputError);
}

TEST_CASE("table round trip and determinism") {
  auto s = setup(CartanType::A, 1, 3);
  const auto& g = *s.g;
  for (auto kind : {TableKind::periodic_p, TableKind::generic_q, TableKind::generic_qprime}) {
    auto t = build_table(*s.basis, *s.kostant, kind, Window{2});
    auto j = io::to_json(g, t);
    CHECK(io::polynomial_table_from_json(g, j) == t);
    CHECK(io::dump(j) == io::dump(io::to_json(g, build_table(*s.basis, *s.kostant, kind, Window{2}, 3))));
    CHECK(io::polynomial_table_from_json(g, nlohmann::json::parse(io::dump(j))) == t);
  }
  MultiplicityTables tables(s.basis, s.kostant, Window{2, 0});
  for (auto kind : {MultiplicityKind::simple_in_verma, MultiplicityKind::baby_verma_in_projective,
                    MultiplicityKind::simple_in_baby_verma}) {
    auto t = tables.build(kind);
    CHECK(io::multiplicity_table_from_json(g, io::to_json(g, t)) == t);
  }
  auto t = tables.build(MultiplicityKind::verma_in_projective, Weight{2});
  CHECK(io::multiplicity_table_from_json(g, io::to_json(g, t)) == t);
}

TEST_CASE("csv and blocks") {
  auto s = setup(CartanType::A, 1, 3);
  auto t = build_table(*s.basis, *s.kostant, TableKind::periodic_p, Window{0});
  auto csv = io::to_csv(*s.g, t);
  CHECK(csv.rfind("y,x,p\n", 0) == 0);
  CHECK(csv.find("t(0)*w[1],t(0)*w[],v\n") != std::string::npos);
  auto blocks = enumerate_blocks(*s.g);
  CHECK(io::to_json(blocks).size() == 4);
  CHECK(io::to_csv(blocks) ==
        "representative,stabilizer,regular,extended_class\n"
        "(-1),{s1},false,0\n(0),{},true,1\n(1),{},true,1\n(2),{s0},false,0\n");
}

TEST_CASE("hasse diagram") {
  auto g = std::make_shared<AffineWeylGroup>(RootDatum::make_shared(CartanType::A, 1, 3));
  SemiInfinitePoset poset(*g, Window{1, 0}, 3);
  auto j = io::hasse_to_json(*g, poset);
  CHECK(j["nodes"].size() == poset.size());
  CHECK(j["edges"].size() == poset.hasse_edges().size());
  CHECK(j["indeterminate_pairs"] == 0);
}
