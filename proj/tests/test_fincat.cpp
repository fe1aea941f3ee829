#include <doctest.h>

#include <random>

#include "twocat/fixtures.hpp"
#include "twocat/paste.hpp"

using namespace twocat;
namespace fx = twocat::fixtures;

namespace {

// Independent cone-factorization oracle: a cone is limiting iff every cone
// factors through it by exactly one morphism, checked from scratch.
bool oracle_is_limiting(const FinFunctor& diagram, const Cone& cand) {
  const auto& c = *diagram.target;
  for (const auto& k : enumerate_cones(diagram)) {
    int count = 0;
    for (std::size_t h = 0; h < c.morphisms.size(); ++h) {
      if (c.src(static_cast<int>(h)) != k.apex || c.dst(static_cast<int>(h)) != cand.apex)
        continue;
      bool factors = true;
      for (std::size_t o = 0; o < cand.legs.size(); ++o)
        if (c.compose(static_cast<int>(h), cand.legs[o]) != k.legs[o]) factors = false;
      if (factors) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

FinFunctor constant_functor(const CatPtr& a, const CatPtr& b, int obj) {
  FinFunctor f;
  f.source = a;
  f.target = b;
  f.on_objects.assign(a->objects.size(), obj);
  f.on_morphisms.assign(a->morphisms.size(), b->id_mor(obj));
  return f;
}

} // namespace

TEST_CASE("category validation") {
  CHECK(validate_category(*fx::chain3()).ok());
  CHECK(validate_category(*fx::term()).ok());
  CHECK(validate_category(*fx::pair_cat()).ok());
  CHECK(validate_category(*fx::sq()).ok());
  CHECK(validate_category(*fx::bz2()).ok());

  FinCategory broken = *fx::chain3();
  int f = broken.morphism_index("0<=1");
  int g = broken.morphism_index("1<=2");
  broken.compose_tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] =
      broken.morphism_index("id0");
  auto r = validate_category(broken);
  CHECK_FALSE(r.ok());
  bool names_mismatch = false;
  for (const auto& v : r.violations)
    if (v.law.find("mismatch") != std::string::npos || v.law.find("unit") != std::string::npos)
      names_mismatch = true;
  CHECK(names_mismatch);
}

TEST_CASE("functor composition") {
  auto incl = fx::fix_incl();
  CHECK(compose_functors(incl, identity_functor(fx::chain3())) == incl);

  auto clos = fx::clos_c().endo;
  auto cc = compose_functors(clos, clos);
  CHECK(cc.on_objects == std::vector<int>{1, 1, 2});
  CHECK(cc == clos);  // the closure is idempotent

  auto c0 = constant_functor(fx::pair_cat(), fx::pair_cat(), 0);
  auto c1 = constant_functor(fx::pair_cat(), fx::pair_cat(), 1);
  CHECK(compose_functors(c0, c1) == c1);
}

TEST_CASE("pasting operations") {
  auto clos = fx::clos_c();
  auto idn = identity_nat(clos.endo);
  CHECK(vertical(idn, idn) == idn);

  // horizontal composite of the sgn unit with itself: s then s is 1
  auto sgn = fx::sgn();
  auto h = horizontal(sgn.unit, sgn.unit);
  CHECK(fx::bz2()->mor_name(h.at(0)) == "1");

  // whiskering the closure unit by the closure: component at 0 lands in hom(1,1)
  auto w = whisker_left(clos.endo, clos.unit);
  CHECK(fx::chain3()->mor_name(w.at(0)) == "id1");

  CHECK(paste(vert(id_expr(clos.endo), id_expr(clos.endo))) == idn);
  CHECK_THROWS_AS(vertical(clos.unit, clos.unit), BoundaryError);
}

TEST_CASE("interchange on random well-formed expressions") {
  std::mt19937_64 rng(7);
  std::vector<CatPtr> cats = {fx::term(), fx::arrow2(), fx::chain3(), fx::bz2(), fx::pair_cat()};
  int done = 0;
  int guard = 0;
  while (done < 100 && guard++ < 4000) {
    const auto& a = cats[rng() % cats.size()];
    const auto& b = cats[rng() % cats.size()];
    const auto& c = cats[rng() % cats.size()];
    auto fs = enumerate_functors(a, b);
    auto gs = enumerate_functors(b, c);
    if (fs.empty() || gs.empty()) continue;
    const auto& f1 = fs[rng() % fs.size()];
    const auto& f2 = fs[rng() % fs.size()];
    const auto& f3 = fs[rng() % fs.size()];
    const auto& g1 = gs[rng() % gs.size()];
    const auto& g2 = gs[rng() % gs.size()];
    const auto& g3 = gs[rng() % gs.size()];
    auto ab = enumerate_nat_trans(f1, f2);
    auto bc = enumerate_nat_trans(f2, f3);
    auto ab2 = enumerate_nat_trans(g1, g2);
    auto bc2 = enumerate_nat_trans(g2, g3);
    if (ab.empty() || bc.empty() || ab2.empty() || bc2.empty()) continue;
    auto alpha = ab[rng() % ab.size()];
    auto beta = bc[rng() % bc.size()];
    auto gamma = ab2[rng() % ab2.size()];
    auto delta = bc2[rng() % bc2.size()];

    auto lhs = paste(horiz(vert(leaf(alpha), leaf(beta)), vert(leaf(gamma), leaf(delta))));
    auto rhs = paste(vert(horiz(leaf(alpha), leaf(gamma)), horiz(leaf(beta), leaf(delta))));
    REQUIRE(lhs.components == rhs.components);
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("enumeration counts and determinism") {
  auto fs = enumerate_functors(fx::pair_cat(), fx::pair_cat());
  CHECK(fs.size() == 6);
  CHECK(enumerate_functors(fx::pair_cat(), fx::pair_cat()) == fs);

  // independent count of monotone endomaps of the 3-chain
  auto endos = enumerate_functors(fx::chain3(), fx::chain3());
  int monotone = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (a <= b && b <= c) ++monotone;
  CHECK(static_cast<int>(endos.size()) == monotone);
  CHECK(endos.size() == 10);

  auto idt = identity_functor(fx::term());
  CHECK(enumerate_nat_trans(idt, idt).size() == 1);

  EnumCap tiny{3};
  CHECK_THROWS_AS(enumerate_functors(fx::chain3(), fx::chain3(), tiny), CapExceeded);
}

TEST_CASE("limits by exhaustive cone search") {
  // product of 1 and 2 in chain3: diagram over the 2-object discrete shape
  auto disc2 = std::make_shared<FinCategory>(
      fx::make_poset({"l", "r"}, [](int x, int y) { return x == y; }));
  FinFunctor d;
  d.source = disc2;
  d.target = fx::chain3();
  d.on_objects = {1, 2};
  d.on_morphisms = {fx::chain3()->id_mor(1), fx::chain3()->id_mor(2)};
  auto lim = limit(d);
  REQUIRE(lim.has_value());
  CHECK(fx::chain3()->obj_name(lim->apex) == "1");

  // empty diagram: the terminal object is the top of the chain
  auto empty_cat = std::make_shared<FinCategory>(FinCategory{});
  FinFunctor e;
  e.source = empty_cat;
  e.target = fx::chain3();
  auto terminal = limit(e);
  REQUIRE(terminal.has_value());
  CHECK(fx::chain3()->obj_name(terminal->apex) == "2");

  // equalizer of the parallel pair: absent
  FinFunctor idp = identity_functor(fx::pair_cat());
  CHECK_FALSE(limit(idp).has_value());
}

TEST_CASE("limit agrees with the cone-factorization oracle") {
  // shapes up to four objects
  std::vector<CatPtr> shapes = {fx::term(), fx::arrow2(), fx::pair_cat(), fx::chain3(),
                                fx::sq()};
  auto disc2 = std::make_shared<FinCategory>(
      fx::make_poset({"l", "r"}, [](int x, int y) { return x == y; }));
  shapes.push_back(disc2);
  std::vector<CatPtr> targets = {fx::chain3(), fx::sq(), fx::pair_cat(), fx::bz2()};
  for (const auto& shape : shapes)
    for (const auto& target : targets)
      for (const auto& diagram : enumerate_functors(shape, target)) {
        auto lim = limit(diagram);
        if (lim) {
          CHECK(oracle_is_limiting(diagram, *lim));
        } else {
          for (const auto& cand : enumerate_cones(diagram))
            CHECK_FALSE(oracle_is_limiting(diagram, cand));
        }
      }
}

TEST_CASE("isomorphism search") {
  auto idpair = find_isomorphism(fx::chain3(), fx::chain3());
  REQUIRE(idpair.has_value());
  CHECK(idpair->first == identity_functor(fx::chain3()));

  CHECK_FALSE(find_isomorphism(fx::chain3(), fx::pair_cat()).has_value());
}

TEST_CASE("adjunction checker") {
  CHECK(check_adjunction(identity_adjunction(fx::chain3())).ok());

  // closure ⊣ inclusion for chain3
  Adjunction adj;
  adj.right = fx::fix_incl();
  adj.left.source = fx::chain3();
  adj.left.target = fx::sub2();
  adj.left.on_objects = {0, 0, 1};
  const auto& sub = *fx::sub2();
  const auto& ch = *fx::chain3();
  for (std::size_t m = 0; m < ch.morphisms.size(); ++m)
    adj.left.on_morphisms.push_back(
        sub.hom(adj.left.obj(ch.src(static_cast<int>(m))),
                adj.left.obj(ch.dst(static_cast<int>(m))))
            .front());
  adj.unit = fx::clos_c().unit;
  adj.unit.target = compose_functors(adj.left, adj.right);
  adj.counit.source = compose_functors(adj.right, adj.left);
  adj.counit.target = identity_functor(fx::sub2());
  adj.counit.components = {sub.id_mor(0), sub.id_mor(1)};
  CHECK(check_adjunction(adj).ok());

  // broken unit fails a snake equation
  Adjunction bad = adj;
  bad.unit.components[0] = ch.morphism_index("0<=2");
  CHECK_FALSE(check_adjunction(bad).ok());
}
