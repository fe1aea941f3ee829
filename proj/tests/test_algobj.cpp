#include <doctest.h>

#include "twocat/algobj.hpp"
#include "twocat/fixtures.hpp"

using namespace twocat;
namespace fx = twocat::fixtures;

namespace {

ModuleStr incl_module() {
  auto cc = fx::clos_c();
  auto incl = fx::fix_incl();
  NatTrans rho;
  rho.source = compose_functors(incl, cc.endo);
  rho.target = incl;
  rho.components = {fx::chain3()->id_mor(1), fx::chain3()->id_mor(2)};
  return ModuleStr{Side::right, cc, incl, rho};
}

} // namespace

TEST_CASE("algebra objects") {
  // fixed points of the closure
  AlgebraObject a = construct_em(fx::clos_c());
  CHECK(a.em_category->objects.size() == 2);
  CHECK(validate_category(*a.em_category).ok());
  CHECK(find_isomorphism(a.em_category, fx::sub2()).has_value());
  CHECK(check_module(universal_module(a)).ok());

  // the identity monad reproduces its base
  AlgebraObject ai = construct_em(identity_monad(fx::chain3()));
  CHECK(find_isomorphism(ai.em_category, fx::chain3()).has_value());

  // sgn has one algebra and two endomorphisms of it
  AlgebraObject as = construct_em(fx::sgn());
  CHECK(as.em_category->objects.size() == 1);
  CHECK(as.em_category->morphisms.size() == 2);
  CHECK(find_isomorphism(as.em_category, fx::bz2()).has_value());
}

TEST_CASE("opalgebra objects") {
  // a -> b iff a <= c(b): 0 and 1 become isomorphic below 2
  OpalgebraObject o = construct_kleisli(fx::clos_c());
  CHECK(validate_category(*o.kl_category).ok());
  const auto& kl = *o.kl_category;
  CHECK(kl.objects.size() == 3);
  CHECK(kl.hom(0, 1).size() == 1);
  CHECK(kl.hom(1, 0).size() == 1);
  CHECK(kl.hom(2, 0).empty());
  CHECK(check_module(universal_opmodule(o)).ok());

  OpalgebraObject oi = construct_kleisli(identity_monad(fx::chain3()));
  CHECK(find_isomorphism(oi.kl_category, fx::chain3()).has_value());

  // twisted composition over the sign monad
  OpalgebraObject os = construct_kleisli(fx::sgn());
  CHECK(os.kl_category->objects.size() == 1);
  CHECK(os.kl_category->morphisms.size() == 2);
  CHECK(validate_category(*os.kl_category).ok());
  // (1@) ; (1@) = 1*1*s = s
  int one = 0;  // morphisms in construction order: (1@*), (s@*)
  CHECK(os.underlying[static_cast<std::size_t>(os.kl_category->compose(one, one))] ==
        fx::bz2()->morphism_index("s"));
}

TEST_CASE("module lifting") {
  auto cc = fx::clos_c();
  AlgebraObject a = construct_em(cc);

  // the inclusion corestricts onto the fixed points
  FinFunctor lift = lift_module(a, incl_module(), true);
  CHECK(compose_functors(lift, a.forgetful) == fx::fix_incl());

  // the universal module lifts to the identity
  CHECK(lift_module(a, universal_module(a), true) == identity_functor(a.em_category));

  // the sgn module with action s lands on the unique algebra
  auto sgn = fx::sgn();
  AlgebraObject as = construct_em(sgn);
  auto idb = identity_functor(fx::bz2());
  NatTrans rho{compose_functors(idb, sgn.endo), idb, {fx::bz2()->morphism_index("s")}};
  ModuleStr mod{Side::right, sgn, idb, rho};
  FinFunctor lift2 = lift_module(as, mod, true);
  CHECK(lift2.on_objects == std::vector<int>{0});

  // module maps lift with the same underlying components
  NatTrans idmap = identity_nat(idb);
  NatTrans lifted = lift_module_map(as, mod, mod, idmap);
  CHECK(lifted == identity_nat(lift2));
  NatTrans smap{idb, idb, {fx::bz2()->morphism_index("s")}};
  REQUIRE(check_module_map(mod, mod, smap).ok());
  NatTrans lifted_s = lift_module_map(as, mod, mod, smap);
  CHECK(as.forgetful.mor(lifted_s.at(0)) == fx::bz2()->morphism_index("s"));
}

TEST_CASE("forgetful 1-cells are faithful for every fixture monad") {
  for (auto& [name, m] : fx::all_monads()) {
    CAPTURE(name);
    AlgebraObject a = construct_em(m);
    const auto& em = *a.em_category;
    for (std::size_t f = 0; f < em.morphisms.size(); ++f)
      for (std::size_t g = f + 1; g < em.morphisms.size(); ++g) {
        if (em.src(static_cast<int>(f)) != em.src(static_cast<int>(g)) ||
            em.dst(static_cast<int>(f)) != em.dst(static_cast<int>(g)))
          continue;
        CHECK(a.forgetful.mor(static_cast<int>(f)) != a.forgetful.mor(static_cast<int>(g)));
      }
  }
}

TEST_CASE("module lifts are unique for the remaining fixture monads") {
  for (const Monad& t : {fx::clos_top(), fx::cA(), fx::cB()}) {
    AlgebraObject a = construct_em(t);
    for (const CatPtr& src : {fx::term(), fx::arrow2(), fx::sub2()}) {
      for (const auto& m : enumerate_functors(src, t.base)) {
        for (const auto& rho : enumerate_nat_trans(compose_functors(m, t.endo), m)) {
          ModuleStr s{Side::right, t, m, rho};
          if (!check_module(s).ok()) continue;
          int hits = 0;
          for (const auto& h : enumerate_functors(src, a.em_category))
            if (check_module_factorization(a, s, h).ok()) ++hits;
          CHECK(hits == 1);
          CHECK(check_module_factorization(a, s, lift_module(a, s)).ok());
        }
      }
    }
  }
}

TEST_CASE("free resolutions") {
  for (auto& [name, m] : fx::all_monads()) {
    CAPTURE(name);
    AlgebraObject a = construct_em(m);
    Resolution r = free_resolution(a);
    CHECK(check_resolution(r).ok());
  }
  // the identity monad's resolution is an identity adjunction up to iso
  AlgebraObject ai = construct_em(identity_monad(fx::term()));
  Resolution ri = free_resolution(ai);
  CHECK(compose_functors(ri.left, ri.right) == identity_functor(fx::term()));
}

TEST_CASE("comparison functors") {
  auto cc = fx::clos_c();
  AlgebraObject a = construct_em(cc);
  Resolution r = free_resolution(a);
  FinFunctor k = comparison_functor(a, r, true);
  CHECK(k == identity_functor(a.em_category));

  AlgebraObject ai = construct_em(identity_monad(fx::chain3()));
  FinFunctor ki = comparison_functor(ai, free_resolution(ai), true);
  CHECK(ki == identity_functor(ai.em_category));
}

TEST_CASE("lifting lax cells to algebra objects") {
  // identity-carried cell clos_c -> identity monad lifts to the inclusion of
  // the fixed points
  auto cc = fx::clos_c();
  auto idm = identity_monad(fx::chain3());
  AlgebraObject a1 = construct_em(cc);
  AlgebraObject a2 = construct_em(idm);
  LaxMorphism l{cc, idm, identity_functor(fx::chain3()), cc.unit};
  REQUIRE(check_lax(l).ok());
  FinFunctor lifted = emlift_lax(a1, a2, l);
  CHECK(compose_functors(lifted, a2.forgetful) == compose_functors(a1.forgetful, l.carrier));
  // object images are the fixed points 1 and 2
  CHECK(a2.forgetful.obj(lifted.obj(0)) == 1);
  CHECK(a2.forgetful.obj(lifted.obj(1)) == 2);
  LaxMorphism back = emlift_lax_inverse(a1, a2, l.carrier, lifted);
  CHECK(back.structure == l.structure);

  // the identity lax cell lifts to the identity functor
  AlgebraObject as = construct_em(fx::sgn());
  CHECK(emlift_lax(as, as, identity_lax(fx::sgn())) == identity_functor(as.em_category));

  // specializations over sgn: sigma pastes with the algebra structure, so
  // sigma = s lifts to the cell over s*s = 1 and sigma = 1 to the cell over s;
  // both round trips are exact
  auto sgn = fx::sgn();
  auto il = identity_lax(sgn);
  for (const char* comp : {"s", "1"}) {
    NatTrans sigma{il.carrier, compose_functors(sgn.endo, il.carrier),
                   {fx::bz2()->morphism_index(comp)}};
    SquareCell q = em_cell(il, il, sigma);
    REQUIRE(check_square(q).ok());
    NatTrans lifted_cell = emlift_cell(as, as, q);
    int expected = fx::bz2()->compose(sigma.at(0), as.forgetful_action.at(0));
    CHECK(as.forgetful.mor(lifted_cell.at(0)) == expected);
    SquareCell back2 = emlift_cell_inverse(as, as, il, il, lifted_cell, CellKind::specialization);
    CHECK(back2.cell == sigma);
  }
}

TEST_CASE("lifting bimodules through Kleisli and algebra objects") {
  // the (T,T)-bimodule T itself for clos_c
  auto cc = fx::clos_c();
  OpalgebraObject o = construct_kleisli(cc);
  AlgebraObject a = construct_em(cc);
  FinFunctor h = lift_bimodule(monad_as_bimodule(cc), o, a);
  // 0 and 1 land on the fixed point 1, and 2 on 2
  CHECK(a.forgetful.obj(h.obj(0)) == 1);
  CHECK(a.forgetful.obj(h.obj(1)) == 1);
  CHECK(a.forgetful.obj(h.obj(2)) == 2);

  // identity monad: the lift relates the two trivial universal objects
  auto idm = identity_monad(fx::chain3());
  FinFunctor hid = lift_bimodule(monad_as_bimodule(idm), construct_kleisli(idm),
                                 construct_em(idm));
  CHECK(validate_functor(hid).ok());

  // sgn self-bimodule: morphism images carry f -> f * mu
  auto sgn = fx::sgn();
  OpalgebraObject os = construct_kleisli(sgn);
  AlgebraObject as = construct_em(sgn);
  FinFunctor hs = lift_bimodule(monad_as_bimodule(sgn), os, as);
  // Kleisli morphism over 1 maps to the algebra morphism over 1*s = s
  CHECK(as.forgetful.mor(hs.mor(0)) == fx::bz2()->morphism_index("s"));
  CHECK(as.forgetful.mor(hs.mor(1)) == fx::bz2()->morphism_index("1"));

  // unary bimodule maps lift to 2-cells between the lifts; the evident
  // restriction along the universal 1-cells recovers the map, and the two
  // sides have the same cardinality
  std::vector<NatTrans> maps;
  for (const auto& phi : enumerate_nat_trans(sgn.endo, sgn.endo)) {
    BimoduleMapNAry m;
    m.inputs = {monad_as_bimodule(sgn)};
    m.output = monad_as_bimodule(sgn);
    m.cell = phi;
    if (!check_bimodule_map(m).ok()) continue;
    maps.push_back(phi);
    NatTrans cell = lift_bimodule_map(m, os, as);
    CHECK(validate_nat_trans(cell).ok());
    for (std::size_t x = 0; x < os.kl_category->objects.size(); ++x)
      CHECK(as.forgetful.mor(cell.at(static_cast<int>(x))) == phi.at(static_cast<int>(x)));
  }
  CHECK(maps.size() == 2);
  CHECK(enumerate_nat_trans(hs, hs).size() == maps.size());
}
