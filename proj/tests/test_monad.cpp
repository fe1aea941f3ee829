#include <doctest.h>

#include "twocat/bimodule.hpp"
#include "twocat/fixtures.hpp"
#include "twocat/morphism.hpp"

using namespace twocat;
namespace fx = twocat::fixtures;

namespace {

NatTrans cell_on_bz2(const FinFunctor& src, const FinFunctor& dst, const char* name) {
  NatTrans n;
  n.source = src;
  n.target = dst;
  n.components = {fx::bz2()->morphism_index(name)};
  return n;
}

} // namespace

TEST_CASE("monad law checker") {
  CHECK(check_monad(fx::clos_c()).ok());
  CHECK(check_monad(fx::clos_top()).ok());
  CHECK(check_monad(fx::cA()).ok());
  CHECK(check_monad(fx::cB()).ok());
  CHECK(check_monad(fx::sgn()).ok());
  CHECK(check_monad(identity_monad(fx::chain3())).ok());

  // identity endofunctor with eta = s and mu = 1 breaks the unit laws
  Monad broken = fx::sgn();
  broken.mult.components = {0};
  auto r = check_monad(broken);
  CHECK_FALSE(r.ok());
  bool unit_violation = false;
  for (const auto& v : r.violations)
    if (v.law.rfind("unit law", 0) == 0) unit_violation = true;
  CHECK(unit_violation);
}

TEST_CASE("n-ary multiplication") {
  auto sgn = fx::sgn();
  CHECK(nary_mult(sgn, 0) == sgn.unit);
  CHECK(nary_mult(sgn, 1) == identity_nat(sgn.endo));
  CHECK(nary_mult(sgn, 2) == sgn.mult);

  // independent oracle: the n-ary component in a one-object category is the
  // (n-1)-fold product of the multiplication component
  const auto& b = *fx::bz2();
  auto fold = [&](int n) {
    int acc = b.id_mor(0);
    for (int k = 1; k < n; ++k) acc = b.compose(acc, sgn.mult.at(0));
    return acc;
  };
  for (int n = 1; n <= 5; ++n) CHECK(nary_mult(sgn, n).at(0) == fold(n));
  CHECK(b.mor_name(nary_mult(sgn, 3).at(0)) == "1");
  CHECK(b.mor_name(nary_mult(sgn, 4).at(0)) == "s");

  CHECK(nary_mult(fx::clos_c(), 0) == fx::clos_c().unit);

  // bracketing independence for n <= 4 (all bracketings of clos_c and sgn)
  for (const Monad& m : {fx::sgn(), fx::clos_c()}) {
    // (mu . (mu;T)) . ((mu;T);T) vs mixed bracketings built by hand
    NatTrans left3 = vertical(whisker_right(m.mult, m.endo), m.mult);
    NatTrans right3 = vertical(whisker_left(m.endo, m.mult), m.mult);
    CHECK(left3.components == right3.components);
    CHECK(nary_mult(m, 3).components == left3.components);
    NatTrans mid4 = vertical(whisker_both(m.endo, m.mult, m.endo),
                             vertical(whisker_right(m.mult, m.endo), m.mult));
    CHECK(nary_mult(m, 4).components == mid4.components);
  }
}

TEST_CASE("monad map law checker") {
  // the pointwise-below cell clos_c => clos_top, components forced
  auto cc = fx::clos_c();
  auto ct = fx::clos_top();
  NatTrans phi;
  phi.source = cc.endo;
  phi.target = ct.endo;
  for (std::size_t x = 0; x < 3; ++x)
    phi.components.push_back(
        fx::chain3()->hom(cc.endo.obj(static_cast<int>(x)), ct.endo.obj(static_cast<int>(x)))
            .front());
  CHECK(check_monad_map(MonadMap{cc, ct, phi}).ok());

  CHECK(check_monad_map(identity_monad_map(fx::sgn())).ok());

  auto sgn = fx::sgn();
  MonadMap bad{sgn, sgn, cell_on_bz2(sgn.endo, sgn.endo, "s")};
  auto r = check_monad_map(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.violations.front().law == "unit equation");
}

TEST_CASE("module law checker") {
  // the inclusion with the forced closure action
  auto cc = fx::clos_c();
  auto incl = fx::fix_incl();
  NatTrans rho;
  rho.source = compose_functors(incl, cc.endo);
  rho.target = incl;
  rho.components = {fx::chain3()->id_mor(1), fx::chain3()->id_mor(2)};
  CHECK(check_module(ModuleStr{Side::right, cc, incl, rho}).ok());

  auto sgn = fx::sgn();
  auto idb = identity_functor(fx::bz2());
  ModuleStr with_s{Side::right, sgn, idb, cell_on_bz2(compose_functors(idb, sgn.endo), idb, "s")};
  CHECK(check_module(with_s).ok());

  ModuleStr with_1{Side::right, sgn, idb, cell_on_bz2(compose_functors(idb, sgn.endo), idb, "1")};
  auto r = check_module(with_1);
  CHECK_FALSE(r.ok());
  bool unit_s_vs_1 = false;
  for (const auto& v : r.violations)
    if (v.law == "module unit law" && ((v.lhs == "s" && v.rhs == "1") || (v.lhs == "1" && v.rhs == "s")))
      unit_s_vs_1 = true;
  CHECK(unit_s_vs_1);
}

TEST_CASE("bimodule law checker") {
  for (auto& [name, m] : fx::all_monads())
    CHECK(check_bimodule(monad_as_bimodule(m)).ok());

  Bimodule bad = monad_as_bimodule(fx::sgn());
  bad.right_action.components = {0};  // 1 instead of s
  auto r = check_bimodule(bad);
  CHECK_FALSE(r.ok());
  bool s_vs_1 = false;
  for (const auto& v : r.violations)
    if ((v.lhs == "s" && v.rhs == "1") || (v.lhs == "1" && v.rhs == "s")) s_vs_1 = true;
  CHECK(s_vs_1);
}

TEST_CASE("bimodule actions from the joint action") {
  auto sgn_bim = monad_as_bimodule(fx::sgn());
  NatTrans joint = bimodule_joint_action(sgn_bim);
  CHECK(fx::bz2()->mor_name(joint.at(0)) == "1");  // s then s
  Bimodule back =
      bimodule_from_joint(sgn_bim.left_monad, sgn_bim.right_monad, sgn_bim.carrier, joint);
  CHECK(back.left_action == sgn_bim.left_action);
  CHECK(back.right_action == sgn_bim.right_action);

  auto idm = identity_monad(fx::chain3());
  auto id_bim = monad_as_bimodule(idm);
  CHECK(bimodule_joint_action(id_bim) == identity_nat(idm.endo));

  auto clos_bim = monad_as_bimodule(fx::clos_c());
  Bimodule back2 = bimodule_from_joint(clos_bim.left_monad, clos_bim.right_monad,
                                       clos_bim.carrier, bimodule_joint_action(clos_bim));
  CHECK(back2.left_action == clos_bim.left_action);
  CHECK(back2.right_action == clos_bim.right_action);
}

TEST_CASE("n-ary bimodule maps") {
  // n = 1: the identity cell on the sgn self-bimodule
  auto sgn_bim = monad_as_bimodule(fx::sgn());
  BimoduleMapNAry one;
  one.inputs = {sgn_bim};
  one.output = sgn_bim;
  one.cell = identity_nat(sgn_bim.carrier);
  CHECK(check_bimodule_map(one).ok());

  // n = 0 into a monad-as-bimodule with the unit as cell
  auto clos = fx::clos_c();
  BimoduleMapNAry zero;
  zero.anchor = clos;
  zero.output = monad_as_bimodule(clos);
  zero.cell = clos.unit;
  CHECK(check_bimodule_map(zero).ok());

  // and with a wrong cell it fails
  BimoduleMapNAry zero_bad = zero;
  zero_bad.cell.components[0] = fx::chain3()->morphism_index("0<=2");
  CHECK_FALSE(check_bimodule_map(zero_bad).ok());

  // n = 2: the multiplication as a map from the path (T, T) to T
  BimoduleMapNAry two;
  two.inputs = {monad_as_bimodule(clos), monad_as_bimodule(clos)};
  two.output = monad_as_bimodule(clos);
  two.cell = clos.mult;
  CHECK(check_bimodule_map(two).ok());

  // colax boundaries: the n = 0 case with identity colax cells agrees
  BimoduleMapNAry zero_colax = zero;
  zero_colax.left_boundary = identity_colax(clos);
  zero_colax.right_boundary = identity_colax(clos);
  CHECK(check_bimodule_map(zero_colax).ok());
}

TEST_CASE("colax-boundary bimodule maps agree with the specialization checker") {
  // a length-zero map with colax boundaries into a monad-as-bimodule is a
  // specialization between the boundary colax 1-cells; the square checker
  // computes the same law through an independent pasting
  auto sgn = fx::sgn();
  std::vector<ColaxMorphism> colaxes;
  for (const auto& g : enumerate_functors(fx::bz2(), fx::bz2()))
    for (const auto& xi : enumerate_nat_trans(compose_functors(sgn.endo, g),
                                              compose_functors(g, sgn.endo))) {
      ColaxMorphism c{sgn, sgn, g, xi};
      if (check_lax(c).ok()) colaxes.push_back(c);
    }
  REQUIRE(colaxes.size() == 2);
  int agreements = 0;
  for (const auto& fr : colaxes)
    for (const auto& fl : colaxes)
      for (const auto& cell :
           enumerate_nat_trans(fr.carrier,
                               compose_functors(fl.carrier, sgn.endo))) {
        BimoduleMapNAry m;
        m.anchor = sgn;
        m.output = monad_as_bimodule(sgn);
        m.left_boundary = fl;
        m.right_boundary = fr;
        m.cell = cell;
        bool as_map = check_bimodule_map(m).ok();

        SquareCell q;
        q.kind = CellKind::specialization;
        q.top = identity_lax(sgn);
        q.right = fr;
        q.left = fl;
        q.bottom = identity_lax(sgn);
        q.cell = cell;
        bool as_square = check_square(q).ok();
        CHECK(as_map == as_square);
        ++agreements;
      }
  CHECK(agreements > 0);
}

TEST_CASE("lax views and their inverses") {
  // monad map clos_c => clos_top as an identity-carried lax cell
  auto cc = fx::clos_c();
  auto ct = fx::clos_top();
  NatTrans phi;
  phi.source = cc.endo;
  phi.target = ct.endo;
  for (std::size_t x = 0; x < 3; ++x)
    phi.components.push_back(
        fx::chain3()->hom(cc.endo.obj(static_cast<int>(x)), ct.endo.obj(static_cast<int>(x)))
            .front());
  MonadMap h{cc, ct, phi};
  LaxMorphism view = as_lax_view(h);
  CHECK(same_monad(view.source_monad, ct));
  CHECK(same_monad(view.target_monad, cc));
  CHECK(check_lax(view).ok());
  MonadMap back = monad_map_from_lax(view);
  CHECK(back.cell == phi);

  // right module as a lax cell from an identity monad
  auto incl = fx::fix_incl();
  NatTrans rho;
  rho.source = compose_functors(incl, cc.endo);
  rho.target = incl;
  rho.components = {fx::chain3()->id_mor(1), fx::chain3()->id_mor(2)};
  ModuleStr mod{Side::right, cc, incl, rho};
  LaxMorphism view2 = as_lax_view(mod);
  CHECK(check_lax(view2).ok());
  ModuleStr back2 = module_from_lax(view2);
  CHECK(back2.action == rho);

  // bare 1-cell as a lax cell into an identity monad
  LaxMorphism view3 = as_lax_view(incl);
  CHECK(check_lax(view3).ok());
  CHECK(functor_from_lax(view3) == incl);
  LaxMorphism view4 = as_lax_view(incl, identity_monad(fx::sub2()));
  CHECK(view4.structure == view3.structure);
}
