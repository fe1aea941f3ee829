#include <doctest.h>

#include "twocat/algobj.hpp"
#include "twocat/fixtures.hpp"

using namespace twocat;
namespace fx = twocat::fixtures;

namespace {

LaxMorphism sgn_lax(const char* carrier_s_to, const char* chi) {
  // carrier "s" -> itself (identity functor) or -> "1" (trivial endofunctor)
  auto b = fx::bz2();
  FinFunctor f = identity_functor(b);
  f.on_morphisms[1] = b->morphism_index(carrier_s_to);
  LaxMorphism l;
  l.source_monad = fx::sgn();
  l.target_monad = fx::sgn();
  l.carrier = f;
  l.structure.source = compose_functors(f, l.target_monad.endo);
  l.structure.target = compose_functors(l.source_monad.endo, f);
  l.structure.components = {b->morphism_index(chi)};
  return l;
}

} // namespace

TEST_CASE("lax and colax law checkers") {
  // identity-carried cell clos_c -> identity monad, structure forced by x <= c(x)
  auto cc = fx::clos_c();
  LaxMorphism to_id;
  to_id.source_monad = cc;
  to_id.target_monad = identity_monad(fx::chain3());
  to_id.carrier = identity_functor(fx::chain3());
  to_id.structure = cc.unit;
  CHECK(check_lax(to_id).ok());

  // over sgn the identity carrier admits exactly chi = 1, the trivial
  // carrier exactly chi = s
  CHECK(check_lax(sgn_lax("s", "1")).ok());
  CHECK_FALSE(check_lax(sgn_lax("s", "s")).ok());
  CHECK(check_lax(sgn_lax("1", "s")).ok());
  CHECK_FALSE(check_lax(sgn_lax("1", "1")).ok());

  // no identity-carried cell from the identity monad into clos_c: the
  // structure would need components c(x) -> x
  auto idm = identity_monad(fx::chain3());
  auto candidates = enumerate_nat_trans(compose_functors(identity_functor(fx::chain3()), cc.endo),
                                        identity_functor(fx::chain3()));
  CHECK(candidates.empty());

  CHECK(check_lax(identity_colax(cc)).ok());
  CHECK(check_lax(identity_lax(fx::sgn())).ok());
}

TEST_CASE("square law checker") {
  auto sgn = fx::sgn();
  CHECK(check_square(identity_square_on_lax(identity_lax(sgn), CellKind::two_cell)).ok());
  CHECK(check_square(identity_square_on_lax(identity_lax(sgn), CellKind::specialization)).ok());

  // a specialization between lax cells of clos_c with forced components
  auto cc = fx::clos_c();
  auto il = identity_lax(cc);
  SquareCell spec = em_cell(il, il, whisker_right(cc.unit, il.carrier));
  CHECK(check_square(spec).ok());

  // sigma = s over sgn, the unit-factored specialization
  SquareCell sgn_spec = spec_from_2cell(mnd_cell(identity_lax(sgn), identity_lax(sgn),
                                                 identity_nat(sgn.endo)));
  CHECK(fx::bz2()->mor_name(sgn_spec.cell.at(0)) == "s");
  CHECK(check_square(sgn_spec).ok());

  // boundary mismatch is an error, not a report
  SquareCell broken = spec;
  broken.bottom = identity_lax(fx::clos_top());
  CHECK_FALSE(check_square(broken).ok());
}

TEST_CASE("composition of lax 1-cells") {
  auto cc = fx::clos_c();
  LaxMorphism l = identity_lax(cc);
  CHECK(compose_lax(identity_lax(cc), l).structure == l.structure);

  // pasting of two identity-carried structure cells multiplies components
  LaxMorphism a = sgn_lax("s", "s");  // not lawful, but composition is pure pasting
  LaxMorphism b = sgn_lax("s", "s");
  CHECK(fx::bz2()->mor_name(compose_lax(a, b).structure.at(0)) == "1");

  // lawful poset cells compose to lawful cells
  auto ct = fx::clos_top();
  auto chain = fx::chain3();
  NatTrans chi;
  chi.source = compose_functors(identity_functor(chain), ct.endo);
  chi.target = compose_functors(cc.endo, identity_functor(chain));
  bool exists = true;
  for (int x = 0; x < 3 && exists; ++x) {
    auto h = chain->hom(chi.source.obj(x), chi.target.obj(x));
    if (h.empty())
      exists = false;
    else
      chi.components.push_back(h.front());
  }
  if (exists) {
    LaxMorphism poset{ct, cc, identity_functor(chain), chi};
    if (check_lax(poset).ok()) CHECK(check_lax(compose_lax(poset, identity_lax(cc))).ok());
  }
}

TEST_CASE("composition of squares") {
  auto sgn = fx::sgn();
  auto il = identity_lax(sgn);

  SquareCell idq = identity_square_on_lax(il, CellKind::two_cell);
  SquareCell idq2 = compose_squares(idq, identity_square_on_colax(idq.right, CellKind::two_cell),
                                    SquareDir::lax);
  CHECK(idq2.cell == idq.cell);

  // two sgn specializations with sigma = s compose (lax direction) to s
  NatTrans sigma;
  sigma.source = il.carrier;
  sigma.target = compose_functors(sgn.endo, il.carrier);
  sigma.components = {fx::bz2()->morphism_index("s")};
  SquareCell q = em_cell(il, il, sigma);
  REQUIRE(check_square(q).ok());
  SquareCell qq = compose_squares(q, q, SquareDir::lax);
  CHECK(fx::bz2()->mor_name(qq.cell.at(0)) == "s");
  CHECK(check_square(qq).ok());
  SquareCell qv = compose_squares(q, q, SquareDir::colax);
  CHECK(check_square(qv).ok());

  CHECK_THROWS_AS(compose_squares(idq, q, SquareDir::lax), BoundaryError);
}

TEST_CASE("monad 2-cells to specializations") {
  auto sgn = fx::sgn();
  auto il = identity_lax(sgn);
  SquareCell idc = mnd_cell(il, il, identity_nat(il.carrier));
  SquareCell sp = spec_from_2cell(idc);
  CHECK(sp.cell == whisker_right(sgn.unit, il.carrier));

  // gamma = s on the sgn square: sigma = s then s = 1
  NatTrans gamma;
  gamma.source = il.carrier;
  gamma.target = il.carrier;
  gamma.components = {fx::bz2()->morphism_index("s")};
  SquareCell g = mnd_cell(il, il, gamma);
  REQUIRE(check_square(g).ok());
  CHECK(fx::bz2()->mor_name(spec_from_2cell(g).cell.at(0)) == "1");

  // identity-on-1-cells functoriality: both compositions preserved
  std::vector<SquareCell> cells;
  for (const auto& c : enumerate_nat_trans(il.carrier, il.carrier)) {
    SquareCell q = mnd_cell(il, il, c);
    if (check_square(q).ok()) cells.push_back(q);
  }
  for (const auto& x : cells)
    for (const auto& y : cells) {
      SquareCell lhs = spec_from_2cell(compose_squares(x, y, SquareDir::lax));
      SquareCell rhs =
          compose_squares(spec_from_2cell(x), spec_from_2cell(y), SquareDir::lax);
      CHECK(lhs.cell == rhs.cell);
      SquareCell lhs2 = spec_from_2cell(compose_squares(x, y, SquareDir::colax));
      SquareCell rhs2 =
          compose_squares(spec_from_2cell(x), spec_from_2cell(y), SquareDir::colax);
      CHECK(lhs2.cell == rhs2.cell);
    }
  CHECK(spec_from_2cell(identity_square_on_lax(il, CellKind::two_cell)).cell ==
        identity_square_on_lax(il, CellKind::specialization).cell);
}

TEST_CASE("adjoint transposition") {
  // identity adjunction: the mate has the same components
  auto sgn = fx::sgn();
  auto il = identity_lax(sgn);
  Adjunction idadj = identity_adjunction(fx::bz2());
  ColaxMorphism mate = adjoint_transpose(il, idadj);
  CHECK(mate.structure.components == il.structure.components);
  LaxMorphism back = adjoint_transpose(mate, idadj);
  CHECK(back.structure.components == il.structure.components);

  // free ⊣ forgetful for clos_c applied to the forgetful's lax structure
  auto cc = fx::clos_c();
  AlgebraObject a = construct_em(cc);
  Resolution res = free_resolution(a);
  LaxMorphism forgetful_lax = as_lax_view(universal_module(a));
  Adjunction fa{res.left, res.right, res.adj_unit, res.adj_counit};
  // adjoint_transpose wants the left adjoint of the lax carrier (the forgetful)
  ColaxMorphism on_free = adjoint_transpose(forgetful_lax, fa);
  CHECK(check_lax(on_free).ok());
  LaxMorphism involution = adjoint_transpose(on_free, fa);
  CHECK(involution.structure == forgetful_lax.structure);

  // snakes are checked
  Adjunction bad = idadj;
  bad.unit.components = {fx::bz2()->morphism_index("s")};
  CHECK_THROWS_AS(adjoint_transpose(il, bad), InvalidInput);
}

TEST_CASE("mixed squares reduce along adjunctions") {
  auto sgn = fx::sgn();
  auto il = identity_lax(sgn);
  Adjunction idadj = identity_adjunction(fx::bz2());
  for (CellKind kind : {CellKind::two_cell, CellKind::specialization}) {
    SquareCell q = identity_square_on_lax(il, kind);
    SquareCell plain = square_to_lax_pair(q, idadj, idadj);
    CHECK(check_square(plain).ok());
    CHECK(plain.cell.components == q.cell.components);
    SquareCell back = square_from_lax_pair(plain, q, idadj, idadj);
    CHECK(back.cell == q.cell);
  }

  // with the genuine free ⊣ forgetful adjunction of clos_c on both sides
  auto cc = fx::clos_c();
  AlgebraObject a = construct_em(cc);
  Resolution res = free_resolution(a);
  Adjunction fa{res.left, res.right, res.adj_unit, res.adj_counit};
  LaxMorphism forgetful_lax = as_lax_view(universal_module(a));
  ColaxMorphism on_free = adjoint_transpose(forgetful_lax, fa);
  Monad id_em = identity_monad(a.em_category);

  SquareCell mixed;
  mixed.top = identity_lax(cc);
  mixed.right = on_free;
  mixed.left = on_free;
  mixed.bottom = identity_lax(id_em);
  for (CellKind kind : {CellKind::two_cell, CellKind::specialization}) {
    mixed.kind = kind;
    FinFunctor src = compose_functors(mixed.top.carrier, mixed.right.carrier);
    FinFunctor dst = kind == CellKind::two_cell
                         ? compose_functors(mixed.left.carrier, mixed.bottom.carrier)
                         : compose_functors(mixed.left.carrier,
                                            compose_functors(id_em.endo, mixed.bottom.carrier));
    bool found = false;
    for (const auto& cell : enumerate_nat_trans(src, dst)) {
      mixed.cell = cell;
      if (!check_square(mixed).ok()) continue;
      found = true;
      SquareCell plain = square_to_lax_pair(mixed, fa, fa);
      CHECK(check_square(plain).ok());
      SquareCell back = square_from_lax_pair(plain, mixed, fa, fa);
      CHECK(back.cell == mixed.cell);
    }
    CHECK(found);
  }
}

TEST_CASE("interchange checker") {
  auto sgn = fx::sgn();
  auto il = identity_lax(sgn);
  SquareCell idq = identity_square_on_lax(il, CellKind::two_cell);
  CHECK(check_interchange(idq, idq, idq, idq).ok());
}
