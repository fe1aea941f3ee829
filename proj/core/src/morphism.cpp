#include "twocat/morphism.hpp"

namespace twocat {

LawReport check_lax(const LaxMorphism& l) {
  LawReport r;
  const auto& t1 = l.source_monad;
  const auto& t2 = l.target_monad;
  if (!same_category(l.carrier.source, t1.base) || !same_category(l.carrier.target, t2.base)) {
    r.add("lax boundary", "carrier");
    return r;
  }
  if (!(l.structure.source == compose_functors(l.carrier, t2.endo)) ||
      !(l.structure.target == compose_functors(t1.endo, l.carrier))) {
    r.add("lax boundary", "structure F;T2 => T1;F");
    return r;
  }
  bool hard = false;
  for (auto& v : validate_nat_trans(l.structure).violations) {
    if (v.law != "naturality") hard = true;
    r.add("structure " + v.law, v.at, v.lhs, v.rhs);
  }
  if (hard) return r;

  compare_cells(r, "lax unit law", vertical(whisker_left(l.carrier, t2.unit), l.structure),
                whisker_right(t1.unit, l.carrier));
  compare_cells(r, "lax mult law", vertical(whisker_left(l.carrier, t2.mult), l.structure),
                vertical(whisker_right(l.structure, t2.endo),
                         vertical(whisker_left(t1.endo, l.structure),
                                  whisker_right(t1.mult, l.carrier))));
  return r;
}

LawReport check_lax(const ColaxMorphism& g) {
  LawReport r;
  const auto& t1 = g.source_monad;
  const auto& t2 = g.target_monad;
  if (!same_category(g.carrier.source, t1.base) || !same_category(g.carrier.target, t2.base)) {
    r.add("colax boundary", "carrier");
    return r;
  }
  if (!(g.structure.source == compose_functors(t1.endo, g.carrier)) ||
      !(g.structure.target == compose_functors(g.carrier, t2.endo))) {
    r.add("colax boundary", "structure T1;G => G;T2");
    return r;
  }
  bool hard = false;
  for (auto& v : validate_nat_trans(g.structure).violations) {
    if (v.law != "naturality") hard = true;
    r.add("structure " + v.law, v.at, v.lhs, v.rhs);
  }
  if (hard) return r;

  compare_cells(r, "colax unit law", vertical(whisker_right(t1.unit, g.carrier), g.structure),
                whisker_left(g.carrier, t2.unit));
  compare_cells(r, "colax mult law", vertical(whisker_right(t1.mult, g.carrier), g.structure),
                vertical(whisker_left(t1.endo, g.structure),
                         vertical(whisker_right(g.structure, t2.endo),
                                  whisker_left(g.carrier, t2.mult))));
  return r;
}

LaxMorphism identity_lax(const Monad& m) {
  LaxMorphism l;
  l.source_monad = m;
  l.target_monad = m;
  l.carrier = identity_functor(m.base);
  l.structure = identity_nat(m.endo);
  return l;
}

ColaxMorphism identity_colax(const Monad& m) {
  ColaxMorphism g;
  g.source_monad = m;
  g.target_monad = m;
  g.carrier = identity_functor(m.base);
  g.structure = identity_nat(m.endo);
  return g;
}

LaxMorphism compose_lax(const LaxMorphism& a, const LaxMorphism& b) {
  if (!same_monad(a.target_monad, b.source_monad))
    throw BoundaryError("compose_lax: monads do not match");
  LaxMorphism out;
  out.source_monad = a.source_monad;
  out.target_monad = b.target_monad;
  out.carrier = compose_functors(a.carrier, b.carrier);
  // whisker b's structure first, then a's
  out.structure = vertical(whisker_left(a.carrier, b.structure),
                           whisker_right(a.structure, b.carrier));
  return out;
}

ColaxMorphism compose_lax(const ColaxMorphism& a, const ColaxMorphism& b) {
  if (!same_monad(a.target_monad, b.source_monad))
    throw BoundaryError("compose_colax: monads do not match");
  ColaxMorphism out;
  out.source_monad = a.source_monad;
  out.target_monad = b.target_monad;
  out.carrier = compose_functors(a.carrier, b.carrier);
  out.structure = vertical(whisker_right(a.structure, b.carrier),
                           whisker_left(a.carrier, b.structure));
  return out;
}

namespace {

// The two sides of the Def. doublemon equation for either kind.
std::pair<NatTrans, NatTrans> square_law_sides(const SquareCell& q) {
  const auto& tw = q.top.source_monad;
  const auto& te = q.right.target_monad;
  const auto& ts = q.left.target_monad;

  if (q.kind == CellKind::two_cell) {
    auto lhs = vertical(whisker_left(q.top.carrier, q.right.structure),
                        vertical(whisker_right(q.cell, te.endo),
                                 whisker_left(q.left.carrier, q.bottom.structure)));
    auto rhs = vertical(whisker_right(q.top.structure, q.right.carrier),
                        vertical(whisker_left(tw.endo, q.cell),
                                 whisker_right(q.left.structure, q.bottom.carrier)));
    return {lhs, rhs};
  }
  auto merge = whisker_left(q.left.carrier, whisker_right(ts.mult, q.bottom.carrier));
  auto lhs = vertical(
      whisker_left(q.top.carrier, q.right.structure),
      vertical(whisker_right(q.cell, te.endo),
               vertical(whisker_left(compose_functors(q.left.carrier, ts.endo),
                                     q.bottom.structure),
                        merge)));
  auto rhs = vertical(
      whisker_right(q.top.structure, q.right.carrier),
      vertical(whisker_left(tw.endo, q.cell),
               vertical(whisker_right(q.left.structure,
                                      compose_functors(ts.endo, q.bottom.carrier)),
                        merge)));
  return {lhs, rhs};
}

FinFunctor square_cell_target(const SquareCell& q) {
  if (q.kind == CellKind::two_cell)
    return compose_functors(q.left.carrier, q.bottom.carrier);
  return compose_functors(q.left.carrier,
                          compose_functors(q.left.target_monad.endo, q.bottom.carrier));
}

} // namespace

LawReport check_square(const SquareCell& q) {
  LawReport r;
  if (!same_monad(q.top.source_monad, q.left.source_monad) ||
      !same_monad(q.top.target_monad, q.right.source_monad) ||
      !same_monad(q.left.target_monad, q.bottom.source_monad) ||
      !same_monad(q.right.target_monad, q.bottom.target_monad)) {
    r.add("square boundary", "corner monads");
    return r;
  }
  if (!(q.cell.source == compose_functors(q.top.carrier, q.right.carrier)) ||
      !(q.cell.target == square_cell_target(q))) {
    r.add("square boundary", "cell");
    return r;
  }
  bool hard = false;
  for (auto& v : validate_nat_trans(q.cell).violations) {
    if (v.law != "naturality") hard = true;
    r.add("cell " + v.law, v.at, v.lhs, v.rhs);
  }
  if (hard) return r;

  auto [lhs, rhs] = square_law_sides(q);
  compare_cells(r, q.kind == CellKind::two_cell ? "monad 2-cell law" : "specialization law",
                lhs, rhs);
  return r;
}

SquareCell mnd_cell(const LaxMorphism& f1, const LaxMorphism& f2, NatTrans gamma) {
  SquareCell q;
  q.kind = CellKind::two_cell;
  q.top = f1;
  q.right = identity_colax(f1.target_monad);
  q.left = identity_colax(f1.source_monad);
  q.bottom = f2;
  q.cell = std::move(gamma);
  return q;
}

SquareCell em_cell(const LaxMorphism& f1, const LaxMorphism& f2, NatTrans sigma) {
  SquareCell q;
  q.kind = CellKind::specialization;
  q.top = f1;
  q.right = identity_colax(f1.target_monad);
  q.left = identity_colax(f1.source_monad);
  q.bottom = f2;
  q.cell = std::move(sigma);
  return q;
}

SquareCell identity_square_on_lax(const LaxMorphism& f, CellKind kind) {
  if (kind == CellKind::two_cell) return mnd_cell(f, f, identity_nat(f.carrier));
  return em_cell(f, f, whisker_right(f.source_monad.unit, f.carrier));
}

SquareCell identity_square_on_colax(const ColaxMorphism& g, CellKind kind) {
  SquareCell q;
  q.kind = kind;
  q.top = identity_lax(g.source_monad);
  q.right = g;
  q.left = g;
  q.bottom = identity_lax(g.target_monad);
  q.cell = kind == CellKind::two_cell ? identity_nat(g.carrier)
                                      : whisker_left(g.carrier, g.target_monad.unit);
  return q;
}

SquareCell compose_squares(const SquareCell& a, const SquareCell& b, SquareDir dir) {
  if (a.kind != b.kind) throw BoundaryError("compose_squares: kinds differ");
  SquareCell out;
  out.kind = a.kind;
  if (dir == SquareDir::lax) {
    if (!(a.right.carrier == b.left.carrier) || !(a.right.structure == b.left.structure) ||
        !same_monad(a.right.source_monad, b.left.source_monad) ||
        !same_monad(a.right.target_monad, b.left.target_monad))
      throw BoundaryError("compose_squares: shared colax edge differs");
    out.top = compose_lax(a.top, b.top);
    out.right = b.right;
    out.left = a.left;
    out.bottom = compose_lax(a.bottom, b.bottom);
    if (a.kind == CellKind::two_cell) {
      out.cell = vertical(whisker_left(a.top.carrier, b.cell),
                          whisker_right(a.cell, b.bottom.carrier));
    } else {
      const auto& ts = a.left.target_monad;  // south monad of the composite
      const auto& te_mid = a.right.target_monad;
      auto step1 = whisker_left(a.top.carrier, b.cell);
      auto step2 = whisker_right(a.cell, compose_functors(te_mid.endo, b.bottom.carrier));
      auto step3 = whisker_both(compose_functors(a.left.carrier, ts.endo), a.bottom.structure,
                                b.bottom.carrier);
      auto step4 = whisker_both(
          a.left.carrier, ts.mult,
          compose_functors(a.bottom.carrier, b.bottom.carrier));
      out.cell = vertical(step1, vertical(step2, vertical(step3, step4)));
    }
  } else {
    if (!(a.bottom.carrier == b.top.carrier) || !(a.bottom.structure == b.top.structure) ||
        !same_monad(a.bottom.source_monad, b.top.source_monad) ||
        !same_monad(a.bottom.target_monad, b.top.target_monad))
      throw BoundaryError("compose_squares: shared lax edge differs");
    out.top = a.top;
    out.right = compose_lax(a.right, b.right);
    out.left = compose_lax(a.left, b.left);
    out.bottom = b.bottom;
    if (a.kind == CellKind::two_cell) {
      out.cell = vertical(whisker_right(a.cell, b.right.carrier),
                          whisker_left(a.left.carrier, b.cell));
    } else {
      const auto& tm = a.left.target_monad;  // middle monad
      const auto& ts = b.left.target_monad;  // south monad of the composite
      auto step1 = whisker_right(a.cell, b.right.carrier);
      auto step2 = whisker_left(compose_functors(a.left.carrier, tm.endo), b.cell);
      auto step3 = whisker_both(a.left.carrier, b.left.structure,
                                compose_functors(ts.endo, b.bottom.carrier));
      auto step4 = whisker_both(compose_functors(a.left.carrier, b.left.carrier), ts.mult,
                                b.bottom.carrier);
      out.cell = vertical(step1, vertical(step2, vertical(step3, step4)));
    }
  }
  return out;
}

SquareCell spec_from_2cell(const SquareCell& q) {
  if (q.kind != CellKind::two_cell)
    throw InvalidInput("spec_from_2cell: input must be a monad 2-cell");
  SquareCell out = q;
  out.kind = CellKind::specialization;
  const auto& ts = q.left.target_monad;
  out.cell = vertical(q.cell, whisker_left(q.left.carrier,
                                           whisker_right(ts.unit, q.bottom.carrier)));
  return out;
}

ColaxMorphism adjoint_transpose(const LaxMorphism& l, const Adjunction& adj) {
  if (!(adj.right == l.carrier))
    throw InvalidInput("adjoint_transpose: adjunction right leg must be the lax carrier");
  auto snakes = check_adjunction(adj);
  if (!snakes.ok()) throw InvalidInput("adjoint_transpose: " + snakes.summary());
  const auto& t1 = l.source_monad;  // on carrier source
  const auto& t2 = l.target_monad;
  ColaxMorphism out;
  out.source_monad = t2;
  out.target_monad = t1;
  out.carrier = adj.left;
  // T2;L => L;F;T2;L => L;T1;F;L => L;T1
  auto ins = whisker_right(adj.unit, compose_functors(t2.endo, adj.left));
  auto cross = whisker_both(adj.left, l.structure, adj.left);
  auto del = whisker_left(compose_functors(adj.left, t1.endo), adj.counit);
  out.structure = vertical(ins, vertical(cross, del));
  return out;
}

LaxMorphism adjoint_transpose(const ColaxMorphism& g, const Adjunction& adj) {
  if (!(adj.left == g.carrier))
    throw InvalidInput("adjoint_transpose: adjunction left leg must be the colax carrier");
  auto snakes = check_adjunction(adj);
  if (!snakes.ok()) throw InvalidInput("adjoint_transpose: " + snakes.summary());
  const auto& t1 = g.source_monad;
  const auto& t2 = g.target_monad;
  LaxMorphism out;
  out.source_monad = t2;
  out.target_monad = t1;
  out.carrier = adj.right;
  // R;T1 => R;T1;G;R => R;G;T2;R => T2;R
  auto ins = whisker_left(compose_functors(adj.right, t1.endo), adj.unit);
  auto cross = whisker_both(adj.right, g.structure, adj.right);
  auto del = whisker_right(adj.counit, compose_functors(t2.endo, adj.right));
  out.structure = vertical(ins, vertical(cross, del));
  return out;
}

SquareCell square_to_lax_pair(const SquareCell& q, const Adjunction& adj_right,
                              const Adjunction& adj_left) {
  // adj_right: right colax carrier ⊣ R1; adj_left: left colax carrier ⊣ R2.
  if (!(adj_right.left == q.right.carrier) || !(adj_left.left == q.left.carrier))
    throw InvalidInput("square_to_lax_pair: adjunction left legs must be the colax carriers");
  LaxMorphism r1 = adjoint_transpose(q.right, adj_right);  // T_E -> T_N
  LaxMorphism r2 = adjoint_transpose(q.left, adj_left);    // T_S -> T_W
  LaxMorphism f1 = compose_lax(r2, q.top);                 // T_S -> T_N
  LaxMorphism f2 = compose_lax(q.bottom, r1);              // T_S -> T_N

  auto ins = whisker_left(compose_functors(adj_left.right, q.top.carrier), adj_right.unit);
  NatTrans mid = whisker_both(adj_left.right, q.cell, adj_right.right);
  if (q.kind == CellKind::two_cell) {
    auto del = whisker_right(adj_left.counit,
                             compose_functors(q.bottom.carrier, adj_right.right));
    return mnd_cell(f1, f2, vertical(ins, vertical(mid, del)));
  }
  const auto& ts = q.left.target_monad;
  auto del = whisker_right(adj_left.counit,
                           compose_functors(ts.endo,
                                            compose_functors(q.bottom.carrier, adj_right.right)));
  return em_cell(f1, f2, vertical(ins, vertical(mid, del)));
}

SquareCell square_from_lax_pair(const SquareCell& plain, const SquareCell& shape,
                                const Adjunction& adj_right, const Adjunction& adj_left) {
  // inverse mate: reinstate the colax sides of `shape`
  SquareCell out = shape;
  out.kind = plain.kind;
  auto ins = whisker_right(adj_left.unit, compose_functors(shape.top.carrier, shape.right.carrier));
  NatTrans mid = whisker_both(adj_left.left, plain.cell, adj_right.left);
  NatTrans del;
  if (plain.kind == CellKind::two_cell) {
    del = whisker_left(compose_functors(shape.left.carrier, shape.bottom.carrier),
                       adj_right.counit);
  } else {
    const auto& ts = shape.left.target_monad;
    del = whisker_left(compose_functors(shape.left.carrier,
                                        compose_functors(ts.endo, shape.bottom.carrier)),
                       adj_right.counit);
  }
  out.cell = vertical(ins, vertical(mid, del));
  return out;
}

LawReport check_interchange(const SquareCell& q11, const SquareCell& q12, const SquareCell& q21,
                            const SquareCell& q22) {
  LawReport r;
  auto rows = compose_squares(compose_squares(q11, q12, SquareDir::lax),
                              compose_squares(q21, q22, SquareDir::lax), SquareDir::colax);
  auto cols = compose_squares(compose_squares(q11, q21, SquareDir::colax),
                              compose_squares(q12, q22, SquareDir::colax), SquareDir::lax);
  compare_cells(r, "interchange", rows.cell, cols.cell);
  return r;
}

LaxMorphism as_lax_view(const MonadMap& h) {
  LaxMorphism l;
  l.source_monad = h.target;
  l.target_monad = h.source;
  l.carrier = identity_functor(h.source.base);
  l.structure = h.cell;
  return l;
}

LaxMorphism as_lax_view(const ModuleStr& m) {
  if (m.side != Side::right) throw InvalidInput("as_lax_view: module must be right-sided");
  LaxMorphism l;
  l.source_monad = identity_monad(m.carrier.source);
  l.target_monad = m.monad;
  l.carrier = m.carrier;
  l.structure = m.action;
  return l;
}

LaxMorphism as_lax_view(const FinFunctor& f, const Monad& source) {
  if (!same_category(f.source, source.base))
    throw BoundaryError("as_lax_view: functor source does not match monad base");
  LaxMorphism l;
  l.source_monad = source;
  l.target_monad = identity_monad(f.target);
  l.carrier = f;
  l.structure = whisker_right(source.unit, f);
  return l;
}

LaxMorphism as_lax_view(const FinFunctor& f) {
  return as_lax_view(f, identity_monad(f.source));
}

MonadMap monad_map_from_lax(const LaxMorphism& l) {
  if (!is_identity_functor(l.carrier))
    throw InvalidInput("monad_map_from_lax: carrier must be an identity 1-cell");
  return MonadMap{l.target_monad, l.source_monad, l.structure};
}

ModuleStr module_from_lax(const LaxMorphism& l) {
  if (!is_identity_monad(l.source_monad))
    throw InvalidInput("module_from_lax: source must be an identity monad");
  return ModuleStr{Side::right, l.target_monad, l.carrier, l.structure};
}

FinFunctor functor_from_lax(const LaxMorphism& l) {
  if (!is_identity_monad(l.target_monad))
    throw InvalidInput("functor_from_lax: target must be an identity monad");
  return l.carrier;
}

} // namespace twocat
