#include "twocat/paste.hpp"

namespace twocat {

NatTrans identity_nat(const FinFunctor& f) {
  NatTrans n;
  n.source = f;
  n.target = f;
  n.components.resize(f.on_objects.size());
  for (std::size_t o = 0; o < f.on_objects.size(); ++o)
    n.components[o] = f.target->id_mor(f.on_objects[o]);
  return n;
}

NatTrans vertical(const NatTrans& a, const NatTrans& b) {
  if (!(a.target == b.source))
    throw BoundaryError("vertical: target of first cell does not match source of second");
  NatTrans n;
  n.source = a.source;
  n.target = b.target;
  n.components.resize(a.components.size());
  const auto& cat = *a.source.target;
  for (std::size_t o = 0; o < a.components.size(); ++o)
    n.components[o] = cat.compose(a.components[o], b.components[o]);
  return n;
}

NatTrans horizontal(const NatTrans& a, const NatTrans& b) {
  if (!same_category(a.source.target, b.source.source))
    throw BoundaryError("horizontal: cells are not side by side");
  // component at x: H(a_x) then b_{G x}
  NatTrans n;
  n.source = compose_functors(a.source, b.source);
  n.target = compose_functors(a.target, b.target);
  n.components.resize(a.components.size());
  const auto& cat = *b.source.target;
  for (std::size_t o = 0; o < a.components.size(); ++o) {
    int first = b.source.mor(a.components[o]);
    int second = b.at(a.target.obj(static_cast<int>(o)));
    n.components[o] = cat.compose(first, second);
  }
  return n;
}

NatTrans whisker_left(const FinFunctor& f, const NatTrans& b) {
  if (!same_category(f.target, b.source.source))
    throw BoundaryError("whisker_left: functor target does not match cell boundary");
  NatTrans n;
  n.source = compose_functors(f, b.source);
  n.target = compose_functors(f, b.target);
  n.components.resize(f.on_objects.size());
  for (std::size_t o = 0; o < f.on_objects.size(); ++o)
    n.components[o] = b.at(f.obj(static_cast<int>(o)));
  return n;
}

NatTrans whisker_right(const NatTrans& a, const FinFunctor& h) {
  if (!same_category(a.source.target, h.source))
    throw BoundaryError("whisker_right: cell boundary does not match functor source");
  NatTrans n;
  n.source = compose_functors(a.source, h);
  n.target = compose_functors(a.target, h);
  n.components.resize(a.components.size());
  for (std::size_t o = 0; o < a.components.size(); ++o)
    n.components[o] = h.mor(a.components[o]);
  return n;
}

NatTrans whisker_both(const FinFunctor& f, const NatTrans& a, const FinFunctor& h) {
  return whisker_left(f, whisker_right(a, h));
}

PasteExpr leaf(NatTrans cell) { return PasteExpr{PasteExpr::Leaf{std::move(cell)}}; }
PasteExpr id_expr(FinFunctor f) { return PasteExpr{PasteExpr::Id{std::move(f)}}; }
PasteExpr vert(PasteExpr a, PasteExpr b) {
  return PasteExpr{PasteExpr::Vert{std::make_shared<PasteExpr>(std::move(a)),
                                   std::make_shared<PasteExpr>(std::move(b))}};
}
PasteExpr horiz(PasteExpr a, PasteExpr b) {
  return PasteExpr{PasteExpr::Horiz{std::make_shared<PasteExpr>(std::move(a)),
                                    std::make_shared<PasteExpr>(std::move(b))}};
}
PasteExpr whiskl(FinFunctor f, PasteExpr e) {
  return PasteExpr{PasteExpr::WhiskL{std::move(f), std::make_shared<PasteExpr>(std::move(e))}};
}
PasteExpr whiskr(PasteExpr e, FinFunctor f) {
  return PasteExpr{PasteExpr::WhiskR{std::make_shared<PasteExpr>(std::move(e)), std::move(f)}};
}

NatTrans paste(const PasteExpr& e) {
  struct Eval {
    NatTrans operator()(const PasteExpr::Leaf& l) const { return l.cell; }
    NatTrans operator()(const PasteExpr::Id& i) const { return identity_nat(i.functor); }
    NatTrans operator()(const PasteExpr::Vert& v) const {
      return vertical(paste(*v.first), paste(*v.second));
    }
    NatTrans operator()(const PasteExpr::Horiz& h) const {
      return horizontal(paste(*h.left), paste(*h.right));
    }
    NatTrans operator()(const PasteExpr::WhiskL& w) const {
      return whisker_left(w.functor, paste(*w.body));
    }
    NatTrans operator()(const PasteExpr::WhiskR& w) const {
      return whisker_right(paste(*w.body), w.functor);
    }
  };
  return std::visit(Eval{}, e.node);
}

void compare_cells(LawReport& report, const std::string& law, const NatTrans& lhs,
                   const NatTrans& rhs) {
  if (!(lhs.source == rhs.source) || !(lhs.target == rhs.target)) {
    report.add(law, "boundary", "lhs and rhs are not parallel");
    return;
  }
  const auto& cat = *lhs.source.target;
  for (std::size_t o = 0; o < lhs.components.size(); ++o)
    if (lhs.components[o] != rhs.components[o]) {
      report.add(law, lhs.source.source->objects[o], cat.mor_name(lhs.components[o]),
                 cat.mor_name(rhs.components[o]));
      return;
    }
}

LawReport check_adjunction(const Adjunction& adj) {
  LawReport r;
  if (!same_category(adj.left.source, adj.right.target) ||
      !same_category(adj.left.target, adj.right.source)) {
    r.add("adjunction boundary", "left/right");
    return r;
  }
  if (!(adj.unit.source == identity_functor(adj.left.source)) ||
      !(adj.unit.target == compose_functors(adj.left, adj.right))) {
    r.add("unit boundary", "id => left;right");
    return r;
  }
  if (!(adj.counit.source == compose_functors(adj.right, adj.left)) ||
      !(adj.counit.target == identity_functor(adj.right.source))) {
    r.add("counit boundary", "right;left => id");
    return r;
  }
  auto nu = validate_nat_trans(adj.unit);
  auto nc = validate_nat_trans(adj.counit);
  for (auto& v : nu.violations) r.add("unit " + v.law, v.at, v.lhs, v.rhs);
  for (auto& v : nc.violations) r.add("counit " + v.law, v.at, v.lhs, v.rhs);
  if (!r.ok()) return r;

  auto snake_l = vertical(whisker_right(adj.unit, adj.left), whisker_left(adj.left, adj.counit));
  auto id_l = identity_nat(adj.left);
  const auto& b = *adj.left.target;
  for (std::size_t o = 0; o < snake_l.components.size(); ++o)
    if (snake_l.components[o] != id_l.components[o]) {
      r.add("snake equation (left)", adj.left.source->objects[o],
            b.mor_name(snake_l.components[o]), b.mor_name(id_l.components[o]));
      break;
    }
  auto snake_r = vertical(whisker_left(adj.right, adj.unit), whisker_right(adj.counit, adj.right));
  auto id_r = identity_nat(adj.right);
  const auto& a = *adj.right.target;
  for (std::size_t o = 0; o < snake_r.components.size(); ++o)
    if (snake_r.components[o] != id_r.components[o]) {
      r.add("snake equation (right)", adj.right.source->objects[o],
            a.mor_name(snake_r.components[o]), a.mor_name(id_r.components[o]));
      break;
    }
  return r;
}

Adjunction identity_adjunction(const CatPtr& c) {
  Adjunction adj;
  adj.left = identity_functor(c);
  adj.right = identity_functor(c);
  adj.unit = identity_nat(adj.left);
  adj.counit = identity_nat(adj.right);
  return adj;
}

} // namespace twocat
