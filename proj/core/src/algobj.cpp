#include "twocat/algobj.hpp"

namespace twocat {

int algebra_object_index(const AlgebraObject& a, int s, int structure) {
  for (std::size_t e = 0; e < a.em_category->objects.size(); ++e)
    if (a.forgetful.obj(static_cast<int>(e)) == s &&
        a.forgetful_action.at(static_cast<int>(e)) == structure)
      return static_cast<int>(e);
  throw InvalidInput("no algebra (" + a.monad.base->obj_name(s) + "|" +
                     a.monad.base->mor_name(structure) + ") in the algebra object");
}

int algebra_morphism_index(const AlgebraObject& a, int src, int dst, int underlying) {
  const auto& em = *a.em_category;
  for (std::size_t m = 0; m < em.morphisms.size(); ++m)
    if (em.src(static_cast<int>(m)) == src && em.dst(static_cast<int>(m)) == dst &&
        a.forgetful.mor(static_cast<int>(m)) == underlying)
      return static_cast<int>(m);
  throw InvalidInput("no algebra morphism over " + a.monad.base->mor_name(underlying));
}

AlgebraObject construct_em(const Monad& m) {
  auto law = check_monad(m);
  if (!law.ok()) throw InvalidInput("construct_em: monad laws fail: " + law.summary());
  const auto& base = *m.base;
  const auto& t = m.endo;

  auto em = std::make_shared<FinCategory>();
  std::vector<std::pair<int, int>> algebras;  // (object, structure morphism)
  for (std::size_t s = 0; s < base.objects.size(); ++s) {
    int so = static_cast<int>(s);
    for (int a : base.hom(t.obj(so), so)) {
      if (base.compose(m.unit.at(so), a) != base.id_mor(so)) continue;
      if (base.compose(m.mult.at(so), a) != base.compose(t.mor(a), a)) continue;
      algebras.emplace_back(so, a);
      em->objects.push_back("(" + base.obj_name(so) + "|" + base.mor_name(a) + ")");
    }
  }

  struct EmMor {
    int src, dst, underlying;
  };
  std::vector<EmMor> mors;
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t j = 0; j < algebras.size(); ++j) {
      auto [s1, a1] = algebras[i];
      auto [s2, a2] = algebras[j];
      for (int f : base.hom(s1, s2)) {
        if (base.compose(a1, f) != base.compose(t.mor(f), a2)) continue;
        mors.push_back({static_cast<int>(i), static_cast<int>(j), f});
        em->morphisms.push_back({base.mor_name(f) + "@" + em->objects[i] + ">" + em->objects[j],
                                 static_cast<int>(i), static_cast<int>(j)});
      }
    }

  em->identity.resize(algebras.size());
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t k = 0; k < mors.size(); ++k)
      if (mors[k].src == static_cast<int>(i) && mors[k].dst == static_cast<int>(i) &&
          mors[k].underlying == base.id_mor(algebras[i].first))
        em->identity[i] = static_cast<int>(k);

  em->compose_tab.assign(mors.size(), std::vector<int>(mors.size(), -1));
  for (std::size_t f = 0; f < mors.size(); ++f)
    for (std::size_t g = 0; g < mors.size(); ++g) {
      if (mors[f].dst != mors[g].src) continue;
      int u = base.compose(mors[f].underlying, mors[g].underlying);
      for (std::size_t k = 0; k < mors.size(); ++k)
        if (mors[k].src == mors[f].src && mors[k].dst == mors[g].dst &&
            mors[k].underlying == u)
          em->compose_tab[f][g] = static_cast<int>(k);
    }

  AlgebraObject out;
  out.monad = m;
  out.em_category = em;
  out.forgetful.source = em;
  out.forgetful.target = m.base;
  for (auto& [s, a] : algebras) out.forgetful.on_objects.push_back(s);
  for (auto& rec : mors) out.forgetful.on_morphisms.push_back(rec.underlying);
  out.forgetful_action.source = compose_functors(out.forgetful, t);
  out.forgetful_action.target = out.forgetful;
  for (auto& [s, a] : algebras) out.forgetful_action.components.push_back(a);
  return out;
}

OpalgebraObject construct_kleisli(const Monad& m) {
  auto law = check_monad(m);
  if (!law.ok()) throw InvalidInput("construct_kleisli: monad laws fail: " + law.summary());
  const auto& base = *m.base;
  const auto& t = m.endo;

  auto kl = std::make_shared<FinCategory>();
  kl->objects = base.objects;

  struct KlMor {
    int src, dst, underlying;  // underlying : src -> T dst
  };
  std::vector<KlMor> mors;
  for (std::size_t a = 0; a < base.objects.size(); ++a)
    for (std::size_t b = 0; b < base.objects.size(); ++b)
      for (int f : base.hom(static_cast<int>(a), t.obj(static_cast<int>(b)))) {
        mors.push_back({static_cast<int>(a), static_cast<int>(b), f});
        kl->morphisms.push_back(
            {"(" + base.mor_name(f) + "@" + base.obj_name(static_cast<int>(b)) + ")",
             static_cast<int>(a), static_cast<int>(b)});
      }

  auto kl_index = [&](int src, int dst, int underlying) {
    for (std::size_t k = 0; k < mors.size(); ++k)
      if (mors[k].src == src && mors[k].dst == dst && mors[k].underlying == underlying)
        return static_cast<int>(k);
    throw InvalidInput("construct_kleisli: missing morphism");
  };

  kl->identity.resize(base.objects.size());
  for (std::size_t a = 0; a < base.objects.size(); ++a)
    kl->identity[a] = kl_index(static_cast<int>(a), static_cast<int>(a),
                               m.unit.at(static_cast<int>(a)));

  kl->compose_tab.assign(mors.size(), std::vector<int>(mors.size(), -1));
  for (std::size_t f = 0; f < mors.size(); ++f)
    for (std::size_t g = 0; g < mors.size(); ++g) {
      if (mors[f].dst != mors[g].src) continue;
      int u = base.compose(base.compose(mors[f].underlying, t.mor(mors[g].underlying)),
                           m.mult.at(mors[g].dst));
      kl->compose_tab[f][g] = kl_index(mors[f].src, mors[g].dst, u);
    }

  OpalgebraObject out;
  out.monad = m;
  out.kl_category = kl;
  out.insertion.source = m.base;
  out.insertion.target = kl;
  for (std::size_t a = 0; a < base.objects.size(); ++a)
    out.insertion.on_objects.push_back(static_cast<int>(a));
  for (std::size_t f = 0; f < base.morphisms.size(); ++f)
    out.insertion.on_morphisms.push_back(
        kl_index(base.src(static_cast<int>(f)), base.dst(static_cast<int>(f)),
                 base.compose(static_cast<int>(f), m.unit.at(base.dst(static_cast<int>(f))))));
  out.insertion_action.source = compose_functors(t, out.insertion);
  out.insertion_action.target = out.insertion;
  for (std::size_t a = 0; a < base.objects.size(); ++a)
    out.insertion_action.components.push_back(
        kl_index(t.obj(static_cast<int>(a)), static_cast<int>(a),
                 base.id_mor(t.obj(static_cast<int>(a)))));
  for (auto& rec : mors) out.underlying.push_back(rec.underlying);
  return out;
}

ModuleStr universal_module(const AlgebraObject& a) {
  return ModuleStr{Side::right, a.monad, a.forgetful, a.forgetful_action};
}

ModuleStr universal_opmodule(const OpalgebraObject& o) {
  return ModuleStr{Side::left, o.monad, o.insertion, o.insertion_action};
}

LawReport check_module_factorization(const AlgebraObject& a, const ModuleStr& s,
                                     const FinFunctor& lift) {
  LawReport r;
  if (!(compose_functors(lift, a.forgetful) == s.carrier))
    r.add("factorization (carrier)", "lift;forgetful != carrier");
  else
    compare_cells(r, "factorization (action)", whisker_left(lift, a.forgetful_action), s.action);
  return r;
}

FinFunctor lift_module(const AlgebraObject& a, const ModuleStr& s, bool verify,
                       const EnumCap& cap) {
  if (s.side != Side::right || !same_monad(s.monad, a.monad))
    throw BoundaryError("lift_module: module must be a right module over the same monad");
  auto law = check_module(s);
  if (!law.ok()) throw InvalidInput("lift_module: module laws fail: " + law.summary());

  FinFunctor h;
  h.source = s.carrier.source;
  h.target = a.em_category;
  const auto& x = *s.carrier.source;
  for (std::size_t o = 0; o < x.objects.size(); ++o)
    h.on_objects.push_back(
        algebra_object_index(a, s.carrier.obj(static_cast<int>(o)), s.action.at(static_cast<int>(o))));
  for (std::size_t f = 0; f < x.morphisms.size(); ++f)
    h.on_morphisms.push_back(algebra_morphism_index(a, h.obj(x.src(static_cast<int>(f))),
                                            h.obj(x.dst(static_cast<int>(f))),
                                            s.carrier.mor(static_cast<int>(f))));

  if (verify) {
    int hits = 0;
    for (const auto& cand : enumerate_functors(s.carrier.source, a.em_category, cap))
      if (check_module_factorization(a, s, cand).ok()) ++hits;
    if (hits != 1)
      throw InvalidInput("lift_module: factorization is not unique (" + std::to_string(hits) +
                         " candidates)");
  }
  return h;
}

NatTrans lift_module_map(const AlgebraObject& a, const ModuleStr& m1, const ModuleStr& m2,
                         const NatTrans& phi) {
  auto law = check_module_map(m1, m2, phi);
  if (!law.ok()) throw InvalidInput("lift_module_map: module map law fails: " + law.summary());
  FinFunctor h1 = lift_module(a, m1);
  FinFunctor h2 = lift_module(a, m2);
  NatTrans out;
  out.source = h1;
  out.target = h2;
  const auto& x = *m1.carrier.source;
  for (std::size_t o = 0; o < x.objects.size(); ++o)
    out.components.push_back(algebra_morphism_index(a, h1.obj(static_cast<int>(o)),
                                            h2.obj(static_cast<int>(o)),
                                            phi.at(static_cast<int>(o))));
  return out;
}

LawReport check_opmodule_factorization(const OpalgebraObject& o, const ModuleStr& s,
                                       const FinFunctor& lift) {
  LawReport r;
  if (!(compose_functors(o.insertion, lift) == s.carrier))
    r.add("factorization (carrier)", "insertion;lift != carrier");
  else
    compare_cells(r, "factorization (action)", whisker_right(o.insertion_action, lift), s.action);
  return r;
}

FinFunctor lift_opmodule(const OpalgebraObject& o, const ModuleStr& s, bool verify,
                         const EnumCap& cap) {
  if (s.side != Side::left || !same_monad(s.monad, o.monad))
    throw BoundaryError("lift_opmodule: module must be a left module over the same monad");
  auto law = check_module(s);
  if (!law.ok()) throw InvalidInput("lift_opmodule: module laws fail: " + law.summary());

  const auto& kl = *o.kl_category;
  FinFunctor h;
  h.source = o.kl_category;
  h.target = s.carrier.target;
  h.on_objects.resize(kl.objects.size());
  for (std::size_t a = 0; a < kl.objects.size(); ++a)
    h.on_objects[a] = s.carrier.obj(static_cast<int>(a));
  h.on_morphisms.resize(kl.morphisms.size());
  for (std::size_t k = 0; k < kl.morphisms.size(); ++k) {
    // Kleisli morphism over f : a -> T b maps to M(f) ; lambda_b
    int b = kl.dst(static_cast<int>(k));
    int f = o.underlying.at(k);
    h.on_morphisms[k] = s.carrier.target->compose(s.carrier.mor(f), s.action.at(b));
  }

  if (verify) {
    int hits = 0;
    for (const auto& cand : enumerate_functors(o.kl_category, s.carrier.target, cap))
      if (check_opmodule_factorization(o, s, cand).ok()) ++hits;
    if (hits != 1)
      throw InvalidInput("lift_opmodule: factorization is not unique (" + std::to_string(hits) +
                         " candidates)");
  }
  return h;
}

NatTrans lift_opmodule_map(const OpalgebraObject& o, const ModuleStr& m1, const ModuleStr& m2,
                           const NatTrans& phi) {
  auto law = check_module_map(m1, m2, phi);
  if (!law.ok()) throw InvalidInput("lift_opmodule_map: module map law fails: " + law.summary());
  NatTrans out;
  out.source = lift_opmodule(o, m1);
  out.target = lift_opmodule(o, m2);
  out.components = phi.components;
  auto ok = validate_nat_trans(out);
  if (!ok.ok()) throw InvalidInput("lift_opmodule_map: lifted cell not natural: " + ok.summary());
  return out;
}

LawReport check_resolution(const Resolution& r) {
  LawReport rep;
  Adjunction adj{r.left, r.right, r.adj_unit, r.adj_counit};
  rep = check_adjunction(adj);
  if (!rep.ok()) return rep;
  if (!(compose_functors(r.left, r.right) == r.monad.endo)) {
    rep.add("resolves (endofunctor)", "left;right != T");
    return rep;
  }
  compare_cells(rep, "resolves (unit)", r.adj_unit, r.monad.unit);
  compare_cells(rep, "resolves (mult)",
                whisker_both(r.left, r.adj_counit, r.right), r.monad.mult);
  return rep;
}

Resolution free_resolution(const AlgebraObject& a) {
  const auto& m = a.monad;
  const auto& base = *m.base;
  Resolution r;
  r.monad = m;
  r.right = a.forgetful;

  r.left.source = m.base;
  r.left.target = a.em_category;
  for (std::size_t s = 0; s < base.objects.size(); ++s)
    r.left.on_objects.push_back(
        algebra_object_index(a, m.endo.obj(static_cast<int>(s)), m.mult.at(static_cast<int>(s))));
  for (std::size_t f = 0; f < base.morphisms.size(); ++f)
    r.left.on_morphisms.push_back(algebra_morphism_index(a, r.left.obj(base.src(static_cast<int>(f))),
                                                 r.left.obj(base.dst(static_cast<int>(f))),
                                                 m.endo.mor(static_cast<int>(f))));

  r.adj_unit.source = identity_functor(m.base);
  r.adj_unit.target = compose_functors(r.left, r.right);
  r.adj_unit.components = m.unit.components;

  r.adj_counit.source = compose_functors(r.right, r.left);
  r.adj_counit.target = identity_functor(a.em_category);
  for (std::size_t e = 0; e < a.em_category->objects.size(); ++e)
    r.adj_counit.components.push_back(
        algebra_morphism_index(a, r.left.obj(a.forgetful.obj(static_cast<int>(e))), static_cast<int>(e),
                       a.forgetful_action.at(static_cast<int>(e))));
  return r;
}

FinFunctor comparison_functor(const AlgebraObject& a, const Resolution& r, bool verify,
                              const EnumCap& cap) {
  auto law = check_resolution(r);
  if (!law.ok()) throw InvalidInput("comparison_functor: not a resolution: " + law.summary());
  if (!same_monad(r.monad, a.monad))
    throw BoundaryError("comparison_functor: resolution is for a different monad");

  const auto& x = *r.right.source;
  FinFunctor k;
  k.source = r.right.source;
  k.target = a.em_category;
  for (std::size_t o = 0; o < x.objects.size(); ++o)
    k.on_objects.push_back(algebra_object_index(a, r.right.obj(static_cast<int>(o)),
                                        r.right.mor(r.adj_counit.at(static_cast<int>(o)))));
  for (std::size_t f = 0; f < x.morphisms.size(); ++f)
    k.on_morphisms.push_back(algebra_morphism_index(a, k.obj(x.src(static_cast<int>(f))),
                                            k.obj(x.dst(static_cast<int>(f))),
                                            r.right.mor(static_cast<int>(f))));

  Resolution canonical = free_resolution(a);
  auto factors = [&](const FinFunctor& cand) {
    return compose_functors(cand, a.forgetful) == r.right &&
           compose_functors(r.left, cand) == canonical.left;
  };
  if (!factors(k))
    throw InvalidInput("comparison_functor: computed functor fails the factorization equations");
  if (verify) {
    int hits = 0;
    for (const auto& cand : enumerate_functors(r.right.source, a.em_category, cap))
      if (factors(cand)) ++hits;
    if (hits != 1)
      throw InvalidInput("comparison_functor: factorization is not unique (" +
                         std::to_string(hits) + " candidates)");
  }
  return k;
}

FinFunctor emlift_lax(const AlgebraObject& a1, const AlgebraObject& a2, const LaxMorphism& f) {
  if (!same_monad(f.source_monad, a1.monad) || !same_monad(f.target_monad, a2.monad))
    throw BoundaryError("emlift_lax: lax 1-cell does not match the algebra objects");
  auto law = check_lax(f);
  if (!law.ok()) throw InvalidInput("emlift_lax: lax laws fail: " + law.summary());
  ModuleStr s;
  s.side = Side::right;
  s.monad = a2.monad;
  s.carrier = compose_functors(a1.forgetful, f.carrier);
  s.action = vertical(whisker_left(a1.forgetful, f.structure),
                      whisker_right(a1.forgetful_action, f.carrier));
  return lift_module(a2, s);
}

LaxMorphism emlift_lax_inverse(const AlgebraObject& a1, const AlgebraObject& a2,
                               const FinFunctor& carrier, const FinFunctor& lifted) {
  if (!(compose_functors(lifted, a2.forgetful) == compose_functors(a1.forgetful, carrier)))
    throw InvalidInput("emlift_lax_inverse: lifted;forgetful2 != forgetful1;carrier");
  const auto& t1 = a1.monad;
  const auto& t2 = a2.monad;
  const auto& base1 = *t1.base;
  LaxMorphism out;
  out.source_monad = t1;
  out.target_monad = t2;
  out.carrier = carrier;
  out.structure.source = compose_functors(carrier, t2.endo);
  out.structure.target = compose_functors(t1.endo, carrier);
  for (std::size_t s = 0; s < base1.objects.size(); ++s) {
    int so = static_cast<int>(s);
    int free = algebra_object_index(a1, t1.endo.obj(so), t1.mult.at(so));
    int rho_free = a2.forgetful_action.at(lifted.obj(free));
    out.structure.components.push_back(carrier.target->compose(
        t2.endo.mor(carrier.mor(t1.unit.at(so))), rho_free));
  }
  return out;
}

NatTrans emlift_cell(const AlgebraObject& a1, const AlgebraObject& a2, const SquareCell& q) {
  if (!is_identity_functor(q.left.carrier) || !is_identity_functor(q.right.carrier))
    throw InvalidInput("emlift_cell: square must have identity colax sides");
  auto law = check_square(q);
  if (!law.ok()) throw InvalidInput("emlift_cell: square laws fail: " + law.summary());
  FinFunctor h1 = emlift_lax(a1, a2, q.top);
  FinFunctor h2 = emlift_lax(a1, a2, q.bottom);

  // the T2-module map over the forgetful functor
  NatTrans phi = q.kind == CellKind::two_cell
                     ? whisker_left(a1.forgetful, q.cell)
                     : vertical(whisker_left(a1.forgetful, q.cell),
                                whisker_right(a1.forgetful_action, q.bottom.carrier));
  NatTrans out;
  out.source = h1;
  out.target = h2;
  const auto& em1 = *a1.em_category;
  for (std::size_t e = 0; e < em1.objects.size(); ++e)
    out.components.push_back(algebra_morphism_index(a2, h1.obj(static_cast<int>(e)),
                                            h2.obj(static_cast<int>(e)),
                                            phi.at(static_cast<int>(e))));
  return out;
}

SquareCell emlift_cell_inverse(const AlgebraObject& a1, const AlgebraObject& a2,
                               const LaxMorphism& f1, const LaxMorphism& f2,
                               const NatTrans& lifted, CellKind kind) {
  const auto& t1 = a1.monad;
  const auto& base1 = *t1.base;
  NatTrans phi = whisker_right(lifted, a2.forgetful);  // u1;F1 => u1;F2

  if (kind == CellKind::specialization) {
    NatTrans sigma;
    sigma.source = f1.carrier;
    sigma.target = compose_functors(t1.endo, f2.carrier);
    for (std::size_t s = 0; s < base1.objects.size(); ++s) {
      int so = static_cast<int>(s);
      int free = algebra_object_index(a1, t1.endo.obj(so), t1.mult.at(so));
      sigma.components.push_back(f1.carrier.target->compose(
          f1.carrier.mor(t1.unit.at(so)), phi.at(free)));
    }
    return em_cell(f1, f2, sigma);
  }

  // two_cell: the unique gamma whiskering to phi that satisfies the 2-cell law
  std::vector<NatTrans> hits;
  for (const auto& gamma : enumerate_nat_trans(f1.carrier, f2.carrier)) {
    if (!(whisker_left(a1.forgetful, gamma) == phi)) continue;
    if (!check_square(mnd_cell(f1, f2, gamma)).ok()) continue;
    hits.push_back(gamma);
  }
  if (hits.size() != 1)
    throw InvalidInput("emlift_cell_inverse: " + std::to_string(hits.size()) +
                       " monad 2-cells lift to the given cell");
  return mnd_cell(f1, f2, hits.front());
}

FinFunctor lift_bimodule(const Bimodule& b, const OpalgebraObject& o, const AlgebraObject& a) {
  if (!same_monad(b.left_monad, o.monad) || !same_monad(b.right_monad, a.monad))
    throw BoundaryError("lift_bimodule: bimodule monads do not match the universal objects");
  auto law = check_bimodule(b);
  if (!law.ok()) throw InvalidInput("lift_bimodule: bimodule laws fail: " + law.summary());

  // right action first, then factor the left action through the Kleisli object
  ModuleStr right{Side::right, b.right_monad, b.carrier, b.right_action};
  FinFunctor mbar = lift_module(a, right);
  ModuleStr right_shifted{Side::right, b.right_monad,
                          compose_functors(b.left_monad.endo, b.carrier),
                          whisker_left(b.left_monad.endo, b.right_action)};
  NatTrans lambda_bar = lift_module_map(a, right_shifted, right, b.left_action);
  ModuleStr left_lifted{Side::left, b.left_monad, mbar, lambda_bar};
  FinFunctor h = lift_opmodule(o, left_lifted);

  // the other order: left action first, then the right action over the Kleisli object
  ModuleStr left{Side::left, b.left_monad, b.carrier, b.left_action};
  FinFunctor mtil = lift_opmodule(o, left);
  ModuleStr left_shifted{Side::left, b.left_monad,
                         compose_functors(b.carrier, b.right_monad.endo),
                         whisker_right(b.left_action, b.right_monad.endo)};
  NatTrans rho_til = lift_opmodule_map(o, left_shifted, left, b.right_action);
  ModuleStr right_lifted{Side::right, b.right_monad, mtil, rho_til};
  FinFunctor h2 = lift_module(a, right_lifted);

  if (!(h == h2))
    throw InvalidInput("lift_bimodule: the two lifting orders disagree");
  return h;
}

NatTrans lift_bimodule_map(const BimoduleMapNAry& m, const OpalgebraObject& o,
                           const AlgebraObject& a) {
  if (m.inputs.size() != 1 || m.left_boundary || m.right_boundary)
    throw InvalidInput("lift_bimodule_map: expects a unary map with plain boundaries");
  auto law = check_bimodule_map(m);
  if (!law.ok()) throw InvalidInput("lift_bimodule_map: laws fail: " + law.summary());
  FinFunctor h1 = lift_bimodule(m.inputs.front(), o, a);
  FinFunctor h2 = lift_bimodule(m.output, o, a);
  NatTrans out;
  out.source = h1;
  out.target = h2;
  const auto& kl = *o.kl_category;
  for (std::size_t x = 0; x < kl.objects.size(); ++x)
    out.components.push_back(algebra_morphism_index(a, h1.obj(static_cast<int>(x)),
                                            h2.obj(static_cast<int>(x)),
                                            m.cell.at(static_cast<int>(x))));
  return out;
}

} // namespace twocat
