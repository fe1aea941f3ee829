#include "twocat/distributive.hpp"

namespace twocat {

LawReport check_distributive(const DistributiveLaw& d) {
  LawReport r;
  if (!same_category(d.t1.base, d.t2.base)) {
    r.add("distributive law boundary", "bases differ");
    return r;
  }
  if (!(d.cell.source == compose_functors(d.t2.endo, d.t1.endo)) ||
      !(d.cell.target == compose_functors(d.t1.endo, d.t2.endo))) {
    r.add("distributive law boundary", "cell T2;T1 => T1;T2");
    return r;
  }
  for (auto& v : validate_nat_trans(d.cell).violations)
    r.add("cell " + v.law, v.at, v.lhs, v.rhs);
  if (!r.ok()) return r;

  for (auto& v : check_lax(distlaw_as_lax(d)).violations)
    r.add("T2 as lax over T1: " + v.law, v.at, v.lhs, v.rhs);
  for (auto& v : check_lax(distlaw_as_colax(d)).violations)
    r.add("T1 as colax over T2: " + v.law, v.at, v.lhs, v.rhs);
  return r;
}

LaxMorphism distlaw_as_lax(const DistributiveLaw& d) {
  return LaxMorphism{d.t1, d.t1, d.t2.endo, d.cell};
}

ColaxMorphism distlaw_as_colax(const DistributiveLaw& d) {
  return ColaxMorphism{d.t2, d.t2, d.t1.endo, d.cell};
}

MonadInMnd distlaw_to_mnd(const DistributiveLaw& d) {
  MonadInMnd m;
  m.endo = distlaw_as_lax(d);
  m.unit_cell = mnd_cell(identity_lax(d.t1), m.endo, d.t2.unit);
  m.mult_cell = mnd_cell(compose_lax(m.endo, m.endo), m.endo, d.t2.mult);
  return m;
}

DistributiveLaw distlaw_from_mnd(const MonadInMnd& m) {
  DistributiveLaw d;
  d.t1 = m.endo.source_monad;
  d.t2.base = d.t1.base;
  d.t2.endo = m.endo.carrier;
  d.t2.unit = m.unit_cell.cell;
  d.t2.mult = m.mult_cell.cell;
  d.cell = m.endo.structure;
  return d;
}

Monad composite_monad(const DistributiveLaw& d) {
  auto law = check_distributive(d);
  if (!law.ok()) throw InvalidInput("composite_monad: distributive laws fail: " + law.summary());
  Monad out;
  out.base = d.t1.base;
  out.endo = compose_functors(d.t1.endo, d.t2.endo);
  out.unit = horizontal(d.t1.unit, d.t2.unit);
  out.mult = vertical(whisker_both(d.t1.endo, d.cell, d.t2.endo),
                      horizontal(d.t1.mult, d.t2.mult));
  return out;
}

std::pair<MonadMap, MonadMap> injection_monad_maps(const DistributiveLaw& d) {
  Monad comp = composite_monad(d);
  MonadMap i1{d.t1, comp, whisker_left(d.t1.endo, d.t2.unit)};
  MonadMap i2{d.t2, comp, whisker_right(d.t1.unit, d.t2.endo)};
  return {i1, i2};
}

NatTrans distlaw_from_composite_mult(const DistributiveLaw& d) {
  Monad comp = composite_monad(d);
  FinFunctor t2t1 = compose_functors(d.t2.endo, d.t1.endo);
  auto front = whisker_right(d.t1.unit, t2t1);  // T2;T1 => T1;T2;T1
  auto back = whisker_left(compose_functors(d.t1.endo, t2t1), d.t2.unit);
  return vertical(front, vertical(back, comp.mult));
}

std::pair<ModuleStr, ModuleStr> module_split(const DistributiveLaw& d,
                                             const ModuleStr& composite_module) {
  Monad comp = composite_monad(d);
  if (composite_module.side != Side::right || !same_monad(composite_module.monad, comp))
    throw BoundaryError("module_split: expected a right module over the composite monad");
  const auto& m = composite_module.carrier;
  ModuleStr m1{Side::right, d.t1,
               m,
               vertical(whisker_left(compose_functors(m, d.t1.endo), d.t2.unit),
                        composite_module.action)};
  ModuleStr m2{Side::right, d.t2,
               m,
               vertical(whisker_both(m, d.t1.unit, d.t2.endo), composite_module.action)};
  return {m1, m2};
}

LawReport check_module_pair(const DistributiveLaw& d, const ModuleStr& m1, const ModuleStr& m2) {
  LawReport r;
  if (!(m1.carrier == m2.carrier)) {
    r.add("module pair", "carriers differ");
    return r;
  }
  if (m1.side != Side::right || m2.side != Side::right || !same_monad(m1.monad, d.t1) ||
      !same_monad(m2.monad, d.t2)) {
    r.add("module pair", "sides/monads");
    return r;
  }
  for (auto& v : check_module(m1).violations) r.add("T1-module " + v.law, v.at, v.lhs, v.rhs);
  for (auto& v : check_module(m2).violations) r.add("T2-module " + v.law, v.at, v.lhs, v.rhs);
  if (!r.ok()) return r;

  compare_cells(r, "distributivity law",
                vertical(whisker_right(m2.action, d.t1.endo), m1.action),
                vertical(whisker_left(m1.carrier, d.cell),
                         vertical(whisker_right(m1.action, d.t2.endo), m2.action)));
  return r;
}

ModuleStr module_merge(const DistributiveLaw& d, const ModuleStr& m1, const ModuleStr& m2) {
  auto law = check_module_pair(d, m1, m2);
  if (!law.ok()) throw InvalidInput("module_merge: pair laws fail: " + law.summary());
  ModuleStr out;
  out.side = Side::right;
  out.monad = composite_monad(d);
  out.carrier = m1.carrier;
  out.action = vertical(whisker_right(m1.action, d.t2.endo), m2.action);
  return out;
}

Monad lifted_monad_em(const DistributiveLaw& d, const AlgebraObject& a1) {
  MonadInMnd view = distlaw_to_mnd(d);
  Monad out;
  out.base = a1.em_category;
  out.endo = emlift_lax(a1, a1, view.endo);
  out.unit = emlift_cell(a1, a1, view.unit_cell);
  out.mult = emlift_cell(a1, a1, view.mult_cell);
  return out;
}

Monad lifted_monad_kl(const DistributiveLaw& d, const OpalgebraObject& o2) {
  const auto& base = *d.t1.base;
  const auto& kl = *o2.kl_category;
  const auto& t1 = d.t1.endo;

  auto kl_index = [&](int src, int dst, int underlying) {
    for (std::size_t k = 0; k < kl.morphisms.size(); ++k)
      if (kl.src(static_cast<int>(k)) == src && kl.dst(static_cast<int>(k)) == dst &&
          o2.underlying[k] == underlying)
        return static_cast<int>(k);
    throw InvalidInput("lifted_monad_kl: missing Kleisli morphism over " +
                       base.mor_name(underlying));
  };

  Monad out;
  out.base = o2.kl_category;
  out.endo.source = o2.kl_category;
  out.endo.target = o2.kl_category;
  for (std::size_t a = 0; a < kl.objects.size(); ++a)
    out.endo.on_objects.push_back(t1.obj(static_cast<int>(a)));
  for (std::size_t k = 0; k < kl.morphisms.size(); ++k) {
    int b = kl.dst(static_cast<int>(k));
    int u = base.compose(t1.mor(o2.underlying[k]), d.cell.at(b));
    out.endo.on_morphisms.push_back(
        kl_index(t1.obj(kl.src(static_cast<int>(k))), t1.obj(b), u));
  }
  out.unit.source = identity_functor(o2.kl_category);
  out.unit.target = out.endo;
  out.mult.source = compose_functors(out.endo, out.endo);
  out.mult.target = out.endo;
  for (std::size_t a = 0; a < kl.objects.size(); ++a) {
    int ao = static_cast<int>(a);
    out.unit.components.push_back(kl_index(
        ao, t1.obj(ao), base.compose(d.t1.unit.at(ao), d.t2.unit.at(t1.obj(ao)))));
    out.mult.components.push_back(kl_index(
        t1.obj(t1.obj(ao)), t1.obj(ao),
        base.compose(d.t1.mult.at(ao), d.t2.unit.at(t1.obj(ao)))));
  }
  return out;
}

namespace {

// Exactly one lift through the composite forgetful functor for every right
// module with the given source.
void certify_universal_module(LawReport& r, const std::string& tag, const Monad& monad,
                              const FinFunctor& carrier, const NatTrans& action,
                              const CatPtr& source, const EnumCap& cap) {
  for (const auto& m : enumerate_functors(source, monad.base, cap)) {
    for (const auto& rho : enumerate_nat_trans(compose_functors(m, monad.endo), m, cap)) {
      ModuleStr s{Side::right, monad, m, rho};
      if (!check_module(s).ok()) continue;
      int hits = 0;
      for (const auto& h : enumerate_functors(source, carrier.source, cap)) {
        if (!(compose_functors(h, carrier) == m)) continue;
        if (!(whisker_left(h, action) == rho)) continue;
        ++hits;
      }
      if (hits != 1) {
        r.add(tag, "module with carrier over " + std::to_string(m.on_objects.size()) + " objects",
              std::to_string(hits) + " factorizations", "1");
        return;
      }
    }
  }
}

void certify_universal_opmodule(LawReport& r, const std::string& tag, const Monad& monad,
                                const FinFunctor& carrier, const NatTrans& action,
                                const CatPtr& target, const EnumCap& cap) {
  for (const auto& m : enumerate_functors(monad.base, target, cap)) {
    for (const auto& lam : enumerate_nat_trans(compose_functors(monad.endo, m), m, cap)) {
      ModuleStr s{Side::left, monad, m, lam};
      if (!check_module(s).ok()) continue;
      int hits = 0;
      for (const auto& h : enumerate_functors(carrier.target, target, cap)) {
        if (!(compose_functors(carrier, h) == m)) continue;
        if (!(whisker_right(action, h) == lam)) continue;
        ++hits;
      }
      if (hits != 1) {
        r.add(tag, "opmodule with carrier over " + std::to_string(m.on_objects.size()) +
                      " objects",
              std::to_string(hits) + " factorizations", "1");
        return;
      }
    }
  }
}

} // namespace

DistEmReport verify_distem(const DistributiveLaw& d, const EnumCap& cap) {
  DistEmReport rep;
  Monad comp = composite_monad(d);

  AlgebraObject a1 = construct_em(d.t1);
  rep.lifted = lifted_monad_em(d, a1);
  for (auto& v : check_monad(rep.lifted).violations)
    rep.laws.add("lifted monad " + v.law, v.at, v.lhs, v.rhs);

  AlgebraObject nested = construct_em(rep.lifted);
  AlgebraObject flat = construct_em(comp);
  auto iso = find_isomorphism(nested.em_category, flat.em_category, cap);
  if (!iso) {
    rep.laws.add("algebra objects", "EM(lifted) vs EM(composite)", "no isomorphism");
    return rep;
  }
  rep.em_iso_forward = iso->first;
  rep.em_iso_backward = iso->second;

  // the composite forgetful 1-cell as a universal composite-monad module
  FinFunctor composite_forgetful = compose_functors(nested.forgetful, a1.forgetful);
  ModuleStr rho1{Side::right, d.t1, composite_forgetful,
                 whisker_left(nested.forgetful, a1.forgetful_action)};
  ModuleStr rho2{Side::right, d.t2, composite_forgetful,
                 whisker_right(nested.forgetful_action, a1.forgetful)};
  ModuleStr merged = module_merge(d, rho1, rho2);
  for (auto& v : check_module(merged).violations)
    rep.laws.add("composite forgetful module " + v.law, v.at, v.lhs, v.rhs);
  certify_universal_module(rep.laws, "composite forgetful not universal", comp,
                           composite_forgetful, merged.action, nested.em_category, cap);
  certify_universal_module(rep.laws, "composite forgetful not universal", comp,
                           composite_forgetful, merged.action, d.t1.base, cap);

  // dual statement through the Kleisli objects
  OpalgebraObject o2 = construct_kleisli(d.t2);
  rep.colifted = lifted_monad_kl(d, o2);
  for (auto& v : check_monad(rep.colifted).violations)
    rep.laws.add("colifted monad " + v.law, v.at, v.lhs, v.rhs);

  OpalgebraObject conested = construct_kleisli(rep.colifted);
  OpalgebraObject coflat = construct_kleisli(comp);
  auto iso2 = find_isomorphism(conested.kl_category, coflat.kl_category, cap);
  if (!iso2) {
    rep.laws.add("opalgebra objects", "Kl(colifted) vs Kl(composite)", "no isomorphism");
    return rep;
  }
  rep.kl_iso_forward = iso2->first;
  rep.kl_iso_backward = iso2->second;

  FinFunctor composite_insertion = compose_functors(o2.insertion, conested.insertion);
  NatTrans lam2 = whisker_right(o2.insertion_action, conested.insertion);
  NatTrans lam1 = whisker_left(o2.insertion, conested.insertion_action);
  // composite opmodule action: T2 acts inside, then T1
  NatTrans action = vertical(whisker_left(d.t1.endo, lam2), lam1);
  ModuleStr comp_op{Side::left, comp, composite_insertion, action};
  for (auto& v : check_module(comp_op).violations)
    rep.laws.add("composite insertion opmodule " + v.law, v.at, v.lhs, v.rhs);
  certify_universal_opmodule(rep.laws, "composite insertion not universal", comp,
                             composite_insertion, action, conested.kl_category, cap);
  certify_universal_opmodule(rep.laws, "composite insertion not universal", comp,
                             composite_insertion, action, d.t1.base, cap);
  return rep;
}

FinFunctor comparison_cell(const DistributiveLaw& d, const EnumCap& cap) {
  (void)cap;
  AlgebraObject a1 = construct_em(d.t1);
  OpalgebraObject o2 = construct_kleisli(d.t2);
  Monad lifted = lifted_monad_em(d, a1);    // on EM(T1)
  Monad colifted = lifted_monad_kl(d, o2);  // on Kl(T2)

  Bimodule bim;
  bim.left_monad = lifted;
  bim.right_monad = colifted;
  bim.carrier = compose_functors(a1.forgetful, o2.insertion);
  bim.left_action = whisker_left(a1.forgetful, o2.insertion_action);
  bim.right_action = whisker_right(a1.forgetful_action, o2.insertion);
  auto law = check_bimodule(bim);
  if (!law.ok())
    throw InvalidInput("comparison_cell: canonical bimodule fails its laws: " + law.summary());

  OpalgebraObject o_lifted = construct_kleisli(lifted);
  AlgebraObject a_colifted = construct_em(colifted);
  return lift_bimodule(bim, o_lifted, a_colifted);
}

} // namespace twocat
