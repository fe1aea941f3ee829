#include "twocat/kan.hpp"

namespace twocat {

namespace {

struct CommaData {
  CatPtr cat;
  std::vector<std::pair<int, int>> objects;  // (x, f : s -> X x)
  std::vector<int> mor_underlying;           // comma morphism -> morphism of Xcat
};

// The comma category (s | along): objects (x, f), morphisms the morphisms m
// of Xcat with f;X(m) = f'.
CommaData comma_category(const FinFunctor& along, int s) {
  const auto& x = *along.source;
  const auto& c = *along.target;
  CommaData out;
  auto cat = std::make_shared<FinCategory>();
  for (std::size_t xo = 0; xo < x.objects.size(); ++xo)
    for (int f : c.hom(s, along.obj(static_cast<int>(xo)))) {
      out.objects.emplace_back(static_cast<int>(xo), f);
      cat->objects.push_back("(" + x.objects[xo] + "|" + c.mor_name(f) + ")");
    }
  auto obj_index = [&](int xo, int f) {
    for (std::size_t i = 0; i < out.objects.size(); ++i)
      if (out.objects[i] == std::make_pair(xo, f)) return static_cast<int>(i);
    return -1;
  };

  struct Mor {
    int src, dst, underlying;
  };
  std::vector<Mor> mors;
  for (std::size_t i = 0; i < out.objects.size(); ++i)
    for (std::size_t m = 0; m < x.morphisms.size(); ++m) {
      auto [xo, f] = out.objects[i];
      if (x.src(static_cast<int>(m)) != xo) continue;
      int f2 = c.compose(f, along.mor(static_cast<int>(m)));
      int j = obj_index(x.dst(static_cast<int>(m)), f2);
      mors.push_back({static_cast<int>(i), j, static_cast<int>(m)});
      cat->morphisms.push_back({x.morphisms[m].id + "@" + cat->objects[i],
                                static_cast<int>(i), j});
    }
  auto mor_index = [&](int src, int underlying) {
    for (std::size_t k = 0; k < mors.size(); ++k)
      if (mors[k].src == src && mors[k].underlying == underlying) return static_cast<int>(k);
    return -1;
  };
  cat->identity.resize(out.objects.size());
  for (std::size_t i = 0; i < out.objects.size(); ++i)
    cat->identity[i] = mor_index(static_cast<int>(i), x.id_mor(out.objects[i].first));
  cat->compose_tab.assign(mors.size(), std::vector<int>(mors.size(), -1));
  for (std::size_t a = 0; a < mors.size(); ++a)
    for (std::size_t b = 0; b < mors.size(); ++b) {
      if (mors[a].dst != mors[b].src) continue;
      cat->compose_tab[a][b] =
          mor_index(mors[a].src, x.compose(mors[a].underlying, mors[b].underlying));
    }
  for (auto& rec : mors) out.mor_underlying.push_back(rec.underlying);
  out.cat = cat;
  return out;
}

FinFunctor comma_projection(const CommaData& comma, const FinFunctor& of) {
  FinFunctor d;
  d.source = comma.cat;
  d.target = of.target;
  for (auto& [xo, f] : comma.objects) d.on_objects.push_back(of.obj(xo));
  for (int u : comma.mor_underlying) d.on_morphisms.push_back(of.mor(u));
  return d;
}

} // namespace

FinFunctor comma_diagram(const FinFunctor& along, const FinFunctor& of, int s) {
  auto comma = comma_category(along, s);
  return comma_projection(comma, of);
}

std::optional<RightExtension> right_extension(const FinFunctor& along, const FinFunctor& of,
                                              bool certify, const EnumCap& cap) {
  if (!same_category(along.source, of.source))
    throw BoundaryError("right_extension: along and of must share their source");
  const auto& s_cat = *along.target;
  const auto& c = *of.target;
  const auto& x = *along.source;

  std::vector<CommaData> commas;
  std::vector<Cone> cones;
  for (std::size_t s = 0; s < s_cat.objects.size(); ++s) {
    auto comma = comma_category(along, static_cast<int>(s));
    auto diagram = comma_projection(comma, of);
    auto lim = limit(diagram, cap);
    if (!lim) return std::nullopt;
    commas.push_back(std::move(comma));
    cones.push_back(std::move(*lim));
  }

  RightExtension e;
  e.along = along;
  e.of = of;
  e.ext.source = along.target;
  e.ext.target = of.target;
  for (auto& cone : cones) e.ext.on_objects.push_back(cone.apex);

  auto leg_of = [&](int s, int xo, int f) {
    const auto& objs = commas[static_cast<std::size_t>(s)].objects;
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (objs[i] == std::make_pair(xo, f))
        return cones[static_cast<std::size_t>(s)].legs[i];
    throw InvalidInput("right_extension: missing comma object");
  };

  for (std::size_t g = 0; g < s_cat.morphisms.size(); ++g) {
    int s = s_cat.src(static_cast<int>(g));
    int s2 = s_cat.dst(static_cast<int>(g));
    int found = -1;
    for (int h : c.hom(e.ext.obj(s), e.ext.obj(s2))) {
      bool good = true;
      for (std::size_t i = 0; i < commas[static_cast<std::size_t>(s2)].objects.size(); ++i) {
        auto [xo, f] = commas[static_cast<std::size_t>(s2)].objects[i];
        int via = c.compose(h, cones[static_cast<std::size_t>(s2)].legs[i]);
        int direct = leg_of(s, xo, s_cat.compose(static_cast<int>(g), f));
        if (via != direct) {
          good = false;
          break;
        }
      }
      if (good) {
        if (found >= 0) throw InvalidInput("right_extension: limit factorization not unique");
        found = h;
      }
    }
    if (found < 0) throw InvalidInput("right_extension: limit factorization missing");
    e.ext.on_morphisms.push_back(found);
  }

  e.universal.source = compose_functors(along, e.ext);
  e.universal.target = of;
  for (std::size_t xo = 0; xo < x.objects.size(); ++xo)
    e.universal.components.push_back(
        leg_of(along.obj(static_cast<int>(xo)), static_cast<int>(xo),
               s_cat.id_mor(along.obj(static_cast<int>(xo)))));

  auto fv = validate_functor(e.ext);
  auto nv = validate_nat_trans(e.universal);
  if (!fv.ok() || !nv.ok())
    throw InvalidInput("right_extension: assembled data invalid: " + fv.summary() +
                       nv.summary());
  if (certify) {
    auto cert = certify_extension(e, cap);
    if (!cert.ok())
      throw InvalidInput("right_extension: certification failed: " + cert.summary());
    e.certified = true;
  }
  return e;
}

std::optional<RightExtension> codensity(const FinFunctor& x, bool certify, const EnumCap& cap) {
  auto e = right_extension(x, x, certify, cap);
  if (e) e->pushed = identity_monad(x.source);
  return e;
}

std::optional<RightExtension> pushforward(const Monad& t, const FinFunctor& x, bool certify,
                                          const EnumCap& cap) {
  if (!same_category(t.base, x.source))
    throw BoundaryError("pushforward: monad base must be the source of the 1-cell");
  auto law = check_monad(t);
  if (!law.ok()) throw InvalidInput("pushforward: monad laws fail: " + law.summary());
  auto e = right_extension(x, compose_functors(t.endo, x), certify, cap);
  if (e) e->pushed = t;
  return e;
}

NatTrans factor_through(const RightExtension& e, const FinFunctor& y, const NatTrans& psi) {
  if (!(psi.source == compose_functors(e.along, y)) || !(psi.target == e.of))
    throw BoundaryError("factor_through: cell must be along;y => of");
  const auto& s_cat = *e.along.target;
  const auto& c = *e.of.target;
  const auto& x = *e.along.source;

  NatTrans out;
  out.source = y;
  out.target = e.ext;
  for (std::size_t s = 0; s < s_cat.objects.size(); ++s) {
    int so = static_cast<int>(s);
    int found = -1;
    int count = 0;
    for (int h : c.hom(y.obj(so), e.ext.obj(so))) {
      bool good = true;
      for (std::size_t xo = 0; xo < x.objects.size() && good; ++xo) {
        for (int f : s_cat.hom(so, e.along.obj(static_cast<int>(xo)))) {
          int leg = c.compose(e.ext.mor(f), e.universal.at(static_cast<int>(xo)));
          if (c.compose(h, leg) !=
              c.compose(y.mor(f), psi.at(static_cast<int>(xo)))) {
            good = false;
            break;
          }
        }
      }
      if (good) {
        ++count;
        found = h;
      }
    }
    if (count != 1)
      throw InvalidInput("factor_through: " + std::to_string(count) +
                         " factorizations at object " + s_cat.objects[s]);
    out.components.push_back(found);
  }
  return out;
}

LawReport certify_extension(const RightExtension& e, const EnumCap& cap) {
  LawReport r;
  for (const auto& y : enumerate_functors(e.along.target, e.of.target, cap)) {
    for (const auto& psi :
         enumerate_nat_trans(compose_functors(e.along, y), e.of, cap)) {
      int hits = 0;
      for (const auto& h : enumerate_nat_trans(y, e.ext, cap))
        if (vertical(whisker_left(e.along, h), e.universal) == psi) ++hits;
      if (hits != 1) {
        r.add("universal property", "candidate 1-cell", std::to_string(hits) + " factorizations",
              "1");
        return r;
      }
    }
  }
  return r;
}

Monad monad_structure(const RightExtension& e) {
  if (!e.pushed)
    throw InvalidInput("monad_structure: extension is not a codensity/pushforward monad");
  const Monad& t = *e.pushed;
  Monad out;
  out.base = e.along.target;
  out.endo = e.ext;
  out.unit = factor_through(e, identity_functor(e.along.target),
                            whisker_right(t.unit, e.along));
  NatTrans psi_mu = vertical(
      whisker_right(e.universal, e.ext),
      vertical(whisker_left(t.endo, e.universal), whisker_right(t.mult, e.along)));
  out.mult = factor_through(e, compose_functors(e.ext, e.ext), psi_mu);

  auto law = check_monad(out);
  if (!law.ok())
    throw InvalidInput("monad_structure: induced structure fails monad laws: " + law.summary());
  // the universal cell exhibits `along` as a module / lax 1-cell
  if (is_identity_monad(t)) {
    ModuleStr s{Side::right, out, e.along, e.universal};
    auto mod = check_module(s);
    if (!mod.ok())
      throw InvalidInput("monad_structure: universal cell is not a module action: " +
                         mod.summary());
  } else {
    LaxMorphism l{t, out, e.along, e.universal};
    auto lax = check_lax(l);
    if (!lax.ok())
      throw InvalidInput("monad_structure: universal cell is not a lax structure: " +
                         lax.summary());
  }
  return out;
}

MonadMap universal_monad_map(const RightExtension& e, const Monad& t, const NatTrans& structure,
                             bool verify, const EnumCap& cap) {
  if (!e.pushed) throw InvalidInput("universal_monad_map: not a codensity/pushforward monad");
  if (is_identity_monad(*e.pushed)) {
    ModuleStr s{Side::right, t, e.along, structure};
    auto law = check_module(s);
    if (!law.ok())
      throw InvalidInput("universal_monad_map: structure is not a module action: " +
                         law.summary());
  } else {
    LaxMorphism l{*e.pushed, t, e.along, structure};
    auto law = check_lax(l);
    if (!law.ok())
      throw InvalidInput("universal_monad_map: structure is not a lax structure: " +
                         law.summary());
  }
  MonadMap out{t, monad_structure(e), factor_through(e, t.endo, structure)};
  auto law = check_monad_map(out);
  if (!law.ok())
    throw InvalidInput("universal_monad_map: factorization is not a monad map: " + law.summary());
  if (verify) {
    int hits = 0;
    for (const auto& h : enumerate_nat_trans(t.endo, e.ext, cap))
      if (vertical(whisker_left(e.along, h), e.universal) == structure) ++hits;
    if (hits != 1)
      throw InvalidInput("universal_monad_map: " + std::to_string(hits) + " factorizations");
  }
  return out;
}

RightExtension from_adjunction_codensity(const Adjunction& adj, bool certify,
                                         const EnumCap& cap) {
  auto law = check_adjunction(adj);
  if (!law.ok()) throw InvalidInput("from_adjunction: snake equations fail: " + law.summary());
  RightExtension e;
  e.along = adj.right;
  e.of = adj.right;
  e.ext = compose_functors(adj.left, adj.right);
  e.universal = whisker_right(adj.counit, adj.right);
  e.pushed = identity_monad(adj.right.source);
  if (certify) {
    auto cert = certify_extension(e, cap);
    if (!cert.ok())
      throw InvalidInput("from_adjunction: certification failed: " + cert.summary());
    e.certified = true;
  }
  return e;
}

RightExtension from_adjunction_pushforward(const Adjunction& adj, const Monad& t, bool certify,
                                           const EnumCap& cap) {
  auto law = check_adjunction(adj);
  if (!law.ok()) throw InvalidInput("from_adjunction: snake equations fail: " + law.summary());
  if (!same_category(t.base, adj.right.source))
    throw BoundaryError("from_adjunction: monad must live on the right adjoint's source");
  RightExtension e;
  e.along = adj.right;
  e.of = compose_functors(t.endo, adj.right);
  e.ext = compose_functors(adj.left, compose_functors(t.endo, adj.right));
  e.universal = whisker_right(adj.counit, compose_functors(t.endo, adj.right));
  e.pushed = t;
  if (certify) {
    auto cert = certify_extension(e, cap);
    if (!cert.ok())
      throw InvalidInput("from_adjunction: certification failed: " + cert.summary());
    e.certified = true;
  }
  return e;
}

PreservationReport preserves_right_extension(const FinFunctor& f, const RightExtension& e,
                                             const EnumCap& cap) {
  if (!same_category(f.source, e.of.target))
    throw BoundaryError("preserves_right_extension: functor must leave the extension's target");
  PreservationReport rep;
  FinFunctor ext_f = compose_functors(e.ext, f);
  FinFunctor of_f = compose_functors(e.of, f);
  NatTrans uni_f = whisker_right(e.universal, f);
  for (const auto& y : enumerate_functors(e.along.target, f.target, cap)) {
    for (const auto& psi : enumerate_nat_trans(compose_functors(e.along, y), of_f, cap)) {
      int hits = 0;
      for (const auto& h : enumerate_nat_trans(y, ext_f, cap))
        if (vertical(whisker_left(e.along, h), uni_f) == psi) ++hits;
      if (hits != 1) {
        rep.preserved = false;
        rep.counterexample_y = y;
        rep.counterexample_psi = psi;
        rep.factorizations = hits;
        return rep;
      }
    }
  }
  rep.preserved = true;
  return rep;
}

NatTrans factor_through_preserved(const RightExtension& e, const FinFunctor& f,
                                  const FinFunctor& y, const NatTrans& psi) {
  const auto& s_cat = *e.along.target;
  const auto& d = *f.target;
  const auto& x = *e.along.source;
  FinFunctor ext_f = compose_functors(e.ext, f);

  NatTrans out;
  out.source = y;
  out.target = ext_f;
  for (std::size_t s = 0; s < s_cat.objects.size(); ++s) {
    int so = static_cast<int>(s);
    int found = -1;
    int count = 0;
    for (int h : d.hom(y.obj(so), ext_f.obj(so))) {
      bool good = true;
      for (std::size_t xo = 0; xo < x.objects.size() && good; ++xo) {
        for (int g : s_cat.hom(so, e.along.obj(static_cast<int>(xo)))) {
          int leg = d.compose(ext_f.mor(g), f.mor(e.universal.at(static_cast<int>(xo))));
          if (d.compose(h, leg) != d.compose(y.mor(g), psi.at(static_cast<int>(xo)))) {
            good = false;
            break;
          }
        }
      }
      if (good) {
        ++count;
        found = h;
      }
    }
    if (count != 1)
      throw InvalidInput("factor_through_preserved: " + std::to_string(count) +
                         " factorizations at object " + s_cat.objects[s] +
                         " (does the 1-cell preserve the extension?)");
    out.components.push_back(found);
  }
  return out;
}

FinFunctor extlift_lax(const RightExtension& e, const AlgebraObject& a2, const LaxMorphism& f) {
  if (!e.pushed || !is_identity_monad(*e.pushed))
    throw InvalidInput("extlift_lax: extension must be a codensity monad");
  if (!same_monad(f.source_monad, monad_structure(e)) || !same_monad(f.target_monad, a2.monad))
    throw BoundaryError("extlift_lax: lax 1-cell does not match the extension/algebra object");
  auto law = check_lax(f);
  if (!law.ok()) throw InvalidInput("extlift_lax: lax laws fail: " + law.summary());
  ModuleStr s;
  s.side = Side::right;
  s.monad = a2.monad;
  s.carrier = compose_functors(e.along, f.carrier);
  s.action = vertical(whisker_left(e.along, f.structure),
                      whisker_right(e.universal, f.carrier));
  return lift_module(a2, s);
}

LaxMorphism extlift_lax_inverse(const RightExtension& e, const AlgebraObject& a2,
                                const FinFunctor& carrier, const FinFunctor& lifted) {
  if (!(compose_functors(lifted, a2.forgetful) == compose_functors(e.along, carrier)))
    throw InvalidInput("extlift_lax_inverse: lifted;forgetful != along;carrier");
  NatTrans rho = whisker_left(lifted, a2.forgetful_action);
  LaxMorphism out;
  out.source_monad = monad_structure(e);
  out.target_monad = a2.monad;
  out.carrier = carrier;
  out.structure =
      factor_through_preserved(e, carrier, compose_functors(carrier, a2.monad.endo), rho);
  return out;
}

NatTrans extlift_cell(const RightExtension& e, const AlgebraObject& a2, const SquareCell& q) {
  if (!is_identity_functor(q.left.carrier) || !is_identity_functor(q.right.carrier))
    throw InvalidInput("extlift_cell: square must have identity colax sides");
  auto law = check_square(q);
  if (!law.ok()) throw InvalidInput("extlift_cell: square laws fail: " + law.summary());
  FinFunctor h1 = extlift_lax(e, a2, q.top);
  FinFunctor h2 = extlift_lax(e, a2, q.bottom);
  NatTrans phi = q.kind == CellKind::two_cell
                     ? whisker_left(e.along, q.cell)
                     : vertical(whisker_left(e.along, q.cell),
                                whisker_right(e.universal, q.bottom.carrier));
  NatTrans out;
  out.source = h1;
  out.target = h2;
  const auto& x = *e.along.source;
  for (std::size_t xo = 0; xo < x.objects.size(); ++xo)
    out.components.push_back(algebra_morphism_index(a2, h1.obj(static_cast<int>(xo)),
                                                    h2.obj(static_cast<int>(xo)),
                                                    phi.at(static_cast<int>(xo))));
  return out;
}

SquareCell extlift_cell_inverse(const RightExtension& e, const AlgebraObject& a2,
                                const LaxMorphism& f1, const LaxMorphism& f2,
                                const NatTrans& lifted, CellKind kind) {
  NatTrans phi = whisker_right(lifted, a2.forgetful);
  if (kind == CellKind::specialization) {
    NatTrans sigma = factor_through_preserved(e, f2.carrier, f1.carrier, phi);
    return em_cell(f1, f2, sigma);
  }
  std::vector<NatTrans> hits;
  for (const auto& gamma : enumerate_nat_trans(f1.carrier, f2.carrier)) {
    if (!(whisker_left(e.along, gamma) == phi)) continue;
    if (!check_square(mnd_cell(f1, f2, gamma)).ok()) continue;
    hits.push_back(gamma);
  }
  if (hits.size() != 1)
    throw InvalidInput("extlift_cell_inverse: " + std::to_string(hits.size()) +
                       " monad 2-cells lift to the given cell");
  return mnd_cell(f1, f2, hits.front());
}

LaxMorphism pushlift_lax(const RightExtension& e, const LaxMorphism& f) {
  if (!e.pushed) throw InvalidInput("pushlift_lax: extension carries no pushed monad");
  if (!same_monad(f.source_monad, monad_structure(e)))
    throw BoundaryError("pushlift_lax: lax 1-cell must start at the pushforward monad");
  auto law = check_lax(f);
  if (!law.ok()) throw InvalidInput("pushlift_lax: lax laws fail: " + law.summary());
  LaxMorphism out;
  out.source_monad = *e.pushed;
  out.target_monad = f.target_monad;
  out.carrier = compose_functors(e.along, f.carrier);
  out.structure = vertical(whisker_left(e.along, f.structure),
                           whisker_right(e.universal, f.carrier));
  return out;
}

LaxMorphism pushlift_lax_inverse(const RightExtension& e, const LaxMorphism& composite,
                                 const FinFunctor& carrier, const Monad& t2) {
  if (!(composite.carrier == compose_functors(e.along, carrier)))
    throw InvalidInput("pushlift_lax_inverse: carrier of the composite must be along;carrier");
  LaxMorphism out;
  out.source_monad = monad_structure(e);
  out.target_monad = t2;
  out.carrier = carrier;
  out.structure = factor_through_preserved(e, carrier, compose_functors(carrier, t2.endo),
                                           composite.structure);
  return out;
}

SquareCell pushlift_cell(const RightExtension& e, const SquareCell& q) {
  if (!is_identity_functor(q.left.carrier) || !is_identity_functor(q.right.carrier))
    throw InvalidInput("pushlift_cell: square must have identity colax sides");
  LaxMorphism g1 = pushlift_lax(e, q.top);
  LaxMorphism g2 = pushlift_lax(e, q.bottom);
  if (q.kind == CellKind::two_cell)
    return mnd_cell(g1, g2, whisker_left(e.along, q.cell));
  NatTrans sigma = vertical(whisker_left(e.along, q.cell),
                            whisker_right(e.universal, q.bottom.carrier));
  return em_cell(g1, g2, sigma);
}

SquareCell pushlift_cell_inverse(const RightExtension& e, const SquareCell& composite,
                                 const LaxMorphism& f1, const LaxMorphism& f2) {
  if (composite.kind == CellKind::specialization) {
    NatTrans sigma =
        factor_through_preserved(e, f2.carrier, f1.carrier, composite.cell);
    return em_cell(f1, f2, sigma);
  }
  std::vector<NatTrans> hits;
  for (const auto& gamma : enumerate_nat_trans(f1.carrier, f2.carrier)) {
    if (!(whisker_left(e.along, gamma) == composite.cell)) continue;
    if (!check_square(mnd_cell(f1, f2, gamma)).ok()) continue;
    hits.push_back(gamma);
  }
  if (hits.size() != 1)
    throw InvalidInput("pushlift_cell_inverse: " + std::to_string(hits.size()) +
                       " monad 2-cells restrict to the given cell");
  return mnd_cell(f1, f2, hits.front());
}

} // namespace twocat
