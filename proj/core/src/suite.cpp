#include "twocat/suite.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace twocat {

namespace {

namespace fx = fixtures;

struct Ctx {
  CheckResult res;
  void fail(const std::string& detail, std::optional<Json> cx = std::nullopt) {
    if (res.status == CheckStatus::fail) return;  // keep the first counterexample
    res.status = CheckStatus::fail;
    res.detail = detail;
    if (cx) res.counterexample = std::make_shared<Json>(std::move(*cx));
  }
  bool ok() const { return res.status == CheckStatus::pass; }
};

bool report_mentions(const LawReport& r, const std::string& prefix) {
  for (const auto& v : r.violations)
    if (v.law.rfind(prefix, 0) == 0) return true;
  return false;
}

template <typename F>
CheckResult timed(const std::string& name, F&& body) {
  Ctx ctx;
  ctx.res.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(ctx);
  } catch (const CapExceeded& ex) {
    ctx.res.status = CheckStatus::skipped_cap;
    ctx.res.detail = ex.what();
  } catch (const std::exception& ex) {
    ctx.fail(std::string("exception: ") + ex.what());
  }
  ctx.res.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return ctx.res;
}

int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// All closure-operator monads on a finite poset, by brute force.
std::vector<Monad> closure_monads(const CatPtr& poset) {
  const auto& c = *poset;
  const int n = static_cast<int>(c.objects.size());
  std::vector<Monad> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  auto leq = [&](int x, int y) { return !c.hom(x, y).empty(); };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (int x = 0; x < n; ++x) {
        if (!leq(x, f[static_cast<std::size_t>(x)])) return;
        if (f[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] !=
            f[static_cast<std::size_t>(x)])
          return;
        for (int y = 0; y < n; ++y)
          if (leq(x, y) && !leq(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
            return;
      }
      out.push_back(fx::closure_monad(poset, [&](int x) { return f[static_cast<std::size_t>(x)]; }));
      return;
    }
    for (int v = 0; v < n; ++v) {
      f[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<LaxMorphism> lawful_lax_cells(const Monad& t1, const Monad& t2, const EnumCap& cap) {
  std::vector<LaxMorphism> out;
  for (const auto& f : enumerate_functors(t1.base, t2.base, cap))
    for (const auto& chi : enumerate_nat_trans(compose_functors(f, t2.endo),
                                               compose_functors(t1.endo, f), cap)) {
      LaxMorphism l{t1, t2, f, chi};
      if (check_lax(l).ok()) out.push_back(std::move(l));
    }
  return out;
}

std::vector<ColaxMorphism> lawful_colax_cells(const Monad& t1, const Monad& t2,
                                              const EnumCap& cap) {
  std::vector<ColaxMorphism> out;
  for (const auto& g : enumerate_functors(t1.base, t2.base, cap))
    for (const auto& xi : enumerate_nat_trans(compose_functors(t1.endo, g),
                                              compose_functors(g, t2.endo), cap)) {
      ColaxMorphism l{t1, t2, g, xi};
      if (check_lax(l).ok()) out.push_back(std::move(l));
    }
  return out;
}

std::vector<SquareCell> lawful_squares(const LaxMorphism& top, const ColaxMorphism& right,
                                       const ColaxMorphism& left, const LaxMorphism& bottom,
                                       CellKind kind, const EnumCap& cap) {
  std::vector<SquareCell> out;
  FinFunctor src = compose_functors(top.carrier, right.carrier);
  FinFunctor dst = kind == CellKind::two_cell
                       ? compose_functors(left.carrier, bottom.carrier)
                       : compose_functors(left.carrier,
                                          compose_functors(left.target_monad.endo,
                                                           bottom.carrier));
  for (const auto& cell : enumerate_nat_trans(src, dst, cap)) {
    SquareCell q{kind, top, right, left, bottom, cell};
    if (check_square(q).ok()) out.push_back(std::move(q));
  }
  return out;
}

bool same_colax(const ColaxMorphism& a, const ColaxMorphism& b) {
  return a.carrier == b.carrier && a.structure == b.structure &&
         same_monad(a.source_monad, b.source_monad) && same_monad(a.target_monad, b.target_monad);
}

bool same_lax(const LaxMorphism& a, const LaxMorphism& b) {
  return a.carrier == b.carrier && a.structure == b.structure &&
         same_monad(a.source_monad, b.source_monad) && same_monad(a.target_monad, b.target_monad);
}

} // namespace

// ---------------------------------------------------------------- check 1

CheckResult check_law_oracle_equivalence(std::uint64_t seed, const EnumCap& cap) {
  return timed("law-checker oracle equivalence", [&](Ctx& ctx) {
    std::mt19937_64 rng(seed);
    std::vector<CatPtr> bases = {fx::term(), fx::arrow2(), fx::pair_cat(),
                                 fx::chain3(), fx::sq(),   fx::bz2()};
    std::vector<std::vector<FinFunctor>> endos;
    for (const auto& b : bases) endos.push_back(enumerate_functors(b, b, cap));

    // candidate monads
    int made = 0;
    int guard = 0;
    while (made < 200 && guard++ < 20000) {
      int bi = pick(rng, static_cast<int>(bases.size()));
      const auto& base = bases[static_cast<std::size_t>(bi)];
      const auto& c = *base;
      const auto& pool = endos[static_cast<std::size_t>(bi)];
      const FinFunctor& t = pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))];

      NatTrans unit{identity_functor(base), t, {}};
      NatTrans mult{compose_functors(t, t), t, {}};
      bool feasible = true;
      for (std::size_t s = 0; s < c.objects.size() && feasible; ++s) {
        auto hu = c.hom(static_cast<int>(s), t.obj(static_cast<int>(s)));
        auto hm = c.hom(t.obj(t.obj(static_cast<int>(s))), t.obj(static_cast<int>(s)));
        if (hu.empty() || hm.empty()) {
          feasible = false;
          break;
        }
        unit.components.push_back(hu[static_cast<std::size_t>(pick(rng, static_cast<int>(hu.size())))]);
        mult.components.push_back(hm[static_cast<std::size_t>(pick(rng, static_cast<int>(hm.size())))]);
      }
      if (!feasible) continue;
      ++made;
      Monad cand{base, t, unit, mult};
      auto rep = check_monad(cand);

      auto assoc_l = paste(vert(whiskl(t, leaf(mult)), leaf(mult)));
      auto assoc_r = paste(vert(whiskr(leaf(mult), t), leaf(mult)));
      bool oracle_assoc = assoc_l.components == assoc_r.components;
      auto ul = paste(vert(whiskl(t, leaf(unit)), leaf(mult)));
      auto ur = paste(vert(whiskr(leaf(unit), t), leaf(mult)));
      bool oracle_ul = ul.components == identity_nat(t).components;
      bool oracle_ur = ur.components == identity_nat(t).components;

      if (oracle_assoc == report_mentions(rep, "associativity"))
        ctx.fail("check_monad disagrees with the paste oracle on associativity",
                 to_json(cand));
      if (oracle_ul == report_mentions(rep, "unit law (eta after T)"))
        ctx.fail("check_monad disagrees with the paste oracle on a unit law", to_json(cand));
      if (oracle_ur == report_mentions(rep, "unit law (T after eta)"))
        ctx.fail("check_monad disagrees with the paste oracle on a unit law", to_json(cand));
      if (!ctx.ok()) return;
    }
    if (made < 200) {
      ctx.fail("could not generate 200 candidate monads");
      return;
    }

    // candidate right modules over lawful fixture monads
    auto monads = fx::all_monads();
    made = 0;
    guard = 0;
    while (made < 200 && guard++ < 20000) {
      const Monad& t = monads[static_cast<std::size_t>(pick(rng, static_cast<int>(monads.size())))].second;
      const auto& src = bases[static_cast<std::size_t>(pick(rng, static_cast<int>(bases.size())))];
      auto functors = enumerate_functors(src, t.base, cap);
      if (functors.empty()) continue;
      const FinFunctor& m = functors[static_cast<std::size_t>(pick(rng, static_cast<int>(functors.size())))];
      NatTrans rho{compose_functors(m, t.endo), m, {}};
      bool feasible = true;
      for (std::size_t x = 0; x < src->objects.size() && feasible; ++x) {
        auto h = t.base->hom(t.endo.obj(m.obj(static_cast<int>(x))), m.obj(static_cast<int>(x)));
        if (h.empty()) {
          feasible = false;
          break;
        }
        rho.components.push_back(h[static_cast<std::size_t>(pick(rng, static_cast<int>(h.size())))]);
      }
      if (!feasible) continue;
      ++made;
      ModuleStr cand{Side::right, t, m, rho};
      auto rep = check_module(cand);
      auto al = paste(vert(whiskl(m, leaf(t.mult)), leaf(rho)));
      auto ar = paste(vert(whiskr(leaf(rho), t.endo), leaf(rho)));
      bool oracle_assoc = al.components == ar.components;
      auto u = paste(vert(whiskl(m, leaf(t.unit)), leaf(rho)));
      bool oracle_unit = u.components == identity_nat(m).components;
      if (oracle_assoc == report_mentions(rep, "module associativity"))
        ctx.fail("check_module disagrees with the paste oracle on associativity", to_json(cand));
      if (oracle_unit == report_mentions(rep, "module unit law"))
        ctx.fail("check_module disagrees with the paste oracle on the unit law", to_json(cand));
      if (!ctx.ok()) return;
    }
    if (made < 200) {
      ctx.fail("could not generate 200 candidate modules");
      return;
    }

    // candidate lax 1-cells between lawful fixture monads
    made = 0;
    guard = 0;
    while (made < 200 && guard++ < 20000) {
      const Monad& t1 = monads[static_cast<std::size_t>(pick(rng, static_cast<int>(monads.size())))].second;
      const Monad& t2 = monads[static_cast<std::size_t>(pick(rng, static_cast<int>(monads.size())))].second;
      auto functors = enumerate_functors(t1.base, t2.base, cap);
      if (functors.empty()) continue;
      const FinFunctor& f = functors[static_cast<std::size_t>(pick(rng, static_cast<int>(functors.size())))];
      NatTrans chi{compose_functors(f, t2.endo), compose_functors(t1.endo, f), {}};
      bool feasible = true;
      for (std::size_t s = 0; s < t1.base->objects.size() && feasible; ++s) {
        auto h = t2.base->hom(t2.endo.obj(f.obj(static_cast<int>(s))),
                              f.obj(t1.endo.obj(static_cast<int>(s))));
        if (h.empty()) {
          feasible = false;
          break;
        }
        chi.components.push_back(h[static_cast<std::size_t>(pick(rng, static_cast<int>(h.size())))]);
      }
      if (!feasible) continue;
      ++made;
      LaxMorphism cand{t1, t2, f, chi};
      auto rep = check_lax(cand);
      auto unit_l = paste(vert(whiskl(f, leaf(t2.unit)), leaf(chi)));
      auto unit_r = paste(whiskr(leaf(t1.unit), f));
      bool oracle_unit = unit_l.components == unit_r.components;
      auto mult_l = paste(vert(whiskl(f, leaf(t2.mult)), leaf(chi)));
      auto mult_r = paste(vert(whiskr(leaf(chi), t2.endo),
                               vert(whiskl(t1.endo, leaf(chi)), whiskr(leaf(t1.mult), f))));
      bool oracle_mult = mult_l.components == mult_r.components;
      if (oracle_unit == report_mentions(rep, "lax unit law"))
        ctx.fail("check_lax disagrees with the paste oracle on the unit law", to_json(cand));
      if (oracle_mult == report_mentions(rep, "lax mult law"))
        ctx.fail("check_lax disagrees with the paste oracle on the mult law", to_json(cand));
      if (!ctx.ok()) return;
    }
    if (made < 200) ctx.fail("could not generate 200 candidate lax cells");
  });
}

// ---------------------------------------------------------------- check 2

CheckResult check_em_universal_property(const EnumCap& cap) {
  return timed("algebra object universal property", [&](Ctx& ctx) {
    std::vector<Monad> monads = {fx::clos_c(), fx::sgn(), identity_monad(fx::chain3())};
    for (const auto& t : monads) {
      AlgebraObject a = construct_em(t);
      // faithfulness of the forgetful 1-cell
      const auto& em = *a.em_category;
      for (std::size_t f = 0; f < em.morphisms.size(); ++f)
        for (std::size_t g = f + 1; g < em.morphisms.size(); ++g)
          if (em.src(static_cast<int>(f)) == em.src(static_cast<int>(g)) &&
              em.dst(static_cast<int>(f)) == em.dst(static_cast<int>(g)) &&
              a.forgetful.mor(static_cast<int>(f)) == a.forgetful.mor(static_cast<int>(g)))
            ctx.fail("forgetful 1-cell is not faithful", to_json(t));
      if (!ctx.ok()) return;

      for (auto& [name, src] : fx::all_categories()) {
        for (const auto& m : enumerate_functors(src, t.base, cap)) {
          for (const auto& rho :
               enumerate_nat_trans(compose_functors(m, t.endo), m, cap)) {
            ModuleStr s{Side::right, t, m, rho};
            if (!check_module(s).ok()) continue;
            int hits = 0;
            for (const auto& h : enumerate_functors(src, a.em_category, cap))
              if (check_module_factorization(a, s, h).ok()) ++hits;
            if (hits != 1) {
              ctx.fail("module over " + name + " has " + std::to_string(hits) +
                           " factorizations",
                       to_json(s));
              return;
            }
            FinFunctor lift = lift_module(a, s);
            if (!check_module_factorization(a, s, lift).ok()) {
              ctx.fail("computed lift fails the factorization equations", to_json(s));
              return;
            }
          }
        }
      }
    }
  });
}

// ---------------------------------------------------------------- check 3

CheckResult check_termresolve(const EnumCap& cap) {
  return timed("terminal resolution", [&](Ctx& ctx) {
    for (auto& [name, t] : fx::all_monads()) {
      AlgebraObject a = construct_em(t);
      Resolution r = free_resolution(a);
      auto law = check_resolution(r);
      if (!law.ok()) {
        ctx.fail("free resolution of " + name + ": " + law.summary(), to_json(t));
        return;
      }
      FinFunctor k = comparison_functor(a, r, true, cap);
      if (!(k == identity_functor(a.em_category))) {
        ctx.fail("comparison of the free resolution of " + name + " is not the identity");
        return;
      }
    }
    // the resolution of clos_c through the closure ⊣ inclusion adjunction
    Monad clos = fx::clos_c();
    AlgebraObject a = construct_em(clos);
    Resolution r;
    r.monad = clos;
    r.right = fx::fix_incl();
    r.left.source = fx::chain3();
    r.left.target = fx::sub2();
    r.left.on_objects = {0, 0, 1};  // 0,1 -> 1 and 2 -> 2
    const auto& sub = *fx::sub2();
    const auto& ch = *fx::chain3();
    for (std::size_t m = 0; m < ch.morphisms.size(); ++m)
      r.left.on_morphisms.push_back(
          sub.hom(r.left.obj(ch.src(static_cast<int>(m))), r.left.obj(ch.dst(static_cast<int>(m))))
              .front());
    r.adj_unit = clos.unit;
    r.adj_unit.target = compose_functors(r.left, r.right);
    r.adj_counit.source = compose_functors(r.right, r.left);
    r.adj_counit.target = identity_functor(fx::sub2());
    r.adj_counit.components = {sub.id_mor(0), sub.id_mor(1)};
    auto law = check_resolution(r);
    if (!law.ok()) {
      ctx.fail("closure ⊣ inclusion resolution: " + law.summary());
      return;
    }
    FinFunctor k = comparison_functor(a, r, true, cap);
    if (!(compose_functors(k, a.forgetful) == r.right))
      ctx.fail("comparison of the inclusion resolution fails its factorization");
  });
}

// ---------------------------------------------------------------- check 4

CheckResult check_formaltfae(const EnumCap& cap) {
  return timed("algebra-object lifting correspondences", [&](Ctx& ctx) {
    std::vector<std::pair<Monad, Monad>> pairs = {
        {fx::clos_c(), fx::clos_c()},   {fx::clos_c(), fx::clos_top()},
        {fx::clos_top(), fx::clos_c()}, {fx::clos_top(), fx::clos_top()},
        {fx::sgn(), fx::sgn()}};
    for (auto& [t1, t2] : pairs) {
      AlgebraObject a1 = construct_em(t1);
      AlgebraObject a2 = construct_em(t2);

      // clause (i): lax structures on a carrier F <-> lifts through the forgetfuls
      std::vector<LaxMorphism> laxes;
      for (const auto& f : enumerate_functors(t1.base, t2.base, cap)) {
        std::vector<LaxMorphism> with_f;
        for (const auto& chi : enumerate_nat_trans(compose_functors(f, t2.endo),
                                                   compose_functors(t1.endo, f), cap)) {
          LaxMorphism l{t1, t2, f, chi};
          if (check_lax(l).ok()) with_f.push_back(l);
        }
        int lifts = 0;
        for (const auto& h : enumerate_functors(a1.em_category, a2.em_category, cap))
          if (compose_functors(h, a2.forgetful) == compose_functors(a1.forgetful, f)) ++lifts;
        if (static_cast<int>(with_f.size()) != lifts) {
          ctx.fail("lax structures (" + std::to_string(with_f.size()) +
                   ") and lifts (" + std::to_string(lifts) + ") disagree");
          return;
        }
        for (const auto& l : with_f) {
          FinFunctor lifted = emlift_lax(a1, a2, l);
          LaxMorphism back = emlift_lax_inverse(a1, a2, f, lifted);
          if (!(back.structure == l.structure)) {
            ctx.fail("emlift inverse does not recover the lax structure", to_json(l));
            return;
          }
          laxes.push_back(l);
        }
      }

      // clauses (ii) and (iii) over every ordered pair of lax 1-cells
      for (const auto& f1 : laxes)
        for (const auto& f2 : laxes) {
          FinFunctor h1 = emlift_lax(a1, a2, f1);
          FinFunctor h2 = emlift_lax(a1, a2, f2);

          // (iii): specializations <-> all 2-cells between the lifts
          std::vector<NatTrans> specs;
          for (const auto& sigma :
               enumerate_nat_trans(f1.carrier,
                                   compose_functors(t1.endo, f2.carrier), cap))
            if (check_square(em_cell(f1, f2, sigma)).ok()) specs.push_back(sigma);
          auto lifted_cells = enumerate_nat_trans(h1, h2, cap);
          if (specs.size() != lifted_cells.size()) {
            ctx.fail("specializations (" + std::to_string(specs.size()) +
                     ") and lifted 2-cells (" + std::to_string(lifted_cells.size()) +
                     ") disagree");
            return;
          }
          for (const auto& sigma : specs) {
            NatTrans lifted = emlift_cell(a1, a2, em_cell(f1, f2, sigma));
            SquareCell back =
                emlift_cell_inverse(a1, a2, f1, f2, lifted, CellKind::specialization);
            if (!(back.cell == sigma)) {
              ctx.fail("specialization round trip is not the identity");
              return;
            }
          }
          for (const auto& lifted : lifted_cells) {
            SquareCell sigma =
                emlift_cell_inverse(a1, a2, f1, f2, lifted, CellKind::specialization);
            if (!(emlift_cell(a1, a2, sigma) == lifted)) {
              ctx.fail("lifted 2-cell round trip is not the identity");
              return;
            }
          }

          // (ii): monad 2-cells <-> lifted cells satisfying the whisker condition
          std::vector<NatTrans> cells;
          for (const auto& gamma : enumerate_nat_trans(f1.carrier, f2.carrier, cap))
            if (check_square(mnd_cell(f1, f2, gamma)).ok()) cells.push_back(gamma);
          int conditioned = 0;
          for (const auto& lifted : lifted_cells) {
            NatTrans whiskered = whisker_right(lifted, a2.forgetful);
            for (const auto& gamma : cells)
              if (whisker_left(a1.forgetful, gamma) == whiskered) {
                ++conditioned;
                break;
              }
          }
          if (static_cast<int>(cells.size()) != conditioned) {
            ctx.fail("monad 2-cells (" + std::to_string(cells.size()) +
                     ") and conditioned lifts (" + std::to_string(conditioned) +
                     ") disagree");
            return;
          }
          for (const auto& gamma : cells) {
            NatTrans lifted = emlift_cell(a1, a2, mnd_cell(f1, f2, gamma));
            SquareCell back = emlift_cell_inverse(a1, a2, f1, f2, lifted, CellKind::two_cell);
            if (!(back.cell == gamma)) {
              ctx.fail("monad 2-cell round trip is not the identity");
              return;
            }
          }
        }
    }
  });
}

// ---------------------------------------------------------------- check 5

namespace {

struct SquareUniverse {
  std::vector<Monad> monads;
  // lax[i][j] and colax[i][j]: lawful cells between monads i and j
  std::vector<std::vector<std::vector<LaxMorphism>>> lax;
  std::vector<std::vector<std::vector<ColaxMorphism>>> colax;
};

SquareUniverse build_universe(const std::vector<Monad>& monads, const EnumCap& cap) {
  SquareUniverse u;
  u.monads = monads;
  const std::size_t n = monads.size();
  u.lax.assign(n, std::vector<std::vector<LaxMorphism>>(n));
  u.colax.assign(n, std::vector<std::vector<ColaxMorphism>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      u.lax[i][j] = lawful_lax_cells(monads[i], monads[j], cap);
      u.colax[i][j] = lawful_colax_cells(monads[i], monads[j], cap);
    }
  return u;
}

std::optional<SquareCell> some_square(const SquareUniverse& u, std::mt19937_64& rng,
                                      CellKind kind, const EnumCap& cap) {
  const int n = static_cast<int>(u.monads.size());
  for (int attempt = 0; attempt < 40; ++attempt) {
    int w = pick(rng, n), nn = pick(rng, n), e = pick(rng, n), s = pick(rng, n);
    const auto& tops = u.lax[static_cast<std::size_t>(w)][static_cast<std::size_t>(nn)];
    const auto& rights = u.colax[static_cast<std::size_t>(nn)][static_cast<std::size_t>(e)];
    const auto& lefts = u.colax[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)];
    const auto& bottoms = u.lax[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
    if (tops.empty() || rights.empty() || lefts.empty() || bottoms.empty()) continue;
    auto squares = lawful_squares(tops[static_cast<std::size_t>(pick(rng, static_cast<int>(tops.size())))],
                                  rights[static_cast<std::size_t>(pick(rng, static_cast<int>(rights.size())))],
                                  lefts[static_cast<std::size_t>(pick(rng, static_cast<int>(lefts.size())))],
                                  bottoms[static_cast<std::size_t>(pick(rng, static_cast<int>(bottoms.size())))],
                                  kind, cap);
    if (!squares.empty())
      return squares[static_cast<std::size_t>(pick(rng, static_cast<int>(squares.size())))];
  }
  return std::nullopt;
}

// A lawful square with the given colax left edge (for lax-direction gluing).
std::optional<SquareCell> square_with_left(const SquareUniverse& u, std::mt19937_64& rng,
                                           CellKind kind, const ColaxMorphism& left,
                                           const EnumCap& cap) {
  const int n = static_cast<int>(u.monads.size());
  int w = -1, s = -1;
  for (int i = 0; i < n; ++i) {
    if (same_monad(u.monads[static_cast<std::size_t>(i)], left.source_monad)) w = i;
    if (same_monad(u.monads[static_cast<std::size_t>(i)], left.target_monad)) s = i;
  }
  for (int attempt = 0; attempt < 40; ++attempt) {
    int nn = pick(rng, n), e = pick(rng, n);
    const auto& tops = u.lax[static_cast<std::size_t>(w)][static_cast<std::size_t>(nn)];
    const auto& rights = u.colax[static_cast<std::size_t>(nn)][static_cast<std::size_t>(e)];
    const auto& bottoms = u.lax[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
    if (tops.empty() || rights.empty() || bottoms.empty()) continue;
    auto squares = lawful_squares(tops[static_cast<std::size_t>(pick(rng, static_cast<int>(tops.size())))],
                                  rights[static_cast<std::size_t>(pick(rng, static_cast<int>(rights.size())))],
                                  left,
                                  bottoms[static_cast<std::size_t>(pick(rng, static_cast<int>(bottoms.size())))],
                                  kind, cap);
    if (!squares.empty())
      return squares[static_cast<std::size_t>(pick(rng, static_cast<int>(squares.size())))];
  }
  return std::nullopt;
}

// A lawful square with the given lax top edge (for colax-direction gluing).
std::optional<SquareCell> square_with_top(const SquareUniverse& u, std::mt19937_64& rng,
                                          CellKind kind, const LaxMorphism& top,
                                          const EnumCap& cap) {
  const int n = static_cast<int>(u.monads.size());
  int w = -1, nn = -1;
  for (int i = 0; i < n; ++i) {
    if (same_monad(u.monads[static_cast<std::size_t>(i)], top.source_monad)) w = i;
    if (same_monad(u.monads[static_cast<std::size_t>(i)], top.target_monad)) nn = i;
  }
  for (int attempt = 0; attempt < 40; ++attempt) {
    int s = pick(rng, n), e = pick(rng, n);
    const auto& rights = u.colax[static_cast<std::size_t>(nn)][static_cast<std::size_t>(e)];
    const auto& lefts = u.colax[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)];
    const auto& bottoms = u.lax[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
    if (rights.empty() || lefts.empty() || bottoms.empty()) continue;
    auto squares = lawful_squares(top,
                                  rights[static_cast<std::size_t>(pick(rng, static_cast<int>(rights.size())))],
                                  lefts[static_cast<std::size_t>(pick(rng, static_cast<int>(lefts.size())))],
                                  bottoms[static_cast<std::size_t>(pick(rng, static_cast<int>(bottoms.size())))],
                                  kind, cap);
    if (!squares.empty())
      return squares[static_cast<std::size_t>(pick(rng, static_cast<int>(squares.size())))];
  }
  return std::nullopt;
}

// A lawful square completing the given top and left edges.
std::optional<SquareCell> square_with_top_left(const SquareUniverse& u, std::mt19937_64& rng,
                                               CellKind kind, const LaxMorphism& top,
                                               const ColaxMorphism& left, const EnumCap& cap) {
  const int n = static_cast<int>(u.monads.size());
  int nn = -1, s = -1;
  for (int i = 0; i < n; ++i) {
    if (same_monad(u.monads[static_cast<std::size_t>(i)], top.target_monad)) nn = i;
    if (same_monad(u.monads[static_cast<std::size_t>(i)], left.target_monad)) s = i;
  }
  for (int attempt = 0; attempt < 40; ++attempt) {
    int e = pick(rng, n);
    const auto& rights = u.colax[static_cast<std::size_t>(nn)][static_cast<std::size_t>(e)];
    const auto& bottoms = u.lax[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)];
    if (rights.empty() || bottoms.empty()) continue;
    auto squares = lawful_squares(
        top, rights[static_cast<std::size_t>(pick(rng, static_cast<int>(rights.size())))], left,
        bottoms[static_cast<std::size_t>(pick(rng, static_cast<int>(bottoms.size())))], kind, cap);
    if (!squares.empty())
      return squares[static_cast<std::size_t>(pick(rng, static_cast<int>(squares.size())))];
  }
  return std::nullopt;
}

bool exercise_configuration(Ctx& ctx, const SquareUniverse& u, std::mt19937_64& rng,
                            CellKind kind, const EnumCap& cap) {
  // one composable pair in each direction, its units, associativity and a grid
  auto a = some_square(u, rng, kind, cap);
  if (!a) return false;

  auto b = square_with_left(u, rng, kind, a->right, cap);
  if (b) {
    SquareCell ab = compose_squares(*a, *b, SquareDir::lax);
    if (!check_square(ab).ok()) {
      ctx.fail("lax-direction composite fails its laws", to_json(ab));
      return true;
    }
    auto c = square_with_left(u, rng, kind, b->right, cap);
    if (c) {
      SquareCell l = compose_squares(compose_squares(*a, *b, SquareDir::lax), *c, SquareDir::lax);
      SquareCell r = compose_squares(*a, compose_squares(*b, *c, SquareDir::lax), SquareDir::lax);
      if (!(l.cell == r.cell)) {
        ctx.fail("lax-direction composition is not associative");
        return true;
      }
    }
  }

  auto d = square_with_top(u, rng, kind, a->bottom, cap);
  if (d) {
    SquareCell ad = compose_squares(*a, *d, SquareDir::colax);
    if (!check_square(ad).ok()) {
      ctx.fail("colax-direction composite fails its laws", to_json(ad));
      return true;
    }
    auto e = square_with_top(u, rng, kind, d->bottom, cap);
    if (e) {
      SquareCell l =
          compose_squares(compose_squares(*a, *d, SquareDir::colax), *e, SquareDir::colax);
      SquareCell r =
          compose_squares(*a, compose_squares(*d, *e, SquareDir::colax), SquareDir::colax);
      if (!(l.cell == r.cell)) {
        ctx.fail("colax-direction composition is not associative");
        return true;
      }
    }
  }

  // unit laws on a
  {
    SquareCell lid = identity_square_on_colax(a->left, kind);
    SquareCell pre = compose_squares(lid, *a, SquareDir::lax);
    if (!(pre.cell == a->cell)) {
      ctx.fail("left unit law fails in the lax direction");
      return true;
    }
    SquareCell rid = identity_square_on_colax(a->right, kind);
    SquareCell post = compose_squares(*a, rid, SquareDir::lax);
    if (!(post.cell == a->cell)) {
      ctx.fail("right unit law fails in the lax direction");
      return true;
    }
    SquareCell tid = identity_square_on_lax(a->top, kind);
    SquareCell above = compose_squares(tid, *a, SquareDir::colax);
    if (!(above.cell == a->cell)) {
      ctx.fail("unit law fails in the colax direction (top)");
      return true;
    }
    SquareCell bid = identity_square_on_lax(a->bottom, kind);
    SquareCell below = compose_squares(*a, bid, SquareDir::colax);
    if (!(below.cell == a->cell)) {
      ctx.fail("unit law fails in the colax direction (bottom)");
      return true;
    }
  }
  return true;
}

} // namespace

CheckResult check_doublemonads(std::uint64_t seed, const EnumCap& cap) {
  return timed("double categories of monads", [&](Ctx& ctx) {
    // exhaustive part over sgn
    SquareUniverse sgn_universe = build_universe({fx::sgn()}, cap);
    // composites of 1-cells are again (co)lax 1-cells
    for (const auto& x : sgn_universe.lax[0][0])
      for (const auto& y : sgn_universe.lax[0][0])
        if (!check_lax(compose_lax(x, y)).ok()) {
          ctx.fail("sgn: composite lax 1-cell fails its laws");
          return;
        }
    for (const auto& x : sgn_universe.colax[0][0])
      for (const auto& y : sgn_universe.colax[0][0])
        if (!check_lax(compose_lax(x, y)).ok()) {
          ctx.fail("sgn: composite colax 1-cell fails its laws");
          return;
        }
    for (CellKind kind : {CellKind::two_cell, CellKind::specialization}) {
      std::vector<SquareCell> squares;
      for (const auto& top : sgn_universe.lax[0][0])
        for (const auto& right : sgn_universe.colax[0][0])
          for (const auto& left : sgn_universe.colax[0][0])
            for (const auto& bottom : sgn_universe.lax[0][0])
              for (const auto& q : lawful_squares(top, right, left, bottom, kind, cap))
                squares.push_back(q);
      if (squares.empty()) {
        ctx.fail("no lawful squares over sgn");
        return;
      }
      // closure and associativity in both directions
      for (const auto& x : squares)
        for (const auto& y : squares) {
          if (same_colax(x.right, y.left)) {
            SquareCell xy = compose_squares(x, y, SquareDir::lax);
            if (!check_square(xy).ok()) {
              ctx.fail("sgn: lax-direction composite fails its laws", to_json(xy));
              return;
            }
            for (const auto& z : squares)
              if (same_colax(y.right, z.left)) {
                auto l = compose_squares(compose_squares(x, y, SquareDir::lax), z, SquareDir::lax);
                auto r = compose_squares(x, compose_squares(y, z, SquareDir::lax), SquareDir::lax);
                if (!(l.cell == r.cell)) {
                  ctx.fail("sgn: lax-direction associativity fails");
                  return;
                }
              }
          }
          if (same_lax(x.bottom, y.top)) {
            SquareCell xy = compose_squares(x, y, SquareDir::colax);
            if (!check_square(xy).ok()) {
              ctx.fail("sgn: colax-direction composite fails its laws", to_json(xy));
              return;
            }
            for (const auto& z : squares)
              if (same_lax(y.bottom, z.top)) {
                auto l =
                    compose_squares(compose_squares(x, y, SquareDir::colax), z, SquareDir::colax);
                auto r =
                    compose_squares(x, compose_squares(y, z, SquareDir::colax), SquareDir::colax);
                if (!(l.cell == r.cell)) {
                  ctx.fail("sgn: colax-direction associativity fails");
                  return;
                }
              }
          }
        }
      // units
      for (const auto& x : squares) {
        if (!(compose_squares(identity_square_on_colax(x.left, kind), x, SquareDir::lax).cell ==
              x.cell) ||
            !(compose_squares(x, identity_square_on_colax(x.right, kind), SquareDir::lax).cell ==
              x.cell) ||
            !(compose_squares(identity_square_on_lax(x.top, kind), x, SquareDir::colax).cell ==
              x.cell) ||
            !(compose_squares(x, identity_square_on_lax(x.bottom, kind), SquareDir::colax).cell ==
              x.cell)) {
          ctx.fail("sgn: a unit law fails", to_json(x));
          return;
        }
      }
      // interchange over all grids
      for (const auto& q11 : squares)
        for (const auto& q12 : squares) {
          if (!same_colax(q11.right, q12.left)) continue;
          for (const auto& q21 : squares) {
            if (!same_lax(q11.bottom, q21.top)) continue;
            for (const auto& q22 : squares) {
              if (!same_colax(q21.right, q22.left) || !same_lax(q12.bottom, q22.top)) continue;
              if (!check_interchange(q11, q12, q21, q22).ok()) {
                ctx.fail("sgn: interchange fails");
                return;
              }
            }
          }
        }
      // the identity-on-1-cells functor to specializations preserves both
      // compositions
      if (kind == CellKind::two_cell) {
        for (const auto& x : squares)
          for (const auto& y : squares) {
            if (same_colax(x.right, y.left)) {
              auto l = spec_from_2cell(compose_squares(x, y, SquareDir::lax));
              auto r = compose_squares(spec_from_2cell(x), spec_from_2cell(y), SquareDir::lax);
              if (!(l.cell == r.cell)) {
                ctx.fail("sgn: specialization functor breaks lax-direction composition");
                return;
              }
            }
            if (same_lax(x.bottom, y.top)) {
              auto l = spec_from_2cell(compose_squares(x, y, SquareDir::colax));
              auto r = compose_squares(spec_from_2cell(x), spec_from_2cell(y), SquareDir::colax);
              if (!(l.cell == r.cell)) {
                ctx.fail("sgn: specialization functor breaks colax-direction composition");
                return;
              }
            }
          }
      }
    }

    // randomized part over the chain3 closure monads
    std::mt19937_64 rng(seed);
    SquareUniverse u =
        build_universe({fx::clos_c(), fx::clos_top(), identity_monad(fx::chain3())}, cap);
    int done = 0;
    int guard = 0;
    while (done < 500 && guard++ < 20000) {
      CellKind kind = (rng() & 1) ? CellKind::two_cell : CellKind::specialization;
      if (exercise_configuration(ctx, u, rng, kind, cap)) ++done;
      if (!ctx.ok()) return;
    }
    if (done < 500) ctx.fail("could not build 500 composable configurations");

    // randomized interchange over poset grids
    int grids = 0;
    guard = 0;
    while (grids < 100 && guard++ < 40000) {
      CellKind kind = (rng() & 1) ? CellKind::two_cell : CellKind::specialization;
      auto q11 = some_square(u, rng, kind, cap);
      if (!q11) continue;
      auto q12 = square_with_left(u, rng, kind, q11->right, cap);
      if (!q12) continue;
      auto q21 = square_with_top(u, rng, kind, q11->bottom, cap);
      if (!q21) continue;
      auto q22 = square_with_top_left(u, rng, kind, q12->bottom, q21->right, cap);
      if (!q22) continue;
      if (!check_interchange(*q11, *q12, *q21, *q22).ok()) {
        ctx.fail("poset: interchange fails");
        return;
      }
      ++grids;
    }
    if (grids < 100) ctx.fail("could not build 100 interchange grids");
  });
}

// ---------------------------------------------------------------- check 6

CheckResult check_distributive_suite(const EnumCap& cap) {
  return timed("distributive laws and composition", [&](Ctx& ctx) {
    auto sq = fx::sq();
    auto monads = closure_monads(sq);
    int found = 0;
    for (const auto& t1 : monads)
      for (const auto& t2 : monads) {
        // a distributive cell exists in a poset iff the pointwise inequality holds
        NatTrans chi{compose_functors(t2.endo, t1.endo), compose_functors(t1.endo, t2.endo), {}};
        bool exists = true;
        for (std::size_t x = 0; x < sq->objects.size(); ++x) {
          auto h = sq->hom(chi.source.obj(static_cast<int>(x)),
                           chi.target.obj(static_cast<int>(x)));
          if (h.empty()) {
            exists = false;
            break;
          }
          chi.components.push_back(h.front());
        }
        if (!exists) continue;
        DistributiveLaw d{t1, t2, chi};
        auto law = check_distributive(d);
        if (!law.ok()) {
          ctx.fail("four-law checker rejects a pointwise-admissible cell: " + law.summary(),
                   to_json(d));
          return;
        }
        ++found;

        Monad comp = composite_monad(d);
        auto claw = check_monad(comp);
        if (!claw.ok()) {
          ctx.fail("composite fails monad laws: " + claw.summary(), to_json(d));
          return;
        }
        auto [i1, i2] = injection_monad_maps(d);
        if (!check_monad_map(i1).ok() || !check_monad_map(i2).ok()) {
          ctx.fail("an injection fails the monad map laws", to_json(d));
          return;
        }
        // brute-force confirmation that the first injection is among all monad maps
        bool seen = false;
        for (const auto& cell : enumerate_nat_trans(t1.endo, comp.endo, cap)) {
          MonadMap h{t1, comp, cell};
          if (check_monad_map(h).ok() && cell == i1.cell) seen = true;
        }
        if (!seen) {
          ctx.fail("constructed injection not found by enumeration", to_json(d));
          return;
        }
        if (!(distlaw_from_composite_mult(d) == d.cell)) {
          ctx.fail("law is not recovered from the composite multiplication", to_json(d));
          return;
        }
        MonadInMnd view = distlaw_to_mnd(d);
        if (!check_square(view.unit_cell).ok() || !check_square(view.mult_cell).ok()) {
          ctx.fail("monad-in-Mnd cells fail the square laws", to_json(d));
          return;
        }
        DistributiveLaw back = distlaw_from_mnd(view);
        if (!(back.cell == d.cell)) {
          ctx.fail("monad-in-Mnd round trip is not exact", to_json(d));
          return;
        }

        // module split/merge round trips over small sources
        for (const CatPtr& src : {fx::term(), fx::arrow2()}) {
          for (const auto& m : enumerate_functors(src, sq, cap)) {
            for (const auto& rho :
                 enumerate_nat_trans(compose_functors(m, comp.endo), m, cap)) {
              ModuleStr s{Side::right, comp, m, rho};
              if (!check_module(s).ok()) continue;
              auto [m1, m2] = module_split(d, s);
              auto pair_law = check_module_pair(d, m1, m2);
              if (!pair_law.ok()) {
                ctx.fail("split pair fails the distributivity law: " + pair_law.summary(),
                         to_json(s));
                return;
              }
              ModuleStr merged = module_merge(d, m1, m2);
              if (!(merged.action == s.action)) {
                ctx.fail("split/merge round trip is not the identity", to_json(s));
                return;
              }
            }
            // and the other way: lawful pairs merge then split
            for (const auto& rho1 :
                 enumerate_nat_trans(compose_functors(m, t1.endo), m, cap))
              for (const auto& rho2 :
                   enumerate_nat_trans(compose_functors(m, t2.endo), m, cap)) {
                ModuleStr m1{Side::right, t1, m, rho1};
                ModuleStr m2{Side::right, t2, m, rho2};
                if (!check_module_pair(d, m1, m2).ok()) continue;
                ModuleStr merged = module_merge(d, m1, m2);
                auto [b1, b2] = module_split(d, merged);
                if (!(b1.action == rho1) || !(b2.action == rho2)) {
                  ctx.fail("merge/split round trip is not the identity");
                  return;
                }
              }
          }
        }

        auto rep = verify_distem(d, cap);
        if (!rep.laws.ok()) {
          ctx.fail("algebra-object composition fails: " + rep.laws.summary(), to_json(d));
          return;
        }
        FinFunctor cmp = comparison_cell(d, cap);
        if (!validate_functor(cmp).ok()) {
          ctx.fail("comparison 1-cell is not a functor", to_json(d));
          return;
        }
      }
    if (found < 2) ctx.fail("expected several distributive laws among the closure monads");
  });
}

// ---------------------------------------------------------------- check 7

CheckResult check_codensity(const EnumCap& cap) {
  return timed("codensity monads", [&](Ctx& ctx) {
    FinFunctor x = fx::fix_incl();
    auto e = codensity(x, true, cap);
    if (!e) {
      ctx.fail("codensity(fix_incl) is absent");
      return;
    }
    Monad clos = fx::clos_c();
    if (!(e->ext == clos.endo)) {
      ctx.fail("codensity(fix_incl) is not the closure endofunctor", to_json(*e));
      return;
    }
    // the certification quantified over exactly the 10 monotone endomaps
    if (enumerate_functors(fx::chain3(), fx::chain3(), cap).size() != 10) {
      ctx.fail("expected 10 monotone endomaps of chain3");
      return;
    }
    Monad induced = monad_structure(*e);
    if (!same_monad(induced, clos)) {
      ctx.fail("codensity monad structure differs from clos_c", to_json(induced));
      return;
    }
    // every closure operator acting on fix_incl maps uniquely into it
    int actors = 0;
    for (const auto& t : closure_monads(fx::chain3())) {
      NatTrans rho{compose_functors(x, t.endo), x, {}};
      bool acts = true;
      for (std::size_t o = 0; o < x.source->objects.size(); ++o) {
        auto h = fx::chain3()->hom(rho.source.obj(static_cast<int>(o)),
                                   x.obj(static_cast<int>(o)));
        if (h.empty()) {
          acts = false;
          break;
        }
        rho.components.push_back(h.front());
      }
      if (!acts) continue;
      ModuleStr s{Side::right, t, x, rho};
      if (!check_module(s).ok()) continue;
      ++actors;
      MonadMap h = universal_monad_map(*e, t, rho, true, cap);
      if (!check_monad_map(h).ok()) {
        ctx.fail("universal monad map fails its laws", to_json(h));
        return;
      }
    }
    if (actors != 2) {
      // exactly the identity and clos_c admit actions on the inclusion
      ctx.fail("expected exactly 2 closure operators acting on fix_incl, found " +
               std::to_string(actors));
      return;
    }
    // degenerate cases
    auto eid = codensity(identity_functor(fx::chain3()), true, cap);
    if (!eid || !is_identity_monad(monad_structure(*eid)))
      ctx.fail("codensity along the identity is not the identity monad");
  });
}

// ---------------------------------------------------------------- check 8

CheckResult check_pushforward(const EnumCap& cap) {
  return timed("pushforward monads", [&](Ctx& ctx) {
    FinFunctor x = fx::fix_incl();
    auto ecod = codensity(x, true, cap);
    auto epush = pushforward(identity_monad(fx::sub2()), x, true, cap);
    if (!ecod || !epush) {
      ctx.fail("codensity or pushforward absent");
      return;
    }
    if (!(ecod->ext == epush->ext) ||
        !(ecod->universal.components == epush->universal.components)) {
      ctx.fail("pushforward of the identity differs from the codensity monad");
      return;
    }
    if (!same_monad(monad_structure(*ecod), monad_structure(*epush))) {
      ctx.fail("induced monad structures differ");
      return;
    }

    // agreement with the adjunction construction for closure ⊣ inclusion
    Adjunction adj;
    adj.right = x;
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

    RightExtension efromadj = from_adjunction_codensity(adj, true, cap);
    if (!(efromadj.ext == ecod->ext) ||
        !(efromadj.universal.components == ecod->universal.components)) {
      ctx.fail("adjunction-induced codensity differs from the pointwise one");
      return;
    }
    RightExtension epush2 = from_adjunction_pushforward(adj, identity_monad(fx::sub2()), true, cap);
    if (!same_monad(monad_structure(epush2), monad_structure(*epush))) {
      ctx.fail("adjunction-induced pushforward differs");
      return;
    }

    // identity adjunction transports a monad to itself
    Adjunction idadj = identity_adjunction(fx::chain3());
    for (auto& [name, t] : fx::all_monads()) {
      if (!same_category(t.base, fx::chain3())) continue;
      RightExtension et = from_adjunction_pushforward(idadj, t, true, cap);
      if (!same_monad(monad_structure(et), t)) {
        ctx.fail("identity adjunction does not reproduce " + name);
        return;
      }
      auto direct = pushforward(t, identity_functor(fx::chain3()), true, cap);
      if (!direct || !same_monad(monad_structure(*direct), t)) {
        ctx.fail("pushforward along the identity does not reproduce " + name);
        return;
      }
    }

    // composition coherence along a preserving 1-cell
    Monad clos = fx::clos_c();
    FinFunctor closure_endo = clos.endo;
    auto pres = preserves_right_extension(closure_endo, *ecod, cap);
    if (!pres.preserved) {
      ctx.fail("the closure endofunctor should preserve the codensity extension");
      return;
    }
    auto staged = pushforward(monad_structure(*ecod), closure_endo, true, cap);
    auto direct = pushforward(identity_monad(fx::sub2()), compose_functors(x, closure_endo),
                              true, cap);
    if (!staged || !direct) {
      ctx.fail("pushforward-composition instances absent");
      return;
    }
    if (!same_monad(monad_structure(*staged), monad_structure(*direct)))
      ctx.fail("pushforward composition coherence fails");
  });
}

// ---------------------------------------------------------------- check 9

CheckResult check_span_retrofunctor(const EnumCap& cap) {
  return timed("spans and retrofunctors", [&](Ctx& ctx) {
    for (auto& [name, cat] : fx::all_categories()) {
      auto rt = category_span_roundtrip(cat, cap);
      auto law = check_span_monad(rt.encoded);
      if (!law.ok()) {
        ctx.fail("span-monad laws fail for " + name + ": " + law.summary());
        return;
      }
    }
    // associator coherence on the walking arrow's span
    {
      Span m = category_to_span(*fx::arrow2()).span;
      Span left = compose_spans(compose_spans(m, m), m);
      Span right = compose_spans(m, compose_spans(m, m));
      if (left.apex.size() != right.apex.size()) {
        ctx.fail("triple composite apexes differ in size");
        return;
      }
      // the canonical re-bracketing bijection preserves both legs
      for (std::size_t i = 0; i < left.apex.size(); ++i) {
        // ((x,y),z) and (x,(y,z)) enumerate in the same lexicographic order
        if (left.left_leg[i] != right.left_leg[i] || left.right_leg[i] != right.right_leg[i]) {
          ctx.fail("associator does not preserve the span legs");
          return;
        }
      }
    }
    // retrofunctors between discrete categories are exactly the functions
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::string> objs;
      for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
      auto d = std::make_shared<FinCategory>(
          fx::make_poset(objs, [](int a, int b) { return a == b; }));
      auto retros = enumerate_retrofunctors(d, d, cap);
      std::uint64_t expected = 1;
      for (int i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(n);
      if (retros.size() != expected) {
        ctx.fail("discrete retrofunctor count for n=" + std::to_string(n) + " is " +
                 std::to_string(retros.size()) + ", expected " + std::to_string(expected));
        return;
      }
      for (const auto& r : retros)
        if (!check_retrofunctor(r).ok()) {
          ctx.fail("enumerated retrofunctor fails its laws");
          return;
        }
    }
    // retrofunctor <-> lax round trips
    for (const CatPtr& c : {fx::chain3(), fx::arrow2()}) {
      for (const auto& r : enumerate_retrofunctors(c, c, cap)) {
        SpanLaxCell l = retrofunctor_to_lax(r);
        auto law = check_span_lax(l);
        if (!law.ok()) {
          ctx.fail("lax image of a retrofunctor fails the span lax laws: " + law.summary(),
                   to_json(r));
          return;
        }
        Retrofunctor back = lax_to_retrofunctor(l, c, c);
        if (back.on_objects != r.on_objects || back.lift != r.lift) {
          ctx.fail("retrofunctor round trip is not the identity");
          return;
        }
      }
    }
  });
}

// ---------------------------------------------------------------- check 10 (in-process part)

CheckResult check_serialization(const EnumCap& cap) {
  (void)cap;
  return timed("serialization stability and corpus verdicts", [&](Ctx& ctx) {
    DocumentStore store;
    store.add_fixtures();
    for (auto& [name, j] : fixture_documents()) {
      std::string once = canonicalize(j, store);
      std::string twice = canonicalize(Json::parse(once), store);
      if (once != twice) {
        ctx.fail("canonical form of fixture '" + name + "' is not stable");
        return;
      }
      Document d = parse_document(j, store);
      if (d.kind != "functor" && d.kind != "category" && d.kind != "nattrans")
        if (!check_document(d).ok()) {
          ctx.fail("bundled fixture '" + name + "' fails its laws");
          return;
        }
    }
    for (auto& [name, j] : corpus_documents()) {
      bool good = name.rfind("good_", 0) == 0;
      bool passes;
      try {
        Document d = parse_document(j, store);
        std::string once = canonicalize(j, store);
        std::string twice = canonicalize(Json::parse(once), store);
        if (once != twice) {
          ctx.fail("canonical form of corpus document '" + name + "' is not stable");
          return;
        }
        passes = check_document(d).ok();
      } catch (const SchemaError&) {
        passes = false;
      }
      if (good != passes) {
        ctx.fail("corpus document '" + name + "' has the wrong verdict");
        return;
      }
    }
  });
}

// ---------------------------------------------------------------- runner

SuiteReport run_suite(const SuiteOptions& opt) {
  if (!opt.fixtures_dir.empty()) {
    DocumentStore store;
    store.add_fixtures();
    for (auto& [name, j] : fixture_documents()) {
      auto path = opt.fixtures_dir / (name + ".json");
      if (!std::filesystem::exists(path))
        throw InvalidInput("missing fixture: " + path.string());
      std::ifstream in(path);
      Json loaded;
      in >> loaded;
      if (canonicalize(loaded, store) != canonicalize(j, store))
        throw InvalidInput("fixture " + name + " differs from the bundled one");
    }
  }
  SuiteReport report;
  report.checks.push_back(check_law_oracle_equivalence(opt.seed, opt.cap));
  report.checks.push_back(check_em_universal_property(opt.cap));
  report.checks.push_back(check_termresolve(opt.cap));
  report.checks.push_back(check_formaltfae(opt.cap));
  report.checks.push_back(check_doublemonads(opt.seed, opt.cap));
  report.checks.push_back(check_distributive_suite(opt.cap));
  report.checks.push_back(check_codensity(opt.cap));
  report.checks.push_back(check_pushforward(opt.cap));
  report.checks.push_back(check_span_retrofunctor(opt.cap));
  report.checks.push_back(check_serialization(opt.cap));
  return report;
}

Json suite_report_json(const SuiteReport& report) {
  Json out = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.status == CheckStatus::pass
                      ? "pass"
                      : c.status == CheckStatus::fail ? "fail" : "skipped-cap";
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    j["millis"] = c.millis;
    out.push_back(j);
  }
  return out;
}

std::string suite_report_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.status == CheckStatus::pass
               ? "PASS"
               : c.status == CheckStatus::fail ? "FAIL" : "SKIP(cap)")
       << "  " << c.name;
    if (!c.detail.empty()) os << "  -- " << c.detail;
    os << "  (" << static_cast<int>(c.millis) << " ms)\n";
  }
  return os.str();
}

} // namespace twocat
