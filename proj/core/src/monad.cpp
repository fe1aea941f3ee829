#include "twocat/monad.hpp"

namespace twocat {

Monad identity_monad(const CatPtr& c) {
  Monad m;
  m.base = c;
  m.endo = identity_functor(c);
  m.unit = identity_nat(m.endo);
  m.mult = identity_nat(m.endo);
  return m;
}

bool is_identity_monad(const Monad& m) {
  return is_identity_functor(m.endo) && m.unit == identity_nat(m.endo) &&
         m.mult == identity_nat(m.endo);
}

bool same_monad(const Monad& a, const Monad& b) {
  return same_category(a.base, b.base) && a.endo == b.endo && a.unit == b.unit &&
         a.mult == b.mult;
}

LawReport check_monad(const Monad& m) {
  LawReport r;
  if (!same_category(m.endo.source, m.base) || !same_category(m.endo.target, m.base)) {
    r.add("endofunctor boundary", "base");
    return r;
  }
  if (!(m.unit.source == identity_functor(m.base)) || !(m.unit.target == m.endo)) {
    r.add("unit boundary", "id => T");
    return r;
  }
  if (!(m.mult.source == compose_functors(m.endo, m.endo)) || !(m.mult.target == m.endo)) {
    r.add("mult boundary", "T;T => T");
    return r;
  }
  for (auto& v : validate_nat_trans(m.unit).violations)
    r.add("unit " + v.law, v.at, v.lhs, v.rhs);
  for (auto& v : validate_nat_trans(m.mult).violations)
    r.add("mult " + v.law, v.at, v.lhs, v.rhs);

  const auto& cat = *m.base;
  const auto& t = m.endo;
  for (std::size_t o = 0; o < cat.objects.size(); ++o) {
    int s = static_cast<int>(o);
    // mu_{T s} ; mu_s  ==  T(mu_s) ; mu_s
    int lhs = cat.compose(m.mult.at(t.obj(s)), m.mult.at(s));
    int rhs = cat.compose(t.mor(m.mult.at(s)), m.mult.at(s));
    if (lhs != rhs)
      r.add("associativity", cat.objects[o], cat.mor_name(lhs), cat.mor_name(rhs));
    // eta_{T s} ; mu_s == id_{T s}
    int ul = cat.compose(m.unit.at(t.obj(s)), m.mult.at(s));
    if (ul != cat.id_mor(t.obj(s)))
      r.add("unit law (eta after T)", cat.objects[o], cat.mor_name(ul),
            cat.mor_name(cat.id_mor(t.obj(s))));
    // T(eta_s) ; mu_s == id_{T s}
    int ur = cat.compose(t.mor(m.unit.at(s)), m.mult.at(s));
    if (ur != cat.id_mor(t.obj(s)))
      r.add("unit law (T after eta)", cat.objects[o], cat.mor_name(ur),
            cat.mor_name(cat.id_mor(t.obj(s))));
  }
  return r;
}

NatTrans nary_mult(const Monad& m, int n) {
  if (n < 0) throw InvalidInput("nary_mult: n must be non-negative");
  if (n == 0) return m.unit;
  NatTrans acc = identity_nat(m.endo);
  for (int k = 2; k <= n; ++k)
    acc = vertical(whisker_right(acc, m.endo), m.mult);
  // bracketing independence: the right-associated fold agrees
  NatTrans other = identity_nat(m.endo);
  for (int k = 2; k <= n; ++k)
    other = vertical(whisker_left(m.endo, other), m.mult);
  if (!(acc.components == other.components))
    throw InvalidInput("nary_mult: bracketings disagree; monad laws do not hold");
  return acc;
}

LawReport check_monad_map(const MonadMap& h) {
  LawReport r;
  if (!same_category(h.source.base, h.target.base)) {
    r.add("monad map boundary", "base");
    return r;
  }
  if (!(h.cell.source == h.source.endo) || !(h.cell.target == h.target.endo)) {
    r.add("monad map boundary", "T1 => T2");
    return r;
  }
  bool hard = false;
  for (auto& v : validate_nat_trans(h.cell).violations) {
    if (v.law != "naturality") hard = true;
    r.add("cell " + v.law, v.at, v.lhs, v.rhs);
  }
  if (hard) return r;

  compare_cells(r, "unit equation", vertical(h.source.unit, h.cell), h.target.unit);
  compare_cells(r, "mult equation", vertical(horizontal(h.cell, h.cell), h.target.mult),
                vertical(h.source.mult, h.cell));
  return r;
}

MonadMap identity_monad_map(const Monad& m) {
  return MonadMap{m, m, identity_nat(m.endo)};
}

LawReport check_module(const ModuleStr& s) {
  LawReport r;
  const auto& t = s.monad;
  if (s.side == Side::right) {
    if (!same_category(s.carrier.target, t.base)) {
      r.add("module boundary", "carrier target vs monad base");
      return r;
    }
    if (!(s.action.source == compose_functors(s.carrier, t.endo)) ||
        !(s.action.target == s.carrier)) {
      r.add("module boundary", "action M;T => M");
      return r;
    }
  } else {
    if (!same_category(s.carrier.source, t.base)) {
      r.add("module boundary", "carrier source vs monad base");
      return r;
    }
    if (!(s.action.source == compose_functors(t.endo, s.carrier)) ||
        !(s.action.target == s.carrier)) {
      r.add("module boundary", "action T;M => M");
      return r;
    }
  }
  bool hard = false;
  for (auto& v : validate_nat_trans(s.action).violations) {
    if (v.law != "naturality") hard = true;
    r.add("action " + v.law, v.at, v.lhs, v.rhs);
  }
  if (hard) return r;

  if (s.side == Side::right) {
    compare_cells(r, "module associativity",
                  vertical(whisker_left(s.carrier, t.mult), s.action),
                  vertical(whisker_right(s.action, t.endo), s.action));
    compare_cells(r, "module unit law", vertical(whisker_left(s.carrier, t.unit), s.action),
                  identity_nat(s.carrier));
  } else {
    compare_cells(r, "module associativity",
                  vertical(whisker_right(t.mult, s.carrier), s.action),
                  vertical(whisker_left(t.endo, s.action), s.action));
    compare_cells(r, "module unit law", vertical(whisker_right(t.unit, s.carrier), s.action),
                  identity_nat(s.carrier));
  }
  return r;
}

LawReport check_module_map(const ModuleStr& m1, const ModuleStr& m2, const NatTrans& phi) {
  LawReport r;
  if (m1.side != m2.side || !same_monad(m1.monad, m2.monad)) {
    r.add("module map boundary", "modules not over the same monad/side");
    return r;
  }
  if (!(phi.source == m1.carrier) || !(phi.target == m2.carrier)) {
    r.add("module map boundary", "M1 => M2");
    return r;
  }
  bool hard = false;
  for (auto& v : validate_nat_trans(phi).violations) {
    if (v.law != "naturality") hard = true;
    r.add("cell " + v.law, v.at, v.lhs, v.rhs);
  }
  if (hard) return r;

  const auto& t = m1.monad;
  if (m1.side == Side::right)
    compare_cells(r, "module map law", vertical(whisker_right(phi, t.endo), m2.action),
                  vertical(m1.action, phi));
  else
    compare_cells(r, "module map law", vertical(whisker_left(t.endo, phi), m2.action),
                  vertical(m1.action, phi));
  return r;
}

ModuleStr monad_as_module(const Monad& m, Side side) {
  return ModuleStr{side, m, m.endo, m.mult};
}

} // namespace twocat
