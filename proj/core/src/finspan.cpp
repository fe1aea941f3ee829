#include "twocat/finspan.hpp"

namespace twocat {

namespace {

// Apex pairs of a;b in the deterministic compose_spans order.
std::vector<std::pair<int, int>> composite_pairs(const Span& a, const Span& b) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < a.apex.size(); ++x)
    for (std::size_t y = 0; y < b.apex.size(); ++y)
      if (a.right_leg[x] == b.left_leg[y]) out.emplace_back(static_cast<int>(x),
                                                            static_cast<int>(y));
  return out;
}

int pair_index(const std::vector<std::pair<int, int>>& pairs, int x, int y) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i] == std::make_pair(x, y)) return static_cast<int>(i);
  return -1;
}

} // namespace

LawReport validate_span(const Span& s) {
  LawReport r;
  if (s.left_leg.size() != s.apex.size() || s.right_leg.size() != s.apex.size()) {
    r.add("legs", "size");
    return r;
  }
  for (std::size_t i = 0; i < s.apex.size(); ++i) {
    if (s.left_leg[i] < 0 || s.left_leg[i] >= static_cast<int>(s.left_foot.size()))
      r.add("left leg out of range", s.apex[i]);
    if (s.right_leg[i] < 0 || s.right_leg[i] >= static_cast<int>(s.right_foot.size()))
      r.add("right leg out of range", s.apex[i]);
  }
  return r;
}

Span identity_span(const std::vector<std::string>& foot) {
  Span s;
  s.left_foot = foot;
  s.right_foot = foot;
  s.apex = foot;
  for (std::size_t i = 0; i < foot.size(); ++i) {
    s.left_leg.push_back(static_cast<int>(i));
    s.right_leg.push_back(static_cast<int>(i));
  }
  return s;
}

Span compose_spans(const Span& a, const Span& b) {
  if (a.right_foot != b.left_foot)
    throw BoundaryError("compose_spans: feet do not match");
  Span out;
  out.left_foot = a.left_foot;
  out.right_foot = b.right_foot;
  for (auto [x, y] : composite_pairs(a, b)) {
    out.apex.push_back("(" + a.apex[static_cast<std::size_t>(x)] + "," +
                       b.apex[static_cast<std::size_t>(y)] + ")");
    out.left_leg.push_back(a.left_leg[static_cast<std::size_t>(x)]);
    out.right_leg.push_back(b.right_leg[static_cast<std::size_t>(y)]);
  }
  return out;
}

LawReport check_span_monad(const SpanMonad& m) {
  LawReport r;
  if (m.span.left_foot != m.foot || m.span.right_foot != m.foot) {
    r.add("span feet", "must both equal the monad foot");
    return r;
  }
  for (auto& v : validate_span(m.span).violations) r.add(v.law, v.at, v.lhs, v.rhs);
  if (!r.ok()) return r;

  const auto& sp = m.span;
  if (m.unit.size() != m.foot.size()) {
    r.add("unit", "size");
    return r;
  }
  for (std::size_t s = 0; s < m.foot.size(); ++s) {
    int u = m.unit[s];
    if (u < 0 || u >= static_cast<int>(sp.apex.size())) {
      r.add("unit out of range", m.foot[s]);
      continue;
    }
    if (sp.left_leg[static_cast<std::size_t>(u)] != static_cast<int>(s) ||
        sp.right_leg[static_cast<std::size_t>(u)] != static_cast<int>(s))
      r.add("unit legs", m.foot[s], sp.apex[static_cast<std::size_t>(u)]);
  }
  auto pairs = composite_pairs(sp, sp);
  if (m.mult.size() != pairs.size()) {
    r.add("mult", "size", std::to_string(m.mult.size()), std::to_string(pairs.size()));
    return r;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int v = m.mult[i];
    auto [x, y] = pairs[i];
    if (v < 0 || v >= static_cast<int>(sp.apex.size())) {
      r.add("mult out of range", sp.apex[static_cast<std::size_t>(x)]);
      continue;
    }
    if (sp.left_leg[static_cast<std::size_t>(v)] != sp.left_leg[static_cast<std::size_t>(x)] ||
        sp.right_leg[static_cast<std::size_t>(v)] != sp.right_leg[static_cast<std::size_t>(y)])
      r.add("mult legs", "(" + sp.apex[static_cast<std::size_t>(x)] + "," +
                             sp.apex[static_cast<std::size_t>(y)] + ")",
            sp.apex[static_cast<std::size_t>(v)]);
  }
  if (!r.ok()) return r;

  auto mult_of = [&](int x, int y) { return m.mult[static_cast<std::size_t>(pair_index(pairs, x, y))]; };

  // unit laws through the canonical unitors
  for (std::size_t f = 0; f < sp.apex.size(); ++f) {
    int fo = static_cast<int>(f);
    int lu = mult_of(m.unit[static_cast<std::size_t>(sp.left_leg[f])], fo);
    if (lu != fo) r.add("left unit law", sp.apex[f], sp.apex[static_cast<std::size_t>(lu)]);
    int ru = mult_of(fo, m.unit[static_cast<std::size_t>(sp.right_leg[f])]);
    if (ru != fo) r.add("right unit law", sp.apex[f], sp.apex[static_cast<std::size_t>(ru)]);
  }
  // associativity through the canonical associator
  for (std::size_t x = 0; x < sp.apex.size(); ++x)
    for (std::size_t y = 0; y < sp.apex.size(); ++y) {
      if (sp.right_leg[x] != sp.left_leg[y]) continue;
      for (std::size_t z = 0; z < sp.apex.size(); ++z) {
        if (sp.right_leg[y] != sp.left_leg[z]) continue;
        int lhs = mult_of(mult_of(static_cast<int>(x), static_cast<int>(y)), static_cast<int>(z));
        int rhs = mult_of(static_cast<int>(x), mult_of(static_cast<int>(y), static_cast<int>(z)));
        if (lhs != rhs)
          r.add("associativity", "(" + sp.apex[x] + "," + sp.apex[y] + "," + sp.apex[z] + ")",
                sp.apex[static_cast<std::size_t>(lhs)], sp.apex[static_cast<std::size_t>(rhs)]);
      }
    }
  return r;
}

SpanMonad category_to_span(const FinCategory& c) {
  SpanMonad m;
  m.foot = c.objects;
  m.span.left_foot = c.objects;
  m.span.right_foot = c.objects;
  for (const auto& rec : c.morphisms) {
    m.span.apex.push_back(rec.id);
    m.span.left_leg.push_back(rec.src);
    m.span.right_leg.push_back(rec.dst);
  }
  m.unit = c.identity;
  for (auto [f, g] : composite_pairs(m.span, m.span))
    m.mult.push_back(c.compose_tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)]);
  return m;
}

FinCategory span_to_category(const SpanMonad& m) {
  auto law = check_span_monad(m);
  if (!law.ok()) throw InvalidInput("span_to_category: span monad laws fail: " + law.summary());
  FinCategory c;
  c.objects = m.foot;
  for (std::size_t i = 0; i < m.span.apex.size(); ++i)
    c.morphisms.push_back({m.span.apex[i], m.span.left_leg[i], m.span.right_leg[i]});
  c.identity = m.unit;
  auto pairs = composite_pairs(m.span, m.span);
  c.compose_tab.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    c.compose_tab[static_cast<std::size_t>(pairs[i].first)]
                 [static_cast<std::size_t>(pairs[i].second)] = m.mult[i];
  return c;
}

SpanRoundTrip category_span_roundtrip(const CatPtr& c, const EnumCap& cap) {
  SpanRoundTrip out;
  out.encoded = category_to_span(*c);
  out.decoded = span_to_category(out.encoded);
  auto decoded_ptr = std::make_shared<FinCategory>(out.decoded);
  auto iso = find_isomorphism(c, decoded_ptr, cap);
  if (!iso)
    throw InvalidInput("category_span_roundtrip: decoded category is not isomorphic");
  out.iso_forward = iso->first;
  out.iso_backward = iso->second;
  return out;
}

LawReport check_retrofunctor(const Retrofunctor& r) {
  LawReport rep;
  const auto& c = *r.source;
  const auto& d = *r.target;
  if (r.on_objects.size() != c.objects.size() || r.lift.size() != c.objects.size()) {
    rep.add("tables", "size");
    return rep;
  }
  for (std::size_t co = 0; co < c.objects.size(); ++co) {
    if (r.lift[co].size() != d.morphisms.size()) {
      rep.add("lift table", c.objects[co], "size");
      return rep;
    }
    int img = r.on_objects[co];
    for (std::size_t g = 0; g < d.morphisms.size(); ++g) {
      bool applicable = d.src(static_cast<int>(g)) == img;
      int h = r.lift[co][g];
      if (!applicable) {
        if (h != -1) rep.add("lift defined off its domain", c.objects[co] + "," + d.morphisms[g].id);
        continue;
      }
      if (h < 0 || h >= static_cast<int>(c.morphisms.size())) {
        rep.add("lift missing", c.objects[co] + "," + d.morphisms[g].id);
        continue;
      }
      if (c.src(h) != static_cast<int>(co))
        rep.add("lift source", c.objects[co] + "," + d.morphisms[g].id, c.morphisms[static_cast<std::size_t>(h)].id);
      else if (r.on_objects[static_cast<std::size_t>(c.dst(h))] != d.dst(static_cast<int>(g)))
        rep.add("lift codomain class", c.objects[co] + "," + d.morphisms[g].id,
                c.morphisms[static_cast<std::size_t>(h)].id);
    }
  }
  if (!rep.ok()) return rep;

  for (std::size_t co = 0; co < c.objects.size(); ++co) {
    int img = r.on_objects[co];
    if (r.lift[co][static_cast<std::size_t>(d.id_mor(img))] != c.id_mor(static_cast<int>(co)))
      rep.add("identity lifting", c.objects[co],
              c.mor_name(r.lift[co][static_cast<std::size_t>(d.id_mor(img))]),
              c.mor_name(c.id_mor(static_cast<int>(co))));
    for (std::size_t g = 0; g < d.morphisms.size(); ++g) {
      if (d.src(static_cast<int>(g)) != img) continue;
      int h1 = r.lift[co][g];
      int mid = c.dst(h1);
      for (std::size_t k = 0; k < d.morphisms.size(); ++k) {
        if (d.src(static_cast<int>(k)) != d.dst(static_cast<int>(g))) continue;
        int lhs = r.lift[co][static_cast<std::size_t>(d.compose(static_cast<int>(g), static_cast<int>(k)))];
        int rhs = c.compose(h1, r.lift[static_cast<std::size_t>(mid)][k]);
        if (lhs != rhs)
          rep.add("composition lifting",
                  c.objects[co] + "," + d.morphisms[g].id + "," + d.morphisms[k].id,
                  c.mor_name(lhs), c.mor_name(rhs));
      }
    }
  }
  return rep;
}

LawReport check_span_lax(const SpanLaxCell& l) {
  LawReport r;
  const auto& sc = l.source_monad;
  const auto& tc = l.target_monad;
  if (l.object_fn.size() != sc.foot.size()) {
    r.add("carrier", "size");
    return r;
  }
  if (l.chi.size() != sc.foot.size()) {
    r.add("structure", "size");
    return r;
  }
  auto spairs = composite_pairs(sc.span, sc.span);
  auto tpairs = composite_pairs(tc.span, tc.span);
  auto smult = [&](int x, int y) { return sc.mult[static_cast<std::size_t>(pair_index(spairs, x, y))]; };
  auto tmult = [&](int x, int y) { return tc.mult[static_cast<std::size_t>(pair_index(tpairs, x, y))]; };

  for (std::size_t co = 0; co < sc.foot.size(); ++co) {
    int img = l.object_fn[co];
    if (l.chi[co].size() != tc.span.apex.size()) {
      r.add("structure row", sc.foot[co], "size");
      return r;
    }
    for (std::size_t g = 0; g < tc.span.apex.size(); ++g) {
      bool applicable = tc.span.left_leg[g] == img;
      int h = l.chi[co][g];
      if (!applicable) {
        if (h != -1) r.add("structure off its domain", sc.foot[co] + "," + tc.span.apex[g]);
        continue;
      }
      if (h < 0 || h >= static_cast<int>(sc.span.apex.size())) {
        r.add("structure missing", sc.foot[co] + "," + tc.span.apex[g]);
        continue;
      }
      if (sc.span.left_leg[static_cast<std::size_t>(h)] != static_cast<int>(co))
        r.add("structure left leg", sc.foot[co] + "," + tc.span.apex[g]);
      else if (l.object_fn[static_cast<std::size_t>(sc.span.right_leg[static_cast<std::size_t>(h)])] !=
               tc.span.right_leg[g])
        r.add("structure right leg", sc.foot[co] + "," + tc.span.apex[g]);
    }
  }
  if (!r.ok()) return r;

  for (std::size_t co = 0; co < sc.foot.size(); ++co) {
    int img = l.object_fn[co];
    if (l.chi[co][static_cast<std::size_t>(tc.unit[static_cast<std::size_t>(img)])] !=
        sc.unit[co])
      r.add("lax unit law", sc.foot[co]);
    for (std::size_t g = 0; g < tc.span.apex.size(); ++g) {
      if (tc.span.left_leg[g] != img) continue;
      int h1 = l.chi[co][g];
      int mid = sc.span.right_leg[static_cast<std::size_t>(h1)];
      for (std::size_t k = 0; k < tc.span.apex.size(); ++k) {
        if (tc.span.left_leg[k] != tc.span.right_leg[g]) continue;
        int lhs = l.chi[co][static_cast<std::size_t>(tmult(static_cast<int>(g), static_cast<int>(k)))];
        int rhs = smult(h1, l.chi[static_cast<std::size_t>(mid)][k]);
        if (lhs != rhs)
          r.add("lax mult law", sc.foot[co] + "," + tc.span.apex[g] + "," + tc.span.apex[k],
                sc.span.apex[static_cast<std::size_t>(lhs)],
                sc.span.apex[static_cast<std::size_t>(rhs)]);
      }
    }
  }
  return r;
}

SpanLaxCell retrofunctor_to_lax(const Retrofunctor& r) {
  SpanLaxCell l;
  l.source_monad = category_to_span(*r.source);
  l.target_monad = category_to_span(*r.target);
  l.object_fn = r.on_objects;
  l.chi = r.lift;
  return l;
}

Retrofunctor lax_to_retrofunctor(const SpanLaxCell& l, const CatPtr& c, const CatPtr& d) {
  Retrofunctor r;
  r.source = c;
  r.target = d;
  r.on_objects = l.object_fn;
  r.lift = l.chi;
  return r;
}

std::vector<Retrofunctor> enumerate_retrofunctors(const CatPtr& c, const CatPtr& d,
                                                  const EnumCap& cap) {
  const auto& cc = *c;
  const auto& dd = *d;
  std::vector<Retrofunctor> out;
  std::uint64_t budget = cap.budget;
  auto spend = [&] {
    if (budget == 0) throw CapExceeded("enumerate_retrofunctors exceeded its budget");
    --budget;
  };

  std::vector<int> objs(cc.objects.size(), 0);
  auto try_lifts = [&](auto&& self, Retrofunctor& r, std::size_t co, std::size_t g) -> void {
    if (co == cc.objects.size()) {
      if (check_retrofunctor(r).ok()) out.push_back(r);
      return;
    }
    if (g == dd.morphisms.size()) {
      self(self, r, co + 1, 0);
      return;
    }
    if (dd.src(static_cast<int>(g)) != r.on_objects[co]) {
      r.lift[co][g] = -1;
      self(self, r, co, g + 1);
      return;
    }
    for (std::size_t h = 0; h < cc.morphisms.size(); ++h) {
      if (cc.src(static_cast<int>(h)) != static_cast<int>(co)) continue;
      if (r.on_objects[static_cast<std::size_t>(cc.dst(static_cast<int>(h)))] !=
          dd.dst(static_cast<int>(g)))
        continue;
      spend();
      r.lift[co][g] = static_cast<int>(h);
      self(self, r, co, g + 1);
    }
    r.lift[co][g] = -1;
  };

  auto try_objs = [&](auto&& self, std::size_t co) -> void {
    if (co == cc.objects.size()) {
      Retrofunctor r;
      r.source = c;
      r.target = d;
      r.on_objects = objs;
      r.lift.assign(cc.objects.size(), std::vector<int>(dd.morphisms.size(), -1));
      try_lifts(try_lifts, r, 0, 0);
      return;
    }
    for (int img = 0; img < static_cast<int>(dd.objects.size()); ++img) {
      spend();
      objs[co] = img;
      self(self, co + 1);
    }
  };
  if (cc.objects.empty()) {
    Retrofunctor r;
    r.source = c;
    r.target = d;
    out.push_back(r);
    return out;
  }
  try_objs(try_objs, 0);
  return out;
}

} // namespace twocat
