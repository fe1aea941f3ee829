#include "twocat/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace twocat {

int FinCategory::object_index(std::string_view id) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == id) return static_cast<int>(i);
  return -1;
}

int FinCategory::morphism_index(std::string_view id) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].id == id) return static_cast<int>(i);
  return -1;
}

int FinCategory::compose(int f, int g) const {
  int c = compose_tab.at(static_cast<std::size_t>(f)).at(static_cast<std::size_t>(g));
  if (c < 0)
    throw BoundaryError("compose: " + mor_name(f) + " then " + mor_name(g) +
                        " is not a composable pair");
  return c;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (std::size_t m = 0; m < morphisms.size(); ++m)
    if (morphisms[m].src == a && morphisms[m].dst == b) out.push_back(static_cast<int>(m));
  return out;
}

bool FinCategory::operator==(const FinCategory& other) const {
  return objects == other.objects && identity == other.identity &&
         compose_tab == other.compose_tab &&
         morphisms.size() == other.morphisms.size() &&
         std::equal(morphisms.begin(), morphisms.end(), other.morphisms.begin(),
                    [](const MorRec& x, const MorRec& y) {
                      return x.id == y.id && x.src == y.src && x.dst == y.dst;
                    });
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void LawReport::add(std::string law, std::string at, std::string lhs, std::string rhs) {
  violations.push_back({std::move(law), std::move(at), std::move(lhs), std::move(rhs)});
}

std::string LawReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.law << " at " << v.at;
    if (!v.lhs.empty() || !v.rhs.empty()) os << ": " << v.lhs << " != " << v.rhs;
    os << '\n';
  }
  return os.str();
}

LawReport validate_category(const FinCategory& c) {
  LawReport r;
  const int nm = static_cast<int>(c.morphisms.size());
  if (c.identity.size() != c.objects.size()) {
    r.add("identity table", "size", std::to_string(c.identity.size()),
          std::to_string(c.objects.size()));
    return r;
  }
  if (c.compose_tab.size() != c.morphisms.size()) {
    r.add("compose table", "size", std::to_string(c.compose_tab.size()),
          std::to_string(c.morphisms.size()));
    return r;
  }
  for (const auto& row : c.compose_tab)
    if (row.size() != c.morphisms.size()) {
      r.add("compose table", "row size", std::to_string(row.size()),
            std::to_string(c.morphisms.size()));
      return r;
    }
  for (int m = 0; m < nm; ++m) {
    const auto& rec = c.morphisms[static_cast<std::size_t>(m)];
    if (rec.src < 0 || rec.src >= static_cast<int>(c.objects.size()) || rec.dst < 0 ||
        rec.dst >= static_cast<int>(c.objects.size()))
      r.add("morphism boundary", rec.id);
  }
  if (!r.ok()) return r;

  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    int i = c.identity[o];
    if (i < 0 || i >= nm) {
      r.add("identity", c.objects[o], "missing");
      continue;
    }
    if (c.src(i) != static_cast<int>(o) || c.dst(i) != static_cast<int>(o))
      r.add("identity boundary", c.objects[o], c.mor_name(i));
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      int fg = c.compose_tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
      bool composable = c.dst(f) == c.src(g);
      if (!composable) {
        if (fg != -1)
          r.add("compose defined on non-composable pair", c.mor_name(f) + "," + c.mor_name(g));
        continue;
      }
      if (fg < 0 || fg >= nm) {
        r.add("compose missing", c.mor_name(f) + "," + c.mor_name(g));
        continue;
      }
      if (c.src(fg) != c.src(f))
        r.add("src mismatch", c.mor_name(f) + "," + c.mor_name(g), c.mor_name(fg));
      if (c.dst(fg) != c.dst(g))
        r.add("dst mismatch", c.mor_name(f) + "," + c.mor_name(g), c.mor_name(fg));
    }
  if (!r.ok()) return r;

  for (int f = 0; f < nm; ++f) {
    int lf = c.compose_tab[static_cast<std::size_t>(c.id_mor(c.src(f)))][static_cast<std::size_t>(f)];
    if (lf != f) r.add("left unit law", c.mor_name(f), c.mor_name(lf));
    int rf = c.compose_tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(c.id_mor(c.dst(f)))];
    if (rf != f) r.add("right unit law", c.mor_name(f), c.mor_name(rf));
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.dst(f) != c.src(g)) continue;
      for (int h = 0; h < nm; ++h) {
        if (c.dst(g) != c.src(h)) continue;
        int fg_h = c.compose(c.compose(f, g), h);
        int f_gh = c.compose(f, c.compose(g, h));
        if (fg_h != f_gh)
          r.add("associativity", c.mor_name(f) + "," + c.mor_name(g) + "," + c.mor_name(h),
                c.mor_name(fg_h), c.mor_name(f_gh));
      }
    }
  return r;
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  return same_category(source, other.source) && same_category(target, other.target) &&
         on_objects == other.on_objects && on_morphisms == other.on_morphisms;
}

LawReport validate_functor(const FinFunctor& f) {
  LawReport r;
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (f.on_objects.size() != a.objects.size() || f.on_morphisms.size() != a.morphisms.size()) {
    r.add("functor tables", "size");
    return r;
  }
  for (std::size_t o = 0; o < a.objects.size(); ++o)
    if (f.on_objects[o] < 0 || f.on_objects[o] >= static_cast<int>(b.objects.size()))
      r.add("object image out of range", a.objects[o]);
  for (std::size_t m = 0; m < a.morphisms.size(); ++m)
    if (f.on_morphisms[m] < 0 || f.on_morphisms[m] >= static_cast<int>(b.morphisms.size()))
      r.add("morphism image out of range", a.morphisms[m].id);
  if (!r.ok()) return r;

  for (std::size_t m = 0; m < a.morphisms.size(); ++m) {
    int fm = f.on_morphisms[m];
    if (b.src(fm) != f.obj(a.morphisms[m].src) || b.dst(fm) != f.obj(a.morphisms[m].dst))
      r.add("boundary preservation", a.morphisms[m].id, b.mor_name(fm));
  }
  for (std::size_t o = 0; o < a.objects.size(); ++o)
    if (f.mor(a.id_mor(static_cast<int>(o))) != b.id_mor(f.obj(static_cast<int>(o))))
      r.add("identity preservation", a.objects[o]);
  for (std::size_t x = 0; x < a.morphisms.size(); ++x)
    for (std::size_t y = 0; y < a.morphisms.size(); ++y) {
      if (a.dst(static_cast<int>(x)) != a.src(static_cast<int>(y))) continue;
      int lhs = f.mor(a.compose(static_cast<int>(x), static_cast<int>(y)));
      int rhs = b.compose(f.mor(static_cast<int>(x)), f.mor(static_cast<int>(y)));
      if (lhs != rhs)
        r.add("composition preservation", a.morphisms[x].id + "," + a.morphisms[y].id,
              b.mor_name(lhs), b.mor_name(rhs));
    }
  return r;
}

FinFunctor identity_functor(const CatPtr& c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  f.on_objects.resize(c->objects.size());
  for (std::size_t i = 0; i < c->objects.size(); ++i) f.on_objects[i] = static_cast<int>(i);
  f.on_morphisms.resize(c->morphisms.size());
  for (std::size_t i = 0; i < c->morphisms.size(); ++i) f.on_morphisms[i] = static_cast<int>(i);
  return f;
}

bool is_identity_functor(const FinFunctor& f) {
  if (!same_category(f.source, f.target)) return false;
  for (std::size_t i = 0; i < f.on_objects.size(); ++i)
    if (f.on_objects[i] != static_cast<int>(i)) return false;
  for (std::size_t i = 0; i < f.on_morphisms.size(); ++i)
    if (f.on_morphisms[i] != static_cast<int>(i)) return false;
  return true;
}

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.target, g.source))
    throw BoundaryError("compose_functors: target of first does not match source of second");
  FinFunctor out;
  out.source = f.source;
  out.target = g.target;
  out.on_objects.resize(f.on_objects.size());
  for (std::size_t o = 0; o < f.on_objects.size(); ++o) out.on_objects[o] = g.obj(f.on_objects[o]);
  out.on_morphisms.resize(f.on_morphisms.size());
  for (std::size_t m = 0; m < f.on_morphisms.size(); ++m)
    out.on_morphisms[m] = g.mor(f.on_morphisms[m]);
  return out;
}

bool NatTrans::operator==(const NatTrans& other) const {
  return source == other.source && target == other.target && components == other.components;
}

LawReport validate_nat_trans(const NatTrans& n) {
  LawReport r;
  if (!same_category(n.source.source, n.target.source) ||
      !same_category(n.source.target, n.target.target)) {
    r.add("parallel functors", "boundary");
    return r;
  }
  const auto& a = *n.source.source;
  const auto& b = *n.source.target;
  if (n.components.size() != a.objects.size()) {
    r.add("component table", "size");
    return r;
  }
  for (std::size_t o = 0; o < a.objects.size(); ++o) {
    int c = n.components[o];
    if (c < 0 || c >= static_cast<int>(b.morphisms.size())) {
      r.add("component out of range", a.objects[o]);
      continue;
    }
    if (b.src(c) != n.source.obj(static_cast<int>(o)) ||
        b.dst(c) != n.target.obj(static_cast<int>(o)))
      r.add("component boundary", a.objects[o], b.mor_name(c));
  }
  if (!r.ok()) return r;
  for (std::size_t m = 0; m < a.morphisms.size(); ++m) {
    int f = static_cast<int>(m);
    int lhs = b.compose(n.source.mor(f), n.at(a.dst(f)));
    int rhs = b.compose(n.at(a.src(f)), n.target.mor(f));
    if (lhs != rhs)
      r.add("naturality", a.morphisms[m].id, b.mor_name(lhs), b.mor_name(rhs));
  }
  return r;
}

namespace {

struct Budget {
  std::uint64_t left;
  void spend(std::uint64_t n = 1) {
    if (n > left) throw CapExceeded("enumeration exceeded its candidate budget");
    left -= n;
  }
};

} // namespace

std::vector<Cone> enumerate_cones(const FinFunctor& diagram, const EnumCap& cap) {
  const auto& j = *diagram.source;
  const auto& c = *diagram.target;
  Budget budget{cap.budget};
  std::vector<Cone> cones;

  const int nj = static_cast<int>(j.objects.size());
  for (int apex = 0; apex < static_cast<int>(c.objects.size()); ++apex) {
    std::vector<std::vector<int>> options(static_cast<std::size_t>(nj));
    bool feasible = true;
    for (int o = 0; o < nj; ++o) {
      options[static_cast<std::size_t>(o)] = c.hom(apex, diagram.obj(o));
      if (options[static_cast<std::size_t>(o)].empty()) feasible = false;
    }
    if (nj > 0 && !feasible) continue;

    std::vector<int> legs(static_cast<std::size_t>(nj), -1);
    // depth-first over leg choices; commutation checked incrementally
    auto consistent = [&](int filled) {
      for (std::size_t m = 0; m < j.morphisms.size(); ++m) {
        int s = j.src(static_cast<int>(m));
        int d = j.dst(static_cast<int>(m));
        if (s >= filled || d >= filled) continue;
        if (c.compose(legs[static_cast<std::size_t>(s)], diagram.mor(static_cast<int>(m))) !=
            legs[static_cast<std::size_t>(d)])
          return false;
      }
      return true;
    };
    std::vector<std::size_t> cursor(static_cast<std::size_t>(nj), 0);
    int depth = 0;
    if (nj == 0) {
      budget.spend();
      cones.push_back(Cone{apex, {}});
      continue;
    }
    while (depth >= 0) {
      if (depth == nj) {
        budget.spend();
        cones.push_back(Cone{apex, legs});
        --depth;
        continue;
      }
      auto& cur = cursor[static_cast<std::size_t>(depth)];
      bool advanced = false;
      while (cur < options[static_cast<std::size_t>(depth)].size()) {
        budget.spend();
        legs[static_cast<std::size_t>(depth)] =
            options[static_cast<std::size_t>(depth)][cur];
        ++cur;
        if (consistent(depth + 1)) {
          advanced = true;
          break;
        }
      }
      if (advanced) {
        ++depth;
        if (depth < nj) cursor[static_cast<std::size_t>(depth)] = 0;
      } else {
        cur = 0;
        --depth;
      }
    }
  }
  return cones;
}

bool cone_is_limiting(const FinFunctor& diagram, const Cone& candidate, const EnumCap& cap) {
  const auto& c = *diagram.target;
  auto cones = enumerate_cones(diagram, cap);
  for (const auto& k : cones) {
    int count = 0;
    for (int h : c.hom(k.apex, candidate.apex)) {
      bool factors = true;
      for (std::size_t o = 0; o < candidate.legs.size(); ++o)
        if (c.compose(h, candidate.legs[o]) != k.legs[o]) {
          factors = false;
          break;
        }
      if (factors) ++count;
    }
    if (count != 1) return false;
  }
  return true;
}

std::optional<Cone> limit(const FinFunctor& diagram, const EnumCap& cap) {
  auto cones = enumerate_cones(diagram, cap);
  const auto& c = *diagram.target;
  for (const auto& cand : cones) {
    bool universal = true;
    for (const auto& k : cones) {
      int count = 0;
      for (int h : c.hom(k.apex, cand.apex)) {
        bool factors = true;
        for (std::size_t o = 0; o < cand.legs.size(); ++o)
          if (c.compose(h, cand.legs[o]) != k.legs[o]) {
            factors = false;
            break;
          }
        if (factors) ++count;
      }
      if (count != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return cand;
  }
  return std::nullopt;
}

std::vector<FinFunctor> enumerate_functors(const CatPtr& a, const CatPtr& b, const EnumCap& cap) {
  const auto& ca = *a;
  const auto& cb = *b;
  Budget budget{cap.budget};
  std::vector<FinFunctor> out;

  const int no = static_cast<int>(ca.objects.size());
  const int nm = static_cast<int>(ca.morphisms.size());
  std::vector<int> objs(static_cast<std::size_t>(no), 0);

  // non-identity morphisms still needing an explicit image
  std::vector<int> free_mors;
  for (int m = 0; m < nm; ++m) {
    bool is_id = false;
    for (int o = 0; o < no; ++o)
      if (ca.id_mor(o) == m) is_id = true;
    if (!is_id) free_mors.push_back(m);
  }

  std::vector<int> mor_image(static_cast<std::size_t>(nm), -1);

  auto try_mors = [&](auto&& self, std::size_t k) -> void {
    if (k == free_mors.size()) {
      // full composition-table check
      for (int x = 0; x < nm; ++x)
        for (int y = 0; y < nm; ++y) {
          if (ca.dst(x) != ca.src(y)) continue;
          if (mor_image[static_cast<std::size_t>(ca.compose(x, y))] !=
              cb.compose(mor_image[static_cast<std::size_t>(x)],
                         mor_image[static_cast<std::size_t>(y)]))
            return;
        }
      FinFunctor f;
      f.source = a;
      f.target = b;
      f.on_objects = objs;
      f.on_morphisms = mor_image;
      out.push_back(std::move(f));
      return;
    }
    int m = free_mors[k];
    int s = objs[static_cast<std::size_t>(ca.src(m))];
    int d = objs[static_cast<std::size_t>(ca.dst(m))];
    for (int cand : cb.hom(s, d)) {
      budget.spend();
      mor_image[static_cast<std::size_t>(m)] = cand;
      self(self, k + 1);
    }
    mor_image[static_cast<std::size_t>(m)] = -1;
  };

  auto try_objs = [&](auto&& self, int o) -> void {
    if (o == no) {
      for (int i = 0; i < no; ++i)
        mor_image[static_cast<std::size_t>(ca.id_mor(i))] =
            cb.id_mor(objs[static_cast<std::size_t>(i)]);
      try_mors(try_mors, 0);
      return;
    }
    for (int img = 0; img < static_cast<int>(cb.objects.size()); ++img) {
      budget.spend();
      objs[static_cast<std::size_t>(o)] = img;
      self(self, o + 1);
    }
  };

  if (no == 0) {
    FinFunctor f;
    f.source = a;
    f.target = b;
    out.push_back(std::move(f));
    return out;
  }
  try_objs(try_objs, 0);
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g,
                                          const EnumCap& cap) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    throw BoundaryError("enumerate_nat_trans: functors are not parallel");
  const auto& a = *f.source;
  const auto& b = *f.target;
  Budget budget{cap.budget};
  std::vector<NatTrans> out;

  const int no = static_cast<int>(a.objects.size());
  std::vector<int> comp(static_cast<std::size_t>(no), -1);

  auto natural_so_far = [&](int filled) {
    for (std::size_t m = 0; m < a.morphisms.size(); ++m) {
      int s = a.src(static_cast<int>(m));
      int d = a.dst(static_cast<int>(m));
      if (s >= filled || d >= filled) continue;
      if (b.compose(f.mor(static_cast<int>(m)), comp[static_cast<std::size_t>(d)]) !=
          b.compose(comp[static_cast<std::size_t>(s)], g.mor(static_cast<int>(m))))
        return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int o) -> void {
    if (o == no) {
      NatTrans n;
      n.source = f;
      n.target = g;
      n.components = comp;
      out.push_back(std::move(n));
      return;
    }
    for (int cand : b.hom(f.obj(o), g.obj(o))) {
      budget.spend();
      comp[static_cast<std::size_t>(o)] = cand;
      if (natural_so_far(o + 1)) self(self, o + 1);
    }
    comp[static_cast<std::size_t>(o)] = -1;
  };
  rec(rec, 0);
  return out;
}

std::optional<std::pair<FinFunctor, FinFunctor>>
find_isomorphism(const CatPtr& c, const CatPtr& d, const EnumCap& cap) {
  if (c->objects.size() != d->objects.size() || c->morphisms.size() != d->morphisms.size())
    return std::nullopt;
  for (const auto& f : enumerate_functors(c, d, cap)) {
    // must be bijective on objects and morphisms
    std::vector<bool> seen_o(d->objects.size(), false);
    bool bij = true;
    for (int img : f.on_objects) {
      if (seen_o[static_cast<std::size_t>(img)]) {
        bij = false;
        break;
      }
      seen_o[static_cast<std::size_t>(img)] = true;
    }
    if (!bij) continue;
    std::vector<bool> seen_m(d->morphisms.size(), false);
    for (int img : f.on_morphisms) {
      if (seen_m[static_cast<std::size_t>(img)]) {
        bij = false;
        break;
      }
      seen_m[static_cast<std::size_t>(img)] = true;
    }
    if (!bij) continue;

    FinFunctor g;
    g.source = d;
    g.target = c;
    g.on_objects.assign(d->objects.size(), -1);
    g.on_morphisms.assign(d->morphisms.size(), -1);
    for (std::size_t o = 0; o < f.on_objects.size(); ++o)
      g.on_objects[static_cast<std::size_t>(f.on_objects[o])] = static_cast<int>(o);
    for (std::size_t m = 0; m < f.on_morphisms.size(); ++m)
      g.on_morphisms[static_cast<std::size_t>(f.on_morphisms[m])] = static_cast<int>(m);
    if (validate_functor(g).ok()) return std::make_pair(f, g);
  }
  return std::nullopt;
}

} // namespace twocat
