#include "twocat/fixtures.hpp"

namespace twocat::fixtures {

FinCategory make_poset(std::vector<std::string> objects,
                       const std::function<bool(int, int)>& leq) {
  FinCategory c;
  c.objects = std::move(objects);
  const int n = static_cast<int>(c.objects.size());
  std::vector<std::vector<int>> mor_at(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
  c.identity.resize(c.objects.size());
  for (int x = 0; x < n; ++x) {
    c.identity[static_cast<std::size_t>(x)] = static_cast<int>(c.morphisms.size());
    mor_at[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] =
        static_cast<int>(c.morphisms.size());
    c.morphisms.push_back({"id" + c.objects[static_cast<std::size_t>(x)], x, x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      mor_at[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          static_cast<int>(c.morphisms.size());
      c.morphisms.push_back({c.objects[static_cast<std::size_t>(x)] + "<=" +
                                 c.objects[static_cast<std::size_t>(y)],
                             x, y});
    }
  const int m = static_cast<int>(c.morphisms.size());
  c.compose_tab.assign(static_cast<std::size_t>(m),
                       std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (c.dst(f) == c.src(g))
        c.compose_tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] =
            mor_at[static_cast<std::size_t>(c.src(f))][static_cast<std::size_t>(c.dst(g))];
  return c;
}

CatPtr term() {
  static CatPtr c = std::make_shared<FinCategory>(
      make_poset({"*"}, [](int, int) { return true; }));
  return c;
}

CatPtr arrow2() {
  static CatPtr c = std::make_shared<FinCategory>(
      make_poset({"0", "1"}, [](int x, int y) { return x <= y; }));
  return c;
}

CatPtr pair_cat() {
  static CatPtr c = [] {
    FinCategory k;
    k.objects = {"0", "1"};
    k.morphisms = {{"id0", 0, 0}, {"id1", 1, 1}, {"f", 0, 1}, {"g", 0, 1}};
    k.identity = {0, 1};
    k.compose_tab = {{0, -1, 2, 3}, {-1, 1, -1, -1}, {-1, 2, -1, -1}, {-1, 3, -1, -1}};
    return std::make_shared<FinCategory>(std::move(k));
  }();
  return c;
}

CatPtr chain3() {
  static CatPtr c = std::make_shared<FinCategory>(
      make_poset({"0", "1", "2"}, [](int x, int y) { return x <= y; }));
  return c;
}

CatPtr sub2() {
  static CatPtr c = std::make_shared<FinCategory>(
      make_poset({"1", "2"}, [](int x, int y) { return x <= y; }));
  return c;
}

CatPtr sq() {
  // objects as bitmasks: e=00, a=01, b=10, ab=11, ordered e,a,b,ab
  static CatPtr c = std::make_shared<FinCategory>(make_poset(
      {"e", "a", "b", "ab"}, [](int x, int y) { return (x & y) == x; }));
  return c;
}

CatPtr bz2() {
  static CatPtr c = [] {
    FinCategory k;
    k.objects = {"*"};
    k.morphisms = {{"1", 0, 0}, {"s", 0, 0}};
    k.identity = {0};
    k.compose_tab = {{0, 1}, {1, 0}};
    return std::make_shared<FinCategory>(std::move(k));
  }();
  return c;
}

Monad closure_monad(const CatPtr& poset, const std::function<int(int)>& close) {
  Monad m;
  m.base = poset;
  m.endo.source = poset;
  m.endo.target = poset;
  const auto& c = *poset;
  m.endo.on_objects.resize(c.objects.size());
  for (std::size_t x = 0; x < c.objects.size(); ++x)
    m.endo.on_objects[x] = close(static_cast<int>(x));
  m.endo.on_morphisms.resize(c.morphisms.size());
  for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
    auto h = c.hom(close(c.src(static_cast<int>(f))), close(c.dst(static_cast<int>(f))));
    if (h.empty()) throw InvalidInput("closure_monad: map is not monotone");
    m.endo.on_morphisms[f] = h.front();
  }
  m.unit.source = identity_functor(poset);
  m.unit.target = m.endo;
  m.unit.components.resize(c.objects.size());
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    auto h = c.hom(static_cast<int>(x), close(static_cast<int>(x)));
    if (h.empty()) throw InvalidInput("closure_monad: map is not inflationary");
    m.unit.components[x] = h.front();
  }
  m.mult.source = compose_functors(m.endo, m.endo);
  m.mult.target = m.endo;
  m.mult.components.resize(c.objects.size());
  for (std::size_t x = 0; x < c.objects.size(); ++x) {
    auto h = c.hom(close(close(static_cast<int>(x))), close(static_cast<int>(x)));
    if (h.empty()) throw InvalidInput("closure_monad: map is not idempotent");
    m.mult.components[x] = h.front();
  }
  return m;
}

Monad clos_c() {
  return closure_monad(chain3(), [](int x) { return x == 0 ? 1 : x; });
}

Monad clos_top() {
  return closure_monad(chain3(), [](int) { return 2; });
}

Monad cA() {
  return closure_monad(sq(), [](int x) { return x | 1; });
}

Monad cB() {
  return closure_monad(sq(), [](int x) { return x | 2; });
}

Monad sgn() {
  auto b = bz2();
  Monad m;
  m.base = b;
  m.endo = identity_functor(b);
  m.unit.source = m.endo;
  m.unit.target = m.endo;
  m.unit.components = {1};
  m.mult.source = compose_functors(m.endo, m.endo);
  m.mult.target = m.endo;
  m.mult.components = {1};
  return m;
}

FinFunctor fix_incl() {
  FinFunctor f;
  f.source = sub2();
  f.target = chain3();
  const auto& s = *f.source;
  const auto& t = *f.target;
  f.on_objects.resize(s.objects.size());
  for (std::size_t x = 0; x < s.objects.size(); ++x)
    f.on_objects[x] = t.object_index(s.objects[x]);
  f.on_morphisms.resize(s.morphisms.size());
  for (std::size_t m = 0; m < s.morphisms.size(); ++m) {
    int a = f.on_objects[static_cast<std::size_t>(s.src(static_cast<int>(m)))];
    int b = f.on_objects[static_cast<std::size_t>(s.dst(static_cast<int>(m)))];
    f.on_morphisms[m] = t.hom(a, b).front();
  }
  return f;
}

std::vector<std::pair<std::string, CatPtr>> all_categories() {
  return {{"term", term()},     {"arrow2", arrow2()}, {"pair", pair_cat()},
          {"chain3", chain3()}, {"sub2", sub2()},     {"sq", sq()},
          {"bz2", bz2()}};
}

std::vector<std::pair<std::string, Monad>> all_monads() {
  return {{"clos_c", clos_c()}, {"clos_top", clos_top()}, {"cA", cA()},
          {"cB", cB()},         {"sgn", sgn()},           {"id_chain3", identity_monad(chain3())},
          {"id_bz2", identity_monad(bz2())},       {"id_sub2", identity_monad(sub2())}};
}

} // namespace twocat::fixtures
