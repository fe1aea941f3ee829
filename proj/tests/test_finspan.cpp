#include <doctest.h>

#include "twocat/finspan.hpp"
#include "twocat/fixtures.hpp"

using namespace twocat;
namespace fx = twocat::fixtures;

TEST_CASE("span composition") {
  Span m = category_to_span(*fx::arrow2()).span;
  Span idl = identity_span(m.left_foot);

  // composing with the identity span is a canonical bijection on apexes:
  // (x, y) corresponds to y, with matching legs
  Span lu = compose_spans(idl, m);
  REQUIRE(lu.apex.size() == m.apex.size());
  for (std::size_t i = 0; i < lu.apex.size(); ++i) {
    std::string name = lu.apex[i];
    std::string inner = name.substr(name.find(',') + 1);
    inner.pop_back();
    std::size_t j = 0;
    while (m.apex[j] != inner) ++j;
    CHECK(lu.left_leg[i] == m.left_leg[j]);
    CHECK(lu.right_leg[i] == m.right_leg[j]);
  }

  // the self-composite of the walking arrow's span is its composable pairs
  Span mm = compose_spans(m, m);
  CHECK(mm.apex == std::vector<std::string>{"(id0,id0)", "(id0,0<=1)", "(id1,id1)",
                                            "(0<=1,id1)"});

  Span empty;
  empty.left_foot = {"x"};
  empty.right_foot = {"x"};
  CHECK(compose_spans(empty, identity_span({"x"})).apex.empty());
}

TEST_CASE("span monad laws") {
  CHECK(check_span_monad(category_to_span(*fx::term())).ok());
  CHECK(check_span_monad(category_to_span(*fx::arrow2())).ok());
  CHECK(check_span_monad(category_to_span(*fx::bz2())).ok());

  // rebinding mult(f, id1) to id0 breaks the codomain leg
  SpanMonad bad = category_to_span(*fx::arrow2());
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t x = 0; x < bad.span.apex.size(); ++x)
    for (std::size_t y = 0; y < bad.span.apex.size(); ++y)
      if (bad.span.right_leg[x] == bad.span.left_leg[y])
        pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
  int f = 2, id1 = 1, id0 = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k] == std::make_pair(f, id1)) bad.mult[k] = id0;
  CHECK_FALSE(check_span_monad(bad).ok());
}

TEST_CASE("category and span monad round trips") {
  for (auto& [name, cat] : fx::all_categories()) {
    CAPTURE(name);
    auto rt = category_span_roundtrip(cat);
    CHECK(check_span_monad(rt.encoded).ok());
    CHECK(validate_category(rt.decoded).ok());
  }
}

TEST_CASE("associator coherence for triple composites") {
  Span m = category_to_span(*fx::arrow2()).span;
  Span left = compose_spans(compose_spans(m, m), m);
  Span right = compose_spans(m, compose_spans(m, m));
  REQUIRE(left.apex.size() == right.apex.size());
  // the canonical bijection ((x,y),z) -> (x,(y,z)) preserves legs and the
  // induced multiplication
  SpanMonad sm = category_to_span(*fx::arrow2());
  for (std::size_t i = 0; i < left.apex.size(); ++i) {
    CHECK(left.left_leg[i] == right.left_leg[i]);
    CHECK(left.right_leg[i] == right.right_leg[i]);
  }
  (void)sm;
}

TEST_CASE("retrofunctor checker") {
  // the identity retrofunctor on chain3
  auto ch = fx::chain3();
  Retrofunctor idr;
  idr.source = ch;
  idr.target = ch;
  idr.on_objects = {0, 1, 2};
  idr.lift.assign(3, std::vector<int>(ch->morphisms.size(), -1));
  for (int c = 0; c < 3; ++c)
    for (std::size_t g = 0; g < ch->morphisms.size(); ++g)
      if (ch->src(static_cast<int>(g)) == c) idr.lift[static_cast<std::size_t>(c)][g] = static_cast<int>(g);
  CHECK(check_retrofunctor(idr).ok());

  // a non-functorial lifting on the walking arrow is reported
  auto a2 = fx::arrow2();
  Retrofunctor bad;
  bad.source = a2;
  bad.target = a2;
  bad.on_objects = {0, 1};
  bad.lift.assign(2, std::vector<int>(a2->morphisms.size(), -1));
  for (int c = 0; c < 2; ++c)
    for (std::size_t g = 0; g < a2->morphisms.size(); ++g)
      if (a2->src(static_cast<int>(g)) == c) bad.lift[static_cast<std::size_t>(c)][g] = static_cast<int>(g);
  bad.lift[0][static_cast<std::size_t>(a2->morphism_index("0<=1"))] = a2->id_mor(0);
  auto r = check_retrofunctor(bad);
  CHECK_FALSE(r.ok());
}

TEST_CASE("retrofunctors correspond to span-monad lax cells") {
  for (const CatPtr& c : {fx::arrow2(), fx::chain3()}) {
    for (const auto& r : enumerate_retrofunctors(c, c)) {
      SpanLaxCell l = retrofunctor_to_lax(r);
      CHECK(check_span_lax(l).ok());
      Retrofunctor back = lax_to_retrofunctor(l, c, c);
      CHECK(back.on_objects == r.on_objects);
      CHECK(back.lift == r.lift);
    }
  }

  // discrete categories: retrofunctors are exactly functions
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> objs;
    for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
    auto d = std::make_shared<FinCategory>(
        fx::make_poset(objs, [](int a, int b) { return a == b; }));
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(n);
    CHECK(enumerate_retrofunctors(d, d).size() == expected);
  }
}
