#ifndef TWOCAT_FINSPAN_HPP
#define TWOCAT_FINSPAN_HPP

#include "twocat/fincat.hpp"

// Spans of finite sets as a weak 2-category instance: span monads with
// explicit coherence bijections, the category <-> span-monad correspondence,
// and retrofunctors as lax monad 1-cells carried by graphs of functions.

namespace twocat {

struct Span {
  std::vector<std::string> left_foot;
  std::vector<std::string> right_foot;
  std::vector<std::string> apex;
  std::vector<int> left_leg;   // apex index -> left foot index
  std::vector<int> right_leg;  // apex index -> right foot index
};

LawReport validate_span(const Span& s);

Span identity_span(const std::vector<std::string>& foot);

// Chosen-pullback composite: apex = pairs (x,y) with matching legs, named
// "(x,y)"; deterministic ordering by (x, y).
Span compose_spans(const Span& a, const Span& b);

// A span S <- M -> S with unit and multiplication mappings; the monad laws
// hold after inserting the canonical coherence bijections of the chosen
// pullbacks.
struct SpanMonad {
  std::vector<std::string> foot;
  Span span;
  std::vector<int> unit;  // foot index -> apex index
  std::vector<int> mult;  // apex index of span;span -> apex index of span
};

LawReport check_span_monad(const SpanMonad& m);

SpanMonad category_to_span(const FinCategory& c);
FinCategory span_to_category(const SpanMonad& m);

// Round-trip certificate: the rebuilt category is isomorphic to the input.
struct SpanRoundTrip {
  SpanMonad encoded;
  FinCategory decoded;
  FinFunctor iso_forward;
  FinFunctor iso_backward;
};
SpanRoundTrip category_span_roundtrip(const CatPtr& c, const EnumCap& cap = {});

// Object function plus coherent liftings of morphisms out of images.
struct Retrofunctor {
  CatPtr source;  // C
  CatPtr target;  // D
  std::vector<int> on_objects;
  // lift[c][g] for g a D-morphism with src(g) = on_objects[c]; -1 elsewhere
  std::vector<std::vector<int>> lift;
};

LawReport check_retrofunctor(const Retrofunctor& r);

// A lax 1-cell between span monads carried by the graph of a function.
struct SpanLaxCell {
  SpanMonad source_monad;        // encodes C
  SpanMonad target_monad;        // encodes D
  std::vector<int> object_fn;    // C-objects -> D-objects (the carrier's graph)
  // structure mapping: apex of (graph ; T_D) -> apex of (T_C ; graph),
  // indexed by pairs (c, g) with src(g) = object_fn[c]; values are C-morphisms
  std::vector<std::vector<int>> chi;
};

LawReport check_span_lax(const SpanLaxCell& l);

SpanLaxCell retrofunctor_to_lax(const Retrofunctor& r);
Retrofunctor lax_to_retrofunctor(const SpanLaxCell& l, const CatPtr& c, const CatPtr& d);

std::vector<Retrofunctor> enumerate_retrofunctors(const CatPtr& c, const CatPtr& d,
                                                  const EnumCap& cap = {});

} // namespace twocat

#endif
