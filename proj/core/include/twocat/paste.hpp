#ifndef TWOCAT_PASTE_HPP
#define TWOCAT_PASTE_HPP

#include <memory>
#include <variant>

#include "twocat/fincat.hpp"

// 2-cell pasting calculus.  Every equation in the workbench is ultimately a
// comparison of composites built from the four operations below.

namespace twocat {

NatTrans identity_nat(const FinFunctor& f);

// First a, then b (diagrammatic order, like 1-cell composition).
NatTrans vertical(const NatTrans& a, const NatTrans& b);

// a : F => G over A->B and b : H => K over B->C give F;H => G;K.
NatTrans horizontal(const NatTrans& a, const NatTrans& b);

// F;H => F;K from b : H => K, and F;H => G;H from a : F => G.
NatTrans whisker_left(const FinFunctor& f, const NatTrans& b);
NatTrans whisker_right(const NatTrans& a, const FinFunctor& h);

// F ; a ; H in one step.
NatTrans whisker_both(const FinFunctor& f, const NatTrans& a, const FinFunctor& h);

// Pasting expressions, for evaluating composites described as data
// (CLI input, randomized interchange tests).
struct PasteExpr {
  struct Leaf {
    NatTrans cell;
  };
  struct Id {
    FinFunctor functor;
  };
  struct Vert {
    std::shared_ptr<PasteExpr> first, second;
  };
  struct Horiz {
    std::shared_ptr<PasteExpr> left, right;
  };
  struct WhiskL {
    FinFunctor functor;
    std::shared_ptr<PasteExpr> body;
  };
  struct WhiskR {
    std::shared_ptr<PasteExpr> body;
    FinFunctor functor;
  };
  std::variant<Leaf, Id, Vert, Horiz, WhiskL, WhiskR> node;
};

PasteExpr leaf(NatTrans cell);
PasteExpr id_expr(FinFunctor f);
PasteExpr vert(PasteExpr a, PasteExpr b);
PasteExpr horiz(PasteExpr a, PasteExpr b);
PasteExpr whiskl(FinFunctor f, PasteExpr e);
PasteExpr whiskr(PasteExpr e, FinFunctor f);

// Evaluates the expression; throws BoundaryError naming the offending node.
NatTrans paste(const PasteExpr& e);

// Records a violation for the first object where lhs and rhs disagree
// (or for a boundary mismatch).  The workhorse of every law checker.
void compare_cells(LawReport& report, const std::string& law, const NatTrans& lhs,
                   const NatTrans& rhs);

// Adjunctions left ⊣ right with left : A -> B, right : B -> A.
struct Adjunction {
  FinFunctor left;
  FinFunctor right;
  NatTrans unit;    // id_A => left;right
  NatTrans counit;  // right;left => id_B
};

// Boundary coherence plus both snake equations.
LawReport check_adjunction(const Adjunction& adj);

Adjunction identity_adjunction(const CatPtr& c);

} // namespace twocat

#endif
