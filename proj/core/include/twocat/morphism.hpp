#ifndef TWOCAT_MORPHISM_HPP
#define TWOCAT_MORPHISM_HPP

#include "twocat/monad.hpp"

// Lax and colax 1-cells between monads, the square-shaped 2-cells and
// specializations between them, and their double-categorical compositions.

namespace twocat {

struct LaxMorphism {
  Monad source_monad;  // T1 on S1
  Monad target_monad;  // T2 on S2
  FinFunctor carrier;  // F : S1 -> S2
  NatTrans structure;  // chi : F;T2 => T1;F
};

struct ColaxMorphism {
  Monad source_monad;  // T1 on S1
  Monad target_monad;  // T2 on S2
  FinFunctor carrier;  // G : S1 -> S2
  NatTrans structure;  // xi : T1;G => G;T2
};

LawReport check_lax(const LaxMorphism& l);
LawReport check_lax(const ColaxMorphism& l);

LaxMorphism identity_lax(const Monad& m);
ColaxMorphism identity_colax(const Monad& m);

LaxMorphism compose_lax(const LaxMorphism& a, const LaxMorphism& b);
ColaxMorphism compose_lax(const ColaxMorphism& a, const ColaxMorphism& b);

enum class CellKind { two_cell, specialization };
enum class SquareDir { lax, colax };  // composition direction

// Square of monads: top/bottom lax (horizontal), left/right colax (vertical).
//
//        T_W --top--> T_N
//         |            |
//       left         right
//         v            v
//        T_S -bottom-> T_E
//
// kind two_cell:       cell : top;right => left;bottom
// kind specialization: cell : top;right => left;T_S;bottom
struct SquareCell {
  CellKind kind = CellKind::two_cell;
  LaxMorphism top;
  ColaxMorphism right;
  ColaxMorphism left;
  LaxMorphism bottom;
  NatTrans cell;
};

LawReport check_square(const SquareCell& q);

// Plain 2-cells and specializations between parallel lax 1-cells are squares
// with identity colax sides.
SquareCell mnd_cell(const LaxMorphism& f1, const LaxMorphism& f2, NatTrans gamma);
SquareCell em_cell(const LaxMorphism& f1, const LaxMorphism& f2, NatTrans sigma);

// Identity squares of the two double categories.
SquareCell identity_square_on_lax(const LaxMorphism& f, CellKind kind);
SquareCell identity_square_on_colax(const ColaxMorphism& g, CellKind kind);

// SquareDir::lax composes side by side along the shared colax edge;
// SquareDir::colax stacks along the shared lax edge.
SquareCell compose_squares(const SquareCell& a, const SquareCell& b, SquareDir dir);

// Monad 2-cell -> specialization by pasting with the unit (the
// identity-on-1-cells functor MMnd -> EEM).
SquareCell spec_from_2cell(const SquareCell& q);

// Mates along an adjunction on the carrier.  adj.left must be the supplied
// adjoint, adj.right the carrier.
ColaxMorphism adjoint_transpose(const LaxMorphism& l, const Adjunction& adj);
LaxMorphism adjoint_transpose(const ColaxMorphism& g, const Adjunction& adj);

// A mixed square whose colax sides have right adjoints converts to a square
// with identity colax sides between the composite lax 1-cells
// right2;top and bottom;right1.
SquareCell square_to_lax_pair(const SquareCell& q, const Adjunction& adj_right,
                              const Adjunction& adj_left);
SquareCell square_from_lax_pair(const SquareCell& plain, const SquareCell& shape,
                                const Adjunction& adj_right, const Adjunction& adj_left);

// Exact equality of (row-then-column) against (column-then-row) for a 2x2
// grid {q11 q12; q21 q22} of composable squares.
LawReport check_interchange(const SquareCell& q11, const SquareCell& q12, const SquareCell& q21,
                            const SquareCell& q22);

// The views of Rem. laxmodule: monad maps, right modules and bare 1-cells as
// monad lax 1-cells, with exact inverses.
LaxMorphism as_lax_view(const MonadMap& h);
LaxMorphism as_lax_view(const ModuleStr& right_module);
LaxMorphism as_lax_view(const FinFunctor& f, const Monad& source);
LaxMorphism as_lax_view(const FinFunctor& f);

MonadMap monad_map_from_lax(const LaxMorphism& l);
ModuleStr module_from_lax(const LaxMorphism& l);
FinFunctor functor_from_lax(const LaxMorphism& l);

} // namespace twocat

#endif
