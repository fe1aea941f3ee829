#ifndef TWOCAT_BIMODULE_HPP
#define TWOCAT_BIMODULE_HPP

#include <optional>

#include "twocat/morphism.hpp"

// Two-sided modules and the n-ary bimodule maps between composable paths of
// them, including the variant with colax 1-cell boundaries.

namespace twocat {

struct Bimodule {
  Monad left_monad;       // T_L on S_L
  Monad right_monad;      // T_R on S_R
  FinFunctor carrier;     // M : S_L -> S_R
  NatTrans left_action;   // lambda : T_L;M => M
  NatTrans right_action;  // rho    : M;T_R => M
};

// Left laws + right laws + the compatibility law.
LawReport check_bimodule(const Bimodule& b);

// A monad as a bimodule over itself, both actions the multiplication.
Bimodule monad_as_bimodule(const Monad& m);

// Joint action T_L;M;T_R => M; both actions recovered by unit insertion.
NatTrans bimodule_joint_action(const Bimodule& b);
Bimodule bimodule_from_joint(const Monad& left, const Monad& right, const FinFunctor& carrier,
                             const NatTrans& joint);

// Map from a composable path M_1, ..., M_n of bimodules over monads
// T_0, ..., T_n into a single bimodule.  `anchor` names T_0 when the path is
// empty.  With colax boundaries F_L : T_0 -> output.left_monad and
// F_R : T_n -> output.right_monad the cell reads
//     M_1;...;M_n;F_R => F_L;M;
// without them it reads M_1;...;M_n => M.
struct BimoduleMapNAry {
  std::vector<Bimodule> inputs;
  std::optional<Monad> anchor;
  Bimodule output;
  NatTrans cell;
  std::optional<ColaxMorphism> left_boundary;
  std::optional<ColaxMorphism> right_boundary;
};

LawReport check_bimodule_map(const BimoduleMapNAry& m);

// Composite carrier M_1;...;M_n (identity on the anchor base when n = 0).
FinFunctor bimodule_path_carrier(const BimoduleMapNAry& m);

} // namespace twocat

#endif
