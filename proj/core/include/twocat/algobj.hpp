#ifndef TWOCAT_ALGOBJ_HPP
#define TWOCAT_ALGOBJ_HPP

#include "twocat/bimodule.hpp"

// Eilenberg-Moore and Kleisli constructions with their universal properties
// verified by enumeration, resolutions, comparison functors, and the
// liftings of cells to algebra objects.

namespace twocat {

struct AlgebraObject {
  Monad monad;
  CatPtr em_category;
  FinFunctor forgetful;         // EM -> base
  NatTrans forgetful_action;    // forgetful;T => forgetful (the universal module)
};

struct OpalgebraObject {
  Monad monad;
  CatPtr kl_category;
  FinFunctor insertion;         // base -> Kl
  NatTrans insertion_action;    // T;insertion => insertion (the universal opmodule)
  std::vector<int> underlying;  // Kleisli morphism a -> b to its base morphism a -> T b
};

// Objects are pairs "(s|a)" of an object and a structure morphism.
AlgebraObject construct_em(const Monad& m);

// Objects of the base; hom(a,b) = hom(a, Tb), morphism ids "(f@b)".
OpalgebraObject construct_kleisli(const Monad& m);

ModuleStr universal_module(const AlgebraObject& a);
ModuleStr universal_opmodule(const OpalgebraObject& o);

// Lookup of algebras and algebra morphisms by their underlying data.
int algebra_object_index(const AlgebraObject& a, int base_obj, int structure);
int algebra_morphism_index(const AlgebraObject& a, int src, int dst, int underlying);

// The unique functor through which the right module factors.  When `verify`
// is set the uniqueness clause is certified by exhaustive search under cap.
FinFunctor lift_module(const AlgebraObject& a, const ModuleStr& s, bool verify = false,
                       const EnumCap& cap = {});

// Factorization equations for a candidate lift.
LawReport check_module_factorization(const AlgebraObject& a, const ModuleStr& s,
                                     const FinFunctor& lift);

// The unique 2-cell between lifts covering a module map.
NatTrans lift_module_map(const AlgebraObject& a, const ModuleStr& m1, const ModuleStr& m2,
                         const NatTrans& phi);

// Dual liftings through the Kleisli object.
FinFunctor lift_opmodule(const OpalgebraObject& o, const ModuleStr& s, bool verify = false,
                         const EnumCap& cap = {});
LawReport check_opmodule_factorization(const OpalgebraObject& o, const ModuleStr& s,
                                       const FinFunctor& lift);
NatTrans lift_opmodule_map(const OpalgebraObject& o, const ModuleStr& m1, const ModuleStr& m2,
                           const NatTrans& phi);

// An adjunction left ⊣ right presenting the monad: left;right = T exactly,
// its unit the monad unit, and mult the whiskered counit.
struct Resolution {
  FinFunctor right;     // R : X -> S
  FinFunctor left;      // L : S -> X
  NatTrans adj_unit;    // id_S => L;R
  NatTrans adj_counit;  // R;L => id_X
  Monad monad;
};

LawReport check_resolution(const Resolution& r);

// The canonical resolution through the algebra object: left adjoint
// s -> (Ts, mu_s) of the forgetful functor.
Resolution free_resolution(const AlgebraObject& a);

// K(x) = (Rx, R eps_x); both factorization equations hold, uniqueness
// verified under cap when `verify` is set.
FinFunctor comparison_functor(const AlgebraObject& a, const Resolution& r, bool verify = false,
                              const EnumCap& cap = {});

// ----- liftings to algebra objects -----

// Lax 1-cell F : T1 -> T2 to the functor EM(T1) -> EM(T2) with
// lift;forgetful2 = forgetful1;F.
FinFunctor emlift_lax(const AlgebraObject& a1, const AlgebraObject& a2, const LaxMorphism& f);
LaxMorphism emlift_lax_inverse(const AlgebraObject& a1, const AlgebraObject& a2,
                               const FinFunctor& carrier, const FinFunctor& lifted);

// Monad 2-cell or specialization between lax 1-cells T1 -> T2 (a square with
// identity colax sides) to the 2-cell between the lifted functors.
NatTrans emlift_cell(const AlgebraObject& a1, const AlgebraObject& a2, const SquareCell& q);
SquareCell emlift_cell_inverse(const AlgebraObject& a1, const AlgebraObject& a2,
                               const LaxMorphism& f1, const LaxMorphism& f2,
                               const NatTrans& lifted, CellKind kind);

// Bimodule M over (T_L, T_R) to the functor Kl(T_L) -> EM(T_R); the two
// lifting orders agree exactly.
FinFunctor lift_bimodule(const Bimodule& b, const OpalgebraObject& o, const AlgebraObject& a);

// Bimodule map (n = 1, plain boundaries) to the 2-cell between the lifts.
NatTrans lift_bimodule_map(const BimoduleMapNAry& m, const OpalgebraObject& o,
                           const AlgebraObject& a);

} // namespace twocat

#endif
