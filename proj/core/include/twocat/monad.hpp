#ifndef TWOCAT_MONAD_HPP
#define TWOCAT_MONAD_HPP

#include "twocat/paste.hpp"

// Monads, monad maps and one-sided modules, with law checkers that report
// the first offending object and both evaluated components.

namespace twocat {

struct Monad {
  CatPtr base;
  FinFunctor endo;  // T : base -> base
  NatTrans unit;    // id => T
  NatTrans mult;    // T;T => T
};

Monad identity_monad(const CatPtr& c);
bool is_identity_monad(const Monad& m);
bool same_monad(const Monad& a, const Monad& b);

// Boundary coherence, naturality of unit/mult, associativity, both unit laws.
LawReport check_monad(const Monad& m);

// n-ary multiplication T^n => T: n=0 the unit, n=1 the identity, n>=2 a
// left-associated fold of mult.  Bracketing independence is asserted.
NatTrans nary_mult(const Monad& m, int n);

struct MonadMap {
  Monad source;
  Monad target;  // same base
  NatTrans cell; // T1 => T2
};

LawReport check_monad_map(const MonadMap& h);

MonadMap identity_monad_map(const Monad& m);

enum class Side { right, left };

// side == right: carrier X -> S with action carrier;T => carrier.
// side == left:  carrier S -> X with action T;carrier => carrier.
struct ModuleStr {
  Side side = Side::right;
  Monad monad;
  FinFunctor carrier;
  NatTrans action;
};

LawReport check_module(const ModuleStr& s);

// Module map law for two modules of the same side over the same monad.
LawReport check_module_map(const ModuleStr& m1, const ModuleStr& m2, const NatTrans& phi);

// Every monad is a module over itself via its multiplication.
ModuleStr monad_as_module(const Monad& m, Side side);

} // namespace twocat

#endif
