#ifndef TWOCAT_DISTRIBUTIVE_HPP
#define TWOCAT_DISTRIBUTIVE_HPP

#include "twocat/algobj.hpp"

// Distributive laws and everything they induce: composite monads, injection
// monad maps, lifted monads on algebra/opalgebra objects, the module
// correspondence, and the comparison 1-cell between the two nested objects.

namespace twocat {

struct DistributiveLaw {
  Monad t1;
  Monad t2;       // same base
  NatTrans cell;  // chi : T2;T1 => T1;T2
};

// chi makes T2 a lax 1-cell T1 -> T1 and T1 a colax 1-cell T2 -> T2;
// four laws in total.
LawReport check_distributive(const DistributiveLaw& d);

LaxMorphism distlaw_as_lax(const DistributiveLaw& d);
ColaxMorphism distlaw_as_colax(const DistributiveLaw& d);

// The monad-in-Mnd view: T2 as a lax endo-1-cell on T1 whose unit and
// multiplication are monad 2-cells.
struct MonadInMnd {
  LaxMorphism endo;
  SquareCell unit_cell;
  SquareCell mult_cell;
};

MonadInMnd distlaw_to_mnd(const DistributiveLaw& d);
DistributiveLaw distlaw_from_mnd(const MonadInMnd& m);

Monad composite_monad(const DistributiveLaw& d);

// T1;eta2 : T1 => T1;T2 and eta1;T2 : T2 => T1;T2.
std::pair<MonadMap, MonadMap> injection_monad_maps(const DistributiveLaw& d);

// chi recovered from the composite multiplication by unit insertion on both
// sides; equals d.cell for a lawful d.
NatTrans distlaw_from_composite_mult(const DistributiveLaw& d);

// Module correspondence of the composite monad.
std::pair<ModuleStr, ModuleStr> module_split(const DistributiveLaw& d,
                                             const ModuleStr& composite_module);
ModuleStr module_merge(const DistributiveLaw& d, const ModuleStr& m1, const ModuleStr& m2);
LawReport check_module_pair(const DistributiveLaw& d, const ModuleStr& m1, const ModuleStr& m2);

// The lifted monad on the algebra object of T1 (and dually on the opalgebra
// object of T2).
Monad lifted_monad_em(const DistributiveLaw& d, const AlgebraObject& a1);
Monad lifted_monad_kl(const DistributiveLaw& d, const OpalgebraObject& o2);

struct DistEmReport {
  LawReport laws;                // accumulated law failures, empty on success
  Monad lifted;                  // the lifted monad on EM(T1)
  FinFunctor em_iso_forward;     // EM(lifted) -> EM(T1;T2)
  FinFunctor em_iso_backward;
  Monad colifted;                // the lifted monad on Kl(T2)
  FinFunctor kl_iso_forward;     // Kl(colifted) -> Kl(T1;T2)
  FinFunctor kl_iso_backward;
};

// Builds both nested algebra objects, finds the isomorphisms, and certifies
// the composite forgetful 1-cell as a universal module by the enumeration
// oracle (sources: the nested algebra object and the base).
DistEmReport verify_distem(const DistributiveLaw& d, const EnumCap& cap = {});

// The comparison 1-cell Kl(lifted T2 on EM(T1)) -> EM(lifted T1 on Kl(T2)),
// obtained by lifting the canonical bimodule between the lifted monads.
FinFunctor comparison_cell(const DistributiveLaw& d, const EnumCap& cap = {});

} // namespace twocat

#endif
