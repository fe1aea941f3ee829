#ifndef TWOCAT_KAN_HPP
#define TWOCAT_KAN_HPP

#include "twocat/algobj.hpp"

// Right extensions computed pointwise via comma-category limits, with the
// universal property certified by enumeration; codensity and pushforward
// monads and their lifting propositions.

namespace twocat {

struct RightExtension {
  FinFunctor along;      // X : Xcat -> S
  FinFunctor of;         // Xcat -> C
  FinFunctor ext;        // S -> C
  NatTrans universal;    // along;ext => of
  bool certified = false;
  // When the extension is a codensity or pushforward monad, the monad that
  // was pushed (identity for codensity).
  std::optional<Monad> pushed;
};

// Pointwise right extension of `of` along `along`; absent if some comma
// limit is missing.  When `certify` is set the full universal property is
// checked by enumerating candidates (Y, psi) under the cap.
std::optional<RightExtension> right_extension(const FinFunctor& along, const FinFunctor& of,
                                              bool certify = true, const EnumCap& cap = {});

// right_extension(x, x), tagged with the identity monad.
std::optional<RightExtension> codensity(const FinFunctor& x, bool certify = true,
                                        const EnumCap& cap = {});

// right_extension(x, t.endo;x), tagged with t.
std::optional<RightExtension> pushforward(const Monad& t, const FinFunctor& x,
                                          bool certify = true, const EnumCap& cap = {});

// The comma category (s | along) together with its projection diagram.
FinFunctor comma_diagram(const FinFunctor& along, const FinFunctor& of, int s);

// The unique factorization psi_bar : y => ext of psi : along;y => of,
// computed by pointwise limit factorization.
NatTrans factor_through(const RightExtension& e, const FinFunctor& y, const NatTrans& psi);

// Exactly-one-factorization check for every enumerable candidate (Y, psi).
LawReport certify_extension(const RightExtension& e, const EnumCap& cap = {});

// Monad structure on a codensity/pushforward extension; unit and mult are
// the unique factorizations, and the universal cell is checked to exhibit
// `along` as a module (codensity) or lax 1-cell (pushforward).
Monad monad_structure(const RightExtension& e);

// The unique monad map t => monad_structure(e) induced by a module action
// (codensity) or lax structure cell (pushforward) on e.along.  Uniqueness is
// certified by enumeration when `verify` is set.
MonadMap universal_monad_map(const RightExtension& e, const Monad& t, const NatTrans& structure,
                             bool verify = true, const EnumCap& cap = {});

// Extensions induced by an adjunction left ⊣ right: ext = left;right for
// codensity of `right`, and left;T;right for the pushforward of T along
// `right`; the universal cell is the counit pasting.
RightExtension from_adjunction_codensity(const Adjunction& adj, bool certify = true,
                                         const EnumCap& cap = {});
RightExtension from_adjunction_pushforward(const Adjunction& adj, const Monad& t,
                                           bool certify = true, const EnumCap& cap = {});

struct PreservationReport {
  bool preserved = false;
  // When not preserved, a candidate (y, psi) with a non-unique factorization.
  std::optional<FinFunctor> counterexample_y;
  std::optional<NatTrans> counterexample_psi;
  int factorizations = 0;
};

// Whether f preserves the right extension: (ext;f, universal;f) again
// satisfies the universal property, checked semantically by enumeration.
PreservationReport preserves_right_extension(const FinFunctor& f, const RightExtension& e,
                                             const EnumCap& cap = {});

// The factorization through the preserved extension: psi : along;y => of;f
// gives the unique psi_bar : y => ext;f.
NatTrans factor_through_preserved(const RightExtension& e, const FinFunctor& f,
                                  const FinFunctor& y, const NatTrans& psi);

// ----- lifting propositions -----

// Lax structures on f (as a 1-cell monad_structure(e) -> t2) correspond to
// functors Xcat -> EM(t2) with lift;forgetful = along;f.
FinFunctor extlift_lax(const RightExtension& e, const AlgebraObject& a2, const LaxMorphism& f);
LaxMorphism extlift_lax_inverse(const RightExtension& e, const AlgebraObject& a2,
                                const FinFunctor& carrier, const FinFunctor& lifted);

// Monad 2-cells / specializations between such lax 1-cells correspond to
// 2-cells between the lifted functors.
NatTrans extlift_cell(const RightExtension& e, const AlgebraObject& a2, const SquareCell& q);
SquareCell extlift_cell_inverse(const RightExtension& e, const AlgebraObject& a2,
                                const LaxMorphism& f1, const LaxMorphism& f2,
                                const NatTrans& lifted, CellKind kind);

// Pushforward version: lax structures on f transport to lax structures on
// along;f over the pushed monad, and conversely.
LaxMorphism pushlift_lax(const RightExtension& e, const LaxMorphism& f);
LaxMorphism pushlift_lax_inverse(const RightExtension& e, const LaxMorphism& composite,
                                 const FinFunctor& carrier, const Monad& t2);
SquareCell pushlift_cell(const RightExtension& e, const SquareCell& q);
SquareCell pushlift_cell_inverse(const RightExtension& e, const SquareCell& composite,
                                 const LaxMorphism& f1, const LaxMorphism& f2);

} // namespace twocat

#endif
