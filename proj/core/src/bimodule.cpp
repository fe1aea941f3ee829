#include "twocat/bimodule.hpp"

namespace twocat {

LawReport check_bimodule(const Bimodule& b) {
  LawReport r;
  ModuleStr left{Side::left, b.left_monad, b.carrier, b.left_action};
  ModuleStr right{Side::right, b.right_monad, b.carrier, b.right_action};
  for (auto& v : check_module(left).violations) r.add("left " + v.law, v.at, v.lhs, v.rhs);
  for (auto& v : check_module(right).violations) r.add("right " + v.law, v.at, v.lhs, v.rhs);
  if (!r.ok()) return r;

  compare_cells(r, "compatibility law",
                vertical(whisker_right(b.left_action, b.right_monad.endo), b.right_action),
                vertical(whisker_left(b.left_monad.endo, b.right_action), b.left_action));
  return r;
}

Bimodule monad_as_bimodule(const Monad& m) {
  return Bimodule{m, m, m.endo, m.mult, m.mult};
}

NatTrans bimodule_joint_action(const Bimodule& b) {
  return vertical(whisker_right(b.left_action, b.right_monad.endo), b.right_action);
}

Bimodule bimodule_from_joint(const Monad& left, const Monad& right, const FinFunctor& carrier,
                             const NatTrans& joint) {
  Bimodule b;
  b.left_monad = left;
  b.right_monad = right;
  b.carrier = carrier;
  // lambda: insert the right unit;  rho: insert the left unit
  b.left_action = vertical(whisker_left(compose_functors(left.endo, carrier), right.unit), joint);
  b.right_action = vertical(whisker_right(left.unit, compose_functors(carrier, right.endo)), joint);
  return b;
}

FinFunctor bimodule_path_carrier(const BimoduleMapNAry& m) {
  if (m.inputs.empty()) {
    if (!m.anchor) throw InvalidInput("bimodule map with empty path needs an anchor monad");
    return identity_functor(m.anchor->base);
  }
  FinFunctor p = m.inputs.front().carrier;
  for (std::size_t i = 1; i < m.inputs.size(); ++i)
    p = compose_functors(p, m.inputs[i].carrier);
  return p;
}

LawReport check_bimodule_map(const BimoduleMapNAry& m) {
  const std::size_t n = m.inputs.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!same_monad(m.inputs[i].right_monad, m.inputs[i + 1].left_monad))
      throw BoundaryError("bimodule map: path is not composable at position " +
                          std::to_string(i));
  if (n == 0 && !m.anchor)
    throw InvalidInput("bimodule map with empty path needs an anchor monad");
  Monad t0 = n ? m.inputs.front().left_monad : *m.anchor;
  Monad tn = n ? m.inputs.back().right_monad : t0;

  ColaxMorphism fl = m.left_boundary ? *m.left_boundary : identity_colax(t0);
  ColaxMorphism fr = m.right_boundary ? *m.right_boundary : identity_colax(tn);

  LawReport r;
  if (!same_monad(fl.source_monad, t0) || !same_monad(fr.source_monad, tn) ||
      !same_monad(fl.target_monad, m.output.left_monad) ||
      !same_monad(fr.target_monad, m.output.right_monad)) {
    r.add("bimodule map boundary", "colax boundaries vs path/output monads");
    return r;
  }
  FinFunctor path = bimodule_path_carrier(m);
  FinFunctor src = compose_functors(path, fr.carrier);
  FinFunctor dst = compose_functors(fl.carrier, m.output.carrier);
  if (!(m.cell.source == src) || !(m.cell.target == dst)) {
    r.add("bimodule map boundary", "cell");
    return r;
  }
  for (auto& v : validate_nat_trans(m.cell).violations)
    r.add("cell " + v.law, v.at, v.lhs, v.rhs);
  if (!r.ok()) return r;

  // prefix/suffix carriers around each slot
  std::vector<FinFunctor> pre(n + 1), suf(n + 1);
  pre[0] = identity_functor(t0.base);
  for (std::size_t i = 0; i < n; ++i) pre[i + 1] = compose_functors(pre[i], m.inputs[i].carrier);
  suf[n] = identity_functor(tn.base);
  for (std::size_t i = n; i > 0; --i)
    suf[i - 1] = compose_functors(m.inputs[i - 1].carrier, suf[i]);

  if (n == 0) {
    auto route_a = vertical(whisker_left(t0.endo, m.cell),
                            vertical(whisker_right(fl.structure, m.output.carrier),
                                     whisker_left(fl.carrier, m.output.left_action)));
    auto route_b = vertical(fr.structure,
                            vertical(whisker_right(m.cell, fr.target_monad.endo),
                                     whisker_left(fl.carrier, m.output.right_action)));
    compare_cells(r, "unit-path law", route_a, route_b);
    return r;
  }

  // T_0 acting on the left end
  {
    auto via_path = vertical(
        whisker_right(m.inputs[0].left_action, compose_functors(suf[1], fr.carrier)), m.cell);
    auto via_output = vertical(whisker_left(t0.endo, m.cell),
                               vertical(whisker_right(fl.structure, m.output.carrier),
                                        whisker_left(fl.carrier, m.output.left_action)));
    compare_cells(r, "left boundary law", via_path, via_output);
  }
  // T_i between M_i and M_{i+1}
  for (std::size_t i = 1; i < n; ++i) {
    auto via_rho = vertical(
        whisker_both(pre[i - 1], m.inputs[i - 1].right_action,
                     compose_functors(suf[i], fr.carrier)),
        m.cell);
    auto via_lambda = vertical(
        whisker_both(pre[i], m.inputs[i].left_action, compose_functors(suf[i + 1], fr.carrier)),
        m.cell);
    compare_cells(r, "middle law at T_" + std::to_string(i), via_rho, via_lambda);
  }
  // T_n acting on the right end
  {
    auto via_path = vertical(
        whisker_both(pre[n - 1], m.inputs[n - 1].right_action, fr.carrier), m.cell);
    auto via_output = vertical(whisker_left(path, fr.structure),
                               vertical(whisker_right(m.cell, fr.target_monad.endo),
                                        whisker_left(fl.carrier, m.output.right_action)));
    compare_cells(r, "right boundary law", via_path, via_output);
  }
  return r;
}

} // namespace twocat
