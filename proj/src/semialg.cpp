#include "lnlcat/semialg.hpp"

#include "lnlcat/lnlmonad.hpp"

namespace lnlcat {

Functor LeftSemiAlgebra::deflation() const {
  return compose_functors(monad.unit(carrier), structure);
}

Report check_left_semi_algebra(const LeftSemiAlgebra& a, const Sweep& carrier_sweep, int max_len) {
  Report report;
  report.meta["monad"] = a.monad.name;

  std::vector<Value> t1 = a.monad.objects_upto(carrier_sweep.objects, max_len);
  Sweep t1_sweep = carrier_sweep;
  t1_sweep.objects = t1;
  report.merge(validate_functor(a.structure, t1_sweep));
  if (report.has_structural()) return report;

  // (A) strict multiplication law: z . mu = z . Tz.
  Functor mu = a.monad.mult(a.carrier);
  Sweep t2_sweep = carrier_sweep;
  t2_sweep.objects = bounded_objects(a.monad, t1, max_len, mu, &report.truncated);
  check_functors_equal(compose_functors(mu, a.structure),
                       compose_functors(a.monad.map(a.structure), a.structure), t2_sweep,
                       "lsa.mult", report);

  // Derived idempotence f = f^2.
  Functor f = a.deflation();
  check_functors_equal(compose_functors(f, f), f, carrier_sweep, "lsa.f_idempotent", report);

  // eps is a 2-cell f => id with commuting naturality squares.
  NatTransform eps{f, identity_functor(a.carrier), a.counit};
  {
    Report nat = validate_nat_transform(eps, carrier_sweep);
    for (Finding& finding : nat.findings) finding.law = "lsa.counit." + finding.law;
    report.merge(nat);
  }

  // (B) whiskering with f on either side gives the identity 2-cell of f.
  for (const Value& x : carrier_sweep.objects) {
    Value fx = f.ob(x);
    Value id_fx = a.carrier->identity(fx);
    report.check(a.counit(fx) == id_fx, "lsa.counit.right_whisker", x.str());
    report.check(f.mor(a.counit(x)) == id_fx, "lsa.counit.left_whisker", x.str());
  }
  return report;
}

Report check_strict_lsa_map(const Functor& p, const LeftSemiAlgebra& a, const LeftSemiAlgebra& b,
                            const Sweep& carrier_sweep, int max_len) {
  Report report;
  std::vector<Value> t1 = a.monad.objects_upto(carrier_sweep.objects, max_len);
  Sweep t1_sweep = carrier_sweep;
  t1_sweep.objects = t1;
  check_functors_equal(compose_functors(a.structure, p),
                       compose_functors(a.monad.map(p), b.structure), t1_sweep,
                       "lsa_map.structure", report);
  for (const Value& x : carrier_sweep.objects) {
    Value lhs = p.mor(a.counit(x));
    Value rhs = b.counit(p.ob(x));
    report.check(lhs == rhs, "lsa_map.counit", x.str() + ": " + lhs.str() + " vs " + rhs.str());
  }
  return report;
}

Report check_lsa_2cell(const NatTransform& gamma, const Functor& p, const Functor& q,
                       const LeftSemiAlgebra& a, const LeftSemiAlgebra& b,
                       const Sweep& carrier_sweep, int max_len) {
  Report report;
  {
    Report nat = validate_nat_transform(gamma, carrier_sweep);
    for (Finding& finding : nat.findings) finding.law = "lsa_2cell." + finding.law;
    report.merge(nat);
  }
  for (const Value& x : carrier_sweep.objects) {
    Value c = gamma.at(x);
    if (b.carrier->source(c) != p.ob(x) || b.carrier->target(c) != q.ob(x))
      report.law("lsa_2cell.boundary", x.str());
  }
  if (!report.ok()) return report;

  // gamma . z_a = z_b . T(gamma), componentwise over the T-sweep.
  NatTransform t_gamma = a.monad.map2(gamma);
  for (const Value& t : a.monad.objects_upto(carrier_sweep.objects, max_len)) {
    Value lhs = gamma.at(a.structure.ob(t));
    Value rhs = b.structure.mor(t_gamma.at(t));
    report.check(lhs == rhs, "lsa_2cell.whisker", t.str());
  }
  return report;
}

IdempotentComonad comonad_from_lsa(const LeftSemiAlgebra& a, const Sweep& carrier_sweep,
                                   int max_len) {
  Report precheck = check_left_semi_algebra(a, carrier_sweep, max_len);
  if (!precheck.ok()) throw Rejected("comonad_from_lsa: not a left-semi algebra", precheck);
  return {a.deflation(), a.counit};
}

LeftSemiAlgebra lsa_from_comonad(const StrictAlgebra& alg, const Functor& f,
                                 const std::function<Value(const Value&)>& eps,
                                 const Sweep& carrier_sweep, int max_len) {
  Report report = check_strict_algebra(alg, carrier_sweep, max_len);

  // f is a strict endomap of the algebra, idempotent on the nose.
  std::vector<Value> t1 = alg.monad.objects_upto(carrier_sweep.objects, max_len);
  Sweep t1_sweep = carrier_sweep;
  t1_sweep.objects = t1;
  check_functors_equal(compose_functors(alg.structure, f),
                       compose_functors(alg.monad.map(f), alg.structure), t1_sweep,
                       "comonad.endomap", report);
  check_functors_equal(compose_functors(f, f), f, carrier_sweep, "comonad.idempotent", report);

  // eps : f => id is natural and an algebra 2-cell.
  NatTransform eps_cell{f, identity_functor(alg.carrier), eps};
  report.merge(validate_nat_transform(eps_cell, carrier_sweep));
  NatTransform t_eps = alg.monad.map2(eps_cell);
  for (const Value& t : t1) {
    Value lhs = alg.structure.mor(t_eps.at(t));
    Value rhs = eps(alg.structure.ob(t));
    report.check(lhs == rhs, "comonad.algebra_2cell", t.str());
  }
  if (!report.ok()) throw Rejected("lsa_from_comonad: preconditions failed", report);

  LeftSemiAlgebra out{alg.monad, alg.carrier, compose_functors(alg.structure, f), eps};
  Report laws = check_left_semi_algebra(out, carrier_sweep, max_len);
  if (!laws.ok()) throw Rejected("lsa_from_comonad: result fails the left-semi laws", laws);
  return out;
}

LeftSemiMonadMap as_left_semi(const MonadMap& mm) {
  LeftSemiMonadMap out;
  out.source = mm.source;
  out.target = mm.target;
  out.at = mm.at;
  MonadPresentation target = mm.target;
  out.unit2 = [target](ViewPtr base) {
    Functor eta = target.unit(base);
    ViewPtr tx = eta.target;
    return [tx, eta](const Value& x) { return tx->identity(eta.ob(x)); };
  };
  return out;
}

LeftSemiMonadMap c_to_q_map() {
  LeftSemiMonadMap out;
  out.source = monad_C();
  out.target = monad_Q();
  out.at = [](ViewPtr base) { return build_structure_maps(base).c; };
  out.unit2 = [](ViewPtr base) {
    QStructureMaps maps = build_structure_maps(base);
    return [maps](const Value& x) { return maps.beta(Value(Value::List{x})); };
  };
  return out;
}

Report check_ls_monad_map(const LeftSemiMonadMap& m, ViewPtr base, const Sweep& base_sweep,
                          int max_len) {
  Report report;
  Functor lam = m.at(base);
  std::vector<Value> t1 = m.source.objects_upto(base_sweep.objects, max_len);
  Sweep t1_sweep = base_sweep;
  t1_sweep.objects = t1;
  report.merge(validate_functor(lam, t1_sweep));

  // (M) strict multiplication coherence.
  Functor mu_s = m.source.mult(base);
  Functor lamlam = compose_functors(m.source.map(lam), m.at(m.target.at(base)));
  Sweep t2_sweep = base_sweep;
  t2_sweep.objects = bounded_objects(m.source, t1, max_len, mu_s, &report.truncated);
  check_functors_equal(compose_functors(mu_s, lam), compose_functors(lamlam, m.target.mult(base)),
                       t2_sweep, "lsmm.mult", report);

  // gamma is a 2-cell lambda . eta' => eta with natural components.
  NatTransform gamma{compose_functors(m.source.unit(base), lam), m.target.unit(base),
                     m.unit2(base)};
  {
    Report nat = validate_nat_transform(gamma, base_sweep);
    for (Finding& finding : nat.findings) finding.law = "lsmm.unit2." + finding.law;
    report.merge(nat);
  }
  if (!report.ok()) return report;

  // (U) operationalized: the free target-algebra over the base composes
  // along the map to a valid left-semi source-algebra.
  ViewPtr tx = m.target.at(base);
  LeftSemiAlgebra free_algebra{m.target, tx, m.target.mult(base),
                               [tx](const Value& q) { return tx->identity(q); }};
  Sweep tx_sweep = base_sweep;
  tx_sweep.objects = m.target.objects_upto(base_sweep.objects, max_len);
  try {
    compose_lsa_along(m, free_algebra, tx_sweep, max_len);
  } catch (const Rejected& r) {
    Report inner = r.report();
    for (Finding& finding : inner.findings) finding.law = "lsmm.free_compose." + finding.law;
    report.merge(inner);
  }
  return report;
}

LeftSemiAlgebra compose_lsa_along(const LeftSemiMonadMap& m, const LeftSemiAlgebra& a,
                                  const Sweep& carrier_sweep, int max_len) {
  Report precheck = check_left_semi_algebra(a, carrier_sweep, max_len);
  if (!precheck.ok()) throw Rejected("compose_lsa_along: input fails the left-semi laws", precheck);

  Functor lam = m.at(a.carrier);
  auto gamma = m.unit2(a.carrier);
  ViewPtr carrier = a.carrier;
  Functor z = a.structure;
  auto eps = a.counit;
  LeftSemiAlgebra out{m.source, a.carrier, compose_functors(lam, z),
                      [carrier, z, gamma, eps](const Value& x) {
                        return carrier->compose(z.mor(gamma(x)), eps(x));
                      }};
  Report laws = check_left_semi_algebra(out, carrier_sweep, max_len);
  if (!laws.ok()) throw Rejected("compose_lsa_along: result fails the left-semi laws", laws);
  return out;
}

LeftSemiAlgebra q_left_semi_c_algebra(ViewPtr base) {
  QStructureMaps maps = build_structure_maps(base);
  return {monad_C(), maps.q_base, maps.c_structure, maps.alpha};
}

LeftSemiAlgebra q_left_semi_s_algebra(ViewPtr base) {
  QStructureMaps maps = build_structure_maps(base);
  return {monad_S(), maps.q_base, compose_functors(maps.s_structure, maps.e), maps.alpha};
}

}  // namespace lnlcat
