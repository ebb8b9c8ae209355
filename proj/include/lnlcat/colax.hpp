#ifndef LNLCAT_COLAX_HPP
#define LNLCAT_COLAX_HPP

#include "lnlcat/semialg.hpp"
#include "lnlcat/seqmonads.hpp"

namespace lnlcat {

/// The colax colimit of a functor F : A -> B. The carrier keeps separate
/// copies of A and B; the only cross morphisms run from B-objects to
/// A-objects and are stored as their witness v in B(b, F a). The comparison
/// 2-cell beta has component mix(a, id_{F a}) at each a.
///
/// Carrier encodings: objects ["A", a] / ["B", b]; morphisms
/// ["amor", f], ["bmor", g], ["mix", a, v].
struct ColaxColimit {
  Functor input;  // F : A -> B
  ViewPtr carrier;
  Functor inj_a;
  Functor inj_b;
  NatTransform beta;  // inj_b . F => inj_a
};

Value colimit_inl(const Value& a);
Value colimit_inr(const Value& b);
Value colimit_mix(const Value& a, const Value& witness);

ColaxColimit build_colimit(const Functor& f);

/// The retraction h : carrier -> B induced by the identity cocone
/// (F, id_B, id): h . inj_a = F, h . inj_b = id, h . beta = id.
Functor colimit_retraction(const ColaxColimit& col);

/// The counit alpha : inj_b . h => id of the strictly idempotent comonad
/// carried by the colimit.
std::function<Value(const Value&)> colimit_counit(const ColaxColimit& col);

/// A colax cocone under the same F: functors f : A -> D, g : B -> D and a
/// 2-cell phi : g . F => f.
struct ColaxCocone {
  Functor f;
  Functor g;
  NatTransform phi;
};

Report validate_cocone(const Functor& input, const ColaxCocone& cc, const Sweep& a_sweep);

/// The unique mediating functor r with r . inj_a = f, r . inj_b = g and
/// r . beta = phi. Rejects invalid cocones (non-natural phi, boundary
/// mismatches).
Functor mediate_cocone(const ColaxColimit& col, const ColaxCocone& cc);

/// Verifies the three mediating equations for a candidate functor.
Report check_mediator(const ColaxColimit& col, const ColaxCocone& cc, const Functor& r,
                      const Sweep& a_sweep, const Sweep& b_sweep);

/// Exhaustive 1-dimensional universality oracle: enumerates every functor
/// carrier -> D satisfying the three equations and reports a violation
/// unless there is exactly one, equal to `r` on all carrier values. Both
/// categories must be finite.
Report check_mediator_unique(const ColaxColimit& col, const ColaxCocone& cc, const Functor& r);

/// The unique 2-cell tau : r => r' with tau . inj_a = rho, tau . inj_b =
/// sigma, for a compatible cocone morphism (rho, sigma). Rejects
/// incompatible pairs with the failing component.
NatTransform mediate_2cell(const ColaxColimit& col, const ColaxCocone& cc, const ColaxCocone& cc2,
                           const NatTransform& rho, const NatTransform& sigma);

/// Exhaustive 2-dimensional universality oracle: every natural r => r'
/// satisfying the two whiskering equations equals tau.
Report check_2cell_unique(const ColaxColimit& col, const Functor& r, const Functor& r2,
                          const NatTransform& rho, const NatTransform& sigma,
                          const NatTransform& tau);

/// C+ : the construction applied to the unit Id -> C. Carrier at X is the
/// colax colimit of eta_C : X -> C X; the multiplication collapses the
/// B side with mu_C and the A side with the colimit injections.
MonadPresentation cplus_monad();

/// The colimit of eta_C at a base, exposed for tests and the CLI.
ColaxColimit cplus_colimit(ViewPtr base);

/// A left-semi C-algebra induces a strict C+-algebra on the same carrier:
/// inl a |-> a, inr s |-> z(s), mixed morphisms through the counit.
StrictAlgebra cplus_algebra_from_lsa(const LeftSemiAlgebra& a, const Sweep& carrier_sweep,
                                     int max_len);

/// Extracts the left-semi C-algebra data back out of a C+-algebra.
LeftSemiAlgebra lsa_from_cplus_algebra(const StrictAlgebra& alg);

}  // namespace lnlcat

#endif
