#ifndef LNLCAT_SEMIALG_HPP
#define LNLCAT_SEMIALG_HPP

#include "lnlcat/seqmonads.hpp"

namespace lnlcat {

/// A left-semi algebra: strict in the multiplication direction, colax in
/// the unit direction. The counit retracts f = z . eta onto the identity.
struct LeftSemiAlgebra {
  MonadPresentation monad;
  ViewPtr carrier;
  Functor structure;                          // z : T X -> X
  std::function<Value(const Value&)> counit;  // eps_x : f(x) -> x

  Functor deflation() const;  // f = z . eta as a functor X -> X
};

/// Verifies the multiplication law z.mu = z.Tz, the whiskering identities
/// eps.f = id_f = f.eps, the derived idempotence f = f^2, and that eps is a
/// natural transformation f => id with the right boundaries.
Report check_left_semi_algebra(const LeftSemiAlgebra& a, const Sweep& carrier_sweep, int max_len);

/// Strict map of left-semi algebras: p commutes with the structures and
/// with the counits.
Report check_strict_lsa_map(const Functor& p, const LeftSemiAlgebra& a, const LeftSemiAlgebra& b,
                            const Sweep& carrier_sweep, int max_len);

/// 2-cell between strict maps p, q: gamma whiskered by the structure of a
/// equals the structure of b applied to T(gamma).
Report check_lsa_2cell(const NatTransform& gamma, const Functor& p, const Functor& q,
                       const LeftSemiAlgebra& a, const LeftSemiAlgebra& b,
                       const Sweep& carrier_sweep, int max_len);

/// Extracts the strictly idempotent comonad (f, eps) of a validated
/// left-semi algebra. Rejects inputs failing check_left_semi_algebra.
struct IdempotentComonad {
  Functor deflation;
  std::function<Value(const Value&)> counit;
};
IdempotentComonad comonad_from_lsa(const LeftSemiAlgebra& a, const Sweep& carrier_sweep,
                                   int max_len);

/// Builds the left-semi algebra (f . x, eps) from a strict algebra carrying
/// a strictly idempotent comonad in its algebra 2-category: f must be a
/// strict endomap with f = f^2 and eps : f => id an algebra 2-cell. Every
/// precondition is verified; the result passes check_left_semi_algebra.
LeftSemiAlgebra lsa_from_comonad(const StrictAlgebra& alg, const Functor& f,
                                 const std::function<Value(const Value&)>& eps,
                                 const Sweep& carrier_sweep, int max_len);

/// A left-semi monad map: strict on multiplications, colax on units via the
/// 2-cell gamma_x : lambda(eta'(x)) -> eta(x).
struct LeftSemiMonadMap {
  MonadPresentation source;
  MonadPresentation target;
  std::function<Functor(ViewPtr)> at;
  std::function<std::function<Value(const Value&)>(ViewPtr)> unit2;
};

/// Any strict monad map is left-semi with identity unit 2-cell.
LeftSemiMonadMap as_left_semi(const MonadMap& mm);

/// c : C => Q with gamma assembled from beta at singletons.
LeftSemiMonadMap c_to_q_map();

/// Verifies the multiplication coherence and the unit coherence,
/// operationalized on the free target-monad algebra over the base: composing
/// it along the map must yield a valid left-semi source-monad algebra.
Report check_ls_monad_map(const LeftSemiMonadMap& m, ViewPtr base, const Sweep& base_sweep,
                          int max_len);

/// Composition of a left-semi algebra along a left-semi monad map:
/// (z . lambda_X, eps . (z gamma)). Validates the input and the result.
LeftSemiAlgebra compose_lsa_along(const LeftSemiMonadMap& m, const LeftSemiAlgebra& a,
                                  const Sweep& carrier_sweep, int max_len);

/// The left-semi C-algebra carried by Q(base): structure c . mu_C . C(h)
/// with counit alpha.
LeftSemiAlgebra q_left_semi_c_algebra(ViewPtr base);

/// The left-semi S-algebra carried by Q(base): concatenation followed by
/// e = c . h, with counit alpha.
LeftSemiAlgebra q_left_semi_s_algebra(ViewPtr base);

}  // namespace lnlcat

#endif
