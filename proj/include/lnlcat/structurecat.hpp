#ifndef LNLCAT_STRUCTURECAT_HPP
#define LNLCAT_STRUCTURECAT_HPP

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "lnlcat/fincat.hpp"
#include "lnlcat/lnlmonad.hpp"
#include "lnlcat/semialg.hpp"

namespace lnlcat {

/// A structure object over a finite carrier, given by tables: a strict
/// symmetric monoidal structure (tensor, unit, optional symmetry, identity
/// by default), an idempotent deflation f with counit epsilon, and the
/// cartesian witnesses (diagonals and deletions) that generate the derived
/// evaluator for arbitrary reindexing morphisms.
///
/// Morphism-level tables (tensor on morphisms, f on morphisms) may be
/// omitted for thin carriers, where they are forced.
struct StructureObject {
  FinCat carrier;
  std::string unit_ob;
  std::map<std::pair<std::string, std::string>, std::string> tensor_ob;
  std::map<std::pair<std::string, std::string>, std::string> tensor_mor;
  std::map<std::string, std::string> f_ob;
  std::map<std::string, std::string> f_mor;
  std::map<std::string, std::string> epsilon;   // x -> morphism f(x) -> x
  std::map<std::string, std::string> diagonal;  // x -> morphism f(x) -> f(x (x) x)
  std::map<std::string, std::string> deletion;  // x -> morphism f(x) -> f(unit)
  std::map<std::pair<std::string, std::string>, std::string> symmetry;  // optional
};

StructureObject structure_from_json(const nlohmann::json& j);
nlohmann::json structure_to_json(const StructureObject& s);

/// The operational form of a structure object: primitive evaluators plus
/// the derived algebra structures. Works over finite table-backed carriers
/// and over computed carriers (the bounded free instances) alike.
struct StructureOps {
  ViewPtr carrier;
  Value unit;
  std::function<Value(const Value&, const Value&)> tensor_ob;
  std::function<Value(const Value&, const Value&)> tensor_mor;
  std::function<Value(const Value&)> f_ob;
  std::function<Value(const Value&)> f_mor;
  std::function<Value(const Value&)> epsilon;
  std::function<Value(const Value&, const Value&)> symmetry;  // x (x) y -> y (x) x
  std::function<Value(const Value&)> diagonal;                // f(x) -> f(x)(x)f(x)
  std::function<Value(const Value&)> deletion;                // f(x) -> unit

  Functor w;  // S(carrier) -> carrier
  Functor z;  // C(carrier) -> carrier, derived from the witnesses
  Functor f;  // carrier -> carrier
};

/// Builds evaluators from tables. Throws Rejected when the tables are
/// structurally incomplete (missing entries, bad boundaries).
StructureOps ops_from_tables(const StructureObject& s);

/// Verifies every structure-object invariant: monoidal laws, symmetry
/// laws, strict monoidality and idempotence of f, the counit conditions,
/// the coincidence e.w = z.lambda, well-definedness and functoriality of
/// the derived z, its left-semi C-algebra laws, the S-algebra-map property
/// of z, and products on the f-fixed subcategory.
Report check_structure_object(const StructureObject& s, int max_len);

/// A Q-algebra as an evaluator for Q(carrier) -> carrier.
struct QAlgebra {
  ViewPtr carrier;
  ViewPtr q_carrier;
  Functor eval;
};

/// Unit, multiplication and functoriality laws of a Q-algebra evaluator on
/// a bounded sweep.
Report check_q_algebra(const QAlgebra& q, const Sweep& carrier_sweep, int max_len);

/// The mediating equations x.kappa = w, x.c = z, x.beta = epsilon.w and the
/// block-concatenation property tying an evaluator to structure data.
Report check_mediating_equations(const QAlgebra& q, const StructureOps& ops,
                                 const Sweep& carrier_sweep, int max_len);

/// The evaluator induced by a structure object: identity at linear
/// positions, the deflation at non-linear ones; morphisms evaluate through
/// the gather-permutation factorization.
QAlgebra algebra_from_structure(const StructureOps& ops);

/// Extracts structure data back out of a Q-algebra evaluator.
StructureOps ops_from_algebra(const QAlgebra& q);

/// Resolves closure-backed ops into tables over a finite carrier.
StructureObject materialize_structure(const StructureOps& ops, const FinCat& carrier);

/// structure -> algebra -> structure returns the input tables exactly.
Report roundtrip_structure(const StructureObject& s, int max_len);

/// algebra -> structure -> algebra agrees with the input evaluator on all
/// swept objects and morphisms.
Report roundtrip_algebra(const QAlgebra& q, const Sweep& q_object_sweep);

/// Criterion-style uniqueness probe: perturbing the evaluator at any single
/// swept object or morphism breaks a mediating equation, functoriality, a
/// boundary, or the concatenation property. Reports perturbations that
/// survive all checks (there should be none).
Report check_evaluator_uniqueness(const StructureObject& s, int max_len);

/// The free Q-algebra (Q(base), mu_Q) as an evaluator.
QAlgebra free_q_algebra(ViewPtr base);

}  // namespace lnlcat

#endif
