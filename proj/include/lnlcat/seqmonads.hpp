#ifndef LNLCAT_SEQMONADS_HPP
#define LNLCAT_SEQMONADS_HPP

#include <functional>
#include <string>
#include <vector>

#include "lnlcat/category.hpp"

namespace lnlcat {

/// Sequence-shaped morphism value: a reindexing function from target
/// positions to source positions plus one base component per target
/// position. This single encoding carries the free symmetric monoidal
/// construction (bijective reindex), the free finite-products construction
/// (arbitrary reindex) and, with tagged entries, the linear-non-linear one.
///
/// Packed as [src, tgt, [r_0..r_{m-1}], [c_0..c_{m-1}]] with component c_j
/// a base morphism entry(src, r_j) -> entry(tgt, j).
struct SeqMor {
  Value src;
  Value tgt;
  std::vector<std::size_t> reindex;
  std::vector<Value> comps;
};

Value pack_mor(const SeqMor& m);
SeqMor unpack_mor(const Value& v);

/// Base object at a sequence position, looking through a [object, tag] pair
/// when the entry is tagged.
const Value& entry_object(const Value& seq_object, std::size_t i);

enum class Flavor { S, C };

/// The free symmetric strict monoidal category (flavor S) or the free
/// category with strict finite products (flavor C) over a base with
/// decidable object equality and finite hom-sets.
ViewPtr free_view(ViewPtr base, Flavor flavor);

/// A 2-monad on categories, presented by the data actually used in the law
/// sweeps: the construction on categories, unit and multiplication
/// components, and the action on functors and natural transformations.
struct MonadPresentation {
  std::string name;
  std::function<ViewPtr(ViewPtr)> at;
  std::function<Functor(ViewPtr)> unit;
  std::function<Functor(ViewPtr)> mult;
  std::function<Functor(const Functor&)> map;
  std::function<NatTransform(const NatTransform&)> map2;
  /// T-objects over a finite generator set, bounded by entry count.
  std::function<std::vector<Value>(const std::vector<Value>&, int)> objects_upto;
  /// Entry count of a T-object (flattened length after mult for nested ones).
  std::function<int(const Value&)> measure;
};

MonadPresentation monad_S();
MonadPresentation monad_C();

/// T-objects over `gens` whose flattened entry count stays within max_len.
/// Nested sweeps can explode combinatorially before the flatten filter
/// applies, so the raw enumeration is guarded: when it would exceed
/// `generation_limit`, the generator list is trimmed and *truncated set.
std::vector<Value> bounded_objects(const MonadPresentation& monad, std::vector<Value> gens,
                                   int max_len, const Functor& flatten, bool* truncated,
                                   std::size_t generation_limit = 300000);

/// Unit and multiplication laws plus naturality of both, swept over all
/// objects with entry count <= max_len and all morphisms between them
/// (capped, with truncation surfaced in the report).
/// Naturality is checked against every endofunctor of the (finite) base.
Report check_monad_laws(const MonadPresentation& monad, ViewPtr base, int max_len,
                        std::size_t cap = 20000);

/// A strict map of 2-monads, as the family of its components.
struct MonadMap {
  MonadPresentation source;
  MonadPresentation target;
  std::function<Functor(ViewPtr)> at;
};

/// lambda : S -> C, the identity on sequences and the inclusion of
/// bijective reindexings into arbitrary ones.
MonadMap lambda_map();

/// Verifies unit and multiplication coherence of a monad map on a bounded
/// sweep over the given base.
Report check_monad_map(const MonadMap& mm, ViewPtr base, int max_len, std::size_t cap = 20000);

/// A strict algebra: carrier plus structure functor T X -> X.
struct StrictAlgebra {
  MonadPresentation monad;
  ViewPtr carrier;
  Functor structure;
};

Report check_strict_algebra(const StrictAlgebra& alg, const Sweep& carrier_sweep, int max_len);

/// Restriction of scalars: precomposes a target-monad algebra with the
/// monad map's component. The input algebra is validated first and the
/// call is rejected with the failing instance if it breaks its laws.
StrictAlgebra restrict_scalars(const MonadMap& mm, const StrictAlgebra& alg,
                               const Sweep& carrier_sweep, int max_len);

}  // namespace lnlcat

#endif
