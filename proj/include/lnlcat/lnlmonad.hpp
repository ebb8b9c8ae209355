#ifndef LNLCAT_LNLMONAD_HPP
#define LNLCAT_LNLMONAD_HPP

#include "lnlcat/seqmonads.hpp"

namespace lnlcat {

/// Entry tags of the linear-non-linear construction. An object is a finite
/// sequence of [base object, tag] pairs; a morphism is admissible when its
/// reindex hits linear source positions only from linear target positions,
/// bijectively.
extern const Value kLin;     // atom "lin"
extern const Value kNonLin;  // atom "nonlin"

Value tagged_entry(const Value& base_object, const Value& tag);
const Value& entry_tag(const Value& tagged_seq_object, std::size_t i);
bool is_linear_entry(const Value& tagged_seq_object, std::size_t i);

/// Retagging helpers between the S/C sequence world and the tagged world.
Value tag_all(const Value& seq_object, const Value& tag);
Value untag(const Value& tagged_seq_object);

/// The linearity condition on a reindex between tagged boundaries.
bool linearity_condition(const Value& src, const Value& tgt, const std::vector<std::size_t>& reindex);

ViewPtr q_view(ViewPtr base);
MonadPresentation monad_Q();

/// The comparison functors and 2-cells tying S, C and Q together over one
/// base: kappa tags everything linear, c tags everything non-linear, h
/// forgets tags, e = c . h retags everything non-linear; beta is indexed by
/// plain sequences, alpha by tagged ones, both identity-underneath.
struct QStructureMaps {
  ViewPtr base;
  ViewPtr s_base;  // S(base)
  ViewPtr c_base;  // C(base)
  ViewPtr q_base;  // Q(base)
  Functor kappa;   // S(base) -> Q(base)
  Functor c;       // C(base) -> Q(base)
  Functor h;       // Q(base) -> C(base)
  Functor e;       // Q(base) -> Q(base)
  std::function<Value(const Value&)> beta;   // S-object s |-> morphism c(lambda s) -> kappa s
  std::function<Value(const Value&)> alpha;  // Q-object q |-> morphism e q -> q
  Functor s_structure;  // S(Q base) -> Q base, concatenation
  Functor c_structure;  // C(Q base) -> Q base, c . mu_C . C(h)
};

QStructureMaps build_structure_maps(ViewPtr base);

/// The equation suite satisfied by the colimit data: h.kappa = lambda,
/// h.c = id, the whiskering identities of alpha and beta, idempotence of e,
/// naturality of alpha and beta, and equality of the two induced left-semi
/// S-structures on Q(base).
Report check_colimit_equations(ViewPtr base, int max_len, std::size_t cap = 20000);

}  // namespace lnlcat

#endif
