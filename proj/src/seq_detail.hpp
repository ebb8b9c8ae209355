#ifndef LNLCAT_SEQ_DETAIL_HPP
#define LNLCAT_SEQ_DETAIL_HPP

#include "lnlcat/seqmonads.hpp"

namespace lnlcat::detail {

enum class SeqMode { S, C, Q };

ViewPtr make_seq_view(ViewPtr base, SeqMode mode);
inline ViewPtr view_of_mode(ViewPtr base, SeqMode mode) { return make_seq_view(std::move(base), mode); }

Value unit_object(SeqMode mode, const Value& base_object);
Value flatten_object(SeqMode mode, const Value& outer);
Value flatten_morphism(SeqMode mode, const Value& outer_mor);

Functor seq_unit(ViewPtr base, SeqMode mode);
Functor seq_mult(ViewPtr base, SeqMode mode);
Functor seq_map(const Functor& f, SeqMode mode);
NatTransform seq_map2(const NatTransform& t, SeqMode mode);
std::vector<Value> seq_objects_upto(SeqMode mode, const std::vector<Value>& gens, int max_len);

MonadPresentation make_monad(SeqMode mode, const std::string& name);

}  // namespace lnlcat::detail

#endif
