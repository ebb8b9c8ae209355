#include "lnlcat/lnlmonad.hpp"

#include <algorithm>

#include "lnlcat/enumerate.hpp"
#include "seq_detail.hpp"

namespace lnlcat {

const Value kLin("lin");
const Value kNonLin("nonlin");

Value tagged_entry(const Value& base_object, const Value& tag) {
  return Value(Value::List{base_object, tag});
}

const Value& entry_tag(const Value& tagged_seq_object, std::size_t i) {
  return tagged_seq_object.at(i).at(1);
}

bool is_linear_entry(const Value& tagged_seq_object, std::size_t i) {
  return entry_tag(tagged_seq_object, i) == kLin;
}

Value tag_all(const Value& seq_object, const Value& tag) {
  Value::List out;
  for (const Value& e : seq_object.items()) out.push_back(tagged_entry(e, tag));
  return Value(std::move(out));
}

Value untag(const Value& tagged_seq_object) {
  Value::List out;
  for (const Value& e : tagged_seq_object.items()) out.push_back(e.at(0));
  return Value(std::move(out));
}

bool linearity_condition(const Value& src, const Value& tgt, const std::vector<std::size_t>& reindex) {
  // Each linear source position must be hit exactly once, from a linear
  // target position; non-linear sources may be hit any number of times.
  std::vector<int> hits(src.size(), 0);
  for (std::size_t j = 0; j < reindex.size(); ++j) {
    if (is_linear_entry(src, reindex[j])) {
      if (!is_linear_entry(tgt, j)) return false;
      ++hits[reindex[j]];
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i)
    if (is_linear_entry(src, i) && hits[i] != 1) return false;
  return true;
}

ViewPtr q_view(ViewPtr base) { return detail::make_seq_view(std::move(base), detail::SeqMode::Q); }

MonadPresentation monad_Q() { return detail::make_monad(detail::SeqMode::Q, "Q"); }

namespace {

// Identity-underneath morphism between two taggings of the same sequence.
Value retag_morphism(ViewPtr base, const Value& src, const Value& tgt) {
  SeqMor m;
  m.src = src;
  m.tgt = tgt;
  for (std::size_t i = 0; i < src.size(); ++i) {
    m.reindex.push_back(i);
    m.comps.push_back(base->identity(entry_object(src, i)));
  }
  if (!linearity_condition(src, tgt, m.reindex))
    throw std::logic_error("retag_morphism: inadmissible retagging " + src.str() + " -> " + tgt.str());
  return pack_mor(m);
}

Value retag_mor_value(const Value& m, const std::function<Value(const Value&)>& retag_ob) {
  SeqMor sm = unpack_mor(m);
  return pack_mor({retag_ob(sm.src), retag_ob(sm.tgt), sm.reindex, sm.comps});
}

Functor make_kappa(ViewPtr x) {
  auto lin_ob = [](const Value& v) { return tag_all(v, kLin); };
  return {free_view(x, Flavor::S), q_view(x), lin_ob,
          [lin_ob](const Value& m) { return retag_mor_value(m, lin_ob); }};
}

}  // namespace

QStructureMaps build_structure_maps(ViewPtr base) {
  QStructureMaps maps;
  maps.base = base;
  maps.s_base = free_view(base, Flavor::S);
  maps.c_base = free_view(base, Flavor::C);
  maps.q_base = q_view(base);

  auto nonlin_ob = [](const Value& x) { return tag_all(x, kNonLin); };
  auto forget_ob = [](const Value& x) { return untag(x); };

  maps.kappa = make_kappa(base);
  maps.c = {maps.c_base, maps.q_base, nonlin_ob,
            [nonlin_ob](const Value& m) { return retag_mor_value(m, nonlin_ob); }};
  maps.h = {maps.q_base, maps.c_base, forget_ob,
            [forget_ob](const Value& m) { return retag_mor_value(m, forget_ob); }};
  maps.e = compose_functors(maps.h, maps.c);

  maps.beta = [base](const Value& s) {
    return retag_morphism(base, tag_all(s, kNonLin), tag_all(s, kLin));
  };
  maps.alpha = [base](const Value& q) {
    return retag_morphism(base, tag_all(untag(q), kNonLin), q);
  };

  // S-algebra structure on Q(base): concatenation, realized as
  // mu_Q . kappa_{Q base}.
  MonadPresentation q = monad_Q();
  MonadPresentation c = monad_C();
  maps.s_structure = compose_functors(make_kappa(maps.q_base), q.mult(base));

  // Left-semi C-algebra structure: C(Q base) --C(h)--> C^2(base) --mu_C-->
  // C(base) --c--> Q(base).
  maps.c_structure =
      compose_functors(compose_functors(c.map(maps.h), c.mult(base)), maps.c);
  return maps;
}

Report check_colimit_equations(ViewPtr base, int max_len, std::size_t cap) {
  Report report;
  report.meta["max_len"] = std::to_string(max_len);
  auto base_objs_opt = base->objects();
  if (!base_objs_opt) throw std::invalid_argument("check_colimit_equations: base must be finite");
  const std::vector<Value> base_objs = *base_objs_opt;

  QStructureMaps maps = build_structure_maps(base);
  MonadPresentation s = monad_S();
  MonadPresentation c = monad_C();
  MonadPresentation q = monad_Q();

  std::vector<Value> s_objs = s.objects_upto(base_objs, max_len);
  std::vector<Value> c_objs = c.objects_upto(base_objs, max_len);
  std::vector<Value> q_objs = q.objects_upto(base_objs, max_len);

  report.merge(validate_functor(maps.kappa, Sweep{s_objs, 2000, cap}));
  report.merge(validate_functor(maps.c, Sweep{c_objs, 2000, cap}));
  report.merge(validate_functor(maps.h, Sweep{q_objs, 2000, cap}));

  // h . kappa = lambda and h . c = id.
  check_functors_equal(compose_functors(maps.kappa, maps.h), lambda_map().at(base), Sweep{s_objs, 2000, cap},
                       "colimit.h_kappa", report);
  check_functors_equal(compose_functors(maps.c, maps.h), identity_functor(maps.c_base),
                       Sweep{c_objs, 2000, cap}, "colimit.h_c", report);

  // Whiskering identities of the 2-cells.
  for (const Value& sobj : s_objs) {
    report.check(maps.h.mor(maps.beta(sobj)) == maps.c_base->identity(sobj), "colimit.h_beta",
                 sobj.str());
    report.check(maps.alpha(maps.kappa.ob(sobj)) == maps.beta(sobj), "colimit.alpha_kappa",
                 sobj.str());
  }
  for (const Value& cobj : c_objs) {
    Value at_c = maps.alpha(maps.c.ob(cobj));
    report.check(at_c == maps.q_base->identity(maps.c.ob(cobj)), "colimit.alpha_c", cobj.str());
  }
  for (const Value& qobj : q_objs) {
    report.check(maps.h.mor(maps.alpha(qobj)) == maps.c_base->identity(maps.h.ob(qobj)),
                 "colimit.h_alpha", qobj.str());
    report.check(maps.e.ob(maps.e.ob(qobj)) == maps.e.ob(qobj), "colimit.e_idempotent.ob",
                 qobj.str());
  }

  std::vector<Value> q_mors = morphisms_between(*maps.q_base, q_objs, Sweep{q_objs, cap, cap, cap}, &report.truncated);
  for (const Value& m : q_mors) {
    report.check(maps.e.mor(maps.e.mor(m)) == maps.e.mor(m), "colimit.e_idempotent.mor", m.str());
    // Naturality of alpha: e(m) ; alpha_tgt = alpha_src ; m.
    Value src = maps.q_base->source(m), tgt = maps.q_base->target(m);
    report.check(maps.q_base->compose(maps.e.mor(m), maps.alpha(tgt)) ==
                     maps.q_base->compose(maps.alpha(src), m),
                 "colimit.alpha_natural", m.str());
  }

  std::vector<Value> s_mors = morphisms_between(*maps.s_base, s_objs, Sweep{s_objs, cap, cap, cap}, &report.truncated);
  Functor c_lambda = compose_functors(lambda_map().at(base), maps.c);
  for (const Value& m : s_mors) {
    Value src = maps.s_base->source(m), tgt = maps.s_base->target(m);
    report.check(maps.q_base->compose(c_lambda.mor(m), maps.beta(tgt)) ==
                     maps.q_base->compose(maps.beta(src), maps.kappa.mor(m)),
                 "colimit.beta_natural", m.str());
  }

  // The two induced left-semi S-algebra structures on Q(base) coincide:
  // (c . h) after concatenation equals c . mu_C . C(h) . lambda_{Q base}.
  Functor via_s = compose_functors(maps.s_structure, maps.e);
  Functor via_c = compose_functors(lambda_map().at(maps.q_base), maps.c_structure);
  std::vector<Value> sq_objs;
  for (Value& x : s.objects_upto(q_objs, max_len)) {
    int total = 0;
    for (const Value& block : x.items()) total += static_cast<int>(block.size());
    if (total <= max_len) sq_objs.push_back(std::move(x));
  }
  check_functors_equal(via_s, via_c, Sweep{sq_objs, 2000, cap}, "colimit.left_semi_coincide", report);

  return report;
}

}  // namespace lnlcat
