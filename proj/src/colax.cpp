#include "lnlcat/colax.hpp"

#include <map>

#include "lnlcat/enumerate.hpp"

namespace lnlcat {

namespace {

const Value kInl("inl");
const Value kInr("inr");
const Value kAmor("amor");
const Value kBmor("bmor");
const Value kMix("mix");

bool is_tag(const Value& v, const Value& tag, std::size_t arity) {
  return v.is_list() && v.size() == arity && v.at(0) == tag;
}

class ColimitView final : public CategoryView {
 public:
  explicit ColimitView(Functor f) : f_(std::move(f)) {}

  bool has_object(const Value& x) const override {
    if (is_tag(x, kInl, 2)) return f_.source->has_object(x.at(1));
    if (is_tag(x, kInr, 2)) return f_.target->has_object(x.at(1));
    return false;
  }

  Value source(const Value& m) const override {
    if (is_tag(m, kAmor, 2)) return colimit_inl(f_.source->source(m.at(1)));
    if (is_tag(m, kBmor, 2)) return colimit_inr(f_.target->source(m.at(1)));
    if (is_tag(m, kMix, 3)) return colimit_inr(f_.target->source(m.at(2)));
    throw std::invalid_argument("colimit: unknown morphism " + m.str());
  }

  Value target(const Value& m) const override {
    if (is_tag(m, kAmor, 2)) return colimit_inl(f_.source->target(m.at(1)));
    if (is_tag(m, kBmor, 2)) return colimit_inr(f_.target->target(m.at(1)));
    if (is_tag(m, kMix, 3)) return colimit_inl(m.at(1));
    throw std::invalid_argument("colimit: unknown morphism " + m.str());
  }

  Value identity(const Value& x) const override {
    if (is_tag(x, kInl, 2)) return Value(Value::List{kAmor, f_.source->identity(x.at(1))});
    if (is_tag(x, kInr, 2)) return Value(Value::List{kBmor, f_.target->identity(x.at(1))});
    throw std::invalid_argument("colimit: unknown object " + x.str());
  }

  std::vector<Value> hom(const Value& src, const Value& tgt) const override {
    std::vector<Value> out;
    if (!has_object(src) || !has_object(tgt)) return out;
    const bool src_a = src.at(0) == kInl, tgt_a = tgt.at(0) == kInl;
    if (src_a && tgt_a) {
      for (const Value& m : f_.source->hom(src.at(1), tgt.at(1)))
        out.push_back(Value(Value::List{kAmor, m}));
    } else if (!src_a && !tgt_a) {
      for (const Value& m : f_.target->hom(src.at(1), tgt.at(1)))
        out.push_back(Value(Value::List{kBmor, m}));
    } else if (!src_a && tgt_a) {
      // C(b, a) ~ B(b, F a), witness stored directly.
      for (const Value& v : f_.target->hom(src.at(1), f_.ob(tgt.at(1))))
        out.push_back(colimit_mix(tgt.at(1), v));
    }
    return out;
  }

  Value compose(const Value& m, const Value& n) const override {
    if (target(m) != source(n))
      throw std::invalid_argument("colimit: not composable " + m.str() + " ; " + n.str());
    if (is_tag(m, kAmor, 2) && is_tag(n, kAmor, 2))
      return Value(Value::List{kAmor, f_.source->compose(m.at(1), n.at(1))});
    if (is_tag(m, kBmor, 2) && is_tag(n, kBmor, 2))
      return Value(Value::List{kBmor, f_.target->compose(m.at(1), n.at(1))});
    if (is_tag(m, kBmor, 2) && is_tag(n, kMix, 3))
      return colimit_mix(n.at(1), f_.target->compose(m.at(1), n.at(2)));
    if (is_tag(m, kMix, 3) && is_tag(n, kAmor, 2))
      return colimit_mix(f_.source->target(n.at(1)),
                         f_.target->compose(m.at(2), f_.mor(n.at(1))));
    throw std::invalid_argument("colimit: not composable " + m.str() + " ; " + n.str());
  }

  std::string describe() const override {
    return "colim(" + f_.source->describe() + " -> " + f_.target->describe() + ")";
  }

  std::optional<std::vector<Value>> objects() const override {
    auto a = f_.source->objects();
    auto b = f_.target->objects();
    if (!a || !b) return std::nullopt;
    std::vector<Value> out;
    for (const Value& x : *a) out.push_back(colimit_inl(x));
    for (const Value& x : *b) out.push_back(colimit_inr(x));
    return out;
  }

  const Functor& input() const { return f_; }

 private:
  Functor f_;
};

}  // namespace

Value colimit_inl(const Value& a) { return Value(Value::List{kInl, a}); }
Value colimit_inr(const Value& b) { return Value(Value::List{kInr, b}); }
Value colimit_mix(const Value& a, const Value& witness) {
  return Value(Value::List{kMix, a, witness});
}

ColaxColimit build_colimit(const Functor& f) {
  ColaxColimit col;
  col.input = f;
  col.carrier = std::make_shared<ColimitView>(f);
  col.inj_a = {f.source, col.carrier, [](const Value& a) { return colimit_inl(a); },
               [](const Value& m) { return Value(Value::List{kAmor, m}); }};
  col.inj_b = {f.target, col.carrier, [](const Value& b) { return colimit_inr(b); },
               [](const Value& m) { return Value(Value::List{kBmor, m}); }};
  Functor bf = compose_functors(f, col.inj_b);
  col.beta = {bf, col.inj_a, [f](const Value& a) {
                return colimit_mix(a, f.target->identity(f.ob(a)));
              }};
  return col;
}

Functor colimit_retraction(const ColaxColimit& col) {
  Functor f = col.input;
  return {col.carrier, f.target,
          [f](const Value& x) {
            if (is_tag(x, kInl, 2)) return f.ob(x.at(1));
            return x.at(1);
          },
          [f](const Value& m) {
            if (is_tag(m, kAmor, 2)) return f.mor(m.at(1));
            if (is_tag(m, kBmor, 2)) return m.at(1);
            return m.at(2);  // mix(a, v) |-> v, since h . beta = id
          }};
}

std::function<Value(const Value&)> colimit_counit(const ColaxColimit& col) {
  Functor f = col.input;
  ViewPtr carrier = col.carrier;
  return [f, carrier](const Value& x) -> Value {
    if (is_tag(x, kInl, 2)) return colimit_mix(x.at(1), f.target->identity(f.ob(x.at(1))));
    return carrier->identity(x);
  };
}

Report validate_cocone(const Functor& input, const ColaxCocone& cc, const Sweep& a_sweep) {
  Report report;
  report.merge(validate_functor(cc.f, a_sweep));
  if (auto b_objs = input.target->objects())
    report.merge(validate_functor(cc.g, Sweep{*b_objs}));
  NatTransform phi{compose_functors(input, cc.g), cc.f, cc.phi.component};
  Report nat = validate_nat_transform(phi, a_sweep);
  for (Finding& finding : nat.findings) finding.law = "cocone." + finding.law;
  report.merge(nat);
  return report;
}

Functor mediate_cocone(const ColaxColimit& col, const ColaxCocone& cc) {
  auto a_objs = col.input.source->objects();
  if (!a_objs) throw std::invalid_argument("mediate_cocone: A must be finite");
  Report valid = validate_cocone(col.input, cc, Sweep{*a_objs});
  if (!valid.ok()) throw Rejected("mediate_cocone: invalid cocone", valid);

  Functor f = cc.f;
  Functor g = cc.g;
  auto phi = cc.phi.component;
  ViewPtr d = f.target;
  return {col.carrier, d,
          [f, g](const Value& x) {
            if (is_tag(x, kInl, 2)) return f.ob(x.at(1));
            return g.ob(x.at(1));
          },
          [f, g, phi, d](const Value& m) {
            if (is_tag(m, kAmor, 2)) return f.mor(m.at(1));
            if (is_tag(m, kBmor, 2)) return g.mor(m.at(1));
            // mix(a, v) = bmor(v) ; beta_a evaluates to g(v) ; phi_a.
            return d->compose(g.mor(m.at(2)), phi(m.at(1)));
          }};
}

Report check_mediator(const ColaxColimit& col, const ColaxCocone& cc, const Functor& r,
                      const Sweep& a_sweep, const Sweep& b_sweep) {
  Report report;
  check_functors_equal(compose_functors(col.inj_a, r), cc.f, a_sweep, "mediate.inj_a", report);
  check_functors_equal(compose_functors(col.inj_b, r), cc.g, b_sweep, "mediate.inj_b", report);
  for (const Value& a : a_sweep.objects) {
    Value lhs = r.mor(col.beta.at(a));
    Value rhs = cc.phi.at(a);
    report.check(lhs == rhs, "mediate.beta", a.str() + ": " + lhs.str() + " vs " + rhs.str());
  }
  return report;
}

Report check_mediator_unique(const ColaxColimit& col, const ColaxCocone& cc, const Functor& r) {
  Report report;
  auto a_objs_opt = col.input.source->objects();
  auto b_objs_opt = col.input.target->objects();
  auto d_objs_opt = cc.f.target->objects();
  if (!a_objs_opt || !b_objs_opt || !d_objs_opt)
    throw std::invalid_argument("check_mediator_unique: all categories must be finite");
  const std::vector<Value>& a_objs = *a_objs_opt;
  const std::vector<Value>& b_objs = *b_objs_opt;
  ViewPtr d = cc.f.target;
  const CategoryView& carrier = *col.carrier;

  // The equations r.inj_a = f and r.inj_b = g pin r on objects and on the
  // A- and B-sides; only the images of mixed morphisms remain free. The
  // search enumerates every assignment of those and filters by the
  // remaining equation r.beta = phi plus functoriality.
  std::vector<Value> mixed;
  std::vector<std::vector<Value>> choices;
  for (const Value& a : a_objs)
    for (const Value& b : b_objs)
      for (const Value& m : carrier.hom(colimit_inr(b), colimit_inl(a))) {
        mixed.push_back(m);
        choices.push_back(d->hom(cc.g.ob(b), cc.f.ob(a)));
      }

  std::vector<Value> carrier_objs = *col.carrier->objects();
  std::vector<Value> carrier_mors =
      morphisms_between(carrier, carrier_objs, Sweep{carrier_objs, 1u << 20, 1u << 20}, nullptr);

  std::size_t survivors = 0;
  bool matches_r = true;
  for_each_product<Value>(choices, [&](const std::vector<Value>& picks) {
    std::map<Value, Value> mix_table;
    for (std::size_t i = 0; i < mixed.size(); ++i) mix_table.emplace(mixed[i], picks[i]);
    Functor f = cc.f;
    Functor g = cc.g;
    auto candidate_mor = [&](const Value& m) -> Value {
      if (is_tag(m, kAmor, 2)) return f.mor(m.at(1));
      if (is_tag(m, kBmor, 2)) return g.mor(m.at(1));
      return mix_table.at(m);
    };
    // r' . beta = phi.
    for (const Value& a : a_objs)
      if (candidate_mor(col.beta.at(a)) != cc.phi.at(a)) return true;
    // Functoriality on every composable pair of carrier morphisms.
    for (const Value& m : carrier_mors)
      for (const Value& n : carrier_mors) {
        if (carrier.target(m) != carrier.source(n)) continue;
        if (candidate_mor(carrier.compose(m, n)) != d->compose(candidate_mor(m), candidate_mor(n)))
          return true;
      }
    ++survivors;
    for (const Value& m : carrier_mors)
      if (candidate_mor(m) != r.mor(m)) matches_r = false;
    return true;
  });

  report.meta["mediator.candidates"] = std::to_string(survivors);
  report.check(survivors == 1, "mediate.unique",
               "functors satisfying the equations: " + std::to_string(survivors));
  report.check(matches_r, "mediate.unique.agrees", "surviving functor differs from the mediator");
  return report;
}

NatTransform mediate_2cell(const ColaxColimit& col, const ColaxCocone& cc, const ColaxCocone& cc2,
                           const NatTransform& rho, const NatTransform& sigma) {
  auto a_objs_opt = col.input.source->objects();
  if (!a_objs_opt) throw std::invalid_argument("mediate_2cell: A must be finite");
  ViewPtr d = cc.f.target;

  // Cocone-morphism compatibility: phi_a ; rho_a = sigma_{F a} ; phi'_a.
  Report compat;
  for (const Value& a : *a_objs_opt) {
    Value lhs = d->compose(cc.phi.at(a), rho.at(a));
    Value rhs = d->compose(sigma.at(col.input.ob(a)), cc2.phi.at(a));
    compat.check(lhs == rhs, "mediate2.compatibility",
                 a.str() + ": " + lhs.str() + " vs " + rhs.str());
  }
  if (!compat.ok()) throw Rejected("mediate_2cell: incompatible cocone morphism", compat);

  Functor r = mediate_cocone(col, cc);
  Functor r2 = mediate_cocone(col, cc2);
  auto rho_c = rho.component;
  auto sigma_c = sigma.component;
  return {r, r2, [rho_c, sigma_c](const Value& x) {
            if (is_tag(x, kInl, 2)) return rho_c(x.at(1));
            return sigma_c(x.at(1));
          }};
}

Report check_2cell_unique(const ColaxColimit& col, const Functor& r, const Functor& r2,
                          const NatTransform& rho, const NatTransform& sigma,
                          const NatTransform& tau) {
  Report report;
  auto a_objs_opt = col.input.source->objects();
  auto b_objs_opt = col.input.target->objects();
  if (!a_objs_opt || !b_objs_opt)
    throw std::invalid_argument("check_2cell_unique: A and B must be finite");

  std::size_t survivors = 0;
  bool matches = true;
  std::vector<Value> carrier_objs = *col.carrier->objects();
  for (const NatTransform& cand : enumerate_transforms(r, r2)) {
    bool whisker_ok = true;
    for (const Value& a : *a_objs_opt)
      if (cand.at(colimit_inl(a)) != rho.at(a)) whisker_ok = false;
    for (const Value& b : *b_objs_opt)
      if (cand.at(colimit_inr(b)) != sigma.at(b)) whisker_ok = false;
    if (!whisker_ok) continue;
    ++survivors;
    for (const Value& x : carrier_objs)
      if (cand.at(x) != tau.at(x)) matches = false;
  }
  report.check(survivors == 1, "mediate2.unique",
               "transformations satisfying the whiskering equations: " + std::to_string(survivors));
  report.check(matches, "mediate2.unique.agrees", "surviving 2-cell differs from the mediator");
  return report;
}

ColaxColimit cplus_colimit(ViewPtr base) { return build_colimit(monad_C().unit(base)); }

MonadPresentation cplus_monad() {
  MonadPresentation m;
  m.name = "Cplus";
  m.at = [](ViewPtr base) { return cplus_colimit(base).carrier; };
  m.unit = [](ViewPtr base) {
    ColaxColimit col = cplus_colimit(base);
    return col.inj_a;
  };
  m.mult = [](ViewPtr base) -> Functor {
    MonadPresentation c = monad_C();
    ColaxColimit col = cplus_colimit(base);
    ViewPtr cpx = col.carrier;
    ViewPtr cpcpx = cplus_colimit(cpx).carrier;
    Functor h = colimit_retraction(col);
    // z : C(C+X) -> C+X, the left-semi C-structure of the colimit.
    Functor z = compose_functors(compose_functors(c.map(h), c.mult(base)), col.inj_b);
    auto alpha = colimit_counit(col);
    return {cpcpx, cpx,
            [z](const Value& x) {
              if (is_tag(x, kInl, 2)) return x.at(1);
              return z.ob(x.at(1));
            },
            [z, alpha, cpx](const Value& m) {
              if (is_tag(m, kAmor, 2)) return m.at(1);
              if (is_tag(m, kBmor, 2)) return z.mor(m.at(1));
              // mix(q, v) = bmor(v) ; beta_q evaluates through the counit.
              return cpx->compose(z.mor(m.at(2)), alpha(m.at(1)));
            }};
  };
  m.map = [](const Functor& f) -> Functor {
    MonadPresentation c = monad_C();
    ViewPtr src = cplus_colimit(f.source).carrier;
    ViewPtr tgt = cplus_colimit(f.target).carrier;
    Functor cf = c.map(f);
    return {src, tgt,
            [f, cf](const Value& x) {
              if (is_tag(x, kInl, 2)) return colimit_inl(f.ob(x.at(1)));
              return colimit_inr(cf.ob(x.at(1)));
            },
            [f, cf](const Value& m) -> Value {
              if (is_tag(m, kAmor, 2)) return Value(Value::List{kAmor, f.mor(m.at(1))});
              if (is_tag(m, kBmor, 2)) return Value(Value::List{kBmor, cf.mor(m.at(1))});
              return colimit_mix(f.ob(m.at(1)), cf.mor(m.at(2)));
            }};
  };
  m.map2 = [m](const NatTransform& t) -> NatTransform {
    MonadPresentation c = monad_C();
    Functor tf = m.map(t.from);
    Functor tg = m.map(t.to);
    NatTransform ct = c.map2(t);
    auto comp = t.component;
    return {tf, tg, [comp, ct](const Value& x) -> Value {
              if (is_tag(x, kInl, 2)) return Value(Value::List{kAmor, comp(x.at(1))});
              return Value(Value::List{kBmor, ct.at(x.at(1))});
            }};
  };
  m.objects_upto = [](const std::vector<Value>& gens, int max_len) {
    std::vector<Value> out;
    for (const Value& g : gens) out.push_back(colimit_inl(g));
    for (const Value& s : sequences_upto(gens, max_len)) out.push_back(colimit_inr(s));
    return out;
  };
  m.measure = [](const Value& x) {
    if (is_tag(x, kInl, 2)) return 1;
    return static_cast<int>(x.at(1).size());
  };
  return m;
}

StrictAlgebra cplus_algebra_from_lsa(const LeftSemiAlgebra& a, const Sweep& carrier_sweep,
                                     int max_len) {
  Report precheck = check_left_semi_algebra(a, carrier_sweep, max_len);
  if (!precheck.ok())
    throw Rejected("cplus_algebra_from_lsa: input fails the left-semi laws", precheck);

  ViewPtr carrier = a.carrier;
  ViewPtr cpx = cplus_colimit(carrier).carrier;
  Functor z = a.structure;
  auto eps = a.counit;
  Functor structure{cpx, carrier,
                    [z](const Value& x) {
                      if (is_tag(x, kInl, 2)) return x.at(1);
                      return z.ob(x.at(1));
                    },
                    [z, eps, carrier](const Value& m) {
                      if (is_tag(m, kAmor, 2)) return m.at(1);
                      if (is_tag(m, kBmor, 2)) return z.mor(m.at(1));
                      return carrier->compose(z.mor(m.at(2)), eps(m.at(1)));
                    }};
  return {cplus_monad(), carrier, structure};
}

LeftSemiAlgebra lsa_from_cplus_algebra(const StrictAlgebra& alg) {
  MonadPresentation c = monad_C();
  ViewPtr carrier = alg.carrier;
  ViewPtr cx = free_view(carrier, Flavor::C);
  Functor x = alg.structure;
  Functor z{cx, carrier, [x](const Value& s) { return x.ob(colimit_inr(s)); },
            [x](const Value& m) { return x.mor(Value(Value::List{kBmor, m})); }};
  Functor eta = c.unit(carrier);
  return {c, carrier, z, [x, cx, eta](const Value& ob) {
            Value singleton = eta.ob(ob);
            return x.mor(colimit_mix(ob, cx->identity(singleton)));
          }};
}

}  // namespace lnlcat
