#include "lnlcat/seqmonads.hpp"
#include <limits>

#include <sstream>

#include "lnlcat/enumerate.hpp"
#include "lnlcat/lnlmonad.hpp"
#include "seq_detail.hpp"

namespace lnlcat {

Value pack_mor(const SeqMor& m) {
  Value::List reindex;
  reindex.reserve(m.reindex.size());
  for (std::size_t r : m.reindex) reindex.push_back(Value(static_cast<std::int64_t>(r)));
  return Value(Value::List{m.src, m.tgt, Value(std::move(reindex)), Value(Value::List(m.comps))});
}

SeqMor unpack_mor(const Value& v) {
  if (!v.is_list() || v.size() != 4)
    throw std::invalid_argument("sequence morphism: bad shape " + v.str());
  SeqMor m;
  m.src = v.at(0);
  m.tgt = v.at(1);
  for (const Value& r : v.at(2).items()) m.reindex.push_back(static_cast<std::size_t>(r.num()));
  m.comps = v.at(3).items();
  if (m.reindex.size() != m.tgt.size() || m.comps.size() != m.tgt.size())
    throw std::invalid_argument("sequence morphism: arity mismatch " + v.str());
  return m;
}

const Value& entry_object(const Value& seq_object, std::size_t i) {
  const Value& e = seq_object.at(i);
  if (e.is_list() && e.size() == 2 && e.at(1).is_atom() &&
      (e.at(1) == kLin || e.at(1) == kNonLin))
    return e.at(0);
  return e;
}

namespace detail {

namespace {

bool entry_ok(ViewPtr base, SeqMode mode, const Value& e) {
  if (mode == SeqMode::Q) {
    return e.is_list() && e.size() == 2 && (e.at(1) == kLin || e.at(1) == kNonLin) &&
           base->has_object(e.at(0));
  }
  return base->has_object(e);
}

class SeqView final : public CategoryView {
 public:
  SeqView(ViewPtr base, SeqMode mode) : base_(std::move(base)), mode_(mode) {}

  bool has_object(const Value& x) const override {
    if (!x.is_list()) return false;
    for (const Value& e : x.items())
      if (!entry_ok(base_, mode_, e)) return false;
    return true;
  }

  Value source(const Value& m) const override { return m.at(0); }
  Value target(const Value& m) const override { return m.at(1); }

  Value identity(const Value& x) const override {
    SeqMor m;
    m.src = x;
    m.tgt = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      m.reindex.push_back(i);
      m.comps.push_back(base_->identity(entry_object(x, i)));
    }
    return pack_mor(m);
  }

  std::vector<Value> hom(const Value& src, const Value& tgt) const override {
    bool ignored = false;
    return hom_capped(src, tgt, std::numeric_limits<std::size_t>::max(), &ignored);
  }

  std::vector<Value> hom_capped(const Value& src, const Value& tgt, std::size_t cap,
                                bool* truncated) const override {
    std::vector<Value> out;
    if (!has_object(src) || !has_object(tgt)) return out;
    const std::size_t n = src.size(), m = tgt.size();

    std::vector<std::vector<std::size_t>> reindexes;
    switch (mode_) {
      case SeqMode::S:
        if (n != m) return out;
        reindexes = all_bijections(n);
        break;
      case SeqMode::C:
        for_each_function(m, n, [&](const std::vector<std::size_t>& r) {
          reindexes.push_back(r);
          return true;
        });
        break;
      case SeqMode::Q:
        for_each_function(m, n, [&](const std::vector<std::size_t>& r) {
          if (linearity_condition(src, tgt, r)) reindexes.push_back(r);
          return true;
        });
        break;
    }

    for (const std::vector<std::size_t>& r : reindexes) {
      // Inner hom-sets are capped too: a prefix of each list suffices to
      // produce `cap` products, and the truncation is surfaced either way.
      std::vector<std::vector<Value>> choices(m);
      for (std::size_t j = 0; j < m; ++j)
        choices[j] =
            base_->hom_capped(entry_object(src, r[j]), entry_object(tgt, j), cap, truncated);
      for_each_product<Value>(choices, [&](const std::vector<Value>& comps) {
        if (out.size() >= cap) {
          if (truncated) *truncated = true;
          return false;
        }
        out.push_back(pack_mor({src, tgt, r, comps}));
        return true;
      });
      if (out.size() >= cap) break;
    }
    return out;
  }

  Value compose(const Value& f, const Value& g) const override {
    SeqMor mf = unpack_mor(f);
    SeqMor mg = unpack_mor(g);
    if (mf.tgt != mg.src)
      throw std::invalid_argument("sequence morphisms not composable: " + f.str() + " ; " + g.str());
    SeqMor r;
    r.src = mf.src;
    r.tgt = mg.tgt;
    for (std::size_t k = 0; k < mg.reindex.size(); ++k) {
      r.reindex.push_back(mf.reindex[mg.reindex[k]]);
      r.comps.push_back(base_->compose(mf.comps[mg.reindex[k]], mg.comps[k]));
    }
    // Admissibility is preserved by composition; re-check all the same.
    if (mode_ == SeqMode::Q && !linearity_condition(r.src, r.tgt, r.reindex))
      throw std::logic_error("composition broke the linearity condition: " + f.str() + " ; " + g.str());
    return pack_mor(r);
  }

  std::string describe() const override {
    const char* name = mode_ == SeqMode::S ? "S" : mode_ == SeqMode::C ? "C" : "Q";
    return std::string(name) + "(" + base_->describe() + ")";
  }

  ViewPtr base() const { return base_; }

 private:
  ViewPtr base_;
  SeqMode mode_;
};

std::size_t block_length(SeqMode mode, const Value& outer_entry) {
  return mode == SeqMode::Q ? outer_entry.at(0).size() : outer_entry.size();
}

}  // namespace

ViewPtr make_seq_view(ViewPtr base, SeqMode mode) {
  return std::make_shared<SeqView>(std::move(base), mode);
}

Value unit_object(SeqMode mode, const Value& base_object) {
  if (mode == SeqMode::Q) return Value(Value::List{tagged_entry(base_object, kLin)});
  return Value(Value::List{base_object});
}

Value flatten_object(SeqMode mode, const Value& outer) {
  Value::List flat;
  for (const Value& block : outer.items()) {
    if (mode == SeqMode::Q) {
      const Value& inner = block.at(0);
      const bool outer_lin = block.at(1) == kLin;
      for (const Value& e : inner.items()) {
        bool lin = outer_lin && e.at(1) == kLin;
        flat.push_back(tagged_entry(e.at(0), lin ? kLin : kNonLin));
      }
    } else {
      for (const Value& e : block.items()) flat.push_back(e);
    }
  }
  return Value(std::move(flat));
}

Value flatten_morphism(SeqMode mode, const Value& outer_mor) {
  SeqMor outer = unpack_mor(outer_mor);
  std::vector<std::size_t> src_off(outer.src.size() + 1, 0);
  for (std::size_t i = 0; i < outer.src.size(); ++i)
    src_off[i + 1] = src_off[i] + block_length(mode, outer.src.at(i));

  SeqMor flat;
  flat.src = flatten_object(mode, outer.src);
  flat.tgt = flatten_object(mode, outer.tgt);
  for (std::size_t j = 0; j < outer.tgt.size(); ++j) {
    SeqMor inner = unpack_mor(outer.comps[j]);
    for (std::size_t k = 0; k < inner.reindex.size(); ++k) {
      flat.reindex.push_back(src_off[outer.reindex[j]] + inner.reindex[k]);
      flat.comps.push_back(inner.comps[k]);
    }
  }
  if (mode == SeqMode::Q && !linearity_condition(flat.src, flat.tgt, flat.reindex))
    throw std::logic_error("flattening broke the linearity condition: " + outer_mor.str());
  return pack_mor(flat);
}

Functor seq_unit(ViewPtr base, SeqMode mode) {
  ViewPtr tx = view_of_mode(base, mode);
  return {base, tx,
          [mode](const Value& a) { return unit_object(mode, a); },
          [base, mode](const Value& m) {
            return pack_mor({unit_object(mode, base->source(m)), unit_object(mode, base->target(m)),
                             {0}, {m}});
          }};
}

Functor seq_mult(ViewPtr base, SeqMode mode) {
  ViewPtr tx = view_of_mode(base, mode);
  ViewPtr ttx = view_of_mode(tx, mode);
  return {ttx, tx,
          [mode](const Value& x) { return flatten_object(mode, x); },
          [mode](const Value& m) { return flatten_morphism(mode, m); }};
}

Functor seq_map(const Functor& f, SeqMode mode) {
  ViewPtr ta = view_of_mode(f.source, mode);
  ViewPtr tb = view_of_mode(f.target, mode);
  auto on_object = [f, mode](const Value& x) {
    Value::List out;
    for (const Value& e : x.items()) {
      if (mode == SeqMode::Q)
        out.push_back(tagged_entry(f.ob(e.at(0)), e.at(1)));
      else
        out.push_back(f.ob(e));
    }
    return Value(std::move(out));
  };
  return {ta, tb, on_object, [f, on_object](const Value& m) {
            SeqMor sm = unpack_mor(m);
            std::vector<Value> comps;
            comps.reserve(sm.comps.size());
            for (const Value& c : sm.comps) comps.push_back(f.mor(c));
            return pack_mor({on_object(sm.src), on_object(sm.tgt), sm.reindex, comps});
          }};
}

NatTransform seq_map2(const NatTransform& t, SeqMode mode) {
  Functor tf = seq_map(t.from, mode);
  Functor tg = seq_map(t.to, mode);
  NatTransform out{tf, tg, nullptr};
  out.component = [t, tf, tg](const Value& x) {
    SeqMor m;
    m.src = tf.ob(x);
    m.tgt = tg.ob(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      m.reindex.push_back(i);
      m.comps.push_back(t.at(entry_object(x, i)));
    }
    return pack_mor(m);
  };
  return out;
}

std::vector<Value> seq_objects_upto(SeqMode mode, const std::vector<Value>& gens, int max_len) {
  if (mode != SeqMode::Q) return sequences_upto(gens, max_len);
  std::vector<Value> alphabet;
  for (const Value& g : gens) {
    alphabet.push_back(tagged_entry(g, kLin));
    alphabet.push_back(tagged_entry(g, kNonLin));
  }
  return sequences_upto(alphabet, max_len);
}

MonadPresentation make_monad(SeqMode mode, const std::string& name) {
  MonadPresentation m;
  m.name = name;
  m.at = [mode](ViewPtr base) { return view_of_mode(base, mode); };
  m.unit = [mode](ViewPtr base) { return seq_unit(base, mode); };
  m.mult = [mode](ViewPtr base) { return seq_mult(base, mode); };
  m.map = [mode](const Functor& f) { return seq_map(f, mode); };
  m.map2 = [mode](const NatTransform& t) { return seq_map2(t, mode); };
  m.objects_upto = [mode](const std::vector<Value>& gens, int max_len) {
    return seq_objects_upto(mode, gens, max_len);
  };
  m.measure = [](const Value& x) { return static_cast<int>(x.size()); };
  return m;
}

}  // namespace detail

ViewPtr free_view(ViewPtr base, Flavor flavor) {
  return detail::make_seq_view(std::move(base),
                               flavor == Flavor::S ? detail::SeqMode::S : detail::SeqMode::C);
}

MonadPresentation monad_S() { return detail::make_monad(detail::SeqMode::S, "S"); }
MonadPresentation monad_C() { return detail::make_monad(detail::SeqMode::C, "C"); }

std::vector<Value> bounded_objects(const MonadPresentation& monad, std::vector<Value> gens,
                                   int max_len, const Functor& flatten, bool* truncated,
                                   std::size_t generation_limit) {
  // Geometric estimate of the raw enumeration size before the flatten
  // filter; trim generators from the end until it fits.
  auto raw_size = [&](std::size_t n) {
    std::size_t total = 1, level = 1;
    for (int len = 1; len <= max_len; ++len) {
      if (n != 0 && level > generation_limit / n) return generation_limit + 1;
      level *= n;
      if (total > generation_limit - level) return generation_limit + 1;
      total += level;
    }
    return total;
  };
  // The Q enumerator doubles every generator with a tag choice.
  std::size_t per_gen = monad.name == "Q" ? 2 : 1;
  while (!gens.empty() && raw_size(gens.size() * per_gen) > generation_limit) {
    gens.pop_back();
    if (truncated) *truncated = true;
  }
  std::vector<Value> out;
  for (Value& x : monad.objects_upto(gens, max_len))
    if (monad.measure(flatten.ob(x)) <= max_len) out.push_back(std::move(x));
  return out;
}

Report check_monad_laws(const MonadPresentation& monad, ViewPtr base, int max_len, std::size_t cap) {
  Report report;
  report.meta["monad"] = monad.name;
  report.meta["max_len"] = std::to_string(max_len);

  auto base_objs_opt = base->objects();
  if (!base_objs_opt) throw std::invalid_argument("check_monad_laws: base must be finite");
  const std::vector<Value> base_objs = *base_objs_opt;

  ViewPtr tx = monad.at(base);
  ViewPtr ttx = monad.at(tx);

  std::vector<Value> t1 = monad.objects_upto(base_objs, max_len);
  Functor mu = monad.mult(base);
  std::vector<Value> t2 = bounded_objects(monad, t1, max_len, mu, &report.truncated);

  Functor eta = monad.unit(base);
  report.merge(validate_functor(eta, Sweep{base_objs, 2000, cap}));
  report.merge(validate_functor(mu, Sweep{t2, 2000, cap}));

  // Unit laws on objects and morphisms of the bounded T-sweep.
  Functor eta_t = monad.unit(tx);
  Functor t_eta = monad.map(eta);
  Functor unit_right = compose_functors(eta_t, mu);  // mu . eta_T
  Functor unit_left = compose_functors(t_eta, mu);   // mu . T(eta)
  check_functors_equal(unit_right, identity_functor(tx), Sweep{t1, 2000, cap}, "monad.unit.eta_t", report);
  check_functors_equal(unit_left, identity_functor(tx), Sweep{t1, 2000, cap}, "monad.unit.t_eta", report);

  // Associativity: both flattening orders agree on the bounded T^3 sweep.
  Functor mu_t = monad.mult(tx);
  Functor t_mu = monad.map(mu);
  Functor outer_first = compose_functors(mu_t, mu);
  Functor inner_first = compose_functors(t_mu, mu);
  std::vector<Value> t3 = bounded_objects(monad, t2, max_len, outer_first, &report.truncated);
  check_functors_equal(outer_first, inner_first, Sweep{t3, 2000, cap}, "monad.assoc", report);

  // Naturality of eta and mu against every endofunctor of the base.
  for (const Functor& f : enumerate_functors(base, base)) {
    Functor tf = monad.map(f);
    check_functors_equal(compose_functors(f, eta), compose_functors(eta, tf), Sweep{base_objs, 2000, cap},
                         "monad.eta.natural", report);
    Functor ttf = monad.map(tf);
    check_functors_equal(compose_functors(ttf, mu), compose_functors(mu, tf), Sweep{t2, 2000, cap},
                         "monad.mu.natural", report);
  }
  return report;
}

MonadMap lambda_map() {
  MonadMap mm;
  mm.source = monad_S();
  mm.target = monad_C();
  mm.at = [](ViewPtr base) -> Functor {
    ViewPtr sx = detail::view_of_mode(base, detail::SeqMode::S);
    ViewPtr cx = detail::view_of_mode(base, detail::SeqMode::C);
    // Identity on sequences; a bijective reindex is in particular a function.
    return {sx, cx, [](const Value& x) { return x; }, [](const Value& m) { return m; }};
  };
  return mm;
}

Report check_monad_map(const MonadMap& mm, ViewPtr base, int max_len, std::size_t cap) {
  Report report;
  auto base_objs_opt = base->objects();
  if (!base_objs_opt) throw std::invalid_argument("check_monad_map: base must be finite");
  const std::vector<Value> base_objs = *base_objs_opt;

  ViewPtr src_t = mm.source.at(base);
  Functor lam = mm.at(base);
  std::vector<Value> t1 = mm.source.objects_upto(base_objs, max_len);
  report.merge(validate_functor(lam, Sweep{t1, 2000, cap}));

  check_functors_equal(compose_functors(mm.source.unit(base), lam), mm.target.unit(base),
                       Sweep{base_objs, 2000, cap}, "monadmap.unit", report);

  Functor mu_s = mm.source.mult(base);
  std::vector<Value> t2 = bounded_objects(mm.source, t1, max_len, mu_s, &report.truncated);

  // lambda . mu_S = mu_C . (S lambda ; lambda_{C X}) on the T'^2 sweep.
  Functor lamlam = compose_functors(mm.source.map(lam), mm.at(mm.target.at(base)));
  Functor lhs = compose_functors(mu_s, lam);
  Functor rhs = compose_functors(lamlam, mm.target.mult(base));
  check_functors_equal(lhs, rhs, Sweep{t2, 2000, cap}, "monadmap.mult", report);
  return report;
}

Report check_strict_algebra(const StrictAlgebra& alg, const Sweep& carrier_sweep, int max_len) {
  Report report;
  report.meta["monad"] = alg.monad.name;
  std::vector<Value> t1 = alg.monad.objects_upto(carrier_sweep.objects, max_len);
  Sweep t1_sweep = carrier_sweep;
  t1_sweep.objects = t1;
  report.merge(validate_functor(alg.structure, t1_sweep));

  check_functors_equal(compose_functors(alg.monad.unit(alg.carrier), alg.structure),
                       identity_functor(alg.carrier), carrier_sweep, "algebra.unit", report);

  Functor mu = alg.monad.mult(alg.carrier);
  Sweep t2_sweep = carrier_sweep;
  t2_sweep.objects = bounded_objects(alg.monad, t1, max_len, mu, &report.truncated);
  check_functors_equal(compose_functors(mu, alg.structure),
                       compose_functors(alg.monad.map(alg.structure), alg.structure),
                       t2_sweep, "algebra.assoc", report);
  return report;
}

StrictAlgebra restrict_scalars(const MonadMap& mm, const StrictAlgebra& alg,
                               const Sweep& carrier_sweep, int max_len) {
  Report precheck = check_strict_algebra(alg, carrier_sweep, max_len);
  if (!precheck.ok()) throw Rejected("restrict_scalars: input algebra fails its laws", precheck);
  return {mm.source, alg.carrier, compose_functors(mm.at(alg.carrier), alg.structure)};
}

}  // namespace lnlcat
