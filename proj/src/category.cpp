#include "lnlcat/category.hpp"

#include <map>

#include "lnlcat/enumerate.hpp"

namespace lnlcat {

Functor identity_functor(ViewPtr view) {
  return {view, view, [](const Value& x) { return x; }, [](const Value& m) { return m; }};
}

Functor compose_functors(const Functor& first, const Functor& then) {
  return {first.source, then.target,
          [first, then](const Value& x) { return then.ob(first.ob(x)); },
          [first, then](const Value& m) { return then.mor(first.mor(m)); }};
}

NatTransform identity_transform(const Functor& f) {
  Functor g = f;
  return {f, g, [f](const Value& x) { return f.target->identity(f.ob(x)); }};
}

NatTransform vertical_compose(const NatTransform& first, const NatTransform& then) {
  ViewPtr target = first.from.target;
  return {first.from, then.to, [first, then, target](const Value& x) {
            return target->compose(first.at(x), then.at(x));
          }};
}

std::vector<Value> CategoryView::hom_capped(const Value& src, const Value& tgt, std::size_t cap,
                                            bool* truncated) const {
  std::vector<Value> out = hom(src, tgt);
  if (out.size() > cap) {
    out.resize(cap);
    if (truncated) *truncated = true;
  }
  return out;
}

std::vector<Value> morphisms_between(const CategoryView& view, const std::vector<Value>& objs,
                                     const Sweep& sweep, bool* truncated) {
  std::vector<Value> out;
  for (const Value& x : objs)
    for (const Value& y : objs) {
      std::size_t room = sweep.morphism_cap - out.size();
      std::size_t cap = std::min(room, sweep.pair_hom_cap);
      for (Value& m : view.hom_capped(x, y, cap, truncated)) out.push_back(std::move(m));
      if (out.size() >= sweep.morphism_cap) {
        if (truncated) *truncated = true;
        return out;
      }
    }
  return out;
}

Report validate_functor(const Functor& f, const Sweep& sweep) {
  Report report;
  report.meta["sweep.objects"] = std::to_string(sweep.objects.size());
  const CategoryView& src = *f.source;
  const CategoryView& tgt = *f.target;

  for (const Value& x : sweep.objects) {
    if (!src.has_object(x)) {
      report.structural("functor.domain", x.str());
      continue;
    }
    Value fx = f.ob(x);
    if (!tgt.has_object(fx)) {
      report.structural("functor.object_outside_target", x.str() + " -> " + fx.str());
      continue;
    }
    report.check(f.mor(src.identity(x)) == tgt.identity(fx), "functor.identity", x.str());
  }
  if (!report.ok()) return report;

  std::vector<Value> mors = morphisms_between(src, sweep.objects, sweep, &report.truncated);
  for (const Value& m : mors) {
    Value fm = f.mor(m);
    if (tgt.source(fm) != f.ob(src.source(m)) || tgt.target(fm) != f.ob(src.target(m))) {
      report.law("functor.boundary", m.str() + " -> " + fm.str());
      continue;
    }
  }
  if (!report.ok()) return report;

  std::map<Value, std::vector<const Value*>> by_source;
  for (const Value& m : mors) by_source[src.source(m)].push_back(&m);
  std::size_t pairs = 0;
  for (const Value& m : mors) {
    auto it = by_source.find(src.target(m));
    if (it == by_source.end()) continue;
    for (const Value* n : it->second) {
      if (++pairs > sweep.compose_cap) {
        report.truncated = true;
        return report;
      }
      Value composed = f.mor(src.compose(m, *n));
      Value pointwise = tgt.compose(f.mor(m), f.mor(*n));
      if (composed != pointwise)
        report.law("functor.composition", m.str() + " ; " + n->str());
    }
  }
  return report;
}

Report validate_nat_transform(const NatTransform& t, const Sweep& sweep) {
  Report report;
  const CategoryView& src = *t.from.source;
  const CategoryView& tgt = *t.from.target;

  for (const Value& x : sweep.objects) {
    Value c = t.at(x);
    if (tgt.source(c) != t.from.ob(x) || tgt.target(c) != t.to.ob(x)) {
      report.law("nat.boundary", x.str() + " -> " + c.str());
    }
  }
  if (!report.ok()) return report;

  std::vector<Value> mors = morphisms_between(src, sweep.objects, sweep, &report.truncated);
  for (const Value& m : mors) {
    Value x = src.source(m), y = src.target(m);
    Value left = tgt.compose(t.from.mor(m), t.at(y));
    Value right = tgt.compose(t.at(x), t.to.mor(m));
    if (left != right) report.law("nat.square", m.str());
  }
  return report;
}

void check_functors_equal(const Functor& f, const Functor& g, const Sweep& sweep,
                          const std::string& law, Report& report) {
  const CategoryView& src = *f.source;
  for (const Value& x : sweep.objects) {
    Value fx = f.ob(x), gx = g.ob(x);
    if (fx != gx) report.law(law + ".ob", x.str() + ": " + fx.str() + " vs " + gx.str());
  }
  std::vector<Value> mors = morphisms_between(src, sweep.objects, sweep, &report.truncated);
  for (const Value& m : mors) {
    Value fm = f.mor(m), gm = g.mor(m);
    if (fm != gm) report.law(law + ".mor", m.str() + ": " + fm.str() + " vs " + gm.str());
  }
}

namespace {

Functor table_functor(ViewPtr a, ViewPtr b, std::map<Value, Value> obs, std::map<Value, Value> mors) {
  auto ob_table = std::make_shared<std::map<Value, Value>>(std::move(obs));
  auto mor_table = std::make_shared<std::map<Value, Value>>(std::move(mors));
  return {a, b,
          [ob_table](const Value& x) {
            auto it = ob_table->find(x);
            if (it == ob_table->end()) throw std::invalid_argument("functor table: unknown object " + x.str());
            return it->second;
          },
          [a, b, ob_table, mor_table](const Value& m) {
            if (a->is_identity(m)) return b->identity(ob_table->at(a->source(m)));
            auto it = mor_table->find(m);
            if (it == mor_table->end())
              throw std::invalid_argument("functor table: unknown morphism " + m.str());
            return it->second;
          }};
}

}  // namespace

std::vector<Functor> enumerate_functors(ViewPtr a, ViewPtr b) {
  auto a_objs_opt = a->objects();
  auto b_objs_opt = b->objects();
  if (!a_objs_opt || !b_objs_opt)
    throw std::invalid_argument("enumerate_functors: both categories must be finite");
  const std::vector<Value>& a_objs = *a_objs_opt;
  const std::vector<Value>& b_objs = *b_objs_opt;

  // Non-identity morphisms of the source, in a fixed order.
  std::vector<Value> gen;
  for (const Value& x : a_objs)
    for (const Value& y : a_objs)
      for (const Value& m : a->hom(x, y))
        if (!a->is_identity(m)) gen.push_back(m);

  std::vector<Functor> out;
  if (a_objs.empty()) {
    out.push_back({a, b, [](const Value& x) { return x; }, [](const Value& m) { return m; }});
    return out;
  }

  for_each_function(a_objs.size(), b_objs.size(), [&](const std::vector<std::size_t>& omap) {
    std::map<Value, Value> obs;
    for (std::size_t i = 0; i < a_objs.size(); ++i) obs[a_objs[i]] = b_objs[omap[i]];

    // Candidate images per generating morphism.
    std::vector<std::vector<Value>> choices(gen.size());
    for (std::size_t i = 0; i < gen.size(); ++i) {
      choices[i] = b->hom(obs.at(a->source(gen[i])), obs.at(a->target(gen[i])));
      if (choices[i].empty()) return true;  // no functor with this object map
    }
    for_each_product<Value>(choices, [&](const std::vector<Value>& picks) {
      std::map<Value, Value> mors;
      for (std::size_t i = 0; i < gen.size(); ++i) mors[gen[i]] = picks[i];
      Functor f = table_functor(a, b, obs, mors);
      // Composition preservation; identities hold by construction.
      for (const Value& m : gen)
        for (const Value& n : gen) {
          if (a->target(m) != a->source(n)) continue;
          if (f.mor(a->compose(m, n)) != b->compose(f.mor(m), f.mor(n))) return true;
        }
      out.push_back(std::move(f));
      return true;
    });
    return true;
  });
  return out;
}

std::vector<NatTransform> enumerate_transforms(const Functor& f, const Functor& g) {
  auto objs_opt = f.source->objects();
  if (!objs_opt) throw std::invalid_argument("enumerate_transforms: source must be finite");
  const std::vector<Value>& objs = *objs_opt;
  const CategoryView& tgt = *f.target;

  std::vector<std::vector<Value>> choices(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) {
    choices[i] = tgt.hom(f.ob(objs[i]), g.ob(objs[i]));
    if (choices[i].empty()) return {};
  }

  std::vector<Value> mors = morphisms_between(*f.source, objs, Sweep{objs, 1u << 20, 1u << 20, 1u << 20}, nullptr);
  std::vector<NatTransform> out;
  for_each_product<Value>(choices, [&](const std::vector<Value>& picks) {
    auto table = std::make_shared<std::map<Value, Value>>();
    for (std::size_t i = 0; i < objs.size(); ++i) (*table)[objs[i]] = picks[i];
    NatTransform t{f, g, [table](const Value& x) { return table->at(x); }};
    for (const Value& m : mors) {
      Value x = f.source->source(m), y = f.source->target(m);
      if (tgt.compose(f.mor(m), t.at(y)) != tgt.compose(t.at(x), g.mor(m))) return true;
    }
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

}  // namespace lnlcat
