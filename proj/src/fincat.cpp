#include "lnlcat/fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lnlcat {

bool FinCat::has_object(const std::string& x) const {
  return std::find(objects.begin(), objects.end(), x) != objects.end();
}

const MorDecl* FinCat::find_morphism(const std::string& name) const {
  for (const MorDecl& m : morphisms)
    if (m.name == name) return &m;
  return nullptr;
}

bool FinCat::is_identity_name(const std::string& name, std::string* obj) const {
  if (name.rfind("id_", 0) != 0) return false;
  std::string candidate = name.substr(3);
  if (!has_object(candidate)) return false;
  if (obj) *obj = candidate;
  return true;
}

bool FinCat::boundary(const std::string& name, std::string* src, std::string* tgt) const {
  std::string obj;
  if (is_identity_name(name, &obj)) {
    if (src) *src = obj;
    if (tgt) *tgt = obj;
    return true;
  }
  if (const MorDecl* m = find_morphism(name)) {
    if (src) *src = m->src;
    if (tgt) *tgt = m->tgt;
    return true;
  }
  return false;
}

namespace {

std::string pair_str(const std::string& a, const std::string& b) { return a + ";" + b; }

// Total composition on a validated FinCat, identities resolved implicitly.
std::string compose_names(const FinCat& cat, const std::string& f, const std::string& g) {
  if (cat.is_identity_name(f)) return g;
  if (cat.is_identity_name(g)) return f;
  auto it = cat.composition.find({f, g});
  if (it == cat.composition.end())
    throw std::logic_error("FinCat: missing composition entry for " + pair_str(f, g));
  return it->second;
}

}  // namespace

Report validate_category(const FinCat& cat) {
  Report report;

  std::set<std::string> seen_objects;
  for (const std::string& x : cat.objects) {
    if (!seen_objects.insert(x).second) report.structural("fincat.structural.duplicate_object", x);
  }

  std::set<std::string> seen_names;
  for (const MorDecl& m : cat.morphisms) {
    if (m.name.rfind("id_", 0) == 0)
      report.structural("fincat.structural.reserved_name", m.name);
    if (!seen_names.insert(m.name).second)
      report.structural("fincat.structural.duplicate_morphism", m.name);
    if (!cat.has_object(m.src)) report.structural("fincat.structural.dangling_object", m.name + ": src " + m.src);
    if (!cat.has_object(m.tgt)) report.structural("fincat.structural.dangling_object", m.name + ": tgt " + m.tgt);
  }
  if (report.has_structural()) return report;  // boundaries unusable past this point

  // Composition entries: defined exactly on composable pairs of non-identity
  // morphisms, with boundary-correct results.
  for (const auto& [key, result] : cat.composition) {
    const auto& [f, g] = key;
    const MorDecl* mf = cat.find_morphism(f);
    const MorDecl* mg = cat.find_morphism(g);
    if (!mf || !mg) {
      report.structural("fincat.structural.dangling_morphism", pair_str(f, g));
      continue;
    }
    if (mf->tgt != mg->src) {
      report.structural("fincat.structural.non_composable_pair",
                        pair_str(f, g) + " (" + mf->tgt + " vs " + mg->src + ")");
      continue;
    }
    std::string rs, rt;
    if (!cat.boundary(result, &rs, &rt)) {
      report.structural("fincat.structural.dangling_morphism", pair_str(f, g) + " = " + result);
      continue;
    }
    if (rs != mf->src || rt != mg->tgt)
      report.structural("fincat.structural.composite_boundary",
                        pair_str(f, g) + " = " + result + " : " + rs + "->" + rt);
  }
  for (const MorDecl& f : cat.morphisms)
    for (const MorDecl& g : cat.morphisms)
      if (f.tgt == g.src && !cat.composition.count({f.name, g.name}))
        report.structural("fincat.structural.missing_composite", pair_str(f.name, g.name));
  if (report.has_structural()) return report;

  // Associativity over every composable triple of non-identity morphisms;
  // triples involving identities hold by construction.
  for (const MorDecl& f : cat.morphisms)
    for (const MorDecl& g : cat.morphisms) {
      if (f.tgt != g.src) continue;
      for (const MorDecl& h : cat.morphisms) {
        if (g.tgt != h.src) continue;
        std::string left = compose_names(cat, compose_names(cat, f.name, g.name), h.name);
        std::string right = compose_names(cat, f.name, compose_names(cat, g.name, h.name));
        report.check(left == right, "fincat.assoc",
                     "(" + f.name + ";" + g.name + ");" + h.name + " = " + left + " vs " + right);
      }
    }
  return report;
}

namespace {

class FinCatView final : public CategoryView {
 public:
  explicit FinCatView(FinCat cat) : cat_(std::move(cat)) {}

  bool has_object(const Value& x) const override {
    return x.is_atom() && cat_.has_object(x.atom());
  }

  Value source(const Value& m) const override {
    std::string s, t;
    require_boundary(m, &s, &t);
    return Value(s);
  }

  Value target(const Value& m) const override {
    std::string s, t;
    require_boundary(m, &s, &t);
    return Value(t);
  }

  Value identity(const Value& x) const override {
    if (!has_object(x)) throw std::invalid_argument("FinCat: unknown object " + x.str());
    return Value(FinCat::identity_name(x.atom()));
  }

  std::vector<Value> hom(const Value& src, const Value& tgt) const override {
    std::vector<Value> out;
    if (!has_object(src) || !has_object(tgt)) return out;
    if (src == tgt) out.push_back(identity(src));
    for (const MorDecl& m : cat_.morphisms)
      if (m.src == src.atom() && m.tgt == tgt.atom()) out.push_back(Value(m.name));
    return out;
  }

  Value compose(const Value& f, const Value& g) const override {
    if (target(f) != source(g))
      throw std::invalid_argument("FinCat: non-composable " + f.str() + " ; " + g.str());
    return Value(compose_names(cat_, f.atom(), g.atom()));
  }

  std::string describe() const override {
    return "fincat(" + std::to_string(cat_.objects.size()) + " objects)";
  }

  std::optional<std::vector<Value>> objects() const override {
    std::vector<Value> out;
    out.reserve(cat_.objects.size());
    for (const std::string& x : cat_.objects) out.push_back(Value(x));
    return out;
  }

 private:
  void require_boundary(const Value& m, std::string* s, std::string* t) const {
    if (!m.is_atom() || !cat_.boundary(m.atom(), s, t))
      throw std::invalid_argument("FinCat: unknown morphism " + m.str());
  }

  FinCat cat_;
};

}  // namespace

ViewPtr fincat_view(FinCat cat) { return std::make_shared<FinCatView>(std::move(cat)); }

FinCat fincat_from_json(const nlohmann::json& j) {
  FinCat cat;
  if (!j.is_object()) throw std::invalid_argument("fincat: expected a JSON object");
  for (const auto& o : j.at("objects")) cat.objects.push_back(o.get<std::string>());
  if (j.contains("morphisms"))
    for (const auto& m : j.at("morphisms"))
      cat.morphisms.push_back({m.at("name").get<std::string>(), m.at("src").get<std::string>(),
                               m.at("tgt").get<std::string>()});
  if (j.contains("composition"))
    for (const auto& c : j.at("composition")) {
      auto key = std::make_pair(c.at("first").get<std::string>(), c.at("then").get<std::string>());
      if (cat.composition.count(key))
        throw std::invalid_argument("fincat: duplicate composition entry " + key.first + ";" + key.second);
      cat.composition[key] = c.at("equals").get<std::string>();
    }
  return cat;
}

nlohmann::json fincat_to_json(const FinCat& cat) {
  nlohmann::json j;
  j["objects"] = cat.objects;
  j["morphisms"] = nlohmann::json::array();
  for (const MorDecl& m : cat.morphisms)
    j["morphisms"].push_back({{"name", m.name}, {"src", m.src}, {"tgt", m.tgt}});
  j["composition"] = nlohmann::json::array();
  for (const auto& [key, result] : cat.composition)
    j["composition"].push_back({{"first", key.first}, {"then", key.second}, {"equals", result}});
  return j;
}

FinCat materialize_fincat(const CategoryView& view, const std::vector<Value>& objs,
                          const std::function<std::string(const Value&)>& ob_name,
                          const std::function<std::string(const Value&)>& mor_name) {
  FinCat cat;
  std::map<Value, std::string> onames;
  for (const Value& x : objs) {
    std::string n = ob_name(x);
    if (!onames.emplace(x, n).second) continue;
    if (cat.has_object(n)) throw std::invalid_argument("materialize: object name collision " + n);
    cat.objects.push_back(n);
  }
  std::map<Value, std::string> mnames;
  auto name_of = [&](const Value& m) -> std::string {
    if (view.is_identity(m)) return FinCat::identity_name(onames.at(view.source(m)));
    return mnames.at(m);
  };
  for (const Value& x : objs)
    for (const Value& y : objs)
      for (const Value& m : view.hom(x, y)) {
        if (view.is_identity(m)) continue;
        std::string n = mor_name(m);
        if (!mnames.emplace(m, n).second) continue;
        if (cat.find_morphism(n) || cat.is_identity_name(n))
          throw std::invalid_argument("materialize: morphism name collision " + n);
        cat.morphisms.push_back({n, onames.at(x), onames.at(y)});
      }
  for (const auto& [f, fname] : mnames)
    for (const auto& [g, gname] : mnames) {
      if (view.target(f) != view.source(g)) continue;
      Value fg = view.compose(f, g);
      cat.composition[{fname, gname}] = name_of(fg);
    }
  return cat;
}

FinCat make_one() {
  FinCat cat;
  cat.objects = {"•"};
  return cat;
}

FinCat make_arrow() {
  FinCat cat;
  cat.objects = {"0", "1"};
  cat.morphisms = {{"u", "0", "1"}};
  return cat;
}

FinCat make_chain3() {
  FinCat cat;
  cat.objects = {"0", "1", "2"};
  cat.morphisms = {{"le01", "0", "1"}, {"le12", "1", "2"}, {"le02", "0", "2"}};
  cat.composition[{"le01", "le12"}] = "le02";
  return cat;
}

FinCat make_parallel() {
  FinCat cat;
  cat.objects = {"0", "1"};
  cat.morphisms = {{"u", "0", "1"}, {"v", "0", "1"}};
  return cat;
}

}  // namespace lnlcat
