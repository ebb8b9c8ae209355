#ifndef LNLCAT_FINCAT_HPP
#define LNLCAT_FINCAT_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lnlcat/category.hpp"

namespace lnlcat {

/// A finite category given by explicit tables. Identities are implicit (one
/// per object, never stored in the morphism list); the composition table
/// covers exactly the composable pairs of non-identity morphisms. The
/// result of a composition may be an identity, written "id_<object>".
struct MorDecl {
  std::string name;
  std::string src;
  std::string tgt;
};

struct FinCat {
  std::vector<std::string> objects;
  std::vector<MorDecl> morphisms;
  // (first, then) -> composite, in diagram order.
  std::map<std::pair<std::string, std::string>, std::string> composition;

  bool has_object(const std::string& x) const;
  const MorDecl* find_morphism(const std::string& name) const;
  static std::string identity_name(const std::string& obj) { return "id_" + obj; }
  bool is_identity_name(const std::string& name, std::string* obj = nullptr) const;
  // Source/target of a morphism name, identities included.
  bool boundary(const std::string& name, std::string* src, std::string* tgt) const;
};

/// Checks the category laws: composition defined exactly on composable
/// pairs, boundaries of composites, and associativity over every composable
/// triple. Structural defects (dangling ids, reserved or duplicate names,
/// entries on non-composable pairs) are reported separately from law
/// violations.
Report validate_category(const FinCat& cat);

/// CategoryView over a validated FinCat. Objects are atoms (their names),
/// morphisms are atoms; the identity of "x" is the atom "id_x".
ViewPtr fincat_view(FinCat cat);

FinCat fincat_from_json(const nlohmann::json& j);
nlohmann::json fincat_to_json(const FinCat& cat);

/// Builds the explicit tables of a finite full subcategory of `view` on the
/// given objects (which must be closed under composition boundaries, as full
/// subcategories are). Objects and morphisms are named with `ob_name` /
/// `mor_name`; identity composites are rendered as identity names.
FinCat materialize_fincat(const CategoryView& view, const std::vector<Value>& objs,
                          const std::function<std::string(const Value&)>& ob_name,
                          const std::function<std::string(const Value&)>& mor_name);

/// Ready-made small categories used across tests and the CLI docs.
FinCat make_one();       // single object "•"
FinCat make_arrow();     // 0 -> 1
FinCat make_chain3();    // poset 0 <= 1 <= 2
FinCat make_parallel();  // two objects, parallel arrows u,v : 0 -> 1

}  // namespace lnlcat

#endif
