#ifndef LNLCAT_VALUE_HPP
#define LNLCAT_VALUE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lnlcat {

/// Immutable value tree: the universal currency for objects and morphisms of
/// computed categories (sequences, tagged sequences, reindexing morphisms,
/// disjoint-union carriers). Equality and ordering are structural, so two
/// morphisms are "the same" exactly when their full descriptions coincide.
class Value {
 public:
  enum class Kind { Int, Atom, List };
  using List = std::vector<Value>;

  Value() : kind_(Kind::List) {}
  Value(std::int64_t n) : kind_(Kind::Int), num_(n) {}
  Value(int n) : kind_(Kind::Int), num_(n) {}
  Value(std::string s) : kind_(Kind::Atom), atom_(std::move(s)) {}
  Value(const char* s) : kind_(Kind::Atom), atom_(s) {}
  Value(List items) : kind_(Kind::List), items_(std::move(items)) {}

  static Value list(List items) { return Value(std::move(items)); }

  Kind kind() const { return kind_; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_list() const { return kind_ == Kind::List; }

  std::int64_t num() const;
  const std::string& atom() const;
  const List& items() const;
  std::size_t size() const { return items().size(); }
  const Value& at(std::size_t i) const;

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const;

  /// Compact JSON-style rendering, used in reports and CLI output.
  std::string str() const;

  nlohmann::json to_json() const;
  static Value from_json(const nlohmann::json& j);

 private:
  Kind kind_;
  std::int64_t num_ = 0;
  std::string atom_;
  List items_;
};

}  // namespace lnlcat

#endif
