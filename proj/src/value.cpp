#include "lnlcat/value.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lnlcat {

std::int64_t Value::num() const {
  if (kind_ != Kind::Int) throw std::logic_error("Value: not an integer: " + str());
  return num_;
}

const std::string& Value::atom() const {
  if (kind_ != Kind::Atom) throw std::logic_error("Value: not an atom: " + str());
  return atom_;
}

const Value::List& Value::items() const {
  if (kind_ != Kind::List) throw std::logic_error("Value: not a list: " + str());
  return items_;
}

const Value& Value::at(std::size_t i) const {
  const List& xs = items();
  if (i >= xs.size()) throw std::logic_error("Value: index out of range in " + str());
  return xs[i];
}

bool Value::operator==(const Value& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Int: return num_ == o.num_;
    case Kind::Atom: return atom_ == o.atom_;
    case Kind::List: return items_ == o.items_;
  }
  return false;
}

bool Value::operator<(const Value& o) const {
  if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
  switch (kind_) {
    case Kind::Int: return num_ < o.num_;
    case Kind::Atom: return atom_ < o.atom_;
    case Kind::List: return items_ < o.items_;
  }
  return false;
}

std::string Value::str() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Int: out << num_; break;
    case Kind::Atom: out << '"' << atom_ << '"'; break;
    case Kind::List: {
      out << '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out << ',';
        out << items_[i].str();
      }
      out << ']';
      break;
    }
  }
  return out.str();
}

nlohmann::json Value::to_json() const {
  switch (kind_) {
    case Kind::Int: return num_;
    case Kind::Atom: return atom_;
    case Kind::List: {
      nlohmann::json arr = nlohmann::json::array();
      for (const Value& v : items_) arr.push_back(v.to_json());
      return arr;
    }
  }
  return nullptr;
}

Value Value::from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  if (j.is_string()) return Value(j.get<std::string>());
  if (j.is_array()) {
    List items;
    items.reserve(j.size());
    for (const auto& e : j) items.push_back(from_json(e));
    return Value(std::move(items));
  }
  throw std::invalid_argument("Value::from_json: expected string, integer or array, got " + j.dump());
}

}  // namespace lnlcat
