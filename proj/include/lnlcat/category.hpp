#ifndef LNLCAT_CATEGORY_HPP
#define LNLCAT_CATEGORY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lnlcat/report.hpp"
#include "lnlcat/value.hpp"

namespace lnlcat {

/// Uniform interface over finite and lazily computed categories. Categories
/// built by the free constructions have infinitely many objects but finite,
/// enumerable hom-sets over a finite base; every law check therefore
/// quantifies over a caller-supplied finite set of objects.
///
/// Composition is written in diagram order throughout: compose(f, g) is
/// "first f, then g", defined when target(f) == source(g).
class CategoryView {
 public:
  virtual ~CategoryView() = default;

  virtual bool has_object(const Value& x) const = 0;
  virtual Value source(const Value& m) const = 0;
  virtual Value target(const Value& m) const = 0;
  virtual Value identity(const Value& x) const = 0;
  virtual std::vector<Value> hom(const Value& src, const Value& tgt) const = 0;
  virtual Value compose(const Value& f, const Value& g) const = 0;
  virtual std::string describe() const = 0;

  /// All objects, when the category is finite; nullopt otherwise.
  virtual std::optional<std::vector<Value>> objects() const { return std::nullopt; }

  /// hom(src, tgt) with at most `cap` elements; sets *truncated (without
  /// clearing it) when the enumeration was stopped early. Hom-sets of the
  /// computed categories can be large even at small lengths, so sweeps go
  /// through this entry point.
  virtual std::vector<Value> hom_capped(const Value& src, const Value& tgt, std::size_t cap,
                                        bool* truncated) const;

  bool is_identity(const Value& m) const { return m == identity(source(m)); }
};

using ViewPtr = std::shared_ptr<const CategoryView>;

/// A functor presented by its action on object and morphism values.
/// Table-backed for finite categories, closure-backed for computed ones.
struct Functor {
  ViewPtr source;
  ViewPtr target;
  std::function<Value(const Value&)> on_object;
  std::function<Value(const Value&)> on_morphism;

  Value ob(const Value& x) const { return on_object(x); }
  Value mor(const Value& m) const { return on_morphism(m); }
};

Functor identity_functor(ViewPtr view);
Functor compose_functors(const Functor& first, const Functor& then);

/// A natural transformation between parallel functors, presented by its
/// component assignment (object of the common source -> morphism of the
/// common target).
struct NatTransform {
  Functor from;
  Functor to;
  std::function<Value(const Value&)> component;

  Value at(const Value& x) const { return component(x); }
};

NatTransform identity_transform(const Functor& f);
NatTransform vertical_compose(const NatTransform& first, const NatTransform& then);

/// Law checks quantify over a finite generator set of objects; morphism
/// sweeps enumerate hom-sets between generators and cap both the per-pair
/// and total counts, flagging truncation in the report.
struct Sweep {
  std::vector<Value> objects;
  std::size_t pair_hom_cap = 2000;    // morphisms enumerated per (src, tgt)
  std::size_t morphism_cap = 20000;   // total morphisms in one sweep
  std::size_t compose_cap = 150000;   // composable pairs checked per law
};

/// All morphisms of `view` between the listed objects (identities included),
/// subject to the sweep's caps.
std::vector<Value> morphisms_between(const CategoryView& view, const std::vector<Value>& objs,
                                     const Sweep& sweep, bool* truncated);

Report validate_functor(const Functor& f, const Sweep& sweep);
Report validate_nat_transform(const NatTransform& t, const Sweep& sweep);

/// Compares two parallel functors on every object in the sweep and every
/// morphism between swept objects.
void check_functors_equal(const Functor& f, const Functor& g, const Sweep& sweep,
                          const std::string& law, Report& report);

/// Exhaustive enumeration of all functors / natural transformations between
/// finite categories. Used by the universality oracles.
std::vector<Functor> enumerate_functors(ViewPtr a, ViewPtr b);
std::vector<NatTransform> enumerate_transforms(const Functor& f, const Functor& g);

}  // namespace lnlcat

#endif
