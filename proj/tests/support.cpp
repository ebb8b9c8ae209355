#include "support.hpp"

#include <stdexcept>

namespace testcats {

using namespace lnlcat;

Value forced(const CategoryView& view, const Value& x, const Value& y) {
  std::vector<Value> hom = view.hom(x, y);
  if (hom.size() != 1)
    throw std::logic_error("forced: hom(" + x.str() + "," + y.str() + ") has size " +
                           std::to_string(hom.size()));
  return hom[0];
}

StrictAlgebra min_algebra() {
  ViewPtr carrier = chain3();
  ViewPtr cx = free_view(carrier, Flavor::C);
  auto min_ob = [](const Value& s) -> Value {
    int best = 2;
    for (const Value& e : s.items()) best = std::min(best, static_cast<int>(std::stoi(e.atom())));
    return Value(std::to_string(best));
  };
  Functor structure{cx, carrier, min_ob, [carrier, cx, min_ob](const Value& m) {
                      return forced(*carrier, min_ob(cx->source(m)), min_ob(cx->target(m)));
                    }};
  return {monad_C(), carrier, structure};
}

Functor chain_deflation() {
  ViewPtr carrier = chain3();
  auto f_ob = [](const Value& x) -> Value { return x.atom() == "2" ? Value("2") : Value("0"); };
  return {carrier, carrier, f_ob, [carrier, f_ob](const Value& m) {
            return forced(*carrier, f_ob(carrier->source(m)), f_ob(carrier->target(m)));
          }};
}

std::function<Value(const Value&)> chain_deflation_counit() {
  ViewPtr carrier = chain3();
  Functor f = chain_deflation();
  return [carrier, f](const Value& x) { return forced(*carrier, f.ob(x), x); };
}

}  // namespace testcats
