#ifndef LNLCAT_TESTS_SUPPORT_HPP
#define LNLCAT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "lnlcat/category.hpp"
#include "lnlcat/fincat.hpp"
#include "lnlcat/lnlmonad.hpp"
#include "lnlcat/seqmonads.hpp"

// Test-side oracles. These deliberately avoid the library's enumeration
// paths: reindex candidates are generated as base-n digit strings and
// filtered by first principles, so a bug in the library enumerators cannot
// hide in the expectations.
namespace oracle {

using lnlcat::Value;

// All functions [m] -> [n] as digit strings.
inline std::vector<std::vector<std::size_t>> functions(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  if (n == 0) return out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> f(m);
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      f[i] = c % n;
      c /= n;
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline bool is_bijection(const std::vector<std::size_t>& f, std::size_t n) {
  if (f.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : f) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

// The linearity condition, restated from the definition: linear source
// positions are hit exactly once and only from linear target positions.
inline bool admissible(const std::vector<bool>& src_lin, const std::vector<bool>& tgt_lin,
                       const std::vector<std::size_t>& f) {
  std::vector<int> hits(src_lin.size(), 0);
  for (std::size_t j = 0; j < f.size(); ++j)
    if (src_lin[f[j]]) {
      if (!tgt_lin[j]) return false;
      ++hits[f[j]];
    }
  for (std::size_t i = 0; i < src_lin.size(); ++i)
    if (src_lin[i] && hits[i] != 1) return false;
  return true;
}

// Morphism count between sequence objects over a base, counting reindexes
// (bijective / arbitrary / linearity-filtered) times hom-set products.
enum class Mode { S, C, Q };

inline std::size_t hom_count(const lnlcat::CategoryView& base, Mode mode, const Value& src,
                             const Value& tgt) {
  using lnlcat::entry_object;
  std::size_t n = src.size(), m = tgt.size();
  std::size_t count = 0;
  for (const auto& f : functions(m, n)) {
    if (mode == Mode::S && !is_bijection(f, n)) continue;
    if (mode == Mode::Q) {
      std::vector<bool> sl, tl;
      for (std::size_t i = 0; i < n; ++i) sl.push_back(lnlcat::is_linear_entry(src, i));
      for (std::size_t j = 0; j < m; ++j) tl.push_back(lnlcat::is_linear_entry(tgt, j));
      if (!admissible(sl, tl, f)) continue;
    }
    std::size_t prod = 1;
    for (std::size_t j = 0; j < m && prod; ++j)
      prod *= base.hom(entry_object(src, f[j]), entry_object(tgt, j)).size();
    count += prod;
  }
  return count;
}

}  // namespace oracle

namespace testcats {

using lnlcat::FinCat;
using lnlcat::Value;
using lnlcat::ViewPtr;

inline ViewPtr one() { return lnlcat::fincat_view(lnlcat::make_one()); }
inline ViewPtr arrow() { return lnlcat::fincat_view(lnlcat::make_arrow()); }
inline ViewPtr chain3() { return lnlcat::fincat_view(lnlcat::make_chain3()); }
inline ViewPtr parallel() { return lnlcat::fincat_view(lnlcat::make_parallel()); }

inline Value seq(std::initializer_list<const char*> entries) {
  Value::List items;
  for (const char* e : entries) items.push_back(Value(e));
  return Value(std::move(items));
}

// Tagged sequence from pairs like {"•", true} (true = linear).
inline Value tagged(std::initializer_list<std::pair<const char*, bool>> entries) {
  Value::List items;
  for (const auto& [name, lin] : entries)
    items.push_back(lnlcat::tagged_entry(Value(name), lin ? lnlcat::kLin : lnlcat::kNonLin));
  return Value(std::move(items));
}

// The "min" strict C-algebra on the chain 0 <= 1 <= 2 (empty meet = top).
lnlcat::StrictAlgebra min_algebra();

// The deflation of the chain: 0,1 |-> 0, 2 |-> 2, with its counit.
lnlcat::Functor chain_deflation();
std::function<Value(const Value&)> chain_deflation_counit();

// The unique morphism x -> y in a thin category.
Value forced(const lnlcat::CategoryView& view, const Value& x, const Value& y);

}  // namespace testcats

#endif
