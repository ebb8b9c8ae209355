#include "lnlcat/enumerate.hpp"

namespace lnlcat {

void for_each_function(std::size_t n_slots, std::size_t n_values,
                       const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (n_slots == 0) {
    fn({});
    return;
  }
  if (n_values == 0) return;
  std::vector<std::size_t> f(n_slots, 0);
  while (true) {
    if (!fn(f)) return;
    std::size_t pos = n_slots;
    while (pos > 0) {
      --pos;
      if (++f[pos] < n_values) break;
      f[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<std::vector<std::size_t>> all_bijections(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Value> sequences_upto(const std::vector<Value>& alphabet, int max_len) {
  std::vector<Value> out;
  out.push_back(Value(Value::List{}));
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const Value& a : alphabet) {
        Value::List items = out[i].items();
        items.push_back(a);
        out.push_back(Value(std::move(items)));
      }
    level_begin = level_end;
  }
  return out;
}

int leaf_count(const Value& v) {
  if (!v.is_list()) return 1;
  int n = 0;
  for (const Value& x : v.items()) n += leaf_count(x);
  return n;
}

}  // namespace lnlcat
