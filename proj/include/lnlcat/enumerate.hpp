#ifndef LNLCAT_ENUMERATE_HPP
#define LNLCAT_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "lnlcat/value.hpp"

namespace lnlcat {

/// Every function [n_slots] -> [n_values] in lexicographic order, as index
/// vectors. Calls fn n_values^n_slots times (once with the empty vector when
/// n_slots == 0). The callback returns false to stop the enumeration.
void for_each_function(std::size_t n_slots, std::size_t n_values,
                       const std::function<bool(const std::vector<std::size_t>&)>& fn);

/// Every pick of one element per slot from `choices`, in odometer order.
/// The callback returns false to stop.
template <typename T, typename Fn>
void for_each_product(const std::vector<std::vector<T>>& choices, Fn&& fn) {
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<T> current;
  while (true) {
    current.clear();
    for (std::size_t i = 0; i < choices.size(); ++i) current.push_back(choices[i][idx[i]]);
    if (!fn(current)) return;
    std::size_t pos = choices.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < choices[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (choices.empty()) return;
  }
}

/// All permutations of [n], each as the image vector of a bijection.
std::vector<std::vector<std::size_t>> all_bijections(std::size_t n);

/// All sequences over `alphabet` with length in [0, max_len], shortest
/// first, lexicographic within a length. Each sequence is a Value list.
std::vector<Value> sequences_upto(const std::vector<Value>& alphabet, int max_len);

/// Total number of atoms in a value tree (sequence "size" for sweep bounds).
int leaf_count(const Value& v);

}  // namespace lnlcat

#endif
