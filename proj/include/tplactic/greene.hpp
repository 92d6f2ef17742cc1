#pragma once

#include "tplactic/classical.hpp"
#include "tplactic/timed_tableau.hpp"

#include <cstddef>
#include <vector>

namespace tplactic {

// a_1, a_2, ..., a_l of a word, where l is the number of rows of its
// insertion tableau. For r > l the invariant saturates at the total
// length, which at() reflects.
template <class Value>
struct GreeneProfile {
  std::vector<Value> values;

  Value at(std::size_t r) const {
    if (values.empty()) return Value(0);
    return r <= values.size() ? values[r - 1] : values.back();
  }

  bool operator==(const GreeneProfile&) const = default;
};

using ClassicalProfile = GreeneProfile<std::size_t>;
using TimedProfile = GreeneProfile<Duration>;

// Partial sums of a shape are exactly the profiles this accepts: values
// weakly increase and their increments weakly decrease.
template <class Value>
bool is_partial_sum_profile(const GreeneProfile<Value>& p) {
  Value prev_gap{};
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    Value gap = i == 0 ? p.values[0] : Value(p.values[i] - p.values[i - 1]);
    if (gap <= Value(0)) return false;
    if (i > 0 && gap > prev_gap) return false;
    prev_gap = gap;
  }
  return true;
}

// Caps on the exhaustive oracle. Exceeding either throws BudgetExceeded.
struct OracleLimits {
  std::size_t max_length = 20000;   // letters in the (expanded) word
  std::size_t max_states = 500000;  // live chain configurations per step
};

// Maximum total size of r pairwise disjoint weakly increasing subwords of
// w, by exhaustive search over the assignment of each position to one of
// r chains or to none. Configurations reached at the same position with
// the same multiset of chain tops are merged, which keeps the search
// exact while bounding the work by (positions x configurations).
// Independent of any insertion machinery.
std::size_t greene_classical_oracle(std::span<const Letter> w, std::size_t r,
                                    const OracleLimits& limits = {});

// Partial sums of shape(P(w)).
ClassicalProfile greene_classical(std::span<const Letter> w);

// Common denominator q of all durations in w: every run becomes an
// integer number of 1/q time units.
BigInt common_denominator(const TimedWord& w);

// Classical word obtained by repeating each run's letter duration * q
// times. Throws BudgetExceeded past limits.max_length letters.
Word expand(const TimedWord& w, const BigInt& q, const OracleLimits& limits = {});

// a_r(w) via the scaling reduction: greene_classical_oracle of the word
// expanded on the grid of step 1/(q * refine), divided by q * refine.
Duration greene_timed_oracle(const TimedWord& w, std::size_t r, unsigned refine = 1,
                             const OracleLimits& limits = {});

// Oracle values for r = 1..r_max.
TimedProfile greene_timed_oracle_profile(const TimedWord& w, std::size_t r_max,
                                         unsigned refine = 1, const OracleLimits& limits = {});

// Partial sums of timed_shape(P(w)).
TimedProfile greene_timed(const TimedWord& w);

// Partial sums of any shape.
ClassicalProfile partial_sums(const IntShape& shape);
TimedProfile partial_sums(const RationalShape& shape);

} // namespace tplactic
