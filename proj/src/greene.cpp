#include "tplactic/greene.hpp"

#include "tplactic/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tplactic {

std::size_t greene_classical_oracle(std::span<const Letter> w, std::size_t r,
                                    const OracleLimits& limits) {
  if (r == 0) throw PreconditionError("greene_classical_oracle: r must be >= 1");
  if (w.size() > limits.max_length)
    throw BudgetExceeded("oracle word length " + std::to_string(w.size()) + " exceeds " +
                         std::to_string(limits.max_length));
  // More chains than positions never help.
  const std::size_t chains = std::min(r, w.size());
  if (chains == 0) return 0;

  // Chain tops kept sorted ascending; 0 marks a chain that is still empty
  // and therefore accepts any letter. Value = best number of positions
  // used so far.
  using Tops = std::vector<Letter>;
  std::map<Tops, std::size_t> layer{{Tops(chains, 0), 0}};
  for (Letter c : w) {
    std::map<Tops, std::size_t> next;
    auto relax = [&next](Tops tops, std::size_t used) {
      auto [it, inserted] = next.try_emplace(std::move(tops), used);
      if (!inserted && it->second < used) it->second = used;
    };
    for (const auto& [tops, used] : layer) {
      relax(tops, used); // leave position unused
      for (std::size_t j = 0; j < chains; ++j) {
        if (tops[j] > c) break;
        if (j + 1 < chains && tops[j + 1] == tops[j]) continue; // same choice as j+1
        Tops extended = tops;
        extended[j] = c;
        std::sort(extended.begin(), extended.end());
        relax(std::move(extended), used + 1);
      }
    }
    if (next.size() > limits.max_states)
      throw BudgetExceeded("oracle configuration count exceeds " +
                           std::to_string(limits.max_states));
    layer = std::move(next);
  }
  std::size_t best = 0;
  for (const auto& [tops, used] : layer) best = std::max(best, used);
  return best;
}

ClassicalProfile partial_sums(const IntShape& shape) {
  ClassicalProfile p;
  std::size_t acc = 0;
  for (std::size_t part : shape) p.values.push_back(acc += part);
  return p;
}

TimedProfile partial_sums(const RationalShape& shape) {
  TimedProfile p;
  Duration acc = 0;
  for (const auto& part : shape) p.values.push_back(acc += part);
  return p;
}

ClassicalProfile greene_classical(std::span<const Letter> w) {
  return partial_sums(shape(insertion_tableau(w)));
}

BigInt common_denominator(const TimedWord& w) {
  BigInt q = 1;
  for (const auto& run : w.runs()) q = boost::multiprecision::lcm(q, denominator_of(run.duration));
  return q;
}

Word expand(const TimedWord& w, const BigInt& q, const OracleLimits& limits) {
  const Duration scaled_length = w.length() * Duration(q);
  if (denominator_of(scaled_length) != 1)
    throw PreconditionError("expand: q is not a common denominator of w");
  if (scaled_length > Duration(limits.max_length))
    throw BudgetExceeded("expanded length " + to_fraction_string(scaled_length) +
                         " exceeds oracle bound " + std::to_string(limits.max_length));
  Word out;
  out.reserve(static_cast<std::size_t>(numerator_of(scaled_length)));
  for (const auto& run : w.runs()) {
    const Duration units = run.duration * Duration(q);
    if (denominator_of(units) != 1)
      throw PreconditionError("expand: q is not a common denominator of w");
    out.insert(out.end(), static_cast<std::size_t>(numerator_of(units)), run.letter);
  }
  return out;
}

Duration greene_timed_oracle(const TimedWord& w, std::size_t r, unsigned refine,
                             const OracleLimits& limits) {
  if (refine == 0) throw PreconditionError("greene_timed_oracle: refine must be >= 1");
  const BigInt q = common_denominator(w) * refine;
  const Word expanded = expand(w, q, limits);
  return Duration(BigInt(greene_classical_oracle(expanded, r, limits)), q);
}

TimedProfile greene_timed_oracle_profile(const TimedWord& w, std::size_t r_max, unsigned refine,
                                         const OracleLimits& limits) {
  TimedProfile p;
  for (std::size_t r = 1; r <= r_max; ++r)
    p.values.push_back(greene_timed_oracle(w, r, refine, limits));
  return p;
}

TimedProfile greene_timed(const TimedWord& w) {
  return partial_sums(timed_shape(timed_insertion_tableau(w)));
}

} // namespace tplactic
