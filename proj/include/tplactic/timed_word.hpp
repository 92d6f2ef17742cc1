#pragma once

#include "tplactic/classical.hpp"
#include "tplactic/duration.hpp"

#include <map>
#include <span>
#include <vector>

namespace tplactic {

struct Run {
  Letter letter;
  Duration duration;

  bool operator==(const Run&) const = default;
};

// A finite timed word c_1^{t_1} ... c_k^{t_k} kept in normal form: every
// duration is positive and adjacent runs carry distinct letters. The
// associated step function is never materialized; see value_at.
class TimedWord {
public:
  TimedWord() = default;

  // Normalizes arbitrary runs: drops zero durations and merges adjacent
  // equal letters. Throws PreconditionError on negative durations or
  // letters < 1.
  static TimedWord normalize(std::vector<Run> runs);

  static TimedWord single(Letter c, Duration t) { return normalize({Run{c, std::move(t)}}); }

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::size_t run_count() const noexcept { return runs_.size(); }
  bool empty() const noexcept { return runs_.empty(); }
  const Run& front() const { return runs_.front(); }
  const Run& back() const { return runs_.back(); }

  // l(w), the sum of durations.
  Duration length() const;

  bool operator==(const TimedWord&) const = default;

private:
  std::vector<Run> runs_;
};

inline TimedWord normalize(std::vector<Run> runs) {
  return TimedWord::normalize(std::move(runs));
}

TimedWord concat(const TimedWord& a, const TimedWord& b);
TimedWord concat(std::span<const TimedWord> parts);

// Letter of the run whose half-open interval [start, start+t_i) holds t.
// Throws RangeError unless 0 <= t < l(w).
Letter value_at(const TimedWord& w, const Duration& t);

// w restricted to [a, b), shifted to start at 0. Returns the empty word
// when a == b. Throws RangeError unless 0 <= a <= b <= l(w).
TimedWord restrict(const TimedWord& w, const Duration& a, const Duration& b);

// Run letters strictly increase. The empty word is a row.
bool is_timed_row(const TimedWord& w) noexcept;

// a_1 ... a_k  ->  a_1^1 ... a_k^1, normalized.
TimedWord embed_classical(std::span<const Letter> w);

// Multiplies every duration by a positive factor.
TimedWord scale(const TimedWord& w, const Duration& factor);

// Total duration carried by each letter.
std::map<Letter, Duration> letter_durations(const TimedWord& w);

struct Interval {
  Duration begin;
  Duration end;

  bool operator==(const Interval&) const = default;
};

// Finite union of half-open intervals [a_1,b_1) u ... u [a_k,b_k) with
// 0 <= a_1 < b_1 < a_2 < ... < b_k.
class TimeSample {
public:
  TimeSample() = default;

  // Accepts intervals in any order; drops empty ones and merges touching
  // or overlapping ones into the normal form. Throws PreconditionError on
  // negative endpoints or begin > end.
  static TimeSample from_intervals(std::vector<Interval> intervals);

  // Requires the normal form exactly and throws PreconditionError
  // otherwise.
  static TimeSample strict(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }

  // Lebesgue measure.
  Duration measure() const;

  // mu(S n [0, t)).
  Duration measure_before(const Duration& t) const;

  bool operator==(const TimeSample&) const = default;

private:
  std::vector<Interval> intervals_;
};

// w_S: the restrictions of w to the intervals of S, concatenated in order.
// Throws RangeError if S reaches beyond l(w).
TimedWord subword(const TimedWord& w, const TimeSample& s);

} // namespace tplactic
