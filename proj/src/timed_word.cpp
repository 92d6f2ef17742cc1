#include "tplactic/timed_word.hpp"

#include "tplactic/errors.hpp"

#include <algorithm>

namespace tplactic {

TimedWord TimedWord::normalize(std::vector<Run> runs) {
  TimedWord out;
  out.runs_.reserve(runs.size());
  for (auto& run : runs) {
    if (run.letter < 1) throw PreconditionError("timed word letters must be >= 1");
    if (run.duration < 0) throw PreconditionError("timed word durations must be >= 0");
    if (run.duration == 0) continue;
    if (!out.runs_.empty() && out.runs_.back().letter == run.letter)
      out.runs_.back().duration += run.duration;
    else
      out.runs_.push_back(std::move(run));
  }
  return out;
}

Duration TimedWord::length() const {
  Duration total = 0;
  for (const auto& run : runs_) total += run.duration;
  return total;
}

TimedWord concat(const TimedWord& a, const TimedWord& b) {
  std::vector<Run> runs = a.runs();
  runs.insert(runs.end(), b.runs().begin(), b.runs().end());
  return TimedWord::normalize(std::move(runs));
}

TimedWord concat(std::span<const TimedWord> parts) {
  std::vector<Run> runs;
  for (const auto& p : parts) runs.insert(runs.end(), p.runs().begin(), p.runs().end());
  return TimedWord::normalize(std::move(runs));
}

Letter value_at(const TimedWord& w, const Duration& t) {
  if (t < 0) throw RangeError("value_at: negative time");
  Duration start = 0;
  for (const auto& run : w.runs()) {
    Duration end = start + run.duration;
    if (t < end) return run.letter;
    start = std::move(end);
  }
  throw RangeError("value_at: time " + to_fraction_string(t) + " is not below l(w) = " +
                   to_fraction_string(start));
}

TimedWord restrict(const TimedWord& w, const Duration& a, const Duration& b) {
  if (a < 0 || b < a) throw RangeError("restrict: need 0 <= a <= b");
  if (b > w.length()) throw RangeError("restrict: b exceeds l(w)");
  std::vector<Run> out;
  Duration start = 0;
  for (const auto& run : w.runs()) {
    if (start >= b) break;
    Duration end = start + run.duration;
    Duration lo = std::max(start, a);
    Duration hi = std::min(end, b);
    if (lo < hi) out.push_back(Run{run.letter, hi - lo});
    start = std::move(end);
  }
  return TimedWord::normalize(std::move(out));
}

bool is_timed_row(const TimedWord& w) noexcept {
  const auto& runs = w.runs();
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (!(runs[i - 1].letter < runs[i].letter)) return false;
  return true;
}

TimedWord embed_classical(std::span<const Letter> w) {
  std::vector<Run> runs;
  runs.reserve(w.size());
  for (Letter c : w) runs.push_back(Run{c, Duration(1)});
  return TimedWord::normalize(std::move(runs));
}

TimedWord scale(const TimedWord& w, const Duration& factor) {
  if (factor <= 0) throw PreconditionError("scale: factor must be positive");
  std::vector<Run> runs = w.runs();
  for (auto& run : runs) run.duration *= factor;
  return TimedWord::normalize(std::move(runs));
}

std::map<Letter, Duration> letter_durations(const TimedWord& w) {
  std::map<Letter, Duration> out;
  for (const auto& run : w.runs()) out[run.letter] += run.duration;
  return out;
}

TimeSample TimeSample::from_intervals(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.begin < 0) throw PreconditionError("time sample: negative endpoint");
    if (iv.end < iv.begin) throw PreconditionError("time sample: interval end before begin");
  }
  std::erase_if(intervals, [](const Interval& iv) { return iv.begin == iv.end; });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.begin < y.begin; });
  TimeSample s;
  for (auto& iv : intervals) {
    if (!s.intervals_.empty() && iv.begin <= s.intervals_.back().end) {
      if (iv.end > s.intervals_.back().end) s.intervals_.back().end = iv.end;
    } else {
      s.intervals_.push_back(std::move(iv));
    }
  }
  return s;
}

TimeSample TimeSample::strict(std::vector<Interval> intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (iv.begin < 0 || !(iv.begin < iv.end))
      throw PreconditionError("time sample: each interval needs 0 <= a < b");
    if (i > 0 && !(intervals[i - 1].end < iv.begin))
      throw PreconditionError("time sample: intervals must be strictly separated and ordered");
  }
  TimeSample s;
  s.intervals_ = std::move(intervals);
  return s;
}

Duration TimeSample::measure() const {
  Duration total = 0;
  for (const auto& iv : intervals_) total += iv.end - iv.begin;
  return total;
}

Duration TimeSample::measure_before(const Duration& t) const {
  Duration total = 0;
  for (const auto& iv : intervals_) {
    if (t <= iv.begin) break;
    total += std::min(t, iv.end) - iv.begin;
  }
  return total;
}

TimedWord subword(const TimedWord& w, const TimeSample& s) {
  if (!s.empty() && s.intervals().back().end > w.length())
    throw RangeError("subword: time sample extends beyond l(w)");
  std::vector<TimedWord> parts;
  parts.reserve(s.intervals().size());
  for (const auto& iv : s.intervals()) parts.push_back(restrict(w, iv.begin, iv.end));
  return concat(parts);
}

} // namespace tplactic
