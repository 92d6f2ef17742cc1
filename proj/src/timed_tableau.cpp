#include "tplactic/timed_tableau.hpp"

#include "tplactic/errors.hpp"

namespace tplactic {

TimedRowInsertResult timed_row_insert(const TimedWord& w, Letter c, const Duration& tc) {
  if (c < 1) throw PreconditionError("timed_row_insert: letter must be >= 1");
  if (tc <= 0) throw PreconditionError("timed_row_insert: duration must be positive");
  if (!is_timed_row(w)) throw PreconditionError("timed_row_insert: input is not a timed row");

  // Letters strictly increase along a timed row, so the infimum of
  // {t : w(t) > c} is attained at the start of a run.
  Duration t0 = 0;
  bool found = false;
  for (const auto& run : w.runs()) {
    if (run.letter > c) {
      found = true;
      break;
    }
    t0 += run.duration;
  }
  const TimedWord inserted = TimedWord::single(c, tc);
  if (!found) return {TimedWord{}, concat(w, inserted)};

  const Duration len = w.length();
  const TimedWord head = restrict(w, 0, t0);
  if (len - t0 > tc) {
    const Duration cut = t0 + tc;
    const TimedWord parts[] = {head, inserted, restrict(w, cut, len)};
    return {restrict(w, t0, cut), concat(parts)};
  }
  return {restrict(w, t0, len), concat(head, inserted)};
}

TimedRowInsertResult timed_row_insert_word(const TimedWord& w, const TimedWord& u) {
  TimedRowInsertResult acc{TimedWord{}, w};
  if (!is_timed_row(w)) throw PreconditionError("timed_row_insert_word: input is not a timed row");
  for (const auto& run : u.runs()) {
    auto step = timed_row_insert(acc.row, run.letter, run.duration);
    acc.bumped = concat(acc.bumped, step.bumped);
    acc.row = std::move(step.row);
  }
  return acc;
}

bool strictly_below(const TimedWord& upper, const TimedWord& lower) {
  const auto& up = upper.runs();
  const auto& lo = lower.runs();
  std::size_t i = 0, j = 0;
  // Remaining length of the current run in each row.
  Duration up_left = up.empty() ? Duration(0) : up[0].duration;
  Duration lo_left = lo.empty() ? Duration(0) : lo[0].duration;
  while (j < lo.size()) {
    if (i >= up.size()) return false; // lower row outlasts the upper one
    if (!(up[i].letter < lo[j].letter)) return false;
    const Duration step = std::min(up_left, lo_left);
    up_left -= step;
    lo_left -= step;
    if (up_left == 0 && ++i < up.size()) up_left = up[i].duration;
    if (lo_left == 0 && ++j < lo.size()) lo_left = lo[j].duration;
  }
  return true;
}

bool TimedTableau::is_valid(const std::vector<TimedWord>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty() || !is_timed_row(rows[i])) return false;
    if (i == 0) continue;
    if (rows[i - 1].length() < rows[i].length()) return false;
    if (!strictly_below(rows[i - 1], rows[i])) return false;
  }
  return true;
}

TimedTableau TimedTableau::from_rows(std::vector<TimedWord> rows) {
  if (!is_valid(rows)) throw PreconditionError("rows do not form a timed tableau");
  return TimedTableau(std::move(rows));
}

TimedTableau timed_tableau_insert(const TimedTableau& t, const TimedWord& v) {
  if (!is_timed_row(v)) throw PreconditionError("timed_tableau_insert: v is not a timed row");
  std::vector<TimedWord> rows;
  rows.reserve(t.rows_.size() + 1);
  TimedWord carry = v;
  std::size_t i = 0;
  for (; i < t.rows_.size() && !carry.empty(); ++i) {
    auto step = timed_row_insert_word(t.rows_[i], carry);
    rows.push_back(std::move(step.row));
    carry = std::move(step.bumped);
  }
  for (; i < t.rows_.size(); ++i) rows.push_back(t.rows_[i]);
  if (!carry.empty()) {
    if (!is_timed_row(carry))
      throw InternalError("timed_tableau_insert: residue below the last row is not a timed row");
    rows.push_back(std::move(carry));
  }
  return TimedTableau(std::move(rows));
}

TimedTableau timed_insertion_tableau(const TimedWord& w) {
  TimedTableau t;
  for (const auto& run : w.runs()) t = timed_tableau_insert(t, TimedWord::single(run.letter, run.duration));
  return t;
}

TimedWord timed_reading_word(const TimedTableau& t) {
  std::vector<Run> runs;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    runs.insert(runs.end(), it->runs().begin(), it->runs().end());
  return TimedWord::normalize(std::move(runs));
}

RationalShape timed_shape(const TimedTableau& t) {
  RationalShape parts;
  parts.reserve(t.row_count());
  for (const auto& row : t.rows()) parts.push_back(row.length());
  return parts;
}

Duration total_length(const TimedTableau& t) {
  Duration total = 0;
  for (const auto& row : t.rows()) total += row.length();
  return total;
}

TimedTableau embed_tableau(const Tableau& t) {
  std::vector<TimedWord> rows;
  rows.reserve(t.row_count());
  for (const auto& row : t.rows()) rows.push_back(embed_classical(row));
  return TimedTableau::from_rows(std::move(rows));
}

} // namespace tplactic
