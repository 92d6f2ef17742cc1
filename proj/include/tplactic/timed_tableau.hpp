#pragma once

#include "tplactic/timed_word.hpp"

#include <vector>

namespace tplactic {

// Row lengths of a timed tableau: weakly decreasing positive rationals.
using RationalShape = std::vector<Duration>;

struct TimedRowInsertResult {
  TimedWord bumped;
  TimedWord row;

  bool operator==(const TimedRowInsertResult&) const = default;
};

// Inserts c^{tc} into the timed row w. With t0 the start of the first run
// whose letter exceeds c:
//   no such run            -> (empty, w c^{tc})
//   l(w) - t0 >  tc        -> (w[t0, t0+tc), w[0,t0) c^{tc} w[t0+tc, l(w)))
//   l(w) - t0 <= tc        -> (w[t0, l(w)),  w[0,t0) c^{tc})
// Throws PreconditionError if w is not a timed row, c < 1 or tc <= 0.
TimedRowInsertResult timed_row_insert(const TimedWord& w, Letter c, const Duration& tc);

// Inserts the runs of u one at a time, left to right, concatenating the
// bumped pieces in order.
TimedRowInsertResult timed_row_insert_word(const TimedWord& w, const TimedWord& u);

// Stack of timed rows, top row first. Invariants: each row is a nonempty
// timed row, lengths weakly decrease downward, and at every time t below
// the length of a lower row the lower row's letter strictly exceeds the
// letter of the row above.
class TimedTableau {
public:
  TimedTableau() = default;

  // Validates and throws PreconditionError on any violation.
  static TimedTableau from_rows(std::vector<TimedWord> rows);
  static bool is_valid(const std::vector<TimedWord>& rows);

  const std::vector<TimedWord>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  bool operator==(const TimedTableau&) const = default;

private:
  friend TimedTableau timed_tableau_insert(const TimedTableau& t, const TimedWord& v);
  explicit TimedTableau(std::vector<TimedWord> rows) : rows_(std::move(rows)) {}

  std::vector<TimedWord> rows_;
};

// True iff upper(t) < lower(t) for every 0 <= t < l(lower). Exact: both
// step functions are compared on each piece of their common breakpoint
// refinement.
bool strictly_below(const TimedWord& upper, const TimedWord& lower);

// Cascades v down the rows; a nonempty residue below the last row becomes
// a new bottom row. Throws PreconditionError if v is not a timed row.
TimedTableau timed_tableau_insert(const TimedTableau& t, const TimedWord& v);

// P(w), folding timed_tableau_insert over the runs of w.
TimedTableau timed_insertion_tableau(const TimedWord& w);

// Rows concatenated bottom row first, normalized at the junctions.
TimedWord timed_reading_word(const TimedTableau& t);

RationalShape timed_shape(const TimedTableau& t);

// Sum of the shape parts.
Duration total_length(const TimedTableau& t);

// Rows of a classical tableau as unit-duration timed rows.
TimedTableau embed_tableau(const Tableau& t);

} // namespace tplactic
