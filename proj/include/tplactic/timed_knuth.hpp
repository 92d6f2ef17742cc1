#pragma once

#include "tplactic/errors.hpp"
#include "tplactic/timed_tableau.hpp"

#include <array>
#include <string>
#include <string_view>

namespace tplactic {

enum class KnuthKind { k1, k2 };

// Forward rewrites the left-hand side of the relation into the right one:
//   k1: x z y -> z x y        k2: y x z -> y z x
// Reverse undoes it:
//   k1: z x y -> x z y        k2: y z x -> y x z
enum class MoveDirection { forward, reverse };

// A timed Knuth move located at `position` in a word. cut1..cut3 are the
// lengths of the three factors in the order they appear in the source
// word (see factor_order).
struct TimedKnuthMove {
  KnuthKind kind = KnuthKind::k1;
  MoveDirection direction = MoveDirection::forward;
  Duration position = 0;
  Duration cut1 = 0;
  Duration cut2 = 0;
  Duration cut3 = 0;

  bool operator==(const TimedKnuthMove&) const = default;
};

enum class Factor { x, y, z };

// Names of the factors in source order, e.g. {x, z, y} for a forward k1.
std::array<Factor, 3> factor_order(KnuthKind kind, MoveDirection direction) noexcept;

// The move that undoes m once applied: same kind, opposite direction, cut
// lengths permuted to match the rewritten factor order.
TimedKnuthMove inverse(const TimedKnuthMove& m) noexcept;

enum class MoveViolation {
  nonpositive_cut,
  out_of_range,
  not_a_timed_row, // x y z is not a timed row
  length_mismatch, // k1: l(z) != l(y); k2: l(x) != l(y)
  limit_condition, // k1: last(y) >= z(0); k2: last(x) >= y(0)
};

std::string_view describe(MoveViolation v) noexcept;

class MoveError : public Error {
public:
  MoveError(MoveViolation v, const std::string& detail)
      : Error(std::string(describe(v)) + ": " + detail), violation_(v) {}
  MoveViolation violation() const noexcept { return violation_; }

private:
  MoveViolation violation_;
};

struct MoveFactors {
  TimedWord prefix, x, y, z, suffix;
};

// Splits w at the move's cuts and labels the factors. Throws MoveError
// when the cuts do not fit in w.
MoveFactors decompose(const TimedWord& w, const TimedKnuthMove& m);

// Throws MoveError naming the first violated side condition.
void validate(const TimedWord& w, const TimedKnuthMove& m);

// Validates, then rewrites the three factors. Length and per-letter
// durations are preserved.
TimedWord apply_kappa1(const TimedWord& w, const TimedKnuthMove& m);
TimedWord apply_kappa2(const TimedWord& w, const TimedKnuthMove& m);

// Dispatches on m.kind.
TimedWord apply_move(const TimedWord& w, const TimedKnuthMove& m);

// Decides equivalence by equality of insertion tableaux.
bool timed_knuth_equivalent(const TimedWord& w, const TimedWord& other);

// True iff a_r agrees on w and on w rewritten by m. Uses the fast
// (tableau-shape) route unless `use_oracle` is set.
bool check_move_invariance(const TimedWord& w, const TimedKnuthMove& m, std::size_t r,
                           bool use_oracle = false);

} // namespace tplactic
