#include "tplactic/timed_knuth.hpp"

#include "tplactic/greene.hpp"

namespace tplactic {

namespace {

using Order = std::array<Factor, 3>;

Order target_order(KnuthKind kind, MoveDirection direction) noexcept {
  return factor_order(kind, direction == MoveDirection::forward ? MoveDirection::reverse
                                                                : MoveDirection::forward);
}

template <class Factors>
auto& pick(Factors& f, Factor which) {
  switch (which) {
  case Factor::y: return f.y;
  case Factor::z: return f.z;
  default: return f.x;
  }
}

TimedWord rewrite(const TimedWord& w, const TimedKnuthMove& m) {
  validate(w, m);
  const MoveFactors f = decompose(w, m);
  const Order out = target_order(m.kind, m.direction);
  const TimedWord parts[] = {f.prefix, pick(f, out[0]), pick(f, out[1]), pick(f, out[2]),
                             f.suffix};
  return concat(parts);
}

} // namespace

std::array<Factor, 3> factor_order(KnuthKind kind, MoveDirection direction) noexcept {
  const bool fwd = direction == MoveDirection::forward;
  if (kind == KnuthKind::k1)
    return fwd ? Order{Factor::x, Factor::z, Factor::y} : Order{Factor::z, Factor::x, Factor::y};
  return fwd ? Order{Factor::y, Factor::x, Factor::z} : Order{Factor::y, Factor::z, Factor::x};
}

TimedKnuthMove inverse(const TimedKnuthMove& m) noexcept {
  const Order src = factor_order(m.kind, m.direction);
  const Duration* cuts[] = {&m.cut1, &m.cut2, &m.cut3};
  auto length_of = [&](Factor which) -> const Duration& {
    for (std::size_t i = 0; i < 3; ++i)
      if (src[i] == which) return *cuts[i];
    return m.cut1;
  };
  TimedKnuthMove inv = m;
  inv.direction =
      m.direction == MoveDirection::forward ? MoveDirection::reverse : MoveDirection::forward;
  const Order dst = factor_order(inv.kind, inv.direction);
  inv.cut1 = length_of(dst[0]);
  inv.cut2 = length_of(dst[1]);
  inv.cut3 = length_of(dst[2]);
  return inv;
}

std::string_view describe(MoveViolation v) noexcept {
  switch (v) {
  case MoveViolation::nonpositive_cut: return "factor lengths must be positive";
  case MoveViolation::out_of_range: return "move does not fit inside the word";
  case MoveViolation::not_a_timed_row: return "x y z is not a timed row";
  case MoveViolation::length_mismatch: return "paired factor lengths differ";
  case MoveViolation::limit_condition: return "limit letter is not below the initial letter";
  }
  return "unknown violation";
}

MoveFactors decompose(const TimedWord& w, const TimedKnuthMove& m) {
  if (m.cut1 <= 0 || m.cut2 <= 0 || m.cut3 <= 0)
    throw MoveError(MoveViolation::nonpositive_cut, "cuts must all be > 0");
  if (m.position < 0) throw MoveError(MoveViolation::out_of_range, "negative position");
  const Duration len = w.length();
  const Duration a = m.position;
  const Duration b = a + m.cut1;
  const Duration c = b + m.cut2;
  const Duration d = c + m.cut3;
  if (d > len)
    throw MoveError(MoveViolation::out_of_range,
                    "end " + to_fraction_string(d) + " exceeds l(w) = " + to_fraction_string(len));
  MoveFactors f;
  f.prefix = restrict(w, 0, a);
  f.suffix = restrict(w, d, len);
  const Order src = factor_order(m.kind, m.direction);
  pick(f, src[0]) = restrict(w, a, b);
  pick(f, src[1]) = restrict(w, b, c);
  pick(f, src[2]) = restrict(w, c, d);
  return f;
}

void validate(const TimedWord& w, const TimedKnuthMove& m) {
  const MoveFactors f = decompose(w, m);
  const TimedWord parts[] = {f.x, f.y, f.z};
  if (!is_timed_row(concat(parts)))
    throw MoveError(MoveViolation::not_a_timed_row, "reassembled x y z has a descent");
  if (m.kind == KnuthKind::k1) {
    if (f.z.length() != f.y.length())
      throw MoveError(MoveViolation::length_mismatch,
                      "l(z) = " + to_fraction_string(f.z.length()) +
                          ", l(y) = " + to_fraction_string(f.y.length()));
    if (!(f.y.back().letter < f.z.front().letter))
      throw MoveError(MoveViolation::limit_condition, "need last letter of y < first letter of z");
  } else {
    if (f.x.length() != f.y.length())
      throw MoveError(MoveViolation::length_mismatch,
                      "l(x) = " + to_fraction_string(f.x.length()) +
                          ", l(y) = " + to_fraction_string(f.y.length()));
    if (!(f.x.back().letter < f.y.front().letter))
      throw MoveError(MoveViolation::limit_condition, "need last letter of x < first letter of y");
  }
}

TimedWord apply_kappa1(const TimedWord& w, const TimedKnuthMove& m) {
  if (m.kind != KnuthKind::k1) throw PreconditionError("apply_kappa1: move is not of kind k1");
  return rewrite(w, m);
}

TimedWord apply_kappa2(const TimedWord& w, const TimedKnuthMove& m) {
  if (m.kind != KnuthKind::k2) throw PreconditionError("apply_kappa2: move is not of kind k2");
  return rewrite(w, m);
}

TimedWord apply_move(const TimedWord& w, const TimedKnuthMove& m) {
  return m.kind == KnuthKind::k1 ? apply_kappa1(w, m) : apply_kappa2(w, m);
}

bool timed_knuth_equivalent(const TimedWord& w, const TimedWord& other) {
  return timed_insertion_tableau(w) == timed_insertion_tableau(other);
}

bool check_move_invariance(const TimedWord& w, const TimedKnuthMove& m, std::size_t r,
                           bool use_oracle) {
  if (r == 0) throw PreconditionError("check_move_invariance: r must be >= 1");
  const TimedWord moved = apply_move(w, m);
  if (use_oracle) return greene_timed_oracle(w, r) == greene_timed_oracle(moved, r);
  return greene_timed(w).at(r) == greene_timed(moved).at(r);
}

} // namespace tplactic
