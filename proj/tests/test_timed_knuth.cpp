#include "tplactic/errors.hpp"
#include "tplactic/generators.hpp"
#include "tplactic/greene.hpp"
#include "tplactic/notation.hpp"
#include "tplactic/timed_knuth.hpp"

#include <doctest.h>

#include <map>

using namespace tplactic;

namespace {

TimedWord tw(const char* text) { return parse_timed_word(text); }
Duration d(const char* text) { return parse_duration(text); }

TimedKnuthMove move(KnuthKind kind, MoveDirection dir, const char* pos, const char* c1,
                    const char* c2, const char* c3) {
  return TimedKnuthMove{kind, dir, d(pos), d(c1), d(c2), d(c3)};
}

MoveViolation violation_of(const TimedWord& w, const TimedKnuthMove& m) {
  try {
    validate(w, m);
  } catch (const MoveError& e) {
    return e.violation();
  }
  FAIL("expected a MoveError");
  return MoveViolation::out_of_range;
}

std::map<Letter, Duration> histogram(const TimedWord& w) {
  std::map<Letter, Duration> out;
  for (const auto& run : w.runs()) out[run.letter] += run.duration;
  return out;
}

} // namespace

TEST_CASE("factor_order and inverse") {
  using F = Factor;
  CHECK(factor_order(KnuthKind::k1, MoveDirection::forward) == std::array{F::x, F::z, F::y});
  CHECK(factor_order(KnuthKind::k1, MoveDirection::reverse) == std::array{F::z, F::x, F::y});
  CHECK(factor_order(KnuthKind::k2, MoveDirection::forward) == std::array{F::y, F::x, F::z});
  CHECK(factor_order(KnuthKind::k2, MoveDirection::reverse) == std::array{F::y, F::z, F::x});
  const auto m = move(KnuthKind::k1, MoveDirection::forward, "0", "1", "2", "3");
  const auto inv = inverse(m);
  CHECK(inv.direction == MoveDirection::reverse);
  // source x z y = (1, 2, 3) becomes z x y = (2, 1, 3)
  CHECK(inv.cut1 == 2);
  CHECK(inv.cut2 == 1);
  CHECK(inv.cut3 == 3);
  CHECK(inverse(inv) == m);
}

TEST_CASE("kappa2 worked example") {
  const TimedWord w = tw("5^1.10 3^2.19 4^0.89 5^1.20 1^0.32 2^0.44");
  // Source reads u y z x v with y = 3^0.11 4^0.62, z = 4^0.27 5^1.20, x = 1^0.32 2^0.41.
  const auto m = move(KnuthKind::k2, MoveDirection::reverse, "3.18", "0.73", "1.47", "0.73");
  const MoveFactors f = decompose(w, m);
  CHECK(f.prefix == tw("5^1.10 3^2.08"));
  CHECK(f.y == tw("3^0.11 4^0.62"));
  CHECK(f.z == tw("4^0.27 5^1.20"));
  CHECK(f.x == tw("1^0.32 2^0.41"));
  CHECK(f.suffix == tw("2^0.03"));
  const TimedWord moved = apply_kappa2(w, m);
  CHECK(moved == tw("5^1.10 3^2.19 4^0.62 1^0.32 2^0.41 4^0.27 5^1.20 2^0.03"));
  CHECK(timed_insertion_tableau(moved) == timed_insertion_tableau(w));
  CHECK(greene_timed(moved) == greene_timed(w));
  CHECK(timed_knuth_equivalent(w, moved));
  CHECK(apply_move(moved, inverse(m)) == w);
}

TEST_CASE("unit-duration moves match the classical relations") {
  // x z y -> z x y with x = 1, y = 2, z = 3
  const auto k1 = move(KnuthKind::k1, MoveDirection::forward, "0", "1", "1", "1");
  CHECK(apply_kappa1(embed_classical(Word{1, 3, 2}), k1) == embed_classical(Word{3, 1, 2}));
  // y x z -> y z x with x = 1, y = 2, z = 3
  const auto k2 = move(KnuthKind::k2, MoveDirection::forward, "0", "1", "1", "1");
  CHECK(apply_kappa2(embed_classical(Word{2, 1, 3}), k2) == embed_classical(Word{2, 3, 1}));
  CHECK_THROWS_AS(apply_kappa1(embed_classical(Word{2, 1, 3}), k2), PreconditionError);
  CHECK_THROWS_AS(apply_kappa2(embed_classical(Word{1, 3, 2}), k1), PreconditionError);
}

TEST_CASE("validate names the violated condition") {
  const TimedWord w = embed_classical(Word{1, 3, 2});
  const auto k1 = KnuthKind::k1;
  const auto fwd = MoveDirection::forward;
  CHECK(violation_of(w, move(k1, fwd, "0", "0", "1", "1")) == MoveViolation::nonpositive_cut);
  CHECK(violation_of(w, move(k1, fwd, "1", "1", "1", "1")) == MoveViolation::out_of_range);
  CHECK(violation_of(w, move(k1, fwd, "-1", "1", "1", "1")) == MoveViolation::out_of_range);
  // x = 3, z = 1, y = 2: x y z = 3 2 1
  CHECK(violation_of(embed_classical(Word{3, 1, 2}), move(k1, fwd, "0", "1", "1", "1")) ==
        MoveViolation::not_a_timed_row);
  // x = 1, z = 3^0.5, y = 2: lengths of z and y differ
  CHECK(violation_of(tw("1^1 3^0.5 2^1"), move(k1, fwd, "0", "1", "0.5", "1")) ==
        MoveViolation::length_mismatch);
  // x = 1, z = 2, y = 2: last(y) = z(0)
  CHECK(violation_of(tw("1^1 2^2"), move(k1, fwd, "0", "1", "1", "1")) ==
        MoveViolation::limit_condition);
  // k2: y = 2, x = 2, z = 3 so last(x) = y(0)
  CHECK(violation_of(tw("2^2 3^1"), move(KnuthKind::k2, fwd, "0", "1", "1", "1")) ==
        MoveViolation::limit_condition);
  CHECK_THROWS_AS(apply_move(w, move(k1, fwd, "1", "1", "1", "1")), MoveError);
}

TEST_CASE("check_move_invariance") {
  const TimedWord w = tw("5^1.10 3^2.19 4^0.89 5^1.20 1^0.32 2^0.44");
  const auto m = move(KnuthKind::k2, MoveDirection::reverse, "3.18", "0.73", "1.47", "0.73");
  for (std::size_t r = 1; r <= 4; ++r) CHECK(check_move_invariance(w, m, r));
  CHECK(check_move_invariance(w, m, 1, true));
  CHECK_THROWS_AS(check_move_invariance(w, m, 0), PreconditionError);
}

TEST_CASE("property: generated moves are valid and preserve everything") {
  Rng rng = make_rng(41);
  for (int i = 0; i < 300; ++i) {
    const MoveInstance inst = random_move_instance(rng, 4, 4);
    REQUIRE_NOTHROW(validate(inst.word, inst.move));
    const TimedWord moved = apply_move(inst.word, inst.move);
    CHECK(moved.length() == inst.word.length());
    CHECK(histogram(moved) == histogram(inst.word));
    CHECK(timed_insertion_tableau(moved) == timed_insertion_tableau(inst.word));
    CHECK(apply_move(moved, inverse(inst.move)) == inst.word);
  }
}

TEST_CASE("property: oracle values survive moves for r <= 3") {
  Rng rng = make_rng(42);
  for (int i = 0; i < 60; ++i) {
    const MoveInstance inst = random_move_instance(rng, 4, 3);
    const TimedWord moved = apply_move(inst.word, inst.move);
    CHECK(greene_timed_oracle_profile(inst.word, 3) == greene_timed_oracle_profile(moved, 3));
  }
}

TEST_CASE("property: classical Knuth neighbors are unit-duration timed moves") {
  Rng rng = make_rng(43);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 8, 4);
    const TimedWord e = embed_classical(w);
    for (const Word& n : knuth_neighbors(w)) {
      // Locate the window that changed and try both kinds and directions there.
      std::size_t at = 0;
      while (w[at] == n[at]) ++at;
      bool realized = false;
      for (std::size_t start = at >= 1 ? at - 1 : 0; start <= at && !realized; ++start)
        for (auto kind : {KnuthKind::k1, KnuthKind::k2})
          for (auto dir : {MoveDirection::forward, MoveDirection::reverse}) {
            if (start + 3 > w.size()) continue;
            const TimedKnuthMove m{kind, dir, Duration(start), 1, 1, 1};
            try {
              if (apply_move(e, m) == embed_classical(n)) realized = true;
            } catch (const MoveError&) {
            }
          }
      CHECK(realized);
    }
  }
}
