#include "oracles.hpp"

#include "tplactic/errors.hpp"
#include "tplactic/generators.hpp"
#include "tplactic/greene.hpp"
#include "tplactic/notation.hpp"
#include "tplactic/timed_word.hpp"

#include <doctest.h>

using namespace tplactic;

namespace {

TimedWord tw(const char* text) { return parse_timed_word(text); }
Duration d(const char* text) { return parse_duration(text); }

// Uniform grid over [0, l) at the midpoints of cells of width 1/(2q).
std::vector<Duration> sample_points(const Duration& length, const BigInt& q) {
  std::vector<Duration> out;
  const Duration step(BigInt(1), 2 * q);
  for (Duration t = step / 2; t < length; t += step) out.push_back(t);
  return out;
}

} // namespace

TEST_CASE("normalize merges and drops") {
  CHECK(normalize({{2, d("0.5")}, {2, d("0.25")}, {3, d("1")}}) == tw("2^0.75 3^1"));
  CHECK(normalize({{1, d("0")}, {4, d("2")}}) == tw("4^2"));
  const TimedWord merged = normalize({{3, 1}, {2, 1}, {2, 1}, {3, 1}});
  CHECK(merged == tw("3^1 2^2 3^1"));
  CHECK(merged.length() == 4);
  // A zero run between equal letters lets them merge.
  CHECK(normalize({{5, 1}, {1, 0}, {5, 2}}) == tw("5^3"));
  CHECK_THROWS_AS(normalize({{1, d("-1")}}), PreconditionError);
  CHECK_THROWS_AS(normalize({{0, d("1")}}), PreconditionError);
}

TEST_CASE("concat") {
  CHECK(concat(tw("3^1"), tw("3^2")) == tw("3^3"));
  CHECK(concat(TimedWord{}, tw("1^2 2^1")) == tw("1^2 2^1"));
  const TimedWord joined = concat(tw("1^0.5 2^0.5"), tw("2^0.5 1^0.5"));
  CHECK(joined == tw("1^0.5 2^1 1^0.5"));
  CHECK(joined.length() == 2);
}

TEST_CASE("value_at uses half-open runs") {
  const TimedWord w = tw("3^0.82 5^0.08");
  CHECK(value_at(w, 0) == 3);
  CHECK(value_at(w, d("0.81")) == 3);
  CHECK(value_at(w, d("0.82")) == 5);
  CHECK_THROWS_AS(value_at(w, d("0.9")), RangeError);
  CHECK_THROWS_AS(value_at(w, d("-0.1")), RangeError);
  CHECK_THROWS_AS(value_at(TimedWord{}, 0), RangeError);
}

TEST_CASE("restrict") {
  const TimedWord w = tw("1^1.4 2^1.6 3^0.7");
  CHECK(restrict(w, d("1.4"), d("3.0")) == tw("2^1.6"));
  CHECK(restrict(w, 0, d("3.7")) == w);
  const TimedWord cut = restrict(w, d("1.0"), d("1.8"));
  CHECK(cut == tw("1^0.4 2^0.4"));
  for (const auto& t : sample_points(cut.length(), 10))
    CHECK(value_at(cut, t) == value_at(w, d("1.0") + t));
  CHECK(restrict(w, 2, 2).empty());
  CHECK_THROWS_AS(restrict(w, 2, 1), RangeError);
  CHECK_THROWS_AS(restrict(w, 0, 4), RangeError);
}

TEST_CASE("TimeSample normal form") {
  const auto s = TimeSample::from_intervals({{2, 3}, {0, 1}, {1, d("1.5")}, {4, 4}});
  CHECK(s.intervals() == std::vector<Interval>{{0, d("1.5")}, {2, 3}});
  CHECK(s.measure() == d("2.5"));
  CHECK(s.measure_before(d("2.5")) == 2);
  CHECK_THROWS_AS(TimeSample::strict({{0, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(TimeSample::strict({{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(TimeSample::strict({{2, 3}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(TimeSample::from_intervals({{d("-1"), 1}}), PreconditionError);
  CHECK_NOTHROW(TimeSample::strict({{0, 1}, {2, 3}}));
}

TEST_CASE("subword") {
  const TimedWord w = tw("1^1.4 2^1.6 3^0.7");
  CHECK(subword(w, TimeSample::strict({{0, w.length()}})) == w);
  const TimedWord s = subword(tw("3^1 1^1 3^1"), TimeSample::strict({{0, 1}, {2, 3}}));
  CHECK(s == tw("3^2"));
  CHECK(s.length() == 2);
  CHECK(subword(w, TimeSample{}).empty());
  CHECK_THROWS_AS(subword(w, TimeSample::strict({{0, 4}})), RangeError);
}

TEST_CASE("is_timed_row") {
  CHECK(is_timed_row(tw("1^1.33 2^0.54 3^0.36 4^0.97")));
  CHECK_FALSE(is_timed_row(tw("3^0.82 5^0.08 2^0.45")));
  CHECK(is_timed_row(TimedWord{}));
}

TEST_CASE("embed_classical") {
  CHECK(embed_classical(Word{1, 1, 5}) == tw("1^2 5^1"));
  CHECK(embed_classical(Word{}).empty());
  const TimedWord e = embed_classical(Word{3, 4, 2, 1, 1, 5, 3});
  CHECK(e == tw("3^1 4^1 2^1 1^2 5^1 3^1"));
  CHECK(e.length() == 7);
}

TEST_CASE("property: normalize is idempotent and length preserving") {
  Rng rng = make_rng(21);
  for (int i = 0; i < 300; ++i) {
    std::vector<Run> raw;
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    Duration total = 0;
    for (int k = 0; k < n; ++k) {
      Duration len = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? Duration(0)
                                                                          : random_duration(rng, 4);
      total += len;
      raw.push_back(Run{std::uniform_int_distribution<Letter>(1, 3)(rng), len});
    }
    const TimedWord once = normalize(raw);
    CHECK(TimedWord::normalize(once.runs()) == once);
    CHECK(once.length() == total);
    for (std::size_t k = 1; k < once.runs().size(); ++k)
      CHECK(once.runs()[k - 1].letter != once.runs()[k].letter);
  }
}

TEST_CASE("property: monoid laws and length homomorphism") {
  Rng rng = make_rng(22);
  for (int i = 0; i < 300; ++i) {
    const TimedWord a = random_timed_word_upto(rng, 4, 3, 4);
    const TimedWord b = random_timed_word_upto(rng, 4, 3, 4);
    const TimedWord c = random_timed_word_upto(rng, 4, 3, 4);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(TimedWord{}, a) == a);
    CHECK(concat(a, TimedWord{}) == a);
    CHECK(concat(a, b).length() == a.length() + b.length());
  }
}

TEST_CASE("property: subword matches the pointwise definition") {
  Rng rng = make_rng(23);
  for (int i = 0; i < 200; ++i) {
    const TimedWord w = random_timed_word(rng, 5, 4, 4);
    const Duration len = w.length();
    // Random grid-aligned intervals on 1/12.
    const BigInt q = 12;
    const auto units = static_cast<int>(numerator_of(len * Duration(q)));
    std::vector<Interval> ivs;
    for (int k = 0; k < 3; ++k) {
      int a = std::uniform_int_distribution<int>(0, units)(rng);
      int b = std::uniform_int_distribution<int>(0, units)(rng);
      if (a > b) std::swap(a, b);
      ivs.push_back({Duration(BigInt(a), q), Duration(BigInt(b), q)});
    }
    const TimeSample s = TimeSample::from_intervals(ivs);
    const TimedWord sub = subword(w, s);
    REQUIRE(sub.length() == s.measure());
    for (const auto& t : sample_points(sub.length(), boost::multiprecision::lcm(common_denominator(w), q)))
      CHECK(value_at(sub, t) == oracle::subword_value(w, s, t));
  }
}

TEST_CASE("property: restrict composes") {
  Rng rng = make_rng(24);
  for (int i = 0; i < 200; ++i) {
    const TimedWord w = random_timed_word(rng, 5, 4, 4);
    const auto units = static_cast<int>(numerator_of(w.length() * 12));
    std::vector<int> cuts(4);
    for (auto& c : cuts) c = std::uniform_int_distribution<int>(0, units)(rng);
    std::sort(cuts.begin(), cuts.end());
    // restrict(restrict(w, a, b), c, d) with a <= a+c <= a+d <= b
    const Duration a(BigInt(cuts[0]), 12), b(BigInt(cuts[3]), 12);
    const Duration c(BigInt(cuts[1] - cuts[0]), 12), dd(BigInt(cuts[2] - cuts[0]), 12);
    CHECK(restrict(restrict(w, a, b), c, dd) == restrict(w, a + c, a + dd));
  }
}

TEST_CASE("property: embedding respects concatenation") {
  Rng rng = make_rng(25);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(rng, 6, 4);
    const Word v = random_word(rng, 6, 4);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(embed_classical(uv) == concat(embed_classical(u), embed_classical(v)));
  }
}
