#include "tplactic/generators.hpp"

#include "tplactic/errors.hpp"

#include <algorithm>

namespace tplactic {

namespace {

template <class Int>
Int uniform(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

// Strictly increasing letters drawn from [lo, hi], between 1 and
// max_count of them (fewer if the range is short).
std::vector<Letter> increasing_letters(Rng& rng, Letter lo, Letter hi, std::size_t max_count) {
  std::vector<Letter> pool;
  for (Letter c = lo; c <= hi; ++c) pool.push_back(c);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t count = uniform<std::size_t>(rng, 1, std::min(max_count, pool.size()));
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Splits `units` (>= parts) into `parts` positive integers.
std::vector<std::size_t> composition(Rng& rng, std::size_t units, std::size_t parts) {
  std::vector<std::size_t> cuts;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 1; i < units; ++i) candidates.push_back(i);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  cuts.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (auto c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(units - prev);
  return out;
}

// A timed row on the given letters with total length exactly units/den.
TimedWord row_with_length(Rng& rng, const std::vector<Letter>& letters, std::size_t units,
                          unsigned den) {
  const auto parts = composition(rng, units, letters.size());
  std::vector<Run> runs;
  for (std::size_t i = 0; i < letters.size(); ++i)
    runs.push_back(Run{letters[i], Duration(BigInt(parts[i]), BigInt(den))});
  return TimedWord::normalize(std::move(runs));
}

TimedWord random_row(Rng& rng, const std::vector<Letter>& letters, unsigned max_den) {
  std::vector<Run> runs;
  for (Letter c : letters) runs.push_back(Run{c, random_duration(rng, max_den)});
  return TimedWord::normalize(std::move(runs));
}

} // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Word random_word(Rng& rng, std::size_t max_length, Letter letters) {
  Word w(uniform<std::size_t>(rng, 0, max_length));
  for (auto& c : w) c = uniform<Letter>(rng, 1, letters);
  return w;
}

Duration random_duration(Rng& rng, unsigned max_den) {
  const unsigned q = uniform<unsigned>(rng, 1, std::max(1u, max_den));
  const unsigned p = uniform<unsigned>(rng, 1, 2 * q);
  return Duration(BigInt(p), BigInt(q));
}

TimedWord random_timed_word(Rng& rng, std::size_t runs, Letter letters, unsigned max_den) {
  std::vector<Run> out;
  Letter prev = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    Letter c = uniform<Letter>(rng, 1, letters);
    if (letters >= 2)
      while (c == prev) c = uniform<Letter>(rng, 1, letters);
    out.push_back(Run{c, random_duration(rng, max_den)});
    prev = c;
  }
  return TimedWord::normalize(std::move(out));
}

TimedWord random_timed_word_upto(Rng& rng, std::size_t max_runs, Letter letters,
                                 unsigned max_den) {
  return random_timed_word(rng, uniform<std::size_t>(rng, 0, max_runs), letters, max_den);
}

MoveInstance random_move_instance(Rng& rng, Letter letters, unsigned max_den) {
  if (letters < 2) throw PreconditionError("random_move_instance: need at least two letters");
  const KnuthKind kind = uniform(rng, 0, 1) == 0 ? KnuthKind::k1 : KnuthKind::k2;
  const MoveDirection direction =
      uniform(rng, 0, 1) == 0 ? MoveDirection::forward : MoveDirection::reverse;

  // The pair of factors that must share a length: (y, z) for k1, (x, y)
  // for k2. The first of the pair ends strictly below where the second
  // starts; the free factor only has to keep x y z a row.
  const std::vector<Letter> low = increasing_letters(rng, 1, letters - 1, 2);
  const std::vector<Letter> high = increasing_letters(rng, low.back() + 1, letters, 2);
  const unsigned den = uniform<unsigned>(rng, 1, std::max(1u, max_den));
  const std::size_t min_units = std::max(low.size(), high.size());
  const std::size_t units = uniform<std::size_t>(rng, min_units, min_units + 2 * den);
  const TimedWord first = row_with_length(rng, low, units, den);
  const TimedWord second = row_with_length(rng, high, units, den);

  TimedWord x, y, z;
  if (kind == KnuthKind::k1) {
    y = first;
    z = second;
    x = random_row(rng, increasing_letters(rng, 1, y.front().letter, 2), max_den);
  } else {
    x = first;
    y = second;
    z = random_row(rng, increasing_letters(rng, y.back().letter, letters, 2), max_den);
  }

  const TimedWord prefix = random_timed_word_upto(rng, 2, letters, max_den);
  const TimedWord suffix = random_timed_word_upto(rng, 2, letters, max_den);
  auto factor = [&](Factor f) -> const TimedWord& {
    return f == Factor::x ? x : f == Factor::y ? y : z;
  };
  const auto order = factor_order(kind, direction);
  const TimedWord parts[] = {prefix, factor(order[0]), factor(order[1]), factor(order[2]), suffix};

  MoveInstance inst;
  inst.word = concat(parts);
  inst.move.kind = kind;
  inst.move.direction = direction;
  inst.move.position = prefix.length();
  inst.move.cut1 = factor(order[0]).length();
  inst.move.cut2 = factor(order[1]).length();
  inst.move.cut3 = factor(order[2]).length();
  return inst;
}

} // namespace tplactic
