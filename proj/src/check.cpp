#include "tplactic/check.hpp"

#include "tplactic/generators.hpp"

#include <functional>
#include <sstream>

namespace tplactic {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

// Returns an empty string on success, a counterexample description
// otherwise.
using Property = std::function<std::string(Rng&)>;

struct Suite {
  const char* name;
  Property property;
};

std::string classical_greene(Rng& rng) {
  const Word w = random_word(rng, 9, 4);
  const auto fast = greene_classical(w);
  for (std::size_t r = 1; r <= fast.values.size() + 1; ++r)
    if (fast.at(r) != greene_classical_oracle(w, r))
      return "w=" + format_word(w) + " r=" + std::to_string(r);
  return {};
}

std::string knuth_neighbors_preserve_p(Rng& rng) {
  const Word w = random_word(rng, 8, 4);
  const Tableau p = insertion_tableau(w);
  for (const auto& n : knuth_neighbors(w)) {
    if (insertion_tableau(n) != p) return "w=" + format_word(w) + " neighbor=" + format_word(n);
    if (!knuth_neighbors(n).contains(w))
      return "asymmetric: w=" + format_word(w) + " neighbor=" + format_word(n);
  }
  return {};
}

std::string classical_reading_roundtrip(Rng& rng) {
  const Tableau t = insertion_tableau(random_word(rng, 12, 5));
  if (insertion_tableau(reading_word(t)) != t) return "t=" + to_json(t).dump();
  return {};
}

std::string timed_greene(Rng& rng) {
  const TimedWord w = random_timed_word_upto(rng, 5, 4, 4);
  const auto fast = greene_timed(w);
  for (std::size_t r = 1; r <= fast.values.size() + 1; ++r)
    if (fast.at(r) != greene_timed_oracle(w, r))
      return "w=" + format_timed_word(w) + " r=" + std::to_string(r);
  return {};
}

std::string move_invariance(Rng& rng) {
  const MoveInstance inst = random_move_instance(rng, 4, 4);
  const TimedWord moved = apply_move(inst.word, inst.move);
  const std::string where = "w=" + format_timed_word(inst.word) + " move=" + to_json(inst.move).dump();
  if (timed_insertion_tableau(moved) != timed_insertion_tableau(inst.word)) return "P changed: " + where;
  if (letter_durations(moved) != letter_durations(inst.word)) return "histogram changed: " + where;
  if (apply_move(moved, inverse(inst.move)) != inst.word) return "inverse failed: " + where;
  for (std::size_t r = 1; r <= 3; ++r)
    if (greene_timed_oracle(inst.word, r) != greene_timed_oracle(moved, r))
      return "a_" + std::to_string(r) + " changed: " + where;
  return {};
}

std::string timed_reading_roundtrip(Rng& rng) {
  const TimedTableau t = timed_insertion_tableau(random_timed_word_upto(rng, 8, 5, 4));
  if (!TimedTableau::is_valid(t.rows())) return "invalid P: " + to_json(t).dump();
  if (timed_insertion_tableau(timed_reading_word(t)) != t) return "t=" + to_json(t).dump();
  return {};
}

std::string parse_format_roundtrip(Rng& rng) {
  const TimedWord w = random_timed_word_upto(rng, 8, 12, 7);
  const std::string text = format_timed_word(w);
  if (parse_timed_word(text) != w) return "text=" + text;
  return {};
}

std::string discretization_stability(Rng& rng) {
  const TimedWord w = random_timed_word_upto(rng, 5, 4, 4);
  for (std::size_t r = 1; r <= 3; ++r)
    if (greene_timed_oracle(w, r, 1) != greene_timed_oracle(w, r, 2))
      return "w=" + format_timed_word(w) + " r=" + std::to_string(r);
  return {};
}

std::string embedding_compatibility(Rng& rng) {
  const Word w = random_word(rng, 8, 4);
  const TimedWord e = embed_classical(w);
  if (timed_insertion_tableau(e) != embed_tableau(insertion_tableau(w)))
    return "tableau differs: w=" + format_word(w);
  const auto classical = greene_classical(w);
  const auto timed = greene_timed(e);
  if (timed.values.size() != classical.values.size()) return "profile length differs: w=" + format_word(w);
  for (std::size_t i = 0; i < timed.values.size(); ++i)
    if (timed.values[i] != Duration(classical.values[i])) return "profile differs: w=" + format_word(w);
  return {};
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"classical-greene-oracle", classical_greene},
      {"knuth-neighbors-preserve-P", knuth_neighbors_preserve_p},
      {"classical-reading-roundtrip", classical_reading_roundtrip},
      {"timed-greene-oracle", timed_greene},
      {"timed-move-invariance", move_invariance},
      {"timed-reading-roundtrip", timed_reading_roundtrip},
      {"parse-format-roundtrip", parse_format_roundtrip},
      {"discretization-stability", discretization_stability},
      {"embedding-compatibility", embedding_compatibility},
  };
  return all;
}

} // namespace

bool CheckReport::ok() const noexcept {
  for (const auto& s : suites)
    if (!s.ok()) return false;
  return true;
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << "seed " << seed << ", " << iterations << " iterations per suite\n";
  for (const auto& s : suites) {
    out << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.passed << " passed, " << s.failed
        << " failed\n";
    for (const auto& f : s.failures) out << "    " << f << "\n";
  }
  return out.str();
}

Json CheckReport::to_json() const {
  Json arr = Json::array();
  for (const auto& s : suites)
    arr.push_back(Json{{"name", s.name},
                       {"passed", s.passed},
                       {"failed", s.failed},
                       {"failures", s.failures}});
  return Json{{"seed", seed}, {"iterations", iterations}, {"ok", ok()}, {"suites", arr}};
}

CheckReport run_checks(std::size_t iterations, std::uint64_t seed) {
  CheckReport report;
  report.seed = seed;
  report.iterations = iterations;
  std::uint64_t stream = 0;
  for (const auto& suite : suites()) {
    SuiteResult result;
    result.name = suite.name;
    Rng rng = make_rng(seed, stream++);
    for (std::size_t i = 0; i < iterations; ++i) {
      std::string failure;
      try {
        failure = suite.property(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure.empty()) {
        ++result.passed;
      } else {
        ++result.failed;
        if (result.failures.size() < kMaxRecordedFailures) result.failures.push_back(failure);
      }
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

} // namespace tplactic
