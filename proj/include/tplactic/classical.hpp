#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace tplactic {

// Letters of the ordered alphabet {1, ..., n}. The bound n belongs to the
// surrounding context, not to the letter.
using Letter = std::int32_t;

// Finite sequence of letters; the empty word is the monoid identity.
using Word = std::vector<Letter>;

// Integer partition: weakly decreasing positive parts.
using IntShape = std::vector<std::size_t>;

bool is_row(std::span<const Letter> w) noexcept;

struct RowInsertResult {
  std::optional<Letter> bumped;
  Word row;

  bool operator==(const RowInsertResult&) const = default;
};

// Inserts `a` into the row `u`: appends when no entry exceeds `a`,
// otherwise replaces the leftmost entry greater than `a` and bumps it.
// Throws PreconditionError if `u` is not a row or `a` < 1.
RowInsertResult row_insert(Word u, Letter a);

// Semistandard tableau stored as rows, top row first. Every instance
// satisfies: rows weakly increase, row lengths weakly decrease, columns
// strictly increase downward, no empty rows.
class Tableau {
public:
  Tableau() = default;

  // Validates and throws PreconditionError on any violated invariant.
  static Tableau from_rows(std::vector<Word> rows);
  static bool is_valid(const std::vector<Word>& rows) noexcept;

  const std::vector<Word>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t size() const noexcept;

  bool operator==(const Tableau&) const = default;

private:
  friend Tableau tableau_insert(Tableau t, Letter a);
  explicit Tableau(std::vector<Word> rows) : rows_(std::move(rows)) {}

  std::vector<Word> rows_;
};

// Bumps `a` down through the rows; a bump out of the last row opens a new
// bottom row.
Tableau tableau_insert(Tableau t, Letter a);

// P(w): tableau_insert folded over w from the empty tableau.
Tableau insertion_tableau(std::span<const Letter> w);

// Every intermediate P(c_1...c_i), i = 1..k, in order.
std::vector<Tableau> insertion_steps(std::span<const Letter> w);

// Rows concatenated bottom row first.
Word reading_word(const Tableau& t);

IntShape shape(const Tableau& t);

// All words reachable from w by exactly one K1 (xzy <-> zxy, x <= y < z)
// or K2 (yxz <-> yzx, x < y <= z) move, applied in either direction.
std::set<Word> knuth_neighbors(std::span<const Letter> w);

// Breadth-first search over Knuth moves starting at w. Throws
// BudgetExceeded when more than `budget` distinct words would be visited
// before the search settles; returns false for words that differ in
// length or letter content without searching.
bool knuth_equivalent_bfs(std::span<const Letter> w, std::span<const Letter> target,
                          std::size_t budget);

// Production-path equivalence: P(w) == P(w').
bool knuth_equivalent(std::span<const Letter> w, std::span<const Letter> target);

} // namespace tplactic
