#include "tplactic/classical.hpp"

#include "tplactic/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace tplactic {

bool is_row(std::span<const Letter> w) noexcept {
  return std::is_sorted(w.begin(), w.end());
}

RowInsertResult row_insert(Word u, Letter a) {
  if (a < 1) throw PreconditionError("row_insert: letter must be >= 1");
  if (!is_row(u)) throw PreconditionError("row_insert: input is not a row");
  auto it = std::upper_bound(u.begin(), u.end(), a);
  if (it == u.end()) {
    u.push_back(a);
    return {std::nullopt, std::move(u)};
  }
  Letter bumped = *it;
  *it = a;
  return {bumped, std::move(u)};
}

bool Tableau::is_valid(const std::vector<Word>& rows) noexcept {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Word& row = rows[i];
    if (row.empty() || !is_row(row)) return false;
    if (row.front() < 1) return false;
    if (i == 0) continue;
    const Word& above = rows[i - 1];
    if (above.size() < row.size()) return false;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!(above[j] < row[j])) return false;
  }
  return true;
}

Tableau Tableau::from_rows(std::vector<Word> rows) {
  if (!is_valid(rows)) throw PreconditionError("rows do not form a semistandard tableau");
  return Tableau(std::move(rows));
}

std::size_t Tableau::size() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Tableau tableau_insert(Tableau t, Letter a) {
  if (a < 1) throw PreconditionError("tableau_insert: letter must be >= 1");
  std::optional<Letter> carry = a;
  for (auto& row : t.rows_) {
    // Rows are valid by construction, so skip the re-check in row_insert.
    auto it = std::upper_bound(row.begin(), row.end(), *carry);
    if (it == row.end()) {
      row.push_back(*carry);
      carry.reset();
      break;
    }
    std::swap(*it, *carry);
  }
  if (carry) t.rows_.push_back(Word{*carry});
  return t;
}

Tableau insertion_tableau(std::span<const Letter> w) {
  Tableau t;
  for (Letter c : w) t = tableau_insert(std::move(t), c);
  return t;
}

std::vector<Tableau> insertion_steps(std::span<const Letter> w) {
  std::vector<Tableau> steps;
  steps.reserve(w.size());
  Tableau t;
  for (Letter c : w) {
    t = tableau_insert(std::move(t), c);
    steps.push_back(t);
  }
  return steps;
}

Word reading_word(const Tableau& t) {
  Word out;
  out.reserve(t.size());
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

IntShape shape(const Tableau& t) {
  IntShape parts;
  parts.reserve(t.row_count());
  for (const auto& row : t.rows()) parts.push_back(row.size());
  return parts;
}

std::set<Word> knuth_neighbors(std::span<const Letter> w) {
  std::set<Word> out;
  if (w.size() < 3) return out;
  Word base(w.begin(), w.end());
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const Letter a = w[i], b = w[i + 1], c = w[i + 2];
    // K1 swaps the first two letters of the window:
    //   xzy -> zxy reads a=x, b=z, c=y with a <= c < b;
    //   zxy -> xzy reads a=z, b=x, c=y with b <= c < a.
    if ((a <= c && c < b) || (b <= c && c < a)) {
      Word next = base;
      std::swap(next[i], next[i + 1]);
      out.insert(std::move(next));
    }
    // K2 swaps the last two letters of the window:
    //   yxz -> yzx reads a=y, b=x, c=z with b < a <= c;
    //   yzx -> yxz reads a=y, b=z, c=x with c < a <= b.
    if ((b < a && a <= c) || (c < a && a <= b)) {
      Word next = base;
      std::swap(next[i + 1], next[i + 2]);
      out.insert(std::move(next));
    }
  }
  return out;
}

bool knuth_equivalent_bfs(std::span<const Letter> w, std::span<const Letter> target,
                          std::size_t budget) {
  if (budget == 0) throw PreconditionError("knuth_equivalent_bfs: budget must be positive");
  Word start(w.begin(), w.end());
  Word goal(target.begin(), target.end());
  if (start == goal) return true;
  {
    Word a = start, b = goal;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::set<Word> seen{start};
  std::deque<Word> frontier{start};
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : knuth_neighbors(cur)) {
      if (next == goal) return true;
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw BudgetExceeded("Knuth class exceeds budget of " + std::to_string(budget) +
                               " words");
        frontier.push_back(next);
      }
    }
  }
  return false;
}

bool knuth_equivalent(std::span<const Letter> w, std::span<const Letter> target) {
  return insertion_tableau(w) == insertion_tableau(target);
}

} // namespace tplactic
