#pragma once

#include "tplactic/classical.hpp"
#include "tplactic/greene.hpp"
#include "tplactic/timed_knuth.hpp"
#include "tplactic/timed_tableau.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tplactic {

using Json = nlohmann::json;

// Plain words: a digit string ("3421153") or comma-separated integers
// ("12,3,11", or "12," for one letter). Empty input is the empty word.
// Letters must be >= 1.
Word parse_word(std::string_view text);

// Digits when every letter is <= 9, comma-separated otherwise ("12," for
// a single letter above 9).
std::string format_word(std::span<const Letter> w);

// Timed words: a sequence of <letter>^<duration> tokens, where duration is
// a decimal numeral or p/q, optionally wrapped in braces ("3^{0.82}").
// Tokens may be separated by whitespace; braces make it optional. Empty
// input (or "∅") is the empty word. Throws ParseError with the byte
// offset of the problem; zero and negative durations are rejected.
TimedWord parse_timed_word(std::string_view text);

// Inverse of parse_timed_word: exact decimals where the value has a
// terminating expansion, p/q otherwise. Empty word formats as "".
std::string format_timed_word(const TimedWord& w);

// True when text uses timed notation (contains '^').
bool looks_timed(std::string_view text) noexcept;

// Timed notation parses directly; plain words are embedded with unit
// durations.
TimedWord parse_any_word(std::string_view text);

// One row per line, top row first.
std::string format_tableau(const Tableau& t);
std::string format_timed_tableau(const TimedTableau& t);

// {"rows": [[1,1,3],[2,4,5],[3]]}
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

// {"runs": [{"letter":3,"dur":"41/50"}, ...]}
Json to_json(const TimedWord& w);
TimedWord timed_word_from_json(const Json& j);

// {"rows": [<timed word>, ...]}
Json to_json(const TimedTableau& t);
TimedTableau timed_tableau_from_json(const Json& j);

// {"kind":"k2","u_len":"159/50","y_len":"73/100","x_len":"73/100",
//  "z_len":"147/100","direction":"reverse"}; direction defaults to forward.
TimedKnuthMove move_from_json(const Json& j);
Json to_json(const TimedKnuthMove& m);

// Exact fraction strings.
Json to_json(const ClassicalProfile& p);
Json to_json(const TimedProfile& p);
Json to_json(const RationalShape& s);

} // namespace tplactic
