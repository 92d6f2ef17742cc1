#include "tplactic/notation.hpp"

#include "tplactic/errors.hpp"

#include <cctype>

namespace tplactic {

namespace {

constexpr std::string_view kEmptySymbol = "∅";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Letter parse_letter(std::string_view digits, std::size_t offset) {
  if (digits.empty()) throw ParseError("expected a letter", offset);
  for (char c : digits)
    if (!is_digit(c)) throw ParseError("letters must be positive integers", offset);
  if (digits.size() > 9) throw ParseError("letter out of range", offset);
  Letter v = std::stoi(std::string(digits));
  if (v < 1) throw ParseError("letters must be >= 1", offset);
  return v;
}

Duration duration_from_json(const Json& j) {
  if (j.is_string()) return parse_duration(j.get<std::string>());
  if (j.is_number_integer()) return Duration(j.get<long long>());
  throw ParseError("duration must be a fraction string or an integer");
}

Duration required_duration(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return duration_from_json(j.at(key));
}

} // namespace

Word parse_word(std::string_view text) {
  std::string_view s = trim(text);
  Word w;
  if (s.empty() || s == kEmptySymbol) return w;
  if (s.find(',') != std::string_view::npos) {
    // A lone trailing comma marks a one-letter word such as "12,".
    if (s.size() > 1 && s.back() == ',' && s.find(',') == s.size() - 1) s.remove_suffix(1);
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      std::string_view piece = trim(s.substr(start, comma - start));
      std::size_t offset = static_cast<std::size_t>(piece.data() - text.data());
      w.push_back(parse_letter(piece, offset));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return w;
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    w.push_back(parse_letter(s.substr(i, 1), static_cast<std::size_t>(s.data() - text.data()) + i));
  return w;
}

std::string format_word(std::span<const Letter> w) {
  bool digits = true;
  for (Letter c : w) digits = digits && c <= 9;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  if (!digits && w.size() == 1) out += ',';
  return out;
}

TimedWord parse_timed_word(std::string_view text) {
  if (trim(text).empty() || trim(text) == kEmptySymbol) return {};
  std::vector<Run> runs;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (true) {
    while (i < n && is_space(text[i])) ++i;
    if (i == n) break;

    const std::size_t letter_start = i;
    while (i < n && is_digit(text[i])) ++i;
    const Letter letter = parse_letter(text.substr(letter_start, i - letter_start), letter_start);

    if (i == n || text[i] != '^') throw ParseError("expected '^' after letter", i);
    ++i;
    const bool braced = i < n && text[i] == '{';
    if (braced) ++i;
    const std::size_t dur_start = i;
    while (i < n && (is_digit(text[i]) || text[i] == '.' || text[i] == '/' || text[i] == '-')) ++i;
    if (i == dur_start) throw ParseError("expected a duration", dur_start);
    Duration d;
    try {
      d = parse_duration(text.substr(dur_start, i - dur_start));
    } catch (const ParseError&) {
      throw ParseError("malformed duration", dur_start);
    }
    if (d <= 0) throw ParseError("durations must be positive", dur_start);
    if (braced) {
      if (i == n || text[i] != '}') throw ParseError("expected '}'", i);
      ++i;
    } else if (i < n && !is_space(text[i])) {
      throw ParseError("expected whitespace after duration", i);
    }
    runs.push_back(Run{letter, std::move(d)});
  }
  return TimedWord::normalize(std::move(runs));
}

std::string format_timed_word(const TimedWord& w) {
  std::string out;
  for (const auto& run : w.runs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(run.letter);
    out += '^';
    out += to_exact_string(run.duration);
  }
  return out;
}

bool looks_timed(std::string_view text) noexcept {
  return text.find('^') != std::string_view::npos;
}

TimedWord parse_any_word(std::string_view text) {
  if (looks_timed(text)) return parse_timed_word(text);
  return embed_classical(parse_word(text));
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) out += format_word(row) + "\n";
  return out;
}

std::string format_timed_tableau(const TimedTableau& t) {
  std::string out;
  for (const auto& row : t.rows()) out += format_timed_word(row) + "\n";
  return out;
}

Json to_json(const Tableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return Json{{"rows", rows}};
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
    throw ParseError("tableau JSON needs a \"rows\" array");
  std::vector<Word> rows;
  for (const auto& row : j.at("rows")) {
    if (!row.is_array()) throw ParseError("tableau rows must be arrays of letters");
    Word w;
    for (const auto& c : row) {
      if (!c.is_number_integer()) throw ParseError("letters must be integers");
      w.push_back(c.get<Letter>());
    }
    rows.push_back(std::move(w));
  }
  return Tableau::from_rows(std::move(rows));
}

Json to_json(const TimedWord& w) {
  Json runs = Json::array();
  for (const auto& run : w.runs())
    runs.push_back(Json{{"letter", run.letter}, {"dur", to_fraction_string(run.duration)}});
  return Json{{"runs", runs}};
}

TimedWord timed_word_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("runs") || !j.at("runs").is_array())
    throw ParseError("timed word JSON needs a \"runs\" array");
  std::vector<Run> runs;
  for (const auto& r : j.at("runs")) {
    if (!r.is_object() || !r.contains("letter") || !r.at("letter").is_number_integer())
      throw ParseError("each run needs an integer \"letter\"");
    Duration d = required_duration(r, "dur");
    if (d <= 0) throw ParseError("durations must be positive");
    Letter c = r.at("letter").get<Letter>();
    if (c < 1) throw ParseError("letters must be >= 1");
    runs.push_back(Run{c, std::move(d)});
  }
  return TimedWord::normalize(std::move(runs));
}

Json to_json(const TimedTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(to_json(row));
  return Json{{"rows", rows}};
}

TimedTableau timed_tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
    throw ParseError("timed tableau JSON needs a \"rows\" array");
  std::vector<TimedWord> rows;
  for (const auto& row : j.at("rows")) rows.push_back(timed_word_from_json(row));
  return TimedTableau::from_rows(std::move(rows));
}

TimedKnuthMove move_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("move JSON must be an object");
  TimedKnuthMove m;
  const std::string kind = j.value("kind", "");
  if (kind == "k1")
    m.kind = KnuthKind::k1;
  else if (kind == "k2")
    m.kind = KnuthKind::k2;
  else
    throw ParseError("move \"kind\" must be \"k1\" or \"k2\"");
  const std::string dir = j.value("direction", "forward");
  if (dir == "forward")
    m.direction = MoveDirection::forward;
  else if (dir == "reverse")
    m.direction = MoveDirection::reverse;
  else
    throw ParseError("move \"direction\" must be \"forward\" or \"reverse\"");
  m.position = required_duration(j, "u_len");
  const Duration x = required_duration(j, "x_len");
  const Duration y = required_duration(j, "y_len");
  const Duration z = required_duration(j, "z_len");
  const auto order = factor_order(m.kind, m.direction);
  auto len = [&](Factor f) { return f == Factor::x ? x : f == Factor::y ? y : z; };
  m.cut1 = len(order[0]);
  m.cut2 = len(order[1]);
  m.cut3 = len(order[2]);
  return m;
}

Json to_json(const TimedKnuthMove& m) {
  const auto order = factor_order(m.kind, m.direction);
  const Duration* cuts[] = {&m.cut1, &m.cut2, &m.cut3};
  Json j{{"kind", m.kind == KnuthKind::k1 ? "k1" : "k2"},
         {"direction", m.direction == MoveDirection::forward ? "forward" : "reverse"},
         {"u_len", to_fraction_string(m.position)}};
  for (std::size_t i = 0; i < 3; ++i) {
    const char* key = order[i] == Factor::x ? "x_len" : order[i] == Factor::y ? "y_len" : "z_len";
    j[key] = to_fraction_string(*cuts[i]);
  }
  return j;
}

Json to_json(const ClassicalProfile& p) {
  Json a = Json::array();
  for (auto v : p.values) a.push_back(std::to_string(v));
  return a;
}

Json to_json(const TimedProfile& p) {
  Json a = Json::array();
  for (const auto& v : p.values) a.push_back(to_fraction_string(v));
  return a;
}

Json to_json(const RationalShape& s) {
  Json a = Json::array();
  for (const auto& v : s) a.push_back(to_fraction_string(v));
  return a;
}

} // namespace tplactic
