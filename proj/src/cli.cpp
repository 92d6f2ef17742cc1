#include "tplactic/cli.hpp"

#include "tplactic/check.hpp"
#include "tplactic/errors.hpp"
#include "tplactic/generators.hpp"
#include "tplactic/notation.hpp"
#include "tplactic/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace tplactic {

namespace {

// Raised for verification outcomes that should exit with status 1.
class VerificationFailure : public Error {
public:
  using Error::Error;
};

std::string shape_text(const IntShape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::string shape_text(const RationalShape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + to_display_string(s[i]);
  return out + ")";
}

std::string profile_text(const ClassicalProfile& p) {
  std::string out;
  for (std::size_t i = 0; i < p.values.size(); ++i) out += (i ? " " : "") + std::to_string(p.values[i]);
  return out;
}

std::string profile_text(const TimedProfile& p) {
  std::string out;
  for (std::size_t i = 0; i < p.values.size(); ++i) out += (i ? " " : "") + to_display_string(p.values[i]);
  return out;
}

std::string word_or_empty(std::string text) { return text.empty() ? "∅" : text; }

Json shape_json(const IntShape& s) { return Json(s); }

struct Options {
  bool json = false;

  std::string insert_word;
  bool insert_steps = false;

  std::string greene_word;
  bool greene_oracle = false;
  bool greene_oracle_only = false;
  unsigned greene_refine = 1;

  std::string equiv_left;
  std::string equiv_right;
  std::string equiv_move;
  std::size_t equiv_bfs = 0;
  bool equiv_assert = false;

  std::string render_input;
  std::string render_svg_path;
  bool render_tableau = false;
  std::string render_scale = "100";
  std::string render_height = "24";

  std::size_t random_runs = 5;
  Letter random_letters = 4;
  unsigned random_max_den = 4;
  std::uint64_t random_seed = 1;

  std::size_t check_iters = 100;
  std::uint64_t check_seed = 1;
};

std::uint64_t seed_override(std::uint64_t fallback) {
  if (const char* env = std::getenv("TIMED_PLACTIC_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("TIMED_PLACTIC_SEED must be a non-negative integer");
    }
  }
  return fallback;
}

int cmd_insert(const Options& o, std::ostream& out) {
  if (!looks_timed(o.insert_word)) {
    const Word w = parse_word(o.insert_word);
    const auto steps = insertion_steps(w);
    const Tableau p = steps.empty() ? Tableau{} : steps.back();
    if (o.json) {
      Json j{{"kind", "classical"},
             {"word", format_word(w)},
             {"tableau", to_json(p)},
             {"shape", shape_json(shape(p))}};
      if (o.insert_steps) {
        Json arr = Json::array();
        for (const auto& t : steps) arr.push_back(to_json(t));
        j["steps"] = arr;
      }
      out << j.dump() << "\n";
      return kExitOk;
    }
    if (o.insert_steps) {
      for (std::size_t i = 0; i < steps.size(); ++i)
        out << "step " << i + 1 << " (insert " << w[i] << "):\n" << format_tableau(steps[i]) << "\n";
      out << "P(w):\n";
    }
    out << format_tableau(p) << "shape: " << shape_text(shape(p)) << "\n";
    return kExitOk;
  }

  const TimedWord w = parse_timed_word(o.insert_word);
  std::vector<TimedTableau> steps;
  TimedTableau p;
  for (const auto& run : w.runs()) {
    p = timed_tableau_insert(p, TimedWord::single(run.letter, run.duration));
    if (o.insert_steps) steps.push_back(p);
  }
  if (o.json) {
    Json j{{"kind", "timed"},
           {"word", to_json(w)},
           {"tableau", to_json(p)},
           {"shape", to_json(timed_shape(p))}};
    if (o.insert_steps) {
      Json arr = Json::array();
      for (const auto& t : steps) arr.push_back(to_json(t));
      j["steps"] = arr;
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (o.insert_steps) {
    for (std::size_t i = 0; i < steps.size(); ++i)
      out << "step " << i + 1 << " (insert " << w.runs()[i].letter << "^"
          << to_exact_string(w.runs()[i].duration) << "):\n"
          << format_timed_tableau(steps[i]) << "\n";
    out << "P(w):\n";
  }
  out << format_timed_tableau(p) << "shape: " << shape_text(timed_shape(p)) << "\n";
  return kExitOk;
}

template <class Profile, class Value, class OracleAt>
int report_greene(const Options& o, std::ostream& out, const char* kind, const Profile& fast,
                  const Value& total, OracleAt oracle_at) {
  std::optional<Profile> oracle;
  std::string oracle_error;
  if (o.greene_oracle || o.greene_oracle_only) {
    try {
      Profile p;
      if (o.greene_oracle_only) {
        // Without the tableau, stop once the invariant reaches the full length.
        while (!(p.values.empty() ? total == Value(0) : p.values.back() == total))
          p.values.push_back(oracle_at(p.values.size() + 1));
      } else {
        for (std::size_t r = 1; r <= fast.values.size(); ++r) p.values.push_back(oracle_at(r));
      }
      oracle = std::move(p);
    } catch (const BudgetExceeded& e) {
      if (o.greene_oracle_only) throw;
      oracle_error = e.what();
    }
  }

  std::string mode = "fast";
  std::optional<bool> agreement;
  const Profile* shown = &fast;
  if (oracle && o.greene_oracle_only) {
    mode = "oracle";
    shown = &*oracle;
  } else if (oracle) {
    mode = "both";
    agreement = *oracle == fast;
  }

  if (o.json) {
    Json j{{"kind", kind}, {"profile", to_json(*shown)}, {"mode", mode}};
    j["agreement"] = agreement ? Json(*agreement) : Json(nullptr);
    if (!oracle_error.empty()) j["oracle_error"] = oracle_error;
    out << j.dump() << "\n";
  } else {
    out << "profile: " << profile_text(*shown) << "\n";
    out << "mode: " << mode;
    if (agreement) out << ", agreement: " << (*agreement ? "yes" : "NO");
    out << "\n";
    if (!oracle_error.empty()) out << "oracle unavailable: " << oracle_error << "\n";
    if (agreement && !*agreement) out << "oracle profile: " << profile_text(*oracle) << "\n";
  }
  return agreement.value_or(true) ? kExitOk : kExitVerification;
}

int cmd_greene(const Options& o, std::ostream& out) {
  if (!looks_timed(o.greene_word)) {
    const Word w = parse_word(o.greene_word);
    const auto fast = greene_classical(w);
    return report_greene(o, out, "classical", fast, w.size(),
                         [&](std::size_t r) { return greene_classical_oracle(w, r); });
  }
  const TimedWord w = parse_timed_word(o.greene_word);
  const auto fast = greene_timed(w);
  return report_greene(o, out, "timed", fast, w.length(), [&](std::size_t r) {
    return greene_timed_oracle(w, r, o.greene_refine);
  });
}

Json read_json_argument(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '{' && std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int cmd_equiv(const Options& o, std::ostream& out) {
  if (o.equiv_right.empty() && o.equiv_move.empty())
    throw ParseError("equiv needs a second word or --move");

  const bool classical = o.equiv_move.empty() && !looks_timed(o.equiv_left) &&
                         !looks_timed(o.equiv_right);
  if (classical) {
    const Word a = parse_word(o.equiv_left);
    const Word b = parse_word(o.equiv_right);
    const Tableau pa = insertion_tableau(a);
    const Tableau pb = insertion_tableau(b);
    const bool equivalent = pa == pb;
    std::optional<bool> bfs;
    if (o.equiv_bfs > 0) bfs = knuth_equivalent_bfs(a, b, o.equiv_bfs);
    if (o.json) {
      Json j{{"kind", "classical"},
             {"equivalent", equivalent},
             {"tableau_left", to_json(pa)},
             {"tableau_right", to_json(pb)}};
      if (bfs) j["bfs_equivalent"] = *bfs;
      out << j.dump() << "\n";
    } else {
      out << "equivalent=" << (equivalent ? "true" : "false") << "\n";
      out << "P(" << word_or_empty(format_word(a)) << "):\n" << format_tableau(pa);
      out << "P(" << word_or_empty(format_word(b)) << "):\n" << format_tableau(pb);
      if (bfs) out << "bfs: " << (*bfs ? "true" : "false") << "\n";
    }
    if (bfs && *bfs != equivalent)
      throw VerificationFailure("move search and tableau comparison disagree");
    return (o.equiv_assert && !equivalent) ? kExitVerification : kExitOk;
  }

  const TimedWord a = parse_any_word(o.equiv_left);
  std::optional<TimedWord> moved;
  if (!o.equiv_move.empty()) moved = apply_move(a, move_from_json(read_json_argument(o.equiv_move)));
  const TimedWord b = o.equiv_right.empty() ? *moved : parse_any_word(o.equiv_right);
  const TimedTableau pa = timed_insertion_tableau(a);
  const TimedTableau pb = timed_insertion_tableau(b);
  const bool equivalent = pa == pb;
  std::optional<bool> move_matches;
  if (moved && !o.equiv_right.empty()) move_matches = *moved == b;

  if (o.json) {
    Json j{{"kind", "timed"},
           {"equivalent", equivalent},
           {"tableau_left", to_json(pa)},
           {"tableau_right", to_json(pb)}};
    if (moved) j["moved"] = to_json(*moved);
    if (move_matches) j["move_matches"] = *move_matches;
    out << j.dump() << "\n";
  } else {
    out << "equivalent=" << (equivalent ? "true" : "false") << "\n";
    if (moved) out << "moved: " << word_or_empty(format_timed_word(*moved)) << "\n";
    if (move_matches) out << "move result matches second word: " << (*move_matches ? "yes" : "no") << "\n";
    out << "P(left):\n" << format_timed_tableau(pa);
    out << "P(right):\n" << format_timed_tableau(pb);
  }
  if (move_matches && !*move_matches) return kExitVerification;
  return (o.equiv_assert && !equivalent) ? kExitVerification : kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  RenderSpec spec;
  spec.unit_scale = parse_duration(o.render_scale);
  spec.strip_height = parse_duration(o.render_height);

  std::string svg;
  const std::string& in = o.render_input;
  const bool json_input = (!in.empty() && in.front() == '{') ||
                          (!looks_timed(in) && std::filesystem::is_regular_file(in));
  if (json_input) {
    const Json j = read_json_argument(in);
    if (j.contains("runs")) {
      const TimedWord w = timed_word_from_json(j);
      spec.target = o.render_tableau ? RenderSpec::Target::tableau : RenderSpec::Target::ribbon;
      svg = o.render_tableau ? render_svg(timed_insertion_tableau(w), spec) : render_svg(w, spec);
    } else {
      const bool classical_rows = j.contains("rows") && j.at("rows").is_array() &&
                                  !j.at("rows").empty() && j.at("rows").front().is_array();
      const TimedTableau t =
          classical_rows ? embed_tableau(tableau_from_json(j)) : timed_tableau_from_json(j);
      spec.target = RenderSpec::Target::tableau;
      svg = render_svg(t, spec);
    }
  } else {
    const TimedWord w = parse_any_word(in);
    if (o.render_tableau) {
      spec.target = RenderSpec::Target::tableau;
      svg = render_svg(timed_insertion_tableau(w), spec);
    } else {
      svg = render_svg(w, spec);
    }
  }

  std::ofstream file(o.render_svg_path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + o.render_svg_path + "' for writing");
  file << svg;
  if (!file) throw ParseError("failed writing '" + o.render_svg_path + "'");
  if (o.json)
    out << Json{{"svg", o.render_svg_path}, {"bytes", svg.size()}}.dump() << "\n";
  else
    out << "wrote " << o.render_svg_path << " (" << svg.size() << " bytes)\n";
  return kExitOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  if (o.random_letters < 1) throw ParseError("--letters must be >= 1");
  if (o.random_max_den < 1) throw ParseError("--max-den must be >= 1");
  Rng rng = make_rng(seed_override(o.random_seed));
  const TimedWord w = random_timed_word(rng, o.random_runs, o.random_letters, o.random_max_den);
  if (o.json)
    out << Json{{"word", format_timed_word(w)}, {"runs", to_json(w).at("runs")}}.dump() << "\n";
  else
    out << format_timed_word(w) << "\n";
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const CheckReport report = run_checks(o.check_iters, seed_override(o.check_seed));
  if (o.json)
    out << report.to_json().dump() << "\n";
  else
    out << report.to_text();
  return report.ok() ? kExitOk : kExitVerification;
}

void emit_error(std::ostream& err, bool json, const char* kind, const std::string& message) {
  if (json)
    err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  else
    err << "error: " << message << "\n";
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Schensted insertion, Knuth equivalence and Greene invariants for classical and "
               "timed words",
               args.empty() ? "tplactic" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit machine-readable JSON");

  auto* insert = app.add_subcommand("insert", "Insertion tableau of a word or timed word");
  insert->add_option("word", o.insert_word, "Word (3421153, 12,3,11) or timed word (3^0.82 5^0.08)")
      ->required();
  insert->add_flag("--steps", o.insert_steps, "Also print every intermediate tableau");

  auto* greene = app.add_subcommand("greene", "Greene invariants");
  greene->add_option("word", o.greene_word, "Word or timed word")->required();
  greene->add_flag("--oracle", o.greene_oracle, "Cross-check against the exhaustive oracle");
  greene->add_flag("--oracle-only", o.greene_oracle_only, "Report only the oracle values");
  greene->add_option("--refine", o.greene_refine, "Grid refinement factor for the timed oracle")
      ->check(CLI::PositiveNumber);

  auto* equiv = app.add_subcommand("equiv", "Knuth equivalence by insertion-tableau equality");
  equiv->add_option("left", o.equiv_left, "First word")->required();
  equiv->add_option("right", o.equiv_right, "Second word");
  equiv->add_option("--move", o.equiv_move, "Move JSON (or file) to apply to the first word");
  equiv->add_option("--bfs", o.equiv_bfs, "Also search Knuth moves with this state budget");
  equiv->add_flag("--assert", o.equiv_assert, "Exit with status 1 when not equivalent");

  auto* render = app.add_subcommand("render", "SVG of a timed word ribbon or tableau");
  render->add_option("input", o.render_input, "Timed word, word, or tableau/word JSON (or file)")
      ->required();
  render->add_option("--svg", o.render_svg_path, "Output path")->required();
  render->add_flag("--tableau", o.render_tableau, "Render the insertion tableau of a word");
  render->add_option("--scale", o.render_scale, "Pixels per unit duration");
  render->add_option("--height", o.render_height, "Strip height in pixels");

  auto* random = app.add_subcommand("random", "Reproducible random timed word");
  random->add_option("--runs", o.random_runs, "Number of runs");
  random->add_option("--letters", o.random_letters, "Alphabet size");
  random->add_option("--max-den", o.random_max_den, "Largest duration denominator");
  random->add_option("--seed", o.random_seed, "Seed (TIMED_PLACTIC_SEED overrides)");

  auto* check = app.add_subcommand("check", "Randomized property suites");
  check->add_option("--iters", o.check_iters, "Iterations per suite");
  check->add_option("--seed", o.check_seed, "Seed (TIMED_PLACTIC_SEED overrides)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("tplactic");
  for (const auto& a : args) argv.push_back(a.c_str());

  // --json must be known before CLI11 reports errors.
  for (std::size_t i = 1; i < args.size(); ++i)
    if (args[i] == "--json") o.json = true;

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, o.json, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (insert->parsed()) return cmd_insert(o, out);
    if (greene->parsed()) return cmd_greene(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (random->parsed()) return cmd_random(o, out);
    if (check->parsed()) return cmd_check(o, out);
  } catch (const ParseError& e) {
    emit_error(err, o.json, "parse", e.what());
    return kExitUsage;
  } catch (const PreconditionError& e) {
    emit_error(err, o.json, "invalid_input", e.what());
    return kExitUsage;
  } catch (const MoveError& e) {
    emit_error(err, o.json, "invalid_move", e.what());
    return kExitVerification;
  } catch (const BudgetExceeded& e) {
    emit_error(err, o.json, "budget_exceeded", e.what());
    return kExitVerification;
  } catch (const VerificationFailure& e) {
    emit_error(err, o.json, "verification", e.what());
    return kExitVerification;
  } catch (const std::exception& e) {
    emit_error(err, o.json, "internal", e.what());
    return kExitVerification;
  }
  emit_error(err, o.json, "usage", "no subcommand given");
  return kExitUsage;
}

} // namespace tplactic
