#include "tplactic/render.hpp"

#include "tplactic/errors.hpp"
#include "tplactic/duration.hpp"

namespace tplactic {

namespace {

constexpr int kDigits = 6;

std::string num(const Duration& v) { return to_fixed_string(v, kDigits); }

void check_spec(const RenderSpec& spec) {
  if (spec.unit_scale <= 0) throw PreconditionError("render: unit_scale must be positive");
  if (spec.strip_height <= 0) throw PreconditionError("render: strip_height must be positive");
}

std::string header(const Duration& width, const Duration& height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

void strip(std::string& out, const TimedWord& w, const Duration& y, const RenderSpec& spec) {
  Duration x = 0;
  for (const auto& run : w.runs()) {
    const Duration width = run.duration * spec.unit_scale;
    out += "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(width) +
           "\" height=\"" + num(spec.strip_height) + "\" fill=\"" +
           std::string(letter_color(run.letter)) + "\"><title>" + std::to_string(run.letter) +
           "^" + to_exact_string(run.duration) + "</title></rect>\n";
    x += width;
  }
}

} // namespace

std::string_view letter_color(Letter c) noexcept {
  const auto idx = static_cast<std::size_t>((c >= 1 ? c - 1 : 0)) % kPalette.size();
  return kPalette[idx];
}

std::string render_svg(const TimedWord& w, const RenderSpec& spec) {
  check_spec(spec);
  std::string out = header(w.length() * spec.unit_scale, spec.strip_height);
  strip(out, w, 0, spec);
  out += "</svg>\n";
  return out;
}

std::string render_svg(const TimedTableau& t, const RenderSpec& spec) {
  check_spec(spec);
  const Duration width = t.empty() ? Duration(0) : t.rows().front().length() * spec.unit_scale;
  const Duration height = spec.strip_height * Duration(t.row_count());
  std::string out = header(width, height);
  Duration y = 0;
  for (const auto& row : t.rows()) {
    strip(out, row, y, spec);
    y += spec.strip_height;
  }
  out += "</svg>\n";
  return out;
}

} // namespace tplactic
