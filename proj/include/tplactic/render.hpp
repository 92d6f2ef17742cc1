#pragma once

#include "tplactic/timed_tableau.hpp"

#include <array>
#include <string>
#include <string_view>

namespace tplactic {

// Twelve-colour categorical palette, cycled by letter value.
inline constexpr std::array<std::string_view, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#8c564b"};

std::string_view letter_color(Letter c) noexcept;

struct RenderSpec {
  enum class Target { ribbon, tableau };

  Target target = Target::ribbon;
  Duration unit_scale = 100; // pixels per unit of duration, > 0
  Duration strip_height = 24;
};

// One horizontal strip; each run is a rectangle duration * unit_scale wide.
std::string render_svg(const TimedWord& w, const RenderSpec& spec);

// Left-aligned strips stacked top row first.
std::string render_svg(const TimedTableau& t, const RenderSpec& spec);

} // namespace tplactic
