#pragma once

#include <string>
#include <vector>

#include "stockpoly/permcore.hpp"

namespace stockpoly {

enum class RenderFormat { Svg, Ascii };

/// Wires left to right, one column per letter. Throws std::invalid_argument when
/// labels.size() != word.n.
std::string render_wiring(const WiringWord& word, const std::vector<std::string>& labels, RenderFormat format);

/// Points 1..n on a line, arcs i -> pi(i) above it, fixed points as oriented loops.
std::string render_chords(const DecoratedPermutation& dp, RenderFormat format,
                          const std::vector<std::string>& labels = {});

/// Hook i spans columns i..f(i) of a 2n-column grid and is annotated with r[i, f(i)];
/// the footer prints the dimension arithmetic. Throws when r.size() != n.
std::string render_hooks(const BoundedAffinePermutation& f, const std::vector<int>& r, RenderFormat format);

}  // namespace stockpoly
