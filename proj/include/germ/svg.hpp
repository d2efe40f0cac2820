#pragma once

#include <string>

#include "germ/report.hpp"

namespace germ {

/// Two panels: the real slice of Delta in the (u, v) window with the box
/// |u| <= rho, |v| <= eta, and the orbit traces of the fibre points in the
/// u-plane, coloured by cycle. Output depends only on the report contents.
std::string render_svg(const MonodromyReport& report);

/// Writes render_svg to `path`; throws Error(invalid_argument) on I/O failure.
void emit_svg(const MonodromyReport& report, const std::string& path);

}  // namespace germ
