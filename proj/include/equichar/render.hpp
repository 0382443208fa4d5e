#pragma once

#include <string>

#include "equichar/bisymfunc.hpp"

namespace equichar {

enum class Format { Text, Latex, Json };

Format format_from_string(const std::string& s);

// Renders in the Schur basis, terms ordered by (x, y) under the
// presentation order. A leg indexed by the empty partition is omitted, so
// E(n,0,l) prints as a plain Lambda^y element: (q^2+q+1)s_{(5)}+qs_{(4,1)}.
// With group_by_q the terms are collected per power of q instead.
std::string render(const BiSymFunc& f, Format format, bool group_by_q = false);

std::string render_qpoly(const QPoly& p, Format format);

}  // namespace equichar
