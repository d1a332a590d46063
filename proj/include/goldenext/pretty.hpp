#pragma once

#include "goldenext/qphi.hpp"
#include "goldenext/radical.hpp"

#include <string>

namespace goldenext {

// Human notation for tables: "0", "2", "1/2", "φ", "2φ", "1 + 2φ", "2 - φ".
std::string pretty_qphi(const QPhi& x);

// "√φ", "√(2φ)", "φ·√φ", falling back to pretty_qphi when the radical
// collapses. Pulls φ out of the radicand when the cofactor is a perfect
// square, so φ³ under the root prints as φ·√φ.
std::string pretty_radical(const Radical& x);

}  // namespace goldenext
