#pragma once

#include <string>

namespace cxbox {

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

}  // namespace cxbox
