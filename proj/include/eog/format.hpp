#pragma once

#include <string>

namespace eog {

// Nine significant digits, the precision of every text file this project writes.
std::string format_number(double value);

}  // namespace eog
