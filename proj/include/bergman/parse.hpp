#pragma once

#include <string>
#include <vector>

#include "bergman/types.hpp"

namespace bergman {

/// Parses a complex literal: "2", "-1.5", "i", "-2i", "3+2i", "1e-3-4.5i".
/// Throws DomainError on malformed input.
Complex parse_complex(const std::string& text);

/// Comma-separated complex literals, e.g. "2i,1".
std::vector<Complex> parse_complex_list(const std::string& text);

}  // namespace bergman
