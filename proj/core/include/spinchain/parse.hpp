#pragma once

#include <string_view>
#include <vector>

#include "spinchain/linop.hpp"

namespace spinchain {

/// "2,1,0" -> {2,1,0}; throws InputError on malformed text.
std::vector<int> parse_int_list(std::string_view text);

/// Complex literal: "0.7", "1.3i", "0.3+0.2i", "-i", "2-1e-3i".
cplx parse_complex(std::string_view text);

/// Comma-separated complex literals.
std::vector<cplx> parse_complex_list(std::string_view text);

}  // namespace spinchain
