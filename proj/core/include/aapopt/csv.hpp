#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aapopt {

// Fixed scientific formatting with 12 significant digits ("%.11e"). Every
// float that reaches a CSV file goes through this, which is what makes rerun
// outputs byte-identical.
std::string format_sci(double value);

// FNV-1a 64-bit hash, used to stamp outputs with the resolved-config digest.
std::uint64_t fnv1a64(std::string_view data);

// fnv1a64 rendered as 16 lowercase hex digits.
std::string hash_hex(std::string_view data);

}  // namespace aapopt
