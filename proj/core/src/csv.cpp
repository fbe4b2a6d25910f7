#include "aapopt/csv.hpp"

#include <cstdio>

namespace aapopt {

std::string format_sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", value);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string hash_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

}  // namespace aapopt
