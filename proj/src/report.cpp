#include "lcsc/report.hpp"

#include <array>
#include <cstdio>

namespace lcsc {

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::string_view data) {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(fnv1a(data)));
  return std::string(buf.data());
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 step over master+index; decorrelates consecutive trials.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace lcsc
