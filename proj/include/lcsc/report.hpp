#pragma once

// Report metadata helpers: tool version string, stable content hashing for
// inputs, and deterministic per-trial seed derivation.

#include <cstdint>
#include <string>
#include <string_view>

namespace lcsc {

inline constexpr std::string_view kToolVersion = "lcsc 1.0.0";

// FNV-1a, 64-bit; stable across platforms, used to fingerprint report inputs.
std::uint64_t fnv1a(std::string_view data);
std::string hash_hex(std::string_view data);

// Deterministic stream of sub-seeds from one master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace lcsc
