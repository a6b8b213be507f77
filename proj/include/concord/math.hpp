#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace concord {

// Inverse standard normal CDF (Acklam's rational approximation, |rel err| < 1.2e-9).
// Requires 0 < p < 1.
double normal_quantile(double p);

// FNV-1a over raw bytes, used for dataset digests.
std::uint64_t fnv1a64(std::span<const std::byte> bytes, std::uint64_t seed = 0xCBF29CE484222325ULL);

std::uint64_t fnv1a64_append(std::uint64_t hash, std::uint64_t value);
std::uint64_t fnv1a64_append(std::uint64_t hash, double value);

std::string to_hex(std::uint64_t value);

// Shortest round-trip decimal form of a double (for parameter echoes and CSV).
std::string format_double(double value);

}  // namespace concord
