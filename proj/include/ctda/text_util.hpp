#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ctda {

/// Shortest round-trip decimal form of a double (std::to_chars), so every
/// exported artifact is byte-stable across runs.
std::string format_double(double value);

/// Strict double parse of the whole token; throws ValidationError otherwise.
double parse_double(const std::string& token, const std::string& context);

/// Strict non-negative integer parse; throws ValidationError otherwise.
long long parse_int(const std::string& token, const std::string& context);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

/// FNV-1a 64-bit, used for manifest input checksums.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string fnv1a64_hex(const std::string& bytes);

} // namespace ctda
