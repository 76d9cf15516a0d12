#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace caloss {

// FNV-1a 64-bit over a canonical string. Used to key run caches and to bind
// models to the bundle they were trained on.
std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t value);
std::string fingerprint_of(std::string_view canonical_text);

}  // namespace caloss
