#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace tdt {

// Orders identifiers so that embedded digit runs compare numerically
// ("t2" < "t10"). Falls back to plain byte order on ties so the relation
// stays a strict weak order consistent with equality.
bool natural_less(std::string_view a, std::string_view b) noexcept;

namespace utf8 {

// Byte offset of the first invalid sequence, or nullopt if `bytes` is valid.
std::optional<std::size_t> find_invalid(std::string_view bytes) noexcept;

// Number of code points. `text` must be valid UTF-8.
std::size_t length(std::string_view text) noexcept;

// Code points [start, end) of `text`, clamped to its length.
std::string substr(std::string_view text, std::size_t start, std::size_t end);

}  // namespace utf8
}  // namespace tdt
