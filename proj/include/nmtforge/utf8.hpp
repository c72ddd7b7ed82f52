#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nmtforge::utf8 {

/// Decodes one UTF-8 sequence starting at s[i]. On success advances i past
/// the sequence and returns the codepoint; returns -1 on malformed input
/// (overlong forms, surrogates, and out-of-range values are rejected).
std::int32_t decode_one(std::string_view s, std::size_t& i);

/// Full-string decode. Throws Error on malformed input.
std::vector<std::int32_t> decode(std::string_view s);

bool is_valid(std::string_view s);

void append(std::string& out, std::int32_t cp);
std::string encode(const std::vector<std::int32_t>& cps);

/// Splits a string into per-codepoint UTF-8 chunks ("a", "ẹ", ...).
std::vector<std::string> split_codepoints(std::string_view s);

}  // namespace nmtforge::utf8
