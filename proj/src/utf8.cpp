#include "nmtforge/utf8.hpp"

#include "nmtforge/error.hpp"

namespace nmtforge::utf8 {

std::int32_t decode_one(std::string_view s, std::size_t& i) {
    if (i >= s.size()) return -1;
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    std::int32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return -1;
    }
    if (i + len > s.size()) return -1;
    for (int k = 1; k < len; ++k) {
        const unsigned char b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) return -1;
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings, surrogates, and values past U+10FFFF.
    static constexpr std::int32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return -1;
    i += len;
    return cp;
}

std::vector<std::int32_t> decode(std::string_view s) {
    std::vector<std::int32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const std::int32_t cp = decode_one(s, i);
        if (cp < 0) throw Error("invalid UTF-8 at byte offset " + std::to_string(i));
        out.push_back(cp);
    }
    return out;
}

bool is_valid(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        if (decode_one(s, i) < 0) return false;
    }
    return true;
}

void append(std::string& out, std::int32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(const std::vector<std::int32_t>& cps) {
    std::string out;
    out.reserve(cps.size() * 2);
    for (std::int32_t cp : cps) append(out, cp);
    return out;
}

std::vector<std::string> split_codepoints(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t start = i;
        if (decode_one(s, i) < 0) throw Error("invalid UTF-8 at byte offset " + std::to_string(start));
        out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace nmtforge::utf8
