#include "nmtforge/text_norm.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <cstdint>
#include <vector>

#include "nmtforge/error.hpp"
#include "nmtforge/utf8.hpp"

namespace nmtforge {

namespace {

const icu::Normalizer2& nfc() {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || n == nullptr) throw Error("ICU NFC normalizer unavailable");
    return *n;
}

bool is_space_cp(std::int32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

}  // namespace

std::string normalize_text(std::string_view s, const NormalizePolicy& policy) {
    if (!utf8::is_valid(s)) throw Error("normalize_text: invalid UTF-8 input");
    icu::UnicodeString us = icu::UnicodeString::fromUTF8(
        icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString composed = nfc().normalize(us, status);
    if (U_FAILURE(status)) throw Error("ICU NFC normalization failed");
    if (policy.lowercase) composed.toLower(icu::Locale::getRoot());

    std::string utf8_out;
    composed.toUTF8String(utf8_out);

    // Collapse whitespace runs (any Unicode White_Space) to single ASCII
    // spaces and trim the ends.
    std::string out;
    out.reserve(utf8_out.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < utf8_out.size()) {
        const std::size_t start = i;
        const std::int32_t cp = utf8::decode_one(utf8_out, i);
        if (cp < 0) throw Error("normalize_text: internal UTF-8 error");
        if (is_space_cp(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.append(utf8_out, start, i - start);
        }
    }
    return out;
}

namespace {

enum class Tok { Num, Word, WordDot, Colon, Comma, Dash, Other };

Tok classify(const std::vector<std::int32_t>& cps) {
    if (cps.size() == 1) {
        switch (cps[0]) {
            case ':': return Tok::Colon;
            case ',': return Tok::Comma;
            case '-': return Tok::Dash;
            case '.': return Tok::WordDot;
            default: break;
        }
    }
    bool all_digits = !cps.empty();
    bool has_letter = false;
    for (std::int32_t cp : cps) {
        if (!u_isdigit(static_cast<UChar32>(cp))) all_digits = false;
        if (u_isalpha(static_cast<UChar32>(cp))) has_letter = true;
    }
    if (all_digits) return Tok::Num;
    if (has_letter) return Tok::Word;
    return Tok::Other;
}

// Matches the token sequence strictly inside one pair of parentheses:
//   Num? (Word Dot?)+ Num Colon Num (Comma Num (Dash Num)?)*
bool is_citation_body(const std::vector<Tok>& t) {
    std::size_t i = 0;
    const std::size_t n = t.size();
    if (i < n && t[i] == Tok::Num) ++i;
    std::size_t words = 0;
    while (i < n && t[i] == Tok::Word) {
        ++i;
        ++words;
        if (i < n && t[i] == Tok::WordDot) ++i;
    }
    if (words == 0) return false;
    if (i >= n || t[i] != Tok::Num) return false;
    ++i;
    if (i >= n || t[i] != Tok::Colon) return false;
    ++i;
    if (i >= n || t[i] != Tok::Num) return false;
    ++i;
    while (i < n) {
        if (t[i] != Tok::Comma) return false;
        ++i;
        if (i >= n || t[i] != Tok::Num) return false;
        ++i;
        if (i < n && t[i] == Tok::Dash) {
            ++i;
            if (i >= n || t[i] != Tok::Num) return false;
            ++i;
        }
    }
    return true;
}

// Lexes the span into tokens, splitting on whitespace and breaking ':' ','
// '-' '.' out of attached positions so both "3 : 1" and "3:1" parse alike.
std::vector<Tok> lex_span(const std::vector<std::int32_t>& cps, std::size_t b, std::size_t e) {
    std::vector<Tok> toks;
    std::vector<std::int32_t> cur;
    auto flush = [&] {
        if (!cur.empty()) {
            toks.push_back(classify(cur));
            cur.clear();
        }
    };
    for (std::size_t i = b; i < e; ++i) {
        const std::int32_t cp = cps[i];
        if (is_space_cp(cp)) {
            flush();
        } else if (cp == ':' || cp == ',' || cp == '-' || cp == '.') {
            flush();
            toks.push_back(classify({cp}));
        } else {
            cur.push_back(cp);
        }
    }
    flush();
    return toks;
}

}  // namespace

std::string strip_verse_annotations(std::string_view s) {
    const std::vector<std::int32_t> cps = utf8::decode(s);
    std::vector<bool> drop(cps.size(), false);
    std::size_t i = 0;
    while (i < cps.size()) {
        if (cps[i] != '(') {
            ++i;
            continue;
        }
        std::size_t close = i + 1;
        bool nested = false;
        while (close < cps.size() && cps[close] != ')') {
            if (cps[close] == '(') {
                nested = true;
                break;
            }
            ++close;
        }
        if (nested) {
            ++i;
            continue;
        }
        if (close < cps.size() && is_citation_body(lex_span(cps, i + 1, close))) {
            for (std::size_t k = i; k <= close; ++k) drop[k] = true;
            i = close + 1;
        } else {
            ++i;
        }
    }

    std::string kept;
    for (std::size_t k = 0; k < cps.size(); ++k) {
        if (!drop[k]) utf8::append(kept, cps[k]);
    }
    // Deletion can leave doubled spaces; NFC is unaffected by it.
    std::string out;
    out.reserve(kept.size());
    bool pending_space = false;
    std::size_t p = 0;
    while (p < kept.size()) {
        const std::size_t start = p;
        const std::int32_t cp = utf8::decode_one(kept, p);
        if (is_space_cp(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.append(kept, start, p - start);
        }
    }
    return out;
}

}  // namespace nmtforge
