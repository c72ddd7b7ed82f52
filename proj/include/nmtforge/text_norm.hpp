#pragma once

#include <string>
#include <string_view>

namespace nmtforge {

struct NormalizePolicy {
    bool lowercase = false;  // off by default: case can carry lexical information
};

/// Canonical text cleanup: Unicode NFC, whitespace runs collapsed to single
/// spaces, leading/trailing whitespace removed, optional lowercasing.
/// Idempotent. Input must be valid UTF-8.
std::string normalize_text(std::string_view s, const NormalizePolicy& policy = {});

/// Removes parenthesized scripture citations of the shape
///   ( <number>? <book word(s)> <number> : <number> [ , <number>[-<number>] ]* )
/// e.g. "( 1 Pita 3 : 1 )" or "( Jọn 3 : 16 , 17 )". Book words must contain
/// at least one letter; a standalone "." after a book word is tolerated for
/// abbreviations. Non-matching parentheses pass through unchanged. Whitespace
/// around a removed span is re-collapsed. Idempotent.
std::string strip_verse_annotations(std::string_view s);

}  // namespace nmtforge
