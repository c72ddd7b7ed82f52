#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nmtforge/text_norm.hpp"

namespace nmtforge {

/// Three-letter language code from the registered set
/// (bin=Èdó, ish=Ésán, urh=Urhobo, iso=Isoko, eng=English).
class LangCode {
  public:
    static LangCode parse(std::string_view code);
    const std::string& code() const { return code_; }
    const std::string& display_name() const;
    bool operator==(const LangCode& o) const { return code_ == o.code_; }
    bool operator!=(const LangCode& o) const { return code_ != o.code_; }

  private:
    explicit LangCode(std::string code) : code_(std::move(code)) {}
    std::string code_;
};

struct SentencePair {
    std::string src;
    std::string tgt;
    std::size_t index = 0;  // ordinal within the corpus it was loaded from
};

struct ParallelCorpus {
    LangCode src_lang;
    LangCode tgt_lang;
    std::vector<SentencePair> pairs;
};

struct CorpusStats {
    std::uint64_t tokens = 0;     // whitespace tokens on the target side
    std::uint64_t sentences = 0;  // number of pairs
};

struct FilterRules {
    std::size_t max_tokens = 100;  // per side
    double max_ratio = 9.0;        // longer side / shorter side, in tokens
    bool drop_duplicates = true;
};

/// Per-rule drop counts from filter_pairs, in application order.
struct FilterReport {
    std::uint64_t input_pairs = 0;
    std::uint64_t dropped_empty = 0;
    std::uint64_t dropped_too_long = 0;
    std::uint64_t dropped_ratio = 0;
    std::uint64_t dropped_duplicate = 0;
    std::uint64_t kept_pairs = 0;
    std::string to_key_value_text() const;
};

/// Reads two line-aligned UTF-8 files (one sentence per line). Line i of each
/// file forms pair i. Text is kept verbatim; normalization is a separate step.
ParallelCorpus load_parallel(const std::string& src_path, const std::string& tgt_path,
                             LangCode src_lang, LangCode tgt_lang);

/// Reads one TSV file, src TAB tgt per line.
ParallelCorpus load_parallel_tsv(const std::string& path, LangCode src_lang, LangCode tgt_lang);

/// Applies normalize_text (and optionally strip_verse_annotations) to both
/// sides of every pair, symmetrically.
ParallelCorpus normalize_corpus(const ParallelCorpus& corpus, const NormalizePolicy& policy = {},
                                bool strip_verses = false);

/// Drops pairs that are empty on either side, exceed max_tokens, violate the
/// length-ratio bound, or duplicate an earlier (src,tgt) pair. Order preserved.
std::pair<ParallelCorpus, FilterReport> filter_pairs(const ParallelCorpus& corpus,
                                                     const FilterRules& rules = {});

CorpusStats corpus_stats(const ParallelCorpus& corpus);

struct CorpusSplit {
    ParallelCorpus train;
    ParallelCorpus dev;
    ParallelCorpus test;
};

/// Deterministic seeded partition. Identical (src,tgt) pairs are kept in the
/// same partition so dev/test never leak into train; with duplicates present
/// the dev/test sizes may overshoot by the duplicate group size.
CorpusSplit split_corpus(const ParallelCorpus& corpus, std::size_t dev_size,
                         std::size_t test_size, std::uint64_t seed);

void write_corpus(const ParallelCorpus& corpus, const std::string& src_path,
                  const std::string& tgt_path);

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path, const std::vector<std::string>& lines);

}  // namespace nmtforge
