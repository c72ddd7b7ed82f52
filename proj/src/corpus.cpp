#include "nmtforge/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nmtforge/error.hpp"
#include "nmtforge/rng.hpp"
#include "nmtforge/utf8.hpp"

namespace nmtforge {

namespace {

const std::map<std::string, std::string>& registry() {
    static const std::map<std::string, std::string> langs = {
        {"bin", "Èdó"}, {"ish", "Ésán"}, {"urh", "Urhobo"},
        {"iso", "Isoko"}, {"eng", "English"},
    };
    return langs;
}

std::size_t count_ws_tokens(std::string_view s) {
    std::size_t n = 0;
    bool in_tok = false;
    for (char c : s) {
        const bool sp = (c == ' ' || c == '\t');
        if (!sp && !in_tok) ++n;
        in_tok = !sp;
    }
    return n;
}

}  // namespace

LangCode LangCode::parse(std::string_view code) {
    std::string c(code);
    if (registry().count(c) == 0) {
        std::string known;
        for (const auto& [k, v] : registry()) known += (known.empty() ? "" : ", ") + k;
        throw ValidationError("unknown language code '" + c + "' (known: " + known + ")");
    }
    return LangCode(std::move(c));
}

const std::string& LangCode::display_name() const { return registry().at(code_); }

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    for (const auto& l : lines) out << l << '\n';
}

namespace {

void check_utf8_lines(const std::vector<std::string>& lines, const std::string& path) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!utf8::is_valid(lines[i])) {
            throw ValidationError("invalid UTF-8 in " + path + " at line " + std::to_string(i + 1));
        }
    }
}

ParallelCorpus make_corpus(LangCode src_lang, LangCode tgt_lang) {
    if (src_lang == tgt_lang) {
        throw ValidationError("source and target language must differ (both '" +
                              src_lang.code() + "')");
    }
    return ParallelCorpus{src_lang, tgt_lang, {}};
}

}  // namespace

ParallelCorpus load_parallel(const std::string& src_path, const std::string& tgt_path,
                             LangCode src_lang, LangCode tgt_lang) {
    ParallelCorpus corpus = make_corpus(src_lang, tgt_lang);
    const auto src_lines = read_lines(src_path);
    const auto tgt_lines = read_lines(tgt_path);
    if (src_lines.size() != tgt_lines.size()) {
        throw ValidationError("alignment error: " + src_path + " has " +
                              std::to_string(src_lines.size()) + " lines but " + tgt_path +
                              " has " + std::to_string(tgt_lines.size()));
    }
    check_utf8_lines(src_lines, src_path);
    check_utf8_lines(tgt_lines, tgt_path);
    corpus.pairs.reserve(src_lines.size());
    for (std::size_t i = 0; i < src_lines.size(); ++i) {
        corpus.pairs.push_back({src_lines[i], tgt_lines[i], i});
    }
    return corpus;
}

ParallelCorpus load_parallel_tsv(const std::string& path, LangCode src_lang, LangCode tgt_lang) {
    ParallelCorpus corpus = make_corpus(src_lang, tgt_lang);
    const auto lines = read_lines(path);
    check_utf8_lines(lines, path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto tab = lines[i].find('\t');
        if (tab == std::string::npos) {
            throw ValidationError("missing TAB separator in " + path + " at line " +
                                  std::to_string(i + 1));
        }
        corpus.pairs.push_back({lines[i].substr(0, tab), lines[i].substr(tab + 1), i});
    }
    return corpus;
}

ParallelCorpus normalize_corpus(const ParallelCorpus& corpus, const NormalizePolicy& policy,
                                bool strip_verses) {
    ParallelCorpus out{corpus.src_lang, corpus.tgt_lang, {}};
    out.pairs.reserve(corpus.pairs.size());
    for (const auto& p : corpus.pairs) {
        std::string src = normalize_text(p.src, policy);
        std::string tgt = normalize_text(p.tgt, policy);
        if (strip_verses) {
            src = strip_verse_annotations(src);
            tgt = strip_verse_annotations(tgt);
        }
        out.pairs.push_back({std::move(src), std::move(tgt), p.index});
    }
    return out;
}

std::pair<ParallelCorpus, FilterReport> filter_pairs(const ParallelCorpus& corpus,
                                                     const FilterRules& rules) {
    ParallelCorpus out{corpus.src_lang, corpus.tgt_lang, {}};
    FilterReport report;
    report.input_pairs = corpus.pairs.size();
    std::unordered_set<std::string> seen;
    for (const auto& p : corpus.pairs) {
        if (p.src.empty() || p.tgt.empty()) {
            ++report.dropped_empty;
            continue;
        }
        const std::size_t ns = count_ws_tokens(p.src);
        const std::size_t nt = count_ws_tokens(p.tgt);
        if (ns > rules.max_tokens || nt > rules.max_tokens) {
            ++report.dropped_too_long;
            continue;
        }
        const double longer = static_cast<double>(std::max(ns, nt));
        const double shorter = static_cast<double>(std::min(ns, nt));
        if (shorter > 0 && longer / shorter > rules.max_ratio) {
            ++report.dropped_ratio;
            continue;
        }
        if (rules.drop_duplicates) {
            std::string key = p.src;
            key.push_back('\t');
            key += p.tgt;
            if (!seen.insert(std::move(key)).second) {
                ++report.dropped_duplicate;
                continue;
            }
        }
        out.pairs.push_back(p);
    }
    report.kept_pairs = out.pairs.size();
    return {std::move(out), report};
}

std::string FilterReport::to_key_value_text() const {
    std::ostringstream os;
    os << "input_pairs " << input_pairs << '\n'
       << "dropped_empty " << dropped_empty << '\n'
       << "dropped_too_long " << dropped_too_long << '\n'
       << "dropped_ratio " << dropped_ratio << '\n'
       << "dropped_duplicate " << dropped_duplicate << '\n'
       << "kept_pairs " << kept_pairs << '\n';
    return os.str();
}

CorpusStats corpus_stats(const ParallelCorpus& corpus) {
    CorpusStats stats;
    stats.sentences = corpus.pairs.size();
    for (const auto& p : corpus.pairs) stats.tokens += count_ws_tokens(p.tgt);
    return stats;
}

CorpusSplit split_corpus(const ParallelCorpus& corpus, std::size_t dev_size,
                         std::size_t test_size, std::uint64_t seed) {
    const std::size_t total = corpus.pairs.size();
    if (dev_size + test_size >= total) {
        throw ValidationError("split sizes too large: dev+test = " +
                              std::to_string(dev_size + test_size) + " but corpus has " +
                              std::to_string(total) + " pairs; need at least " +
                              std::to_string(dev_size + test_size + 1));
    }

    // Group identical (src,tgt) pairs so every copy lands in one partition;
    // otherwise a duplicate could sit in both train and test.
    std::unordered_map<std::string, std::size_t> group_of;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < total; ++i) {
        std::string key = corpus.pairs[i].src;
        key.push_back('\t');
        key += corpus.pairs[i].tgt;
        auto [it, inserted] = group_of.try_emplace(std::move(key), groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(i);
    }

    std::vector<std::size_t> order(groups.size());
    for (std::size_t g = 0; g < order.size(); ++g) order[g] = g;
    auto rng = make_rng(seed, "split");
    std::shuffle(order.begin(), order.end(), rng);

    // 0 = train, 1 = dev, 2 = test
    std::vector<int> assign(total, 0);
    std::size_t n_test = 0, n_dev = 0;
    for (std::size_t g : order) {
        if (n_test < test_size) {
            for (std::size_t i : groups[g]) assign[i] = 2;
            n_test += groups[g].size();
        } else if (n_dev < dev_size) {
            for (std::size_t i : groups[g]) assign[i] = 1;
            n_dev += groups[g].size();
        }
    }

    CorpusSplit split{{corpus.src_lang, corpus.tgt_lang, {}},
                      {corpus.src_lang, corpus.tgt_lang, {}},
                      {corpus.src_lang, corpus.tgt_lang, {}}};
    for (std::size_t i = 0; i < total; ++i) {
        auto& dst = assign[i] == 0 ? split.train : (assign[i] == 1 ? split.dev : split.test);
        dst.pairs.push_back(corpus.pairs[i]);
    }
    return split;
}

void write_corpus(const ParallelCorpus& corpus, const std::string& src_path,
                  const std::string& tgt_path) {
    std::vector<std::string> src, tgt;
    src.reserve(corpus.pairs.size());
    tgt.reserve(corpus.pairs.size());
    for (const auto& p : corpus.pairs) {
        src.push_back(p.src);
        tgt.push_back(p.tgt);
    }
    write_lines(src_path, src);
    write_lines(tgt_path, tgt);
}

}  // namespace nmtforge
