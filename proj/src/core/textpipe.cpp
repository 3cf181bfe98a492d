#include "textpipe.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace wrac {

namespace {

const std::unordered_set<std::string>& english_stopwords() {
    static const std::unordered_set<std::string> words = {
        "about", "above", "after", "again", "all", "am", "an", "and", "any",
        "are", "as", "at", "be", "because", "been", "before", "being",
        "below", "between", "both", "but", "by", "can", "cannot", "could",
        "did", "do", "does", "doing", "down", "during", "each", "few", "for",
        "from", "further", "had", "has", "hath", "have", "having", "he",
        "her", "here", "hers", "herself", "him", "himself", "his", "how",
        "if", "in", "into", "is", "it", "its", "itself", "let", "may", "me",
        "might", "more", "most", "must", "my", "myself", "no", "nor", "not",
        "now", "of", "off", "on", "once", "only", "or", "other", "ought",
        "our", "ours", "ourselves", "out", "over", "own", "same", "shall",
        "shalt", "she", "should", "so", "some", "such", "than", "that",
        "the", "thee", "their", "theirs", "them", "themselves", "then",
        "there", "these", "they", "thine", "this", "those", "thou",
        "through", "thus", "thy", "to", "too", "under", "until", "unto",
        "up", "upon", "us", "very", "was", "we", "were", "what", "when",
        "where", "which", "while", "who", "whom", "whose", "why", "will",
        "with", "would", "ye", "yet", "you", "your", "yours", "yourself",
    };
    return words;
}

bool ends_with(const std::string& s, const char* suffix) {
    const std::size_t n = std::char_traits<char>::length(suffix);
    return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Round half up to the 1/64 grid, floored at 1/64.
Rat grid64(const Rat& r) {
    mpz_class n = (128 * r.num() + r.den()) / (2 * r.den());
    if (n < 1) n = 1;
    return Rat(n) / Rat(64);
}

// Round base * sqrt(f) half up to the 1/64 grid, floored at 1/64. With
// base = p/q the grid numerator is floor((floor(2*64*p*sqrt(f)) + q) / 2q);
// no integer separates the inner floor from its argument, so this matches
// rounding the exact irrational value.
Rat grid64_sqrt(const Rat& base, long f) {
    const mpz_class t = isqrt(mpz_class(4) * 64 * 64 * base.num() * base.num() * f);
    mpz_class n = (t + base.den()) / (2 * base.den());
    if (n < 1) n = 1;
    return Rat(n) / Rat(64);
}

// Cosine of binary incidence vectors with |a & b| = common, rounded half up
// to the 1/4096 grid. Exact: n <= x + 1/2 for x = 4096*common/sqrt(na*nb)
// iff (2n - 1)^2 <= (8192*common)^2 / (na*nb).
Rat quantized_cosine(long common, long na, long nb) {
    if (common == 0) return Rat(0);
    const mpz_class num = mpz_class(8192) * common;
    const mpz_class floor_sq = num * num / (mpz_class(na) * nb);
    const mpz_class n = (isqrt(floor_sq) + 1) / 2;
    return Rat(n) / Rat(4096);
}

long intersect_count(const std::vector<int>& a, const std::vector<int>& b) {
    long count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count, ++i, ++j;
        }
    }
    return count;
}

void validate_glyph_model(const CloudConfig& config) {
    if (config.base_size.sign() <= 0 || config.char_width.sign() <= 0 ||
        config.line_height.sign() <= 0)
        throw std::invalid_argument("cloud config: glyph model factors must be positive");
}

}  // namespace

std::string stem_word(const std::string& word) {
    std::string s = word;
    const auto chop = [&](std::size_t n) { s.resize(s.size() - n); };
    // Drops one of a doubled final consonant left by -ing/-ed removal;
    // l, s, z stay doubled (fall, pass, buzz).
    const auto undouble = [&] {
        if (s.size() < 3) return;
        const char c = s.back();
        if (c != s[s.size() - 2] || is_vowel(c)) return;
        if (c == 'l' || c == 's' || c == 'z') return;
        chop(1);
    };

    if (ends_with(s, "sses")) {
        chop(2);
    } else if (ends_with(s, "ies") && s.size() >= 5) {
        chop(2);
    } else if (!ends_with(s, "ss") && ends_with(s, "s") && s.size() >= 4) {
        chop(1);
    }
    if (ends_with(s, "ing") && s.size() >= 6) {
        chop(3);
        undouble();
    } else if (ends_with(s, "ed") && s.size() >= 5) {
        chop(2);
        undouble();
    }
    if (ends_with(s, "ly") && s.size() >= 6) chop(2);
    if (s.size() >= 3 && s.back() == 'y' && !is_vowel(s[s.size() - 2])) s.back() = 'i';
    if (s.size() >= 4 && s.back() == 'e') chop(1);
    return s;
}

std::vector<TermStats> ingest(const std::string& text, const CloudConfig& config) {
    if (text.empty()) throw std::invalid_argument("ingest: empty text");
    const bool filter = config.stopwords == "english";
    if (!filter && config.stopwords != "none")
        throw std::invalid_argument("ingest: unknown stopword list '" + config.stopwords + "'");
    const auto& stop = english_stopwords();

    struct Group {
        long frequency = 0;
        std::map<std::string, long> surfaces;
        std::set<int> sentences;
    };
    std::map<std::string, Group> groups;

    // Sentences end at . ! ?; only ASCII letter runs of length >= 2 count as
    // words, every other byte separates. Sentences with no kept words get no
    // index.
    int sentence = 0;
    bool sentence_used = false;
    std::string token;
    const auto flush_token = [&] {
        if (token.size() >= 2 && (!filter || !stop.count(token))) {
            Group& g = groups[stem_word(token)];
            ++g.frequency;
            ++g.surfaces[token];
            g.sentences.insert(sentence);
            sentence_used = true;
        }
        token.clear();
    };
    for (const char c : text) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            continue;
        }
        flush_token();
        if ((c == '.' || c == '!' || c == '?') && sentence_used) {
            ++sentence;
            sentence_used = false;
        }
    }
    flush_token();

    std::vector<TermStats> stats;
    stats.reserve(groups.size());
    for (const auto& [stem, g] : groups) {
        TermStats t;
        t.stem = stem;
        t.frequency = g.frequency;
        long best = 0;
        for (const auto& [surface, count] : g.surfaces) {
            if (count > best) {
                best = count;
                t.surface = surface;
            }
        }
        t.sentences.assign(g.sentences.begin(), g.sentences.end());
        stats.push_back(std::move(t));
    }
    std::sort(stats.begin(), stats.end(), [](const TermStats& a, const TermStats& b) {
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return a.stem < b.stem;
    });
    return stats;
}

std::vector<BoxDims> dims_from_frequency(const std::vector<TermStats>& stats,
                                         const CloudConfig& config) {
    validate_glyph_model(config);
    std::vector<BoxDims> dims;
    dims.reserve(stats.size());
    for (const TermStats& t : stats) {
        if (t.frequency < 1)
            throw std::invalid_argument("dims_from_frequency: frequency must be positive");
        if (t.stem.empty() || t.surface.empty())
            throw std::invalid_argument("dims_from_frequency: term needs a stem and a surface");
        const Rat size = grid64_sqrt(config.base_size, t.frequency);
        const Rat per_char = grid64(size * config.char_width);
        dims.push_back({t.stem, per_char * Rat(static_cast<long>(t.surface.size())),
                        size * config.line_height});
    }
    return dims;
}

SupportGraph similarity_profits(const std::vector<TermStats>& stats,
                                const CloudConfig& config) {
    if (stats.size() < 2)
        throw std::invalid_argument("similarity_profits: needs at least two terms");
    if (config.top_k < 1) throw std::invalid_argument("similarity_profits: top_k must be >= 1");
    validate_glyph_model(config);

    std::vector<int> order(stats.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (stats[a].frequency != stats[b].frequency)
            return stats[a].frequency > stats[b].frequency;
        return stats[a].stem < stats[b].stem;
    });
    const std::size_t k = std::min<std::size_t>(config.top_k, order.size());
    std::vector<TermStats> terms;
    terms.reserve(k);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < k; ++i) {
        terms.push_back(stats[order[i]]);
        if (!seen.insert(terms.back().stem).second)
            throw std::invalid_argument("similarity_profits: duplicate stem '" +
                                        terms.back().stem + "'");
    }

    SupportGraph g;
    g.boxes = dims_from_frequency(terms, config);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            const long common = intersect_count(terms[i].sentences, terms[j].sentences);
            if (common == 0) continue;
            const Rat p = quantized_cosine(common, static_cast<long>(terms[i].sentences.size()),
                                           static_cast<long>(terms[j].sentences.size()));
            if (p.sign() <= 0 || p < config.threshold) continue;
            g.edges.push_back({static_cast<int>(i), static_cast<int>(j), p});
        }
    }
    return g;
}

}  // namespace wrac
