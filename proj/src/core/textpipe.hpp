#pragma once

#include <string>
#include <vector>

#include "rat.hpp"
#include "support_graph.hpp"

namespace wrac {

// One group of words sharing a stem.
struct TermStats {
    std::string stem;
    std::string surface;         // most frequent original form, ties lexicographic
    long frequency = 0;          // total occurrences across the text
    std::vector<int> sentences;  // ascending indices of sentences containing the term
};

struct CloudConfig {
    int top_k = 100;             // terms kept for the supporting graph
    Rat base_size = Rat(10);     // font size at frequency 1
    Rat char_width = Rat(3, 5);  // per-character advance as a fraction of size
    Rat line_height = Rat(1);    // box height as a multiple of size
    Rat threshold = Rat(1, 10);  // profits below this drop to zero
    std::string stopwords = "english";  // stopword list id: "english" or "none"
};

// Deterministic suffix-stripping stem; lowercase input expected.
std::string stem_word(const std::string& word);

// Sentence-splits, tokenizes, filters stopwords, and groups words by stem.
// Result is sorted by descending frequency, ties by stem. Throws on empty
// text or an unknown stopword list id.
std::vector<TermStats> ingest(const std::string& text, const CloudConfig& config = {});

// Boxes for the given terms: size is base_size * sqrt(frequency) rounded
// half-up to the 1/64 grid; height = size * line_height; width = |surface|
// times the per-character advance (size * char_width, itself on the grid and
// floored at 1/64). Needs every frequency >= 1.
std::vector<BoxDims> dims_from_frequency(const std::vector<TermStats>& stats,
                                         const CloudConfig& config = {});

// Supporting graph over the top_k most frequent terms. Vertices carry
// dims_from_frequency boxes keyed by stem; each pair gets the cosine of
// their sentence-incidence vectors, rounded half-up to the 1/4096 grid,
// zeroed below config.threshold. Needs at least two terms.
SupportGraph similarity_profits(const std::vector<TermStats>& stats,
                                const CloudConfig& config = {});

// Built-in public-domain sample texts.
std::vector<std::string> bundled_text_ids();
const std::string& bundled_text(const std::string& id);  // throws on unknown id

}  // namespace wrac
