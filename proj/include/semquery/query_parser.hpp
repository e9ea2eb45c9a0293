#pragma once

// Query parsing pipeline: tokenization, normalization (lowercasing,
// punctuation drop, contraction/abbreviation expansion), stop-word
// removal, Porter stemming and rule-based POS tagging. Every stage's
// output is retained in the ParsedQuery record.

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "semquery/common.hpp"
#include "semquery/porter.hpp"

namespace semq {

enum class PosTag { NOUN, VERB, ADJ, ADV, PRON, DET, ADP, NUM, WH, X };

inline const char* to_string(PosTag t) {
    switch (t) {
        case PosTag::NOUN: return "NOUN";
        case PosTag::VERB: return "VERB";
        case PosTag::ADJ: return "ADJ";
        case PosTag::ADV: return "ADV";
        case PosTag::PRON: return "PRON";
        case PosTag::DET: return "DET";
        case PosTag::ADP: return "ADP";
        case PosTag::NUM: return "NUM";
        case PosTag::WH: return "WH";
        case PosTag::X: return "X";
    }
    return "X";
}

inline PosTag pos_tag_from_string(const std::string& s) {
    static const std::map<std::string, PosTag> table = {
        {"NOUN", PosTag::NOUN}, {"VERB", PosTag::VERB}, {"ADJ", PosTag::ADJ}, {"ADV", PosTag::ADV},
        {"PRON", PosTag::PRON}, {"DET", PosTag::DET},   {"ADP", PosTag::ADP}, {"NUM", PosTag::NUM},
        {"WH", PosTag::WH},     {"X", PosTag::X}};
    auto it = table.find(s);
    if (it == table.end()) throw ParseError("unknown POS tag '" + s + "'");
    return it->second;
}

struct TaggedToken {
    std::string stem;
    std::string surface;
    PosTag tag = PosTag::NOUN;

    bool operator==(const TaggedToken&) const = default;
};

struct ParsedQuery {
    std::string original;
    std::vector<std::string> tokens;
    std::vector<std::string> normalized;
    std::vector<std::string> filtered;
    std::vector<std::string> stems;
    std::vector<TaggedToken> tagged;
};

namespace parse_detail {

inline bool is_alnum(unsigned char c) { return std::isalnum(c) != 0; }

// '-', '\'' and '.' stay inside a token when flanked by alphanumerics
// ("e-mail", "don't", "u.s"); every other punctuation character becomes a
// standalone token.
inline bool joins(const std::string& s, std::size_t i) {
    char c = s[i];
    if (c != '-' && c != '\'' && c != '.') return false;
    return i > 0 && i + 1 < s.size() && is_alnum(static_cast<unsigned char>(s[i - 1])) &&
           is_alnum(static_cast<unsigned char>(s[i + 1]));
}

inline bool is_pure_punct(const std::string& tok) {
    for (unsigned char c : tok)
        if (std::isalnum(c)) return false;
    return !tok.empty();
}

inline std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(std::string(what) + " file not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace parse_detail

inline std::vector<std::string> tokenize(const std::string& query) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < query.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(query[i]);
        if (std::isspace(c)) {
            if (!cur.empty()) out.push_back(std::exchange(cur, {}));
            continue;
        }
        if (parse_detail::is_alnum(c) || parse_detail::joins(query, i)) {
            cur += static_cast<char>(c);
            continue;
        }
        if (!cur.empty()) out.push_back(std::exchange(cur, {}));
        out.push_back(std::string(1, static_cast<char>(c)));
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// word -> expansion tokens, loaded from a two-column tab-separated file
using ExpansionTable = std::map<std::string, std::vector<std::string>>;

inline ExpansionTable load_expansion_table(const std::string& path, const char* what) {
    ExpansionTable table;
    std::istringstream in(parse_detail::read_file(path, what));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ConfigError(std::string(what) + ": row without tab: " + line);
        std::string key = lowercase(line.substr(0, tab));
        std::istringstream vs(lowercase(line.substr(tab + 1)));
        std::vector<std::string> words;
        std::string w;
        while (vs >> w) words.push_back(w);
        if (words.empty()) throw ConfigError(std::string(what) + ": empty expansion for " + key);
        table[key] = words;
    }
    return table;
}

inline std::set<std::string> load_stopwords(const std::string& path) {
    std::set<std::string> words;
    std::istringstream in(parse_detail::read_file(path, "stop-word"));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(lowercase(line));
    }
    return words;
}

inline std::vector<std::string> normalize(const std::vector<std::string>& tokens, const ExpansionTable& contractions,
                                          const ExpansionTable& abbreviations) {
    std::vector<std::string> out;
    for (const std::string& tok : tokens) {
        std::string low = lowercase(tok);
        if (parse_detail::is_pure_punct(low)) continue;
        if (auto it = contractions.find(low); it != contractions.end()) {
            out.insert(out.end(), it->second.begin(), it->second.end());
        } else if (auto it2 = abbreviations.find(low); it2 != abbreviations.end()) {
            out.insert(out.end(), it2->second.begin(), it2->second.end());
        } else {
            out.push_back(low);
        }
    }
    return out;
}

inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens, const std::set<std::string>& stopwords) {
    std::vector<std::string> out;
    for (const std::string& t : tokens)
        if (!stopwords.count(t)) out.push_back(t);
    return out;
}

inline std::vector<std::string> stem_tokens(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) out.push_back(porter_stem(t));
    return out;
}

// Lexicon first, all-digit NUM second, suffix rules third, NOUN default.
class PosTagger {
public:
    PosTagger() = default;

    static PosTagger load(const std::string& path) {
        PosTagger tagger;
        std::istringstream in(parse_detail::read_file(path, "POS lexicon"));
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos) throw ConfigError("POS lexicon: row without tab: " + line);
            tagger.lexicon_[lowercase(line.substr(0, tab))] = pos_tag_from_string(line.substr(tab + 1));
        }
        return tagger;
    }

    PosTag tag_word(const std::string& surface) const {
        std::string low = lowercase(surface);
        if (auto it = lexicon_.find(low); it != lexicon_.end()) return it->second;
        bool digits = !low.empty();
        for (unsigned char c : low)
            if (!std::isdigit(c)) { digits = false; break; }
        if (digits) return PosTag::NUM;
        static const std::vector<std::pair<std::string, PosTag>> suffix_rules = {
            {"ly", PosTag::ADV},    {"ing", PosTag::VERB},  {"ed", PosTag::VERB},   {"tion", PosTag::NOUN},
            {"sion", PosTag::NOUN}, {"ment", PosTag::NOUN}, {"ness", PosTag::NOUN}, {"ity", PosTag::NOUN},
            {"ance", PosTag::NOUN}, {"ence", PosTag::NOUN}, {"ous", PosTag::ADJ},   {"ful", PosTag::ADJ},
            {"ive", PosTag::ADJ},   {"able", PosTag::ADJ},  {"ible", PosTag::ADJ},  {"less", PosTag::ADJ},
            {"ic", PosTag::ADJ}};
        const std::pair<std::string, PosTag>* best = nullptr;
        for (const auto& rule : suffix_rules) {
            if (low.size() > rule.first.size() && low.compare(low.size() - rule.first.size(), rule.first.size(), rule.first) == 0)
                if (!best || rule.first.size() > best->first.size()) best = &rule;
        }
        return best ? best->second : PosTag::NOUN;
    }

    void add(const std::string& word, PosTag tag) { lexicon_[lowercase(word)] = tag; }

private:
    std::map<std::string, PosTag> lexicon_;
};

inline std::vector<TaggedToken> pos_tag(const std::vector<std::string>& stems, const std::vector<std::string>& surfaces,
                                        const PosTagger& tagger) {
    if (stems.size() != surfaces.size()) throw ValidationError("pos_tag: stem/surface length mismatch");
    std::vector<TaggedToken> out;
    out.reserve(stems.size());
    for (std::size_t i = 0; i < stems.size(); ++i) out.push_back({stems[i], surfaces[i], tagger.tag_word(surfaces[i])});
    return out;
}

// Bundles the tables and runs the five stages in order.
class QueryParser {
public:
    QueryParser(std::set<std::string> stopwords, ExpansionTable contractions, ExpansionTable abbreviations, PosTagger tagger)
        : stopwords_(std::move(stopwords)),
          contractions_(std::move(contractions)),
          abbreviations_(std::move(abbreviations)),
          tagger_(std::move(tagger)) {}

    static QueryParser load(const std::string& stopword_path, const std::string& contraction_path,
                            const std::string& abbreviation_path, const std::string& pos_lexicon_path) {
        return QueryParser(load_stopwords(stopword_path), load_expansion_table(contraction_path, "contraction"),
                           load_expansion_table(abbreviation_path, "abbreviation"), PosTagger::load(pos_lexicon_path));
    }

    ParsedQuery parse(const std::string& query) const {
        ParsedQuery p;
        p.original = query;
        p.tokens = tokenize(query);
        p.normalized = normalize(p.tokens, contractions_, abbreviations_);
        p.filtered = remove_stopwords(p.normalized, stopwords_);
        p.stems = stem_tokens(p.filtered);
        p.tagged = pos_tag(p.stems, p.filtered, tagger_);
        return p;
    }

    const std::set<std::string>& stopwords() const { return stopwords_; }
    const PosTagger& tagger() const { return tagger_; }
    const ExpansionTable& contractions() const { return contractions_; }
    const ExpansionTable& abbreviations() const { return abbreviations_; }

private:
    std::set<std::string> stopwords_;
    ExpansionTable contractions_;
    ExpansionTable abbreviations_;
    PosTagger tagger_;
};

}  // namespace semq
