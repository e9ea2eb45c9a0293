#pragma once

// Porter stemmer (classic 1980 rule set). One deviation, standard in
// maintained variants: step 1c rewrites terminal y -> i only when the y
// is preceded by a consonant and the stem keeps more than one letter
// ("happy" -> "happi", "buy" -> "buy").
//
// Each step applies its longest matching suffix; if that suffix's
// condition fails, the step changes nothing.

#include <array>
#include <string>
#include <string_view>

namespace semq {
namespace porter_detail {

inline bool is_consonant(const std::string& w, std::size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 || !is_consonant(w, i - 1);
    return true;
}

// m in  [C](VC)^m[V]
inline int measure(const std::string& w, std::size_t len) {
    int m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < len; ++i) {
        bool vowel = !is_consonant(w, i);
        if (!vowel && prev_vowel) ++m;
        prev_vowel = vowel;
    }
    return m;
}

inline bool contains_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

inline bool ends_double_consonant(const std::string& w) {
    std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: last three letters cvc where the final c is not w, x or y
inline bool ends_cvc(const std::string& w, std::size_t len) {
    if (len < 3) return false;
    if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) || !is_consonant(w, len - 1)) return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

inline bool ends_with(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() && std::string_view(w).substr(w.size() - suf.size()) == suf;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest matching suffix wins; replace iff measure(stem) > min_m.
template <std::size_t N>
inline void apply_measure_rules(std::string& w, const std::array<Rule, N>& rules, int min_m) {
    const Rule* best = nullptr;
    for (const Rule& r : rules)
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
    if (!best) return;
    std::size_t stem_len = w.size() - best->suffix.size();
    if (measure(w, stem_len) > min_m) {
        w.resize(stem_len);
        w += best->replacement;
    }
}

inline void step1a(std::string& w) {
    if (ends_with(w, "sses")) w.resize(w.size() - 2);
    else if (ends_with(w, "ies")) w.resize(w.size() - 2);
    else if (ends_with(w, "ss")) { /* unchanged */ }
    else if (ends_with(w, "s")) w.resize(w.size() - 1);
}

inline void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
        return;
    }
    std::size_t cut = 0;
    if (ends_with(w, "ing") && contains_vowel(w, w.size() - 3)) cut = 3;
    else if (ends_with(w, "ed") && contains_vowel(w, w.size() - 2)) cut = 2;
    if (cut == 0) return;
    w.resize(w.size() - cut);
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w += 'e';
    } else if (ends_double_consonant(w) && w.back() != 'l' && w.back() != 's' && w.back() != 'z') {
        w.pop_back();
    } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
        w += 'e';
    }
}

inline void step1c(std::string& w) {
    if (w.size() > 2 && w.back() == 'y' && is_consonant(w, w.size() - 2)) w.back() = 'i';
}

inline void step2(std::string& w) {
    static constexpr std::array<Rule, 20> rules{{{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                                                 {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                                                 {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                                                 {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                                                 {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                                                 {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                                                 {"iviti", "ive"},   {"biliti", "ble"}}};
    apply_measure_rules(w, rules, 0);
}

inline void step3(std::string& w) {
    static constexpr std::array<Rule, 7> rules{{{"icate", "ic"},
                                                {"ative", ""},
                                                {"alize", "al"},
                                                {"iciti", "ic"},
                                                {"ical", "ic"},
                                                {"ful", ""},
                                                {"ness", ""}}};
    apply_measure_rules(w, rules, 0);
}

inline void step4(std::string& w) {
    static constexpr std::array<std::string_view, 19> suffixes{"al",    "ance", "ence", "er",  "ic",  "able", "ible",
                                                               "ant",   "ement", "ment", "ent", "ion", "ou",   "ism",
                                                               "ate",   "iti",  "ous",  "ive", "ize"};
    std::string_view best;
    for (std::string_view s : suffixes)
        if (ends_with(w, s) && s.size() > best.size()) best = s;
    if (best.empty()) return;
    std::size_t stem_len = w.size() - best.size();
    if (measure(w, stem_len) <= 1) return;
    if (best == "ion" && (stem_len == 0 || (w[stem_len - 1] != 's' && w[stem_len - 1] != 't'))) return;
    w.resize(stem_len);
}

inline void step5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    int m = measure(w, w.size() - 1);
    if (m > 1 || (m == 1 && !ends_cvc(w, w.size() - 1))) w.pop_back();
}

inline void step5b(std::string& w) {
    if (ends_double_consonant(w) && w.back() == 'l' && measure(w, w.size()) > 1) w.pop_back();
}

}  // namespace porter_detail

inline std::string porter_stem(const std::string& word) {
    std::string w;
    w.reserve(word.size());
    for (char c : word) w += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    if (w.size() <= 2) return w;
    porter_detail::step1a(w);
    porter_detail::step1b(w);
    porter_detail::step1c(w);
    porter_detail::step2(w);
    porter_detail::step3(w);
    porter_detail::step4(w);
    porter_detail::step5a(w);
    porter_detail::step5b(w);
    return w;
}

}  // namespace semq
