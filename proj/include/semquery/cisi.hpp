#pragma once

// CISI-format corpus ingestion: marker-line documents/queries, the
// relevance mapping, and the seeded train/test query split.
//
// Record format:
//   .I <id>      starts a record
//   .T .A .W .X  field markers (title, author, body, cross-references),
//                each followed by content lines until the next marker
// Queries need only .I and .W. A .B marker (publication data, present in
// some CISI-family files) is tolerated and skipped.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "semquery/common.hpp"

namespace semq {

struct Document {
    int id = 0;
    std::string title;
    std::string author;
    std::string body;
    std::vector<int> cross_refs;
};

struct QueryRecord {
    int id = 0;
    std::string text;
};

struct RelevanceMap {
    std::map<int, std::set<int>> entries;  // query id -> relevant doc ids
};

namespace detail {

inline bool is_marker(const std::string& line) { return line.size() >= 2 && line[0] == '.' && line[1] >= 'A' && line[1] <= 'Z'; }

inline void append_text(std::string& field, const std::string& line) {
    if (!field.empty()) field += ' ';
    field += line;
}

inline int parse_int_field(const std::string& s, std::size_t line_no, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad " + std::string(what) + " '" + s + "'");
    }
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

enum class CisiKind { Document, Query };

// Shared marker-walk for both record kinds. Duplicate ids and records
// without a body are parse errors naming the offending line.
inline std::vector<Document> parse_cisi_documents(const std::string& raw) {
    std::vector<Document> docs;
    std::set<int> seen;
    std::istringstream in(raw);
    std::string line;
    std::size_t line_no = 0;

    Document cur;
    bool open = false;
    std::size_t record_line = 0;
    char field = 0;  // active marker letter, 0 = none

    auto flush = [&]() {
        if (!open) return;
        if (detail::trim(cur.body).empty())
            throw ParseError("line " + std::to_string(record_line) + ": record " + std::to_string(cur.id) + " missing .W body");
        docs.push_back(cur);
        cur = Document{};
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::is_marker(line)) {
            char m = line[1];
            std::string rest = detail::trim(line.substr(2));
            switch (m) {
                case 'I': {
                    flush();
                    open = true;
                    record_line = line_no;
                    cur.id = detail::parse_int_field(rest, line_no, "record id");
                    if (cur.id <= 0) throw ParseError("line " + std::to_string(line_no) + ": record id must be positive");
                    if (!seen.insert(cur.id).second)
                        throw ParseError("line " + std::to_string(line_no) + ": duplicate record id " + std::to_string(cur.id));
                    field = 0;
                    break;
                }
                case 'T':
                case 'A':
                case 'W':
                case 'X':
                case 'B':
                    if (!open) throw ParseError("line " + std::to_string(line_no) + ": field marker before any .I record");
                    field = m;
                    break;
                default:
                    throw ParseError("line " + std::to_string(line_no) + ": malformed marker '." + std::string(1, m) + "'");
            }
            continue;
        }
        if (!open || field == 0) {
            if (detail::trim(line).empty()) continue;
            throw ParseError("line " + std::to_string(line_no) + ": content outside any field");
        }
        switch (field) {
            case 'T': detail::append_text(cur.title, detail::trim(line)); break;
            case 'A': detail::append_text(cur.author, detail::trim(line)); break;
            case 'W': detail::append_text(cur.body, detail::trim(line)); break;
            case 'X': {
                // only the first column (a document id) of each .X line is kept
                std::istringstream xs(line);
                std::string first;
                if (xs >> first) cur.cross_refs.push_back(detail::parse_int_field(first, line_no, "cross-reference id"));
                break;
            }
            case 'B': break;  // tolerated, not retained
        }
    }
    flush();
    return docs;
}

inline std::vector<QueryRecord> parse_cisi_queries(const std::string& raw) {
    // queries reuse the document walk; title/author/cross-refs are ignored
    std::vector<QueryRecord> out;
    for (const Document& d : parse_cisi_documents(raw)) out.push_back({d.id, d.body});
    return out;
}

// Round-trip serialization back to marker format.
inline std::string write_cisi_documents(const std::vector<Document>& docs) {
    std::ostringstream out;
    for (const Document& d : docs) {
        out << ".I " << d.id << "\n";
        if (!d.title.empty()) out << ".T\n" << d.title << "\n";
        if (!d.author.empty()) out << ".A\n" << d.author << "\n";
        out << ".W\n" << d.body << "\n";
        if (!d.cross_refs.empty()) {
            out << ".X\n";
            for (int x : d.cross_refs) out << x << "\n";
        }
    }
    return out.str();
}

inline std::string write_cisi_queries(const std::vector<QueryRecord>& queries) {
    std::ostringstream out;
    for (const QueryRecord& q : queries) out << ".I " << q.id << "\n.W\n" << q.text << "\n";
    return out.str();
}

// Rows are whitespace-separated: query id, document id, trailing columns
// ignored.
inline RelevanceMap parse_relevance(const std::string& raw) {
    RelevanceMap rel;
    std::istringstream in(raw);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string qs, ds;
        if (!(ls >> qs)) continue;  // blank line
        if (!(ls >> ds)) throw ParseError("line " + std::to_string(line_no) + ": relevance row needs two columns");
        int q = detail::parse_int_field(qs, line_no, "query id");
        int d = detail::parse_int_field(ds, line_no, "document id");
        rel.entries[q].insert(d);
    }
    return rel;
}

// Every referenced id must exist in the loaded corpus/query set.
inline void validate_relevance(const RelevanceMap& rel, const std::vector<Document>& docs, const std::vector<QueryRecord>& queries) {
    std::set<int> doc_ids, query_ids;
    for (const Document& d : docs) doc_ids.insert(d.id);
    for (const QueryRecord& q : queries) query_ids.insert(q.id);
    for (const auto& [qid, dids] : rel.entries) {
        if (!query_ids.count(qid)) throw ValidationError("relevance references unknown query id " + std::to_string(qid));
        for (int did : dids)
            if (!doc_ids.count(did)) throw ValidationError("relevance references unknown document id " + std::to_string(did));
    }
}

struct QuerySplit {
    std::vector<QueryRecord> train;
    std::vector<QueryRecord> test;
};

// Deterministic shuffle keyed by the seed; train takes floor(ratio * n).
inline QuerySplit split_queries(const std::vector<QueryRecord>& queries, double ratio, std::uint64_t seed) {
    if (queries.empty()) throw ValidationError("split_queries: empty query list");
    if (!(ratio > 0.0 && ratio < 1.0)) throw ValidationError("split_queries: ratio must be in (0,1)");
    std::vector<std::size_t> order(queries.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    seeded_shuffle(order, rng);
    const std::size_t n_train = static_cast<std::size_t>(ratio * static_cast<double>(queries.size()));
    QuerySplit split;
    for (std::size_t i = 0; i < order.size(); ++i)
        (i < n_train ? split.train : split.test).push_back(queries[order[i]]);
    return split;
}

}  // namespace semq
