#pragma once

/// @file
/// Line-oriented text formats. Every reader skips blank lines and lines
/// starting with '#', and reports failures with the 1-based line number.

#include "turan/hypergraph.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turan {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Splits significant lines of a stream into whitespace-separated tokens.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next significant line, or nullopt at end of input.
    std::optional<std::vector<std::string>> next() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (!raw.empty() && raw.back() == '\r') {
                raw.pop_back();
            }
            std::istringstream words(raw);
            std::vector<std::string> tokens;
            for (std::string w; words >> w;) {
                tokens.push_back(w);
            }
            if (tokens.empty() || tokens.front().front() == '#') {
                continue;
            }
            return tokens;
        }
        return std::nullopt;
    }

    std::vector<std::string> require(const char* what) {
        auto tokens = next();
        if (!tokens) {
            throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
        }
        return *tokens;
    }

    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

    long long integer(std::string_view token) const {
        long long value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            fail("expected an integer, got '" + std::string(token) + "'");
        }
        return value;
    }

    /// Parses a `key=<int>` token.
    long long keyed(std::string_view token, std::string_view key) const {
        if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
            token[key.size()] != '=') {
            fail("expected '" + std::string(key) + "=<int>', got '" + std::string(token) + "'");
        }
        return integer(token.substr(key.size() + 1));
    }

    void expect_header(const std::vector<std::string>& tokens, std::string_view magic) const {
        std::istringstream expected{std::string(magic)};
        std::vector<std::string> want;
        for (std::string w; expected >> w;) {
            want.push_back(w);
        }
        if (tokens != want) {
            fail("malformed header, expected '" + std::string(magic) + "'");
        }
    }

    /// Reads strictly increasing vertex indices below n into a mask.
    Mask index_list(const std::vector<std::string>& tokens, std::size_t from, int n) const {
        Mask mask = 0;
        long long previous = -1;
        for (std::size_t i = from; i < tokens.size(); ++i) {
            const long long v = integer(tokens[i]);
            if (v < 0 || v >= n) {
                fail("vertex index " + tokens[i] + " out of range for n=" + std::to_string(n));
            }
            if (v <= previous) {
                fail("vertex indices must be strictly increasing");
            }
            previous = v;
            mask |= singleton(static_cast<int>(v));
        }
        return mask;
    }

private:
    std::istream& in_;
    int line_ = 0;
};

inline void write_index_list(std::ostream& out, Mask mask) {
    for (int v : KSubset{mask}.indices()) {
        out << ' ' << v;
    }
}

// turan-hg v1
// n=<int> k=<int>
// e <v1> ... <v2k>

inline Hypergraph read_hypergraph(std::istream& in) {
    LineReader reader(in);
    reader.expect_header(reader.require("header"), "turan-hg v1");
    const auto dims = reader.require("'n=<int> k=<int>'");
    if (dims.size() != 2) {
        reader.fail("expected 'n=<int> k=<int>'");
    }
    const long long n = reader.keyed(dims[0], "n");
    const long long k = reader.keyed(dims[1], "k");
    if (n < 0 || n > kMaxVertices) {
        reader.fail("n must lie in [0, 64]");
    }
    if (k < 1) {
        reader.fail("k must be >= 1");
    }
    std::vector<Mask> edges;
    std::set<Mask> seen;
    while (auto tokens = reader.next()) {
        if ((*tokens)[0] != "e") {
            reader.fail("expected an edge line 'e <v1> ... <v2k>'");
        }
        const Mask edge = reader.index_list(*tokens, 1, static_cast<int>(n));
        if (tokens->size() - 1 != static_cast<std::size_t>(2 * k)) {
            reader.fail("edge has " + std::to_string(tokens->size() - 1) + " vertices, expected " +
                        std::to_string(2 * k));
        }
        if (!seen.insert(edge).second) {
            reader.fail("duplicate edge");
        }
        edges.push_back(edge);
    }
    return Hypergraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "turan-hg v1\n";
    out << "n=" << h.vertex_count() << " k=" << h.half_uniformity() << '\n';
    for (Mask e : h.edges()) {
        out << 'e';
        write_index_list(out, e);
        out << '\n';
    }
}

inline Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return read_hypergraph(in);
}

inline std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    write_hypergraph(out, h);
    return out.str();
}

}  // namespace turan
