#include "gallai/gcg.hpp"

#include "gallai/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gallai {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

// Splits into non-blank, comment-stripped lines of whitespace-separated tokens.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ++number;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
                ++i;
            }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') {
                ++i;
            }
            if (i > start) {
                line.tokens.push_back({raw.substr(start, i - start), start + 1});
            }
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::size_t parse_number(const Line& line, const Token& tok, const char* what)
{
    std::size_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line.number, tok.column, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
    }
    return value;
}

} // namespace

std::string encode(const ColoredCompleteGraph& g)
{
    std::string out = "gcg 1\n";
    out += std::to_string(g.order());
    out += ' ';
    out += std::to_string(g.colors());
    out += '\n';
    for (Vertex i = 1; i < g.order(); ++i) {
        for (Vertex j = 0; j < i; ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += std::to_string(g.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string encode_with_comment(const ColoredCompleteGraph& g, std::string_view comment)
{
    std::string out = encode(g);
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) {
        out += "# ";
        out += line;
        out += '\n';
    }
    return out;
}

ColoredCompleteGraph decode(std::string_view text)
{
    const std::vector<Line> lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "bad header: empty input");
    }
    const Line& magic = lines[0];
    if (magic.tokens.size() != 2 || magic.tokens[0].text != "gcg" || magic.tokens[1].text != "1") {
        throw ParseError(magic.number, 1, "bad header: expected 'gcg 1'");
    }
    if (lines.size() < 2) {
        throw ParseError(magic.number + 1, 1, "bad header: missing '<n> <k>' line");
    }
    const Line& shape = lines[1];
    if (shape.tokens.size() != 2) {
        throw ParseError(shape.number, 1, "bad header: expected '<n> <k>'");
    }
    const std::size_t n = parse_number(shape, shape.tokens[0], "vertex count");
    const std::size_t k = parse_number(shape, shape.tokens[1], "color count");
    if (n == 0 || n > kMaxOrder) {
        throw ParseError(shape.number, shape.tokens[0].column, "bad header: vertex count out of range");
    }
    if (k == 0 || k > kMaxColors) {
        throw ParseError(shape.number, shape.tokens[1].column, "bad header: color count out of range");
    }

    ColoredCompleteGraph::Builder builder(n, k);
    for (Vertex i = 1; i < n; ++i) {
        const std::size_t li = 1 + i;
        if (li >= lines.size()) {
            const std::size_t at = lines.back().number + 1;
            throw ParseError(at, 1, "missing row " + std::to_string(i) + " (expected " + std::to_string(n - 1) + " rows)");
        }
        const Line& row = lines[li];
        if (row.tokens.size() != i) {
            const std::size_t col = row.tokens.size() > i ? row.tokens[i].column : 1;
            throw ParseError(row.number, col,
                             "wrong row length: row " + std::to_string(i) + " has " + std::to_string(row.tokens.size()) +
                                 " entries, expected " + std::to_string(i));
        }
        for (Vertex j = 0; j < i; ++j) {
            const Token& tok = row.tokens[j];
            const std::size_t c = parse_number(row, tok, "color");
            if (c < 1 || c > k) {
                throw ParseError(row.number, tok.column,
                                 "color " + std::to_string(c) + " out of range 1.." + std::to_string(k));
            }
            builder.set(i, j, static_cast<Color>(c));
        }
    }
    if (lines.size() > n + 1) {
        const Line& extra = lines[n + 1];
        throw ParseError(extra.number, extra.tokens[0].column, "trailing content after last row");
    }
    return std::move(builder).build();
}

ColoredCompleteGraph read_gcg_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return decode(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw Error("write failed for " + path.string());
    }
}

} // namespace gallai
