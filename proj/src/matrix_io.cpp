#include "ripbound/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace ripbound {

namespace {

struct Token {
    std::string text;
    long column;  // 1-based position of first character
};

// Splits a line on blanks/tabs/CR; records 1-based columns for diagnostics.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), static_cast<long>(start + 1)});
    }
    return out;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

long parse_count(const Token& tok, long line_no) {
    char* end = nullptr;
    const long v = std::strtol(tok.text.c_str(), &end, 10);
    if (end == tok.text.c_str() || *end != '\0' || v < 1)
        throw ParseError("expected a positive integer, got '" + tok.text + "'",
                         line_no, tok.column);
    return v;
}

double parse_entry(const Token& tok, long line_no) {
    char* end = nullptr;
    const double v = std::strtod(tok.text.c_str(), &end);
    if (end == tok.text.c_str() || *end != '\0')
        throw ParseError("expected a decimal literal, got '" + tok.text + "'",
                         line_no, tok.column);
    if (!std::isfinite(v))
        throw ParseError("entry '" + tok.text + "' is not finite", line_no, tok.column);
    return v;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
    std::string line;
    long line_no = 0;

    long m = 0, n = 0;
    bool have_header = false;
    while (!have_header) {
        if (!std::getline(in, line))
            throw ParseError("missing header line 'm n'", line_no + 1, 1);
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto toks = tokenize(line);
        if (toks.size() != 2)
            throw ParseError("header must be exactly 'm n'", line_no,
                             toks.empty() ? 1 : toks.back().column);
        m = parse_count(toks[0], line_no);
        n = parse_count(toks[1], line_no);
        have_header = true;
    }

    Matrix M(static_cast<int>(m), static_cast<int>(n));
    long row = 0;
    while (row < m) {
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(m) + " data rows, got " +
                             std::to_string(row), line_no + 1, 1);
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto toks = tokenize(line);
        if (static_cast<long>(toks.size()) != n)
            throw ParseError("row has " + std::to_string(toks.size()) +
                             " entries, expected " + std::to_string(n),
                             line_no, toks.empty() ? 1 : toks.back().column);
        for (long j = 0; j < n; ++j)
            M(static_cast<int>(row), static_cast<int>(j)) = parse_entry(toks[j], line_no);
        ++row;
    }
    return M;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return read_matrix(in);
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix(std::ostream& out, const Matrix& M) {
    out << M.rows() << ' ' << M.cols() << '\n';
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            if (j) out << ' ';
            out << format_g17(M(i, j));
        }
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const Matrix& M) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_matrix(out, M);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace ripbound
