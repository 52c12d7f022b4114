#include "permlat/docio.hpp"

#include <cctype>
#include <sstream>

namespace permlat {

std::vector<DocLine> tokenize_document(const std::string& text) {
    std::vector<DocLine> lines;
    DocLine cur;
    std::string tok;
    int lineno = 1, depth = 0;
    bool comment = false;

    auto flush_tok = [&]() {
        if (!tok.empty()) {
            if (cur.tokens.empty()) cur.lineno = lineno;
            cur.tokens.push_back(tok);
            tok.clear();
        }
    };
    auto flush_line = [&]() {
        flush_tok();
        if (!cur.tokens.empty()) lines.push_back(std::move(cur));
        cur = DocLine{};
    };

    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') {
            if (depth == 0) flush_line();
            comment = false;
            ++lineno;
            continue;
        }
        if (comment) continue;
        if (c == '#' && depth == 0) {
            comment = true;
            continue;
        }
        if (c == '[') {
            if (depth == 0) flush_tok();
            ++depth;
            tok += c;
            continue;
        }
        if (c == ']') {
            if (depth == 0) throw parse_error(lineno, "unbalanced ']'");
            --depth;
            tok += c;
            if (depth == 0) flush_tok();
            continue;
        }
        if (depth > 0) {
            if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            flush_tok();
            continue;
        }
        tok += c;
    }
    if (depth != 0) throw parse_error(lineno, "unterminated matrix literal");
    flush_line();
    return lines;
}

namespace {

Int parse_int(const std::string& s, int lineno) {
    if (s.empty()) throw parse_error(lineno, "empty integer");
    size_t at = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (at == s.size()) throw parse_error(lineno, "bad integer '" + s + "'");
    for (size_t i = at; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error(lineno, "bad integer '" + s + "'");
    return Int(s);
}

}  // namespace

Mat parse_matrix_token(const std::string& tok, const Ring& ring, int lineno) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        throw parse_error(lineno, "expected a matrix literal");
    std::vector<std::vector<Int>> rows;
    size_t i = 1;
    while (i < tok.size() - 1) {
        if (tok[i] != '[') throw parse_error(lineno, "expected '[' starting a matrix row");
        size_t j = tok.find(']', i);
        if (j == std::string::npos) throw parse_error(lineno, "unterminated matrix row");
        std::string body = tok.substr(i + 1, j - i - 1);
        std::vector<Int> row;
        std::string item;
        for (char c : body + ",") {
            if (c == ',') {
                if (!item.empty()) row.push_back(parse_int(item, lineno));
                item.clear();
            } else {
                item += c;
            }
        }
        rows.push_back(std::move(row));
        i = j + 1;
        if (i < tok.size() - 1 && tok[i] == ',') ++i;
    }
    if (rows.empty()) throw parse_error(lineno, "empty matrix literal");
    size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw parse_error(lineno, "ragged matrix literal");
    Mat m(ring, static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) =
            ring.reduce(rows[r][c]);
    return m;
}

std::vector<Int> parse_row_token(const std::string& tok, const Ring& ring, int lineno) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        throw parse_error(lineno, "expected a row literal");
    std::string body = tok.substr(1, tok.size() - 2);
    std::vector<Int> row;
    std::string item;
    for (char c : body + ",") {
        if (c == ',') {
            if (!item.empty()) row.push_back(ring.reduce(parse_int(item, lineno)));
            item.clear();
        } else {
            item += c;
        }
    }
    return row;
}

std::string matrix_token(const Mat& m) { return m.to_string(); }

std::string row_token(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

}  // namespace permlat
