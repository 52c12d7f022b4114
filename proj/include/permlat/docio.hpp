#pragma once

#include <string>
#include <vector>

#include "permlat/matrix.hpp"

namespace permlat {

/// Parse failure anchored to an input line.
struct parse_error : value_error {
    int lineno;
    parse_error(int line, const std::string& msg)
        : value_error("line " + std::to_string(line) + ": " + msg), lineno(line) {}
};

/// One logical line of a structured text document: whitespace/comma separated
/// tokens, '#' comments stripped, bracketed matrix literals glued into a
/// single token (they may span physical lines).
struct DocLine {
    int lineno = 0;
    std::vector<std::string> tokens;
};

std::vector<DocLine> tokenize_document(const std::string& text);

/// "[[1,2],[3,4]]" -> matrix; "[[]]" and "[]" are rejected (shape unknown).
Mat parse_matrix_token(const std::string& tok, const Ring& ring, int lineno);
std::vector<Int> parse_row_token(const std::string& tok, const Ring& ring, int lineno);

std::string matrix_token(const Mat& m);
std::string row_token(const std::vector<Int>& v);

}  // namespace permlat
