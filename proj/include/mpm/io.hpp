#pragma once

#include "mpm/barcode.hpp"
#include "mpm/presentation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mpm {

// .fpm documents. Parse errors carry the 1-based line number.
Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

// .bc documents: "<birth> <death|inf>" per line.
Barcode parse_barcode(std::string_view text);
std::string serialize_barcode(const Barcode& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Line-oriented tokenizer shared by the text formats: comments stripped, blank lines skipped.
struct TextLine {
    std::size_t number;
    std::vector<std::string> tokens;
};
std::vector<TextLine> tokenize(std::string_view text);

// Rational from a token, rethrowing as ParseError.
Rational parse_number(const std::string& token, std::size_t line);

}  // namespace mpm
