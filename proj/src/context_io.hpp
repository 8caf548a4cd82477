#pragma once

#include <string>
#include <string_view>

#include "context.hpp"

namespace fcai {

enum class ContextFormat { Burmeister, CsvBinary };

// Throws ParseError (with 1-based line number) on malformed input.
FormalContext parse_context(std::string_view text, ContextFormat format);

// Output re-parses to an equal context; Burmeister is bit-exact per the
// format description in the README.
std::string write_context(const FormalContext& ctx, ContextFormat format);

// .cxt -> Burmeister, .csv -> CsvBinary, otherwise sniff the first line.
ContextFormat guess_format(std::string_view path_or_text);

}  // namespace fcai
