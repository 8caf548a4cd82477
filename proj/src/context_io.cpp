#include "context_io.hpp"

#include <charconv>

#include "errors.hpp"

namespace fcai {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return lines;
}

std::size_t parse_count(const std::string& s, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line_no, std::string("expected ") + what + " as a decimal number, got \"" + s + "\"");
  return value;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

FormalContext parse_burmeister(std::string_view text) {
  const auto lines = split_lines(text);
  auto line_at = [&lines](std::size_t idx) -> const std::string& {
    static const std::string empty;
    return idx < lines.size() ? lines[idx] : empty;
  };
  if (lines.empty() || line_at(0) != "B") throw ParseError(1, "expected Burmeister header \"B\"");
  if (!line_at(1).empty()) throw ParseError(2, "expected an empty line after \"B\"");
  if (lines.size() < 4) throw ParseError(lines.size() + 1, "truncated header");
  const std::size_t objects = parse_count(line_at(2), 3, "object count");
  const std::size_t attributes = parse_count(line_at(3), 4, "attribute count");
  if (!line_at(4).empty()) throw ParseError(5, "expected an empty line after the counts");
  const std::size_t names_start = 5;
  const std::size_t rows_start = names_start + objects + attributes;
  if (lines.size() < rows_start + objects)
    throw ParseError(lines.size() + 1, "truncated file: expected " +
                                           std::to_string(rows_start + objects) + " lines");

  std::vector<std::string> object_labels(lines.begin() + names_start,
                                         lines.begin() + names_start + objects);
  std::vector<std::string> attribute_labels(lines.begin() + names_start + objects,
                                            lines.begin() + rows_start);
  UniversePtr universe;
  try {
    universe = AttributeUniverse::make(std::move(attribute_labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(names_start + objects + 1, e.what());
  }

  std::vector<AttributeSet> rows;
  rows.reserve(objects);
  for (std::size_t g = 0; g < objects; ++g) {
    const std::size_t line_no = rows_start + g + 1;
    const std::string& line = line_at(rows_start + g);
    if (line.size() != attributes)
      throw ParseError(line_no, "row has " + std::to_string(line.size()) +
                                    " cells, expected " + std::to_string(attributes));
    AttributeSet row(universe);
    for (std::size_t j = 0; j < attributes; ++j) {
      if (line[j] == 'X')
        row.add(j);
      else if (line[j] != '.')
        throw ParseError(line_no, std::string("row cells must be 'X' or '.', got '") + line[j] + "'");
    }
    rows.push_back(std::move(row));
  }
  try {
    return FormalContext(universe, std::move(object_labels), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(names_start + 1, e.what());
  }
}

FormalContext parse_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty CSV input");
  auto header = split_cells(lines[0]);
  if (header.empty()) throw ParseError(1, "missing CSV header");
  // first header cell labels the object column and is ignored
  std::vector<std::string> attribute_labels(header.begin() + 1, header.end());
  UniversePtr universe;
  try {
    universe = AttributeUniverse::make(std::move(attribute_labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
  const std::size_t attributes = universe->size();

  std::vector<std::string> labels;
  std::vector<AttributeSet> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty() && i + 1 == lines.size()) break;
    auto cells = split_cells(lines[i]);
    if (cells.size() != attributes + 1)
      throw ParseError(i + 1, "row has " + std::to_string(cells.size()) + " cells, expected " +
                                  std::to_string(attributes + 1));
    labels.push_back(cells[0]);
    AttributeSet row(universe);
    for (std::size_t j = 0; j < attributes; ++j) {
      if (cells[j + 1] == "1")
        row.add(j);
      else if (cells[j + 1] != "0")
        throw ParseError(i + 1, "cells must be 0 or 1, got \"" + cells[j + 1] + "\"");
    }
    rows.push_back(std::move(row));
  }
  try {
    return FormalContext(universe, std::move(labels), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(2, e.what());
  }
}

void check_no_comma(const std::string& label) {
  if (label.find(',') != std::string::npos)
    throw std::invalid_argument("CSV output cannot represent label with comma: " + label);
}

}  // namespace

FormalContext parse_context(std::string_view text, ContextFormat format) {
  switch (format) {
    case ContextFormat::Burmeister:
      return parse_burmeister(text);
    case ContextFormat::CsvBinary:
      return parse_csv(text);
  }
  throw std::invalid_argument("unknown context format");
}

std::string write_context(const FormalContext& ctx, ContextFormat format) {
  std::string out;
  const std::size_t n = ctx.attribute_count();
  if (format == ContextFormat::Burmeister) {
    out += "B\n\n";
    out += std::to_string(ctx.object_count()) + "\n";
    out += std::to_string(n) + "\n\n";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) out += ctx.object_label(g) + "\n";
    for (std::size_t j = 0; j < n; ++j) out += ctx.universe()->name(j) + "\n";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
      const AttributeSet& row = ctx.row(g);
      for (std::size_t j = 0; j < n; ++j) out += row.contains(j) ? 'X' : '.';
      out += '\n';
    }
    return out;
  }
  // CSV: leading empty cell for the object-label column
  for (std::size_t j = 0; j < n; ++j) {
    check_no_comma(ctx.universe()->name(j));
    out += ",";
    out += ctx.universe()->name(j);
  }
  out += '\n';
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    check_no_comma(ctx.object_label(g));
    out += ctx.object_label(g);
    const AttributeSet& row = ctx.row(g);
    for (std::size_t j = 0; j < n; ++j) out += row.contains(j) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

ContextFormat guess_format(std::string_view path_or_text) {
  auto ends_with = [&path_or_text](std::string_view suffix) {
    return path_or_text.size() >= suffix.size() &&
           path_or_text.substr(path_or_text.size() - suffix.size()) == suffix;
  };
  if (ends_with(".cxt")) return ContextFormat::Burmeister;
  if (ends_with(".csv")) return ContextFormat::CsvBinary;
  if (path_or_text.substr(0, 2) == "B\n" || path_or_text == "B") return ContextFormat::Burmeister;
  return ContextFormat::CsvBinary;
}

}  // namespace fcai
