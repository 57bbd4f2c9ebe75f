#include "gts/format.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

namespace gts {
namespace {

struct Token {
  std::string text;
  std::size_t col = 1;  // 1-based start column in the raw line
};

struct Line {
  std::size_t number = 1;
  std::vector<Token> tokens;
};

// comment-stripped, whitespace-split significant lines
std::vector<Line> significant_lines(std::string_view text, std::size_t& line_count) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  line_count = number;
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t col, const std::string& message) {
  throw Error::syntax(line.number, col, message);
}

// section line "<name>: l1 l2 ...": first token is the name with the colon
std::vector<std::string> section_labels(const Line& line, const std::string& name) {
  if (line.tokens[0].text != name + ":")
    fail(line, line.tokens[0].col, "expected '" + name + ":' section");
  std::vector<std::string> labels;
  for (std::size_t t = 1; t < line.tokens.size(); ++t) labels.push_back(line.tokens[t].text);
  return labels;
}

}  // namespace

Space parse_space(std::string_view text) {
  std::size_t line_count = 0;
  auto lines = significant_lines(text, line_count);
  std::size_t at = 0;
  auto next = [&]() -> const Line& {
    if (at >= lines.size())
      throw Error::syntax(line_count + 1, 1, "unexpected end of document");
    return lines[at++];
  };

  {
    const Line& header = next();
    if (header.tokens.size() != 2 || header.tokens[0].text != "gts" ||
        header.tokens[1].text != "1")
      fail(header, header.tokens[0].col, "expected header 'gts 1'");
  }

  SpaceKind kind = SpaceKind::open_space;
  {
    const Line& line = next();
    if (line.tokens[0].text != "kind:" || line.tokens.size() != 2)
      fail(line, line.tokens[0].col, "expected 'kind: open|closed|dual|derived'");
    auto parsed = space_kind_from_string(line.tokens[1].text);
    if (!parsed)
      fail(line, line.tokens[1].col, "unknown kind '" + line.tokens[1].text + "'");
    kind = *parsed;
  }

  auto points = section_labels(next(), "points");
  auto opens = section_labels(next(), "opens");

  {
    const Line& line = next();
    if (line.tokens[0].text != "matrix:" || line.tokens.size() != 1)
      fail(line, line.tokens[0].col, "expected 'matrix:'");
  }

  std::vector<Degree> cells;
  cells.reserve(points.size() * opens.size());
  for (const auto& label : points) {
    if (at >= lines.size())
      throw Error::syntax(line_count + 1, 1, "missing matrix row for point '" + label + "'");
    const Line& line = lines[at++];
    if (line.tokens[0].text != label + ":")
      fail(line, line.tokens[0].col, "expected matrix row for point '" + label + "'");
    if (line.tokens.size() - 1 != opens.size()) {
      Error e(ErrorKind::dimension_mismatch,
              "matrix row for '" + label + "' has " + std::to_string(line.tokens.size() - 1) +
                  " entries for " + std::to_string(opens.size()) + " opens");
      e.line = line.number;
      e.col = line.tokens[0].col;
      throw e;
    }
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      try {
        cells.push_back(Degree::parse(line.tokens[t].text));
      } catch (Error& e) {
        if (e.line == 0) {
          e.line = line.number;
          e.col = line.tokens[t].col;
        }
        throw;
      }
    }
  }
  if (at != lines.size())
    fail(lines[at], lines[at].tokens[0].col, "unexpected content after the matrix");

  return Space(std::move(points), std::move(opens), std::move(cells), kind);
}

std::string serialize_space(const Space& space) {
  std::string out = "gts 1\n";
  out += "kind: ";
  out += to_string(space.kind());
  out += '\n';
  out += "points:";
  for (const auto& p : space.point_labels()) {
    out += ' ';
    out += p;
  }
  out += '\n';
  out += "opens:";
  for (const auto& o : space.open_labels()) {
    out += ' ';
    out += o;
  }
  out += '\n';
  out += "matrix:\n";
  for (std::size_t x = 0; x < space.point_count(); ++x) {
    out += space.point_label(x);
    out += ':';
    for (std::size_t j = 0; j < space.open_count(); ++j) {
      out += ' ';
      out += space.at(x, j).str();
    }
    out += '\n';
  }
  return out;
}

PhiDocument parse_phi(std::string_view text, const Space& space) {
  std::size_t line_count = 0;
  auto lines = significant_lines(text, line_count);
  if (lines.size() != space.open_count())
    throw Error(ErrorKind::not_a_bijection,
                "phi file has " + std::to_string(lines.size()) + " pairs for " +
                    std::to_string(space.open_count()) + " opens");

  PhiDocument doc;
  doc.phi.assign(space.open_count(), 0);
  doc.closed_labels.reserve(space.open_count());
  std::vector<bool> seen(space.open_count(), false);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2)
      fail(line, line.tokens[0].col, "expected '<open-label> <closed-label>'");
    auto open = space.open_index(line.tokens[0].text);
    if (!open)
      throw Error(ErrorKind::not_a_bijection,
                  "'" + line.tokens[0].text + "' is not an open of the space");
    if (seen[*open])
      throw Error(ErrorKind::not_a_bijection,
                  "open '" + line.tokens[0].text + "' mapped twice");
    seen[*open] = true;
    doc.phi[*open] = k;
    doc.closed_labels.push_back(line.tokens[1].text);
  }
  return doc;
}

}  // namespace gts
