#include "equinoether/ideal_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "equinoether/errors.hpp"
#include "equinoether/polyparse.hpp"

namespace equinoether {

namespace {

// One physical line with its byte offset in the original text.
struct Line {
  std::string text;
  std::size_t offset = 0;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      if (start < text.size()) lines.push_back({text.substr(start), start});
      break;
    }
    lines.push_back({text.substr(start, end - start), start});
    start = end + 1;
  }
  return lines;
}

// Strips a trailing '#' comment and surrounding whitespace; adjusts the
// offset so ParseError positions still point into the original text.
void strip(Line& line) {
  std::size_t hash = line.text.find('#');
  if (hash != std::string::npos) line.text.erase(hash);
  std::size_t first = line.text.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    line.text.clear();
    return;
  }
  std::size_t last = line.text.find_last_not_of(" \t\r");
  line.offset += first;
  line.text = line.text.substr(first, last - first + 1);
}

int parse_header_int(const std::string& value, const Line& line,
                     const char* what) {
  try {
    std::size_t used = 0;
    int n = std::stoi(value, &used);
    if (used != value.size() || n < 0) throw std::invalid_argument("range");
    return n;
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid ") + what + " header value '" +
                         value + "'",
                     line.offset);
  }
}

}  // namespace

IdealFile load_ideal(const std::string& text) {
  bool have_symmetry = false;
  std::string symmetry_name;
  int rows = -1;
  int declared_size = -1;
  std::size_t symmetry_offset = 0;
  std::vector<Poly> generators;

  for (Line line : split_lines(text)) {
    strip(line);
    if (line.text.empty()) continue;

    std::size_t colon = line.text.find(':');
    bool looks_like_header =
        colon != std::string::npos && line.text.find('[') == std::string::npos;
    if (looks_like_header) {
      std::string key = line.text.substr(0, colon);
      std::string value = line.text.substr(colon + 1);
      std::size_t vstart = value.find_first_not_of(" \t");
      value = vstart == std::string::npos ? std::string() : value.substr(vstart);
      if (key == "symmetry") {
        have_symmetry = true;
        symmetry_name = value;
        symmetry_offset = line.offset;
      } else if (key == "rows") {
        rows = parse_header_int(value, line, "rows");
      } else if (key == "basis-size") {
        declared_size = parse_header_int(value, line, "basis-size");
      } else if (key == "order") {
        if (value != "lex-colmajor")
          throw ParseError("unknown term order '" + value + "'", line.offset);
      } else {
        throw ParseError("unknown header '" + key + "'", line.offset);
      }
      continue;
    }

    if (!have_symmetry)
      throw ParseError("generator appears before the symmetry header",
                       line.offset);
    try {
      generators.push_back(parse_polynomial(line.text));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), line.offset + e.position);
    }
  }

  if (!have_symmetry) throw ParseError("missing symmetry header", 0);

  SymmetryType symmetry = SymmetryType::inc_columns(1);
  if (symmetry_name == "pairsym") {
    if (rows >= 0)
      throw ParseError("rows header is not allowed for pairsym",
                       symmetry_offset);
    symmetry = SymmetryType::pair_sym();
  } else {
    if (rows < 0)
      throw ParseError("missing rows header for symmetry '" + symmetry_name +
                           "'",
                       symmetry_offset);
    if (rows < 1)
      throw ParseError("rows header must be positive", symmetry_offset);
    if (symmetry_name == "inc") {
      symmetry = SymmetryType::inc_columns(rows);
    } else if (symmetry_name == "sym") {
      symmetry = SymmetryType::sym_columns(rows);
    } else {
      throw ParseError("unknown symmetry '" + symmetry_name + "'",
                       symmetry_offset);
    }
  }

  for (const Poly& g : generators) check_shape(g, symmetry);
  if (declared_size >= 0 &&
      static_cast<std::size_t>(declared_size) != generators.size())
    throw ParseError("basis-size header does not match the generator count", 0);

  return IdealFile{symmetry, std::move(generators)};
}

IdealFile load_ideal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_ideal(buf.str());
}

namespace {

void write_header(std::ostringstream& out, const SymmetryType& symmetry) {
  out << "symmetry: " << symmetry.name() << "\n";
  if (symmetry.tag() != SymmetryType::Tag::PairSym)
    out << "rows: " << symmetry.rows() << "\n";
}

}  // namespace

std::string format_ideal(const SymmetryType& symmetry,
                         const std::vector<Poly>& generators) {
  std::ostringstream out;
  write_header(out, symmetry);
  for (const Poly& g : generators) out << print_polynomial(g) << "\n";
  return out.str();
}

std::string format_groebner(const GroebnerBasis& gb) {
  std::ostringstream out;
  write_header(out, gb.symmetry);
  out << "order: lex-colmajor\n";
  out << "basis-size: " << gb.elements.size() << "\n";
  for (const Poly& g : gb.elements) out << print_polynomial(g) << "\n";
  return out.str();
}

}  // namespace equinoether
