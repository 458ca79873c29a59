#include "fqlinalg/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "common/error.hpp"

namespace starprod::fq {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<long long> parse_integers(const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> values;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "not an integer: '" + token + "'");
    }
    require(used == token.size(), ErrorCode::kParse, "not an integer: '" + token + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

Mat read_matrix(std::istream& in) {
  std::string line;
  require(next_data_line(in, line), ErrorCode::kParse, "missing header line 'q rows cols'");
  const auto header = parse_integers(line);
  require(header.size() == 3, ErrorCode::kParse, "header must be 'q rows cols'");
  require(header[0] >= 2 && header[1] >= 0 && header[2] >= 0, ErrorCode::kParse, "invalid header values");
  require(header[0] <= static_cast<long long>(kMaxFieldOrder), ErrorCode::kTooLarge, "field order exceeds 2^16");
  auto field = Field::of_order(static_cast<std::uint32_t>(header[0]));
  const auto rows = static_cast<std::size_t>(header[1]);
  const auto cols = static_cast<std::size_t>(header[2]);
  require(rows <= kMaxMatrixSide && cols <= kMaxMatrixSide, ErrorCode::kTooLarge, "matrix side exceeds 4096");
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(next_data_line(in, line), ErrorCode::kParse, "expected " + std::to_string(rows) + " rows");
    const auto values = parse_integers(line);
    require(values.size() == cols, ErrorCode::kParse,
            "row " + std::to_string(r) + " has " + std::to_string(values.size()) + " entries, expected " +
                std::to_string(cols));
    for (auto v : values) {
      require(v >= 0 && v < static_cast<long long>(field->q()), ErrorCode::kParse,
              "entry " + std::to_string(v) + " outside [0, " + std::to_string(field->q()) + ")");
      entries.push_back(static_cast<Elem>(v));
    }
  }
  require(!next_data_line(in, line), ErrorCode::kParse, "trailing data after matrix rows");
  return Mat(field, rows, cols, std::move(entries));
}

Mat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open " + path);
  return read_matrix(in);
}

Mat parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Mat& m) {
  out << m.field()->q() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

std::string format_matrix(const Mat& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace starprod::fq
