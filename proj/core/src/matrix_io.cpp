#include "hadamard/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hadamard/errors.hpp"

namespace hadamard {

namespace {

int parse_order_line(const std::string& line) {
  std::istringstream ss(line);
  std::string tok;
  if (!(ss >> tok)) throw ParseError("empty header line, expected order", 1, 1);
  if (tok == "order" && !(ss >> tok))
    throw ParseError("missing order value", 1, static_cast<int>(line.size()) + 1);
  int tok_col = static_cast<int>(line.find(tok)) + 1;
  try {
    std::size_t pos = 0;
    int n = std::stoi(tok, &pos);
    if (pos != tok.size() || n <= 0)
      throw ParseError("invalid order '" + tok + "'", 1, tok_col);
    std::string extra;
    if (ss >> extra)
      throw ParseError("trailing tokens after order", 1,
                       static_cast<int>(line.rfind(extra)) + 1);
    return n;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("invalid order '" + tok + "'", 1, tok_col);
  }
}

}  // namespace

SignMatrix read_sign_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input", 1, 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  int n = parse_order_line(line);
  if (n > kMaxOrder)
    throw ParseError("order " + std::to_string(n) + " exceeds maximum " +
                         std::to_string(kMaxOrder),
                     1, 1);

  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(n) + " rows, got " +
                           std::to_string(r),
                       r + 2, 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != n)
      throw ParseError("row has length " + std::to_string(line.size()) +
                           ", expected " + std::to_string(n),
                       r + 2, static_cast<int>(line.size()) + 1);
    for (int c = 0; c < n; ++c)
      if (line[static_cast<std::size_t>(c)] != '+' &&
          line[static_cast<std::size_t>(c)] != '-')
        throw ParseError(std::string("invalid entry character '") +
                             line[static_cast<std::size_t>(c)] + "'",
                         r + 2, c + 1);
    rows.push_back(line);
  }
  return SignMatrix::from_rows(rows);
}

SignMatrix read_sign_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file " + path, 0, 0);
  return read_sign_matrix(f);
}

void write_sign_matrix(std::ostream& out, const SignMatrix& m) {
  out << "order " << m.order() << '\n';
  for (int r = 0; r < m.order(); ++r) out << m.row_string(r) << '\n';
}

std::string to_text(const SignMatrix& m) {
  std::ostringstream ss;
  write_sign_matrix(ss, m);
  return ss.str();
}

}  // namespace hadamard
