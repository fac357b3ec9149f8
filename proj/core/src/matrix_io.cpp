#include "ispec/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ispec {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_header(std::ostream& os, std::size_t rows, std::size_t cols) {
  os << rows << ' ' << cols << '\n';
}

std::vector<double> parse_fields(const std::string& token, std::size_t expected) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t comma = token.find(',', start);
    const std::size_t end = comma == std::string::npos ? token.size() : comma;
    double v = 0.0;
    const char* first = token.data() + start;
    const char* last = token.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw std::runtime_error("matrix text: bad number in '" + token + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected) {
    throw std::runtime_error("matrix text: expected " + std::to_string(expected) +
                             " fields in '" + token + "'");
  }
  return out;
}

template <typename T, std::size_t Fields, typename Make>
DenseMatrix<T> read_matrix(std::istream& is, Make make) {
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw std::runtime_error("matrix text: bad header");
  DenseMatrix<T> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::string token;
      if (!(is >> token)) throw std::runtime_error("matrix text: truncated input");
      try {
        a(i, j) = make(parse_fields(token, Fields));
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("matrix text: ") + e.what());
      }
    }
  }
  return a;
}

}  // namespace

void write_matrix(std::ostream& os, const IntervalMatrix& a) {
  write_header(os, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      os << (j ? " " : "") << fmt(a(i, j).lo()) << ',' << fmt(a(i, j).hi());
    }
    os << '\n';
  }
}

void write_matrix(std::ostream& os, const RectMatrix& a) {
  write_header(os, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ComplexRect& z = a(i, j);
      os << (j ? " " : "") << fmt(z.re.lo()) << ',' << fmt(z.re.hi()) << ','
         << fmt(z.im.lo()) << ',' << fmt(z.im.hi());
    }
    os << '\n';
  }
}

IntervalMatrix read_interval_matrix(std::istream& is) {
  return read_matrix<Interval, 2>(
      is, [](const std::vector<double>& f) { return Interval(f[0], f[1]); });
}

RectMatrix read_rect_matrix(std::istream& is) {
  return read_matrix<ComplexRect, 4>(is, [](const std::vector<double>& f) {
    return ComplexRect(Interval(f[0], f[1]), Interval(f[2], f[3]));
  });
}

}  // namespace ispec
