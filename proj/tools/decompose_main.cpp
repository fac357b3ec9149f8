// Reads an interval matrix in the matrix text format and prints a verified
// spectral decomposition, or the failure cause.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ispec/matrix_io.hpp"
#include "ispec/spectral_decomp.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Verified spectral decomposition of an interval matrix"};
  std::string input = "-";
  bool symmetric = false;
  bool force_fallback = false;
  app.add_option("input", input, "Matrix file, '-' for stdin")->capture_default_str();
  app.add_flag("--symmetric", symmetric, "Treat the input as a symmetric interval matrix");
  app.add_flag("--force-fallback", force_fallback,
               "Symmetric only: use the all-[-1,1] eigenvector box");
  CLI11_PARSE(app, argc, argv);

  ispec::IntervalMatrix a;
  try {
    if (input == "-") {
      a = ispec::read_interval_matrix(std::cin);
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "error: cannot open '" << input << "'\n";
        return 3;
      }
      a = ispec::read_interval_matrix(in);
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (symmetric) {
      const auto d = ispec::decompose_symmetric(ispec::SymIntervalMatrix(a), force_fallback);
      if (!d) {
        std::cerr << "failed: " << ispec::to_string(d.failure()) << '\n';
        return 1;
      }
      ispec::write_decomposition(std::cout, *d);
    } else {
      const auto d = ispec::decompose_general(a);
      if (!d) {
        std::cerr << "failed: " << ispec::to_string(d.failure()) << '\n';
        return 1;
      }
      ispec::write_decomposition(std::cout, *d);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
