// Reads a matrix (plain or JSON) from a file or stdin, checks membership in
// U^m and prints a stochastic X with (X + X^T)/2 = A, or the violated subset.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "gdecomp/gdecomp.hpp"

int main(int argc, char** argv) {
  using namespace gdecomp;
  std::string text;
  if (argc > 1) {
    std::ifstream f(argv[1]);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  try {
    const SymMatrix a = parse_matrix(text);
    const DecompResult r = g_decompose(a, DecompMode::Stochastic);
    if (!r.solved()) {
      if (r.certificate) {
        std::cout << "not in U^m: subset " << r.certificate->to_string() << " has principal sum "
                  << to_string(principal_sum(a, *r.certificate)) << '\n';
      } else {
        std::cout << "not in U^m: total sum " << to_string(a.total_sum()) << '\n';
      }
      return 1;
    }
    std::cout << serialize_matrix(*r.X, Format::Plain);
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
