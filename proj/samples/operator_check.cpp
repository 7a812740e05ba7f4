// Checks a quadratic operator given as JSON: stochasticity, the layer
// membership condition, and a sampled search for x with Vx not majorized by x.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "gdecomp/gdecomp.hpp"

int main(int argc, char** argv) {
  using namespace gdecomp;
  if (argc < 2) {
    std::cerr << "usage: sample_operator_check OPERATOR.json [trials]\n";
    return 2;
  }
  std::ifstream f(argv[1]);
  const std::string text(std::istreambuf_iterator<char>(f), {});
  const std::size_t trials = argc > 2 ? std::stoul(argv[2]) : kDefaultTrials;
  try {
    const QuadraticOperator v = parse_operator(text);
    if (!qo_is_stochastic(v)) {
      std::cout << "not stochastic\n";
      return 1;
    }
    std::cout << "layers in U^m: " << (qo_gds_necessary(v) ? "yes" : "no") << '\n';
    if (auto x = qo_gds_sample(v, trials, 0)) {
      std::cout << "counterexample:";
      for (const auto& c : x->coords()) std::cout << ' ' << to_string(c);
      std::cout << '\n';
      return 1;
    }
    std::cout << "no counterexample in " << trials << " samples\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}
