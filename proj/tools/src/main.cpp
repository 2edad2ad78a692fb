#include <iostream>

#include "lsharp/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lsharp::cli::run(args, std::cout, std::cerr);
}
