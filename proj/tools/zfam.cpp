#include <zfam/cli/run.hpp>

#include <iostream>

int main(int argc, char** argv) {
  auto r = zfam::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.out << std::flush;
  std::cerr << r.err << std::flush;
  return r.exit_code;
}
