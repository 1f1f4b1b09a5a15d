#include <iostream>

#include "slnstate/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto r = slnstate::cli::run(args);
    (r.exit_code == 0 ? std::cout : std::cerr) << r.output;
    return r.exit_code;
}
