#include "qht/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = qht::run(args);
    std::cout << qht::to_json(result).dump(2) << std::endl;
    return result.exit_code();
}
