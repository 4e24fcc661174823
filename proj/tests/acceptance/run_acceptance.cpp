#include "qht/acceptance.hpp"

#include <iostream>

int main() {
    bool ok = true;
    for (const auto& r : qht::run_acceptance()) {
        std::cout << qht::format_result(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
