#pragma once

#include "qht/json_io.hpp"

#include <string>
#include <vector>

namespace qht {

struct CommandResult {
    bool ok = true;
    /// "OK" or an error code name.
    std::string code = "OK";
    std::string message;
    Json payload = Json::object();
    Json provenance = Json::object();

    int exit_code() const noexcept { return ok ? 0 : 1; }
};

Json to_json(const CommandResult& r);

/// Parses and executes one command line (without the program name).
CommandResult run(const std::vector<std::string>& args);

}  // namespace qht
