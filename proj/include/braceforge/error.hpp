#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace braceforge {

// Domain error with a machine-readable code and a witness (pair/triple/...)
// suitable for JSON diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string msg, nlohmann::json witness = nullptr)
        : std::runtime_error(msg), code(std::move(code)), witness(std::move(witness)) {}

    std::string code;
    nlohmann::json witness;

    nlohmann::json to_json() const {
        nlohmann::json j{{"error", code}, {"message", what()}};
        if (!witness.is_null())
            j["witness"] = witness;
        return j;
    }
};

} // namespace braceforge
