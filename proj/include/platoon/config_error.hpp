#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace platoon {

// Invalid configuration; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace platoon
