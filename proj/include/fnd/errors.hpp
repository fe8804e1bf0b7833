#pragma once

#include <stdexcept>
#include <string>

namespace fnd {

struct shape_error : std::runtime_error {
    explicit shape_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct eval_error : std::runtime_error {
    explicit eval_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fnd
