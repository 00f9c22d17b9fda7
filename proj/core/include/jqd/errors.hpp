#pragma once

#include <stdexcept>
#include <string>

namespace jqd {

// invalid_input maps to CLI exit 2, numerical to exit 1.
enum class ErrorKind { invalid_input, numerical };

class Error : public std::runtime_error {
public:
    Error(std::string name, ErrorKind kind, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)), kind_(kind) {}

    const std::string& name() const noexcept { return name_; }
    ErrorKind kind() const noexcept { return kind_; }

private:
    std::string name_;
    ErrorKind kind_;
};

[[noreturn]] void fail(const std::string& name, ErrorKind kind, const std::string& what);
[[noreturn]] void fail_input(const std::string& name, const std::string& what);
[[noreturn]] void fail_numeric(const std::string& name, const std::string& what);

}  // namespace jqd
