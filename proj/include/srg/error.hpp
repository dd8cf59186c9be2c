#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace srg {

// All library failures surface as Error with a stable machine-readable code
// plus a human message.  Codes are CamelCase identifiers, e.g. "NotPrime".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
    throw Error(std::move(code), what);
}

inline void require(bool cond, const char* code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace srg
