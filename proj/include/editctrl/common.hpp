#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace editctrl {

// Error classes map 1:1 onto CLI exit codes.
enum class ErrorKind : int {
    internal = 1,
    bad_input = 2,
    empty_mask = 3,
    missing_weights = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

enum class DType : uint8_t {
    f32 = 0,
    f64 = 1,
};

inline const char* dtype_name(DType dt) {
    return dt == DType::f32 ? "f32" : "f64";
}

}  // namespace editctrl
