#pragma once

#include <stdexcept>
#include <string>

namespace charta {

// Error taxonomy mirrors the CLI exit-code contract:
// parse -> 3, validation -> 1, computation -> 2.
enum class ErrKind { parse, validation, computation };

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrKind::parse, msg); }
inline Error validation_error(const std::string& msg) { return Error(ErrKind::validation, msg); }
inline Error computation_error(const std::string& msg) { return Error(ErrKind::computation, msg); }

} // namespace charta
