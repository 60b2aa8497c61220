#pragma once

#include <stdexcept>
#include <string>

namespace dstm {

// Error taxonomy mirrored by the CLI exit codes: usage -> 2, input -> 3,
// precondition/assertion -> 1.
enum class ErrKind { usage, input, precondition, assertion, internal };

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrKind::usage, msg); }
[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(ErrKind::input, msg); }
[[noreturn]] inline void fail_pre(const std::string& msg) { throw Error(ErrKind::precondition, msg); }
[[noreturn]] inline void fail_check(const std::string& msg) { throw Error(ErrKind::assertion, msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail_pre(msg);
}

} // namespace dstm
