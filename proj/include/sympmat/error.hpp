#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympmat {

enum class ErrorKind {
    InvalidInput,
    NotAMatroid,
    Empty,
    TooLarge,
    InvalidMove,
    EmptyProjection,
    NoLifting,
    NotRepresentable,
    RankDeficient,
    NotInGroup,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every sympmat operation; `kind()` names the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sympmat
