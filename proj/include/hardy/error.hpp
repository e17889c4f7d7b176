#ifndef HARDY_ERROR_HPP
#define HARDY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hardy {

enum class ErrorCode {
    invalid_argument,
    dimension_mismatch,
    infeasible,
    degenerate,
    unconstrained,
    not_convergent,
    singular,
    truncation_too_small,
};

/// Every failure raised by the library carries one of the codes above so
/// the C layer can map it onto a status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Stable lower-case name of a code, e.g. "infeasible".
inline const char* code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::unconstrained: return "unconstrained";
    case ErrorCode::not_convergent: return "not_convergent";
    case ErrorCode::singular: return "singular";
    case ErrorCode::truncation_too_small: return "truncation_too_small";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what)
{
    if (!cond) {
        fail(code, what);
    }
}

} // namespace hardy

#endif
