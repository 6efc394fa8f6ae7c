#ifndef QAP_ERRORS_HPP
#define QAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qap {

// Invalid mathematical input (zero polynomial, base mismatch, ...).
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Operation outside the supported range (degree cap, ...).
struct unsupported_error : std::invalid_argument {
    explicit unsupported_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Precision ladder exhausted before a certified accept/reject was reached.
// Never raised in place of a wrong answer.
struct undecided_error : std::runtime_error {
    explicit undecided_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact data grew past an internal size cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Certified state contradicts itself (e.g. a disk that was claimed isolating is not).
struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
// Internal control-flow signal: retry the enclosing computation at higher precision.
struct retry_precision {};
}  // namespace detail

}  // namespace qap

#endif
