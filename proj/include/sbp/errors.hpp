#ifndef SBP_ERRORS_HPP
#define SBP_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sbp {

enum class ErrorKind {
    parse,             // malformed text / JSON
    validation,        // packing or instance violates an invariant
    invalid_argument,  // bad parameter to an operation
    limit,             // instance exceeds a configured exhaustive limit
    theorem_violation, // a guaranteed property failed to hold (engine bug signal)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Error(ErrorKind kind, std::string message, std::optional<std::size_t> bin,
          std::optional<std::size_t> item)
        : std::runtime_error(std::move(message)), kind_(kind), bin_(bin), item_(item) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Offending bin / item for validation errors, when known.
    std::optional<std::size_t> bin() const noexcept { return bin_; }
    std::optional<std::size_t> item() const noexcept { return item_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> bin_;
    std::optional<std::size_t> item_;
};

[[noreturn]] inline void throw_parse(std::string msg) {
    throw Error(ErrorKind::parse, std::move(msg));
}

} // namespace sbp

#endif
