#pragma once

#include <stdexcept>
#include <string>

namespace benford {

// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iterative scheme gave up before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sampled string would exceed the configured bit cap.
class LengthCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File ingestion or output failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace benford
