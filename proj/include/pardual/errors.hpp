#pragma once

#include <stdexcept>
#include <string>

namespace pardual {

// Input text could not be decoded. `offset` is the 0-based byte position of
// the first offending byte, or -1 when the position is not meaningful.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, long offset = -1)
        : std::runtime_error(offset >= 0 ? msg + " (byte " + std::to_string(offset) + ")" : msg),
          offset_(offset) {}

    long offset() const { return offset_; }

private:
    long offset_;
};

// The input is valid but exceeds a compiled enumeration limit. Exact answers
// only: we refuse rather than approximate.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pardual
