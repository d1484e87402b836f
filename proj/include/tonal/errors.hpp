#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tonal {

// Input text could not be decoded. offset() is the byte position of the
// offending token within the parsed text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A brute-force guard was exceeded (vertex or edge limits on exhaustive
// operations). The message names the guard and, where one exists, the
// override.
class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tonal
