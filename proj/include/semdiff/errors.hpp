#ifndef SEMDIFF_ERRORS_HPP
#define SEMDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semdiff {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(SourcePos pos, const std::string& message)
        : std::runtime_error(std::to_string(pos.line) + ":" +
                             std::to_string(pos.column) + ": " + message),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

// A name is used as a class in one diagram and as an enum/interface in the
// other; no shared signature universe exists for such a pair.
class TypeKindClash : public std::runtime_error {
public:
    explicit TypeKindClash(const std::string& message)
        : std::runtime_error(message) {}
};

class ScopeTooLarge : public std::runtime_error {
public:
    explicit ScopeTooLarge(const std::string& message)
        : std::runtime_error(message) {}
};

} // namespace semdiff

#endif
