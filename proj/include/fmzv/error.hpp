#ifndef FMZV_ERROR_HPP
#define FMZV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace fmzv {

// Domain error carrying a stable machine-readable code ("CircleTerminal",
// "NotEssentiallyPositive", ...) next to the human-readable detail.
// what() renders as "<code>: <detail>", which is also the CLI diagnostic
// format (exit status 2).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace fmzv

#endif // FMZV_ERROR_HPP
