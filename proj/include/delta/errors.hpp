#pragma once
#include <stdexcept>
#include <string>

namespace delta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedAreaWord : Error { using Error::Error; };
struct InvalidDecoration : Error { using Error::Error; };
struct FlavorMismatch : Error { using Error::Error; };
struct NoValidLabelling : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NotInImage : Error { using Error::Error; };
struct MemoLimitExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace delta
