#pragma once

#include <stdexcept>
#include <string>

namespace combi {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct RepeatedRoots : Error {
    explicit RepeatedRoots(const std::string& msg) : Error(msg) {}
};

struct RepeatedFactor : Error {
    explicit RepeatedFactor(const std::string& msg) : Error(msg) {}
};

struct Disconnected : Error {
    explicit Disconnected(const std::string& msg) : Error(msg) {}
};

struct NotComplete : Error {
    explicit NotComplete(const std::string& msg) : Error(msg) {}
};

struct NotBipartite : Error {
    explicit NotBipartite(const std::string& msg) : Error(msg) {}
};

struct InvalidPath : Error {
    explicit InvalidPath(const std::string& msg) : Error(msg) {}
};

struct NoWalk : Error {
    explicit NoWalk(const std::string& msg) : Error(msg) {}
};

struct BoundaryPoint : Error {
    explicit BoundaryPoint(const std::string& msg) : Error(msg) {}
};

} // namespace combi
