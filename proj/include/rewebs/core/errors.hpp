#pragma once

#include <stdexcept>
#include <string>

namespace rewebs {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Collisions, antipodal pairs, and other configurations where a potential or
// chart blows up.
struct SingularConfiguration : std::runtime_error {
    explicit SingularConfiguration(const std::string& what) : std::runtime_error(what) {}
};

struct RepeatedEigenvalue : std::runtime_error {
    explicit RepeatedEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateShape : std::runtime_error {
    explicit DegenerateShape(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyLeaf : std::runtime_error {
    explicit EmptyLeaf(const std::string& what) : std::runtime_error(what) {}
};

struct BranchLost : std::runtime_error {
    explicit BranchLost(const std::string& what) : std::runtime_error(what) {}
};

struct NotOnLocus : std::runtime_error {
    explicit NotOnLocus(const std::string& what) : std::runtime_error(what) {}
};

struct NotAnRE : std::runtime_error {
    explicit NotAnRE(const std::string& what) : std::runtime_error(what) {}
};

struct NoRoot : std::runtime_error {
    explicit NoRoot(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rewebs
