#pragma once

#include <stdexcept>
#include <string>

namespace lcert {

enum class ErrorKind {
    DisconnectedGraph,
    DuplicateEdge,
    SelfLoop,
    IdCollision,
    BadIndex,
    NotIndependent,
    NotIsomorphism,
    TooLarge,
    MalformedModel,
    EmptyBagSet,
    LeaderChoiceFailed,
    NonTermination,
    SeedExhausted,
    NotChordal,
    InvalidWitness,
    NoLinePath,
    ParseError,
    UnknownScheme,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lcert
