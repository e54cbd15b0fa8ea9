#pragma once

#include <stdexcept>
#include <string>

namespace alphaham {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& msg, int l)
        : Error("parse error at line " + std::to_string(l) + ": " + msg), line(l) {}
};

struct LoopError : Error {
    explicit LoopError(const std::string& msg) : Error(msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

struct DegreeError : Error {
    explicit DegreeError(const std::string& msg) : Error(msg) {}
};

struct StructureError : Error {
    explicit StructureError(const std::string& msg) : Error(msg) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

struct SizeCap : Error {
    explicit SizeCap(const std::string& msg) : Error(msg) {}
};

struct FlowDeficit : Error {
    explicit FlowDeficit(const std::string& msg) : Error(msg) {}
};

struct ConnectivityError : Error {
    explicit ConnectivityError(const std::string& msg) : Error(msg) {}
};

struct DegeneratePair : Error {
    explicit DegeneratePair(const std::string& msg) : Error(msg) {}
};

struct StateError : Error {
    explicit StateError(const std::string& msg) : Error(msg) {}
};

struct GuardrailError : Error {
    explicit GuardrailError(const std::string& msg) : Error(msg) {}
};

}  // namespace alphaham
