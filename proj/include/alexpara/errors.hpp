#pragma once

#include <stdexcept>
#include <string>

namespace alexpara {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownLabel : Error {
    explicit UnknownLabel(const std::string& label)
        : Error("unknown label: " + label) {}
};

struct CycleDetected : Error {
    using Error::Error;
};

struct SizeLimitExceeded : Error {
    using Error::Error;
};

struct ExplosionLimit : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct UnknownExample : Error {
    explicit UnknownExample(const std::string& name)
        : Error("unknown example: " + name) {}
};

struct NotSymmetric : Error {
    using Error::Error;
};

struct BadChain : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace alexpara
