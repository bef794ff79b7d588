#pragma once

#include <stdexcept>
#include <string>

namespace monopole {

struct BadParameter : std::runtime_error {
    explicit BadParameter(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedGraph : std::runtime_error {
    explicit DisconnectedGraph(const std::string& what = "graph is not connected")
        : std::runtime_error(what) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct BadDegree : std::runtime_error {
    explicit BadDegree(const std::string& what) : std::runtime_error(what) {}
};

struct NotEffective : std::runtime_error {
    explicit NotEffective(const std::string& what) : std::runtime_error(what) {}
};

// Exceeding an enumeration cap is an explicit error, never a silent
// approximation; exact membership is the whole product.
struct EnumerationCapExceeded : std::runtime_error {
    EnumerationCapExceeded(unsigned long long requested, unsigned long long cap)
        : std::runtime_error("enumeration needs " + std::to_string(requested) +
                             " divisors, cap is " + std::to_string(cap)),
          requested(requested),
          cap(cap) {}
    unsigned long long requested;
    unsigned long long cap;
};

}  // namespace monopole
