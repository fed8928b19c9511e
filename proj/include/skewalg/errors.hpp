#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by all modules.
 *
 * Precondition violations throw std::domain_error (or std::invalid_argument for
 * malformed text input). Exhaustive searches that would exceed their desk-scale
 * budget throw guard_exceeded so callers can tell "too big" from "wrong".
 */

#include <stdexcept>
#include <string>

namespace skewalg {

struct guard_exceeded : std::runtime_error {
    explicit guard_exceeded(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::domain_error(msg);
}

inline void guard(bool within, const std::string& msg) {
    if (!within) throw guard_exceeded(msg);
}

}  // namespace skewalg
