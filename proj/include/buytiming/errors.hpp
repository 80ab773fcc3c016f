#pragma once

#include <stdexcept>
#include <string>

namespace buytiming {

// Thrown when an iterative solver exhausts its iteration or bracket budget.
// Domain violations use std::domain_error / std::invalid_argument directly.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace buytiming
