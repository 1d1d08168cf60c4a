#pragma once

#include <stdexcept>
#include <string>

namespace nonconv {

// Numerically rank-deficient input to an operation that requires invertibility.
struct SingularInput : std::runtime_error {
    explicit SingularInput(const std::string& what) : std::runtime_error(what) {}
};

// Exterior-power order outside [1, d].
struct BadOrder : std::invalid_argument {
    explicit BadOrder(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix that should be unimodular is not, or cannot be renormalized to det 1.
struct NotUnimodular : std::invalid_argument {
    explicit NotUnimodular(const std::string& what) : std::invalid_argument(what) {}
};

// Schedule cannot be evaluated far enough for the requested check.
struct RangeTooSmall : std::invalid_argument {
    explicit RangeTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

// Transition matrix has no power with all entries positive.
struct NotErgodic : std::invalid_argument {
    explicit NotErgodic(const std::string& what) : std::invalid_argument(what) {}
};

// Markov-driven products require an affine index schedule q_i(n) = a_i n + b_i.
struct MarkovScheduleNotAffine : std::invalid_argument {
    explicit MarkovScheduleNotAffine(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix stream ended before the consumer was done.
struct StreamExhausted : std::runtime_error {
    explicit StreamExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Block partition whose first block would have length zero.
struct DegenerateBlocks : std::invalid_argument {
    explicit DegenerateBlocks(const std::string& what) : std::invalid_argument(what) {}
};

// Not enough usable data points for a fit.
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nonconv
