#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace omegalie {

/// Outcome of a seeded randomized check.
struct TrialReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// Index of the first failing trial, if any.
    std::optional<std::size_t> first_failure;
    std::string witness;

    bool pass() const { return failures == 0; }

    void record_failure(std::size_t trial, std::string description) {
        if (!first_failure) {
            first_failure = trial;
            witness = std::move(description);
        }
        ++failures;
    }
};

class SamplerExhausted : public std::runtime_error {
public:
    SamplerExhausted() : std::runtime_error("sampler exhausted") {}
};

}  // namespace omegalie
