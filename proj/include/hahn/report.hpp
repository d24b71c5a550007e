#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hahn/json_io.hpp"

namespace hahn {

enum class Status { pass, fail, skipped };

std::string status_str(Status s);

struct Counterexample {
    std::size_t sample_index = 0;
    // Inputs by role ("f", "g", "c", "alpha", ...) plus "expected" and
    // "observed", or "error" when an operation threw.
    Json detail;
};

struct CheckEntry {
    std::string name;
    Status status = Status::skipped;
    std::size_t instances = 0;
    std::optional<Counterexample> counterexample;
};

struct CheckReport {
    std::string model;
    std::string group;
    std::string coeff;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<CheckEntry> entries;

    bool all_passed() const;
    std::size_t failures() const;
    const CheckEntry* find(const std::string& name) const;

    // Appends other's entries (same model and seed).
    void append(const CheckReport& other);

    Json to_json() const;
    std::string to_text() const;
};

} // namespace hahn
