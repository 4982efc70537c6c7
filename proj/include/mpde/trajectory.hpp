#pragma once

#include <vector>

#include "mpde/field.hpp"

namespace mpde {

enum class RunStatus { completed, blowup, diverged_picard };

/// Discrete-time solution record: uniformly spaced stamps and one field
/// snapshot per stamp.
struct Trajectory {
    std::vector<double> times;
    std::vector<Field> snapshots;
    RunStatus status = RunStatus::completed;

    std::size_t size() const { return times.size(); }
    double dt() const {
        if (times.size() < 2)
            throw std::invalid_argument("Trajectory: need >= 2 stamps for dt");
        return times[1] - times[0];
    }
    const Field& back() const { return snapshots.back(); }
};

}  // namespace mpde
