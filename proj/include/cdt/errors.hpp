#pragma once

#include <stdexcept>
#include <string>

namespace cdt {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (maps to CLI exit code 1).
struct InvalidInput : Error {
    using Error::Error;
};

// Well-formed task that has no solution (maps to CLI exit code 2).
struct Infeasible : Error {
    using Error::Error;
};

// A broken internal invariant (maps to CLI exit code 3).
struct InternalError : Error {
    using Error::Error;
};

struct EndpointMismatch final : InvalidInput {
    explicit EndpointMismatch(const std::string& m) : InvalidInput("endpoint mismatch: " + m) {}
};

struct JunctionMismatch final : InvalidInput {
    explicit JunctionMismatch(const std::string& m) : InvalidInput("junction mismatch: " + m) {}
};

struct InvalidEnvironment final : InvalidInput {
    explicit InvalidEnvironment(const std::string& m) : InvalidInput("invalid environment: " + m) {}
};

struct UnknownCell final : InvalidInput {
    explicit UnknownCell(const std::string& m) : InvalidInput("unknown cell: " + m) {}
};

struct NotAdjacent final : InvalidInput {
    explicit NotAdjacent(const std::string& m) : InvalidInput("cells not adjacent: " + m) {}
};

struct PointInObstacle final : InvalidInput {
    explicit PointInObstacle(const std::string& m) : InvalidInput("point in obstacle: " + m) {}
};

struct PointOutsideBoundary final : InvalidInput {
    explicit PointOutsideBoundary(const std::string& m)
        : InvalidInput("point outside boundary: " + m) {}
};

struct PathLeavesFreeSpace final : InvalidInput {
    explicit PathLeavesFreeSpace(const std::string& m)
        : InvalidInput("path leaves free space: " + m) {}
};

struct InvalidEncoding final : InvalidInput {
    explicit InvalidEncoding(const std::string& m) : InvalidInput("invalid encoding: " + m) {}
};

struct AnchorInObstacle final : InvalidInput {
    explicit AnchorInObstacle(const std::string& m) : InvalidInput("anchor in obstacle: " + m) {}
};

struct GoalInObstacle final : InvalidInput {
    explicit GoalInObstacle(const std::string& m) : InvalidInput("goal in obstacle: " + m) {}
};

struct EncodingLimitExceeded final : InvalidInput {
    explicit EncodingLimitExceeded(const std::string& m)
        : InvalidInput("encoding limit exceeded: " + m) {}
};

struct ResolutionTooCoarse final : InvalidInput {
    explicit ResolutionTooCoarse(const std::string& m)
        : InvalidInput("resolution too coarse: " + m) {}
};

struct NoFeasiblePath final : Infeasible {
    explicit NoFeasiblePath(const std::string& m) : Infeasible("no feasible path: " + m) {}
};

struct InfeasibleStartConfig final : Infeasible {
    explicit InfeasibleStartConfig(const std::string& m)
        : Infeasible("infeasible start configuration: " + m) {}
};

struct NoFeasibleTour final : Infeasible {
    explicit NoFeasibleTour(const std::string& m) : Infeasible("no feasible tour: " + m) {}
};

struct NoPath final : Infeasible {
    explicit NoPath(const std::string& m) : Infeasible("no path: " + m) {}
};

}  // namespace cdt
