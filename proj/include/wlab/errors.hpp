#pragma once

#include <stdexcept>
#include <string>

namespace wlab {

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct ClusteredRootsError : std::runtime_error {
    explicit ClusteredRootsError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

struct CenterOnSurface : std::runtime_error {
    explicit CenterOnSurface(const std::string& what) : std::runtime_error(what) {}
};

struct PeriodError : std::runtime_error {
    explicit PeriodError(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergent : std::runtime_error {
    explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateFit : std::runtime_error {
    explicit DegenerateFit(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitLeadingTerm : std::runtime_error {
    explicit NonUnitLeadingTerm(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wlab
