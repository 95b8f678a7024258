#ifndef LEECHTHETA_ERRORS_HPP
#define LEECHTHETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leechtheta {

// Precondition violations. The CLI maps these to exit code 3.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPIntegral : PreconditionError {
    explicit NotPIntegral(const std::string& what) : PreconditionError(what) {}
};

struct NotPositiveDefinite : PreconditionError {
    explicit NotPositiveDefinite(const std::string& what) : PreconditionError(what) {}
};

struct NotADiscriminant : PreconditionError {
    explicit NotADiscriminant(const std::string& what) : PreconditionError(what) {}
};

struct DimensionTooLarge : PreconditionError {
    explicit DimensionTooLarge(const std::string& what) : PreconditionError(what) {}
};

struct WindowMismatch : PreconditionError {
    explicit WindowMismatch(const std::string& what) : PreconditionError(what) {}
};

// A requested computation was refused because its estimated cost exceeds the
// configured ceiling. CLI exit code 4.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failures: these indicate a bug upstream, not bad input.
struct ConstructionInvariantViolated : std::logic_error {
    explicit ConstructionInvariantViolated(const std::string& what) : std::logic_error(what) {}
};

struct SingularSystem : std::logic_error {
    explicit SingularSystem(const std::string& what) : std::logic_error(what) {}
};

struct FixtureMismatch : std::logic_error {
    explicit FixtureMismatch(const std::string& what) : std::logic_error(what) {}
};

struct InconsistentOverdetermination : std::logic_error {
    explicit InconsistentOverdetermination(const std::string& what) : std::logic_error(what) {}
};

} // namespace leechtheta

#endif
