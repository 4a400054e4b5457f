#pragma once

#include <stdexcept>
#include <string>

namespace hdspectra {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed or insufficient input data.
class DataError : public Error {
public:
    using Error::Error;
};

// Iterative root finding failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Requested value lies at or below the distant-spike image boundary.
class NotDistantSpikeError : public Error {
public:
    NotDistantSpikeError(const std::string& what, double image_boundary)
        : Error(what), image_boundary_(image_boundary) {}
    // psi(S_psi): the smallest attainable value of a distant spike's
    // sample-eigenvalue limit under the current model.
    double image_boundary() const { return image_boundary_; }

private:
    double image_boundary_;
};

// Evaluation point too close to a pole of the empirical functional.
class SeparationError : public Error {
public:
    using Error::Error;
};

// A lambda-method call without the required PsiModel.
class MissingModelError : public Error {
public:
    using Error::Error;
};

// Multiplicity-one assumption violated by tied sample eigenvalues.
class TieError : public Error {
public:
    using Error::Error;
};

// Internal optimization failure (infeasible/unbounded LP indicates a bug).
class SolverError : public Error {
public:
    using Error::Error;
};

// Requested rank exceeds the numerical rank of the data.
class RankError : public Error {
public:
    using Error::Error;
};

// Row length does not match the fitted dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Problem size exceeds the dense-solver budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Spike-count loop failed to terminate (should be unreachable).
class IterationError : public Error {
public:
    using Error::Error;
};

}  // namespace hdspectra
