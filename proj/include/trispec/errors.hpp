#pragma once

#include <stdexcept>
#include <string>

namespace trispec {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// core / normalize
struct StarError : Error { using Error::Error; };
struct ChecksumError : Error { using Error::Error; };
struct MatrixShapeError : Error { using Error::Error; };

// srg
struct HalfCaseError : Error { using Error::Error; };
struct InfeasibleParamsError : Error { using Error::Error; };
struct NotTwoEigenvalueError : Error { using Error::Error; };
struct NonIntegralError : Error { using Error::Error; };

// oracle
struct NonIntegralSpectrumError : Error { using Error::Error; };
struct NotRegularError : Error { using Error::Error; };
struct NotStronglyRegularError : Error { using Error::Error; };
struct DimensionCapError : Error { using Error::Error; };
struct NoOracleError : Error { using Error::Error; };

// catalog / eigclass / cli
struct OutOfRangeError : Error { using Error::Error; };
struct NotRank3Error : Error { using Error::Error; };
struct UnrealizableError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace trispec
