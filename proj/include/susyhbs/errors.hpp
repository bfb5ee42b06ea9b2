#pragma once

#include <stdexcept>
#include <string>

namespace susyhbs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error { using Error::Error; };

/** The requested offset puts a zero in the range of psi*. */
struct NodeDetected : Error { using Error::Error; };

/** Tabulated ansatz evaluated beyond its table. */
struct OutOfTable : Error { using Error::Error; };

/** |psi*| below the configured floor; W would be meaningless. */
struct DivisionNearNode : Error { using Error::Error; };

struct DomainError : Error { using Error::Error; };

struct NonPositiveScale : Error { using Error::Error; };

/** u1*a = 1, where the central delta strength diverges. */
struct ConstraintPole : Error { using Error::Error; };

struct GridMismatch : Error { using Error::Error; };

/** |W(+-L)| too large for the boundary terms to be dropped. */
struct BoundaryNotDecayed : Error { using Error::Error; };

struct EnergyNonPositive : Error { using Error::Error; };

/** Potential does not vanish at the grid edges. */
struct EdgeNotFlat : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

}  // namespace susyhbs
