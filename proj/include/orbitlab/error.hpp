// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Base class for every violated precondition of a library operation.
///
/// `kind()` is a stable machine-readable tag ("DimensionMismatch",
/// "NotIsotropic", ...) that the CLI forwards in its JSON error payload.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ORBITLAB_DOMAIN_ERROR(Name)                                        \
    class Name : public DomainError {                                      \
    public:                                                                \
        explicit Name(const std::string& message) : DomainError(#Name, message) {} \
    }

ORBITLAB_DOMAIN_ERROR(DimensionMismatch);
ORBITLAB_DOMAIN_ERROR(InvalidLattice);
ORBITLAB_DOMAIN_ERROR(DegenerateGram);
ORBITLAB_DOMAIN_ERROR(ZeroVector);
ORBITLAB_DOMAIN_ERROR(NotPrimitive);
ORBITLAB_DOMAIN_ERROR(NotIsotropic);
ORBITLAB_DOMAIN_ERROR(NotEvenUnimodular);
ORBITLAB_DOMAIN_ERROR(DependentBasis);
ORBITLAB_DOMAIN_ERROR(NotSaturated);
ORBITLAB_DOMAIN_ERROR(NotIsometry);
ORBITLAB_DOMAIN_ERROR(LatticeMismatch);
ORBITLAB_DOMAIN_ERROR(NegativeDeterminant);
ORBITLAB_DOMAIN_ERROR(NotOrthogonal);
ORBITLAB_DOMAIN_ERROR(NoHyperbolicSplit);
ORBITLAB_DOMAIN_ERROR(NoOrientationFix);
ORBITLAB_DOMAIN_ERROR(NotInPerp);
ORBITLAB_DOMAIN_ERROR(PrecisionError);
ORBITLAB_DOMAIN_ERROR(InvalidSymbolicVector);
ORBITLAB_DOMAIN_ERROR(InvalidForm);
ORBITLAB_DOMAIN_ERROR(NotComplementary);
ORBITLAB_DOMAIN_ERROR(NotVanishingOnL);
ORBITLAB_DOMAIN_ERROR(SingularMatrix);
ORBITLAB_DOMAIN_ERROR(InvalidTolerance);
ORBITLAB_DOMAIN_ERROR(NonPositiveNorm);
ORBITLAB_DOMAIN_ERROR(LengthMismatch);
ORBITLAB_DOMAIN_ERROR(DegenerateConfiguration);
ORBITLAB_DOMAIN_ERROR(EmptyGeneratorSet);

#undef ORBITLAB_DOMAIN_ERROR

}  // namespace orbitlab
