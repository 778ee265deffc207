// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <mpfr.h>

#include "orbitlab/integer_matrix.hpp"

namespace orbitlab {

/// Closed real interval with MPFR endpoints and outward rounding.
class Interval {
public:
    explicit Interval(mpfr_prec_t precision = 128);
    Interval(const Interval& other);
    Interval& operator=(const Interval& other);
    ~Interval();

    static Interval exact(const Rational& q, mpfr_prec_t precision);
    /// [center - radius, center + radius]; radius < 0 means one ulp of `center` as a double.
    static Interval around(double center, double radius, mpfr_prec_t precision);

    Interval operator+(const Interval& o) const;
    Interval operator*(const Interval& o) const;

    bool positive() const;  ///< lo > 0
    bool negative() const;  ///< hi < 0
    double lower() const;
    double upper() const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace orbitlab
