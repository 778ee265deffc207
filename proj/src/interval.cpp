// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orbitlab/interval.hpp"

#include <cmath>
#include <limits>

namespace orbitlab {

Interval::Interval(mpfr_prec_t precision) {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::exact(const Rational& q, mpfr_prec_t precision) {
    Interval r(precision);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::around(double center, double radius, mpfr_prec_t precision) {
    if (radius < 0) {
        double up = std::nextafter(center, std::numeric_limits<double>::infinity());
        radius = up - center;
    }
    Interval r(precision);
    mpfr_set_d(r.lo_, center, MPFR_RNDD);
    mpfr_set_d(r.hi_, center, MPFR_RNDU);
    mpfr_sub_d(r.lo_, r.lo_, radius, MPFR_RNDD);
    mpfr_add_d(r.hi_, r.hi_, radius, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(mpfr_get_prec(lo_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    const mpfr_prec_t p = mpfr_get_prec(lo_);
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, p);
    Interval r(p);
    const mpfr_ptr a[2] = {const_cast<mpfr_ptr>(lo_), const_cast<mpfr_ptr>(hi_)};
    const mpfr_ptr b[2] = {const_cast<mpfr_ptr>(o.lo_), const_cast<mpfr_ptr>(o.hi_)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) mpfr_mul(c[2 * i + j], a[i], b[j], MPFR_RNDD);
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    for (int k = 1; k < 4; ++k) mpfr_min(r.lo_, r.lo_, c[k], MPFR_RNDD);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) mpfr_mul(c[2 * i + j], a[i], b[j], MPFR_RNDU);
    mpfr_set(r.hi_, c[0], MPFR_RNDU);
    for (int k = 1; k < 4; ++k) mpfr_max(r.hi_, r.hi_, c[k], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::negative() const { return mpfr_sgn(hi_) < 0; }
double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

}  // namespace orbitlab
