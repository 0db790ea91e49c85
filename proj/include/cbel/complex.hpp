#pragma once

#include <cmath>
#include <numbers>

#include "cbel/errors.hpp"

namespace cbel {

/// The canonical phase interval is the half-open (-pi, pi]; -pi folds onto
/// +pi, giving every nonzero value a single phase representative.
inline double canonical_phase(double theta) {
    return theta == -std::numbers::pi ? std::numbers::pi : theta;
}

/// Complex value in rectangular form. Construction rejects NaN and infinity;
/// arithmetic results are validated through the same constructor.
class ComplexScalar {
public:
    constexpr ComplexScalar() = default;

    ComplexScalar(double re, double im) : re_(re), im_(im) {
        if (!std::isfinite(re) || !std::isfinite(im)) throw NonFiniteValue();
    }

    constexpr double re() const noexcept { return re_; }
    constexpr double im() const noexcept { return im_; }

    constexpr bool is_zero() const noexcept { return re_ == 0.0 && im_ == 0.0; }

    ComplexScalar conjugate() const { return {re_, -im_}; }

    double modulus() const { return std::hypot(re_, im_); }

    /// Full-quadrant angle in (-pi, pi]. Undefined for zero.
    double argument() const {
        if (is_zero()) throw ZeroArgument();
        return canonical_phase(std::atan2(im_, re_));
    }

    friend ComplexScalar operator+(ComplexScalar a, ComplexScalar b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend ComplexScalar operator-(ComplexScalar a, ComplexScalar b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend ComplexScalar operator*(ComplexScalar a, ComplexScalar b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + b.re_ * a.im_};
    }
    friend ComplexScalar operator-(ComplexScalar a) { return {-a.re_, -a.im_}; }

    friend constexpr bool operator==(ComplexScalar a, ComplexScalar b) noexcept {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    double re_ = 0.0;
    double im_ = 0.0;
};

/// r * e^(i*theta) as a rectangular value; r must be non-negative.
inline ComplexScalar from_polar(double r, double theta) {
    if (r < 0.0) throw NegativeModulus(r);
    return {r * std::cos(theta), r * std::sin(theta)};
}

} // namespace cbel
