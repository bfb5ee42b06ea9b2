#pragma once

#include "susyhbs/types.hpp"

namespace susyhbs {

/** Natural cubic spline on strictly increasing knots.
 *  Values are O(h^4) accurate in the interior, derivatives O(h^2)
 *  (worst case at the free boundaries). */
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(ArrayXr x, ArrayXr y);

    scalar_t operator()(scalar_t x) const;
    scalar_t derivative(scalar_t x) const;

    scalar_t x_front() const { return x_(0); }
    scalar_t x_back() const { return x_(x_.size() - 1); }
    bool contains(scalar_t x) const { return x >= x_front() && x <= x_back(); }

private:
    index_t segment(scalar_t x) const;
    ArrayXr x_, y_, m_;  // m_: second derivatives at knots
};

/** Piecewise cubic Hermite interpolant from (x, y, y') knot data.
 *  Reproduces y and y' exactly at the knots. */
class HermiteSpline {
public:
    HermiteSpline() = default;
    HermiteSpline(ArrayXr x, ArrayXr y, ArrayXr dy);

    scalar_t operator()(scalar_t x) const;
    scalar_t derivative(scalar_t x) const;

    scalar_t x_front() const { return x_(0); }
    scalar_t x_back() const { return x_(x_.size() - 1); }
    bool contains(scalar_t x) const { return x >= x_front() && x <= x_back(); }

private:
    index_t segment(scalar_t x) const;
    ArrayXr x_, y_, dy_;
};

}  // namespace susyhbs
