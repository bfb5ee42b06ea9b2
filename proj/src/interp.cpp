#include "susyhbs/interp.hpp"

#include <algorithm>

#include "susyhbs/errors.hpp"

namespace susyhbs {

namespace {

void check_knots(const ArrayXr& x, index_t ny, const char* who) {
    if (x.size() < 2 || x.size() != ny)
        throw InvalidParams(std::string(who) + ": need >= 2 knots with matching values");
    for (index_t i = 1; i < x.size(); ++i)
        if (!(x(i) > x(i - 1)))
            throw InvalidParams(std::string(who) + ": knots must be strictly increasing");
}

index_t find_segment(const ArrayXr& x, scalar_t xq) {
    if (xq < x(0) || xq > x(x.size() - 1))
        throw OutOfTable("interpolation query outside the table");
    auto it = std::upper_bound(x.data(), x.data() + x.size(), xq);
    index_t i = index_t(it - x.data()) - 1;
    return std::clamp<index_t>(i, 0, x.size() - 2);
}

}  // namespace

CubicSpline::CubicSpline(ArrayXr x, ArrayXr y) : x_(std::move(x)), y_(std::move(y)) {
    check_knots(x_, y_.size(), "CubicSpline");
    const index_t n = x_.size();
    m_ = ArrayXr::Zero(n);
    if (n == 2) return;

    // Thomas solve of the natural-spline tridiagonal system for y''.
    ArrayXr a(n), b(n), c(n), d(n);
    a(0) = 0; b(0) = 1; c(0) = 0; d(0) = 0;
    a(n - 1) = 0; b(n - 1) = 1; c(n - 1) = 0; d(n - 1) = 0;
    for (index_t i = 1; i + 1 < n; ++i) {
        const scalar_t hl = x_(i) - x_(i - 1), hr = x_(i + 1) - x_(i);
        a(i) = hl / 6;
        b(i) = (hl + hr) / 3;
        c(i) = hr / 6;
        d(i) = (y_(i + 1) - y_(i)) / hr - (y_(i) - y_(i - 1)) / hl;
    }
    for (index_t i = 1; i < n; ++i) {
        const scalar_t w = a(i) / b(i - 1);
        b(i) -= w * c(i - 1);
        d(i) -= w * d(i - 1);
    }
    m_(n - 1) = d(n - 1) / b(n - 1);
    for (index_t i = n - 2; i >= 0; --i) m_(i) = (d(i) - c(i) * m_(i + 1)) / b(i);
}

index_t CubicSpline::segment(scalar_t x) const { return find_segment(x_, x); }

scalar_t CubicSpline::operator()(scalar_t x) const {
    const index_t i = segment(x);
    const scalar_t h = x_(i + 1) - x_(i);
    const scalar_t t = (x_(i + 1) - x) / h, u = (x - x_(i)) / h;
    return t * y_(i) + u * y_(i + 1) +
           ((t * t * t - t) * m_(i) + (u * u * u - u) * m_(i + 1)) * h * h / 6;
}

scalar_t CubicSpline::derivative(scalar_t x) const {
    const index_t i = segment(x);
    const scalar_t h = x_(i + 1) - x_(i);
    const scalar_t t = (x_(i + 1) - x) / h, u = (x - x_(i)) / h;
    return (y_(i + 1) - y_(i)) / h +
           ((1 - 3 * t * t) * m_(i) + (3 * u * u - 1) * m_(i + 1)) * h / 6;
}

HermiteSpline::HermiteSpline(ArrayXr x, ArrayXr y, ArrayXr dy)
    : x_(std::move(x)), y_(std::move(y)), dy_(std::move(dy)) {
    check_knots(x_, y_.size(), "HermiteSpline");
    if (dy_.size() != x_.size())
        throw InvalidParams("HermiteSpline: derivative column size mismatch");
}

index_t HermiteSpline::segment(scalar_t x) const { return find_segment(x_, x); }

scalar_t HermiteSpline::operator()(scalar_t x) const {
    const index_t i = segment(x);
    const scalar_t h = x_(i + 1) - x_(i);
    const scalar_t t = (x - x_(i)) / h;
    const scalar_t h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const scalar_t h10 = t * (1 - t) * (1 - t);
    const scalar_t h01 = t * t * (3 - 2 * t);
    const scalar_t h11 = t * t * (t - 1);
    return h00 * y_(i) + h * h10 * dy_(i) + h01 * y_(i + 1) + h * h11 * dy_(i + 1);
}

scalar_t HermiteSpline::derivative(scalar_t x) const {
    const index_t i = segment(x);
    const scalar_t h = x_(i + 1) - x_(i);
    const scalar_t t = (x - x_(i)) / h;
    const scalar_t g00 = 6 * t * (t - 1) / h;
    const scalar_t g10 = (1 - t) * (1 - 3 * t);
    const scalar_t g01 = -g00;
    const scalar_t g11 = t * (3 * t - 2);
    return g00 * y_(i) + g10 * dy_(i) + g01 * y_(i + 1) + g11 * dy_(i + 1);
}

}  // namespace susyhbs
