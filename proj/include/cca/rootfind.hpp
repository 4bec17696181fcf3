#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cca::rootfind {

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
/// Combines bisection with inverse quadratic/secant steps; converges to
/// |b - a| <= xtol + machine slack. Throws BracketError when the interval
/// does not bracket a sign change.
template <class F>
double brent(F&& f, double a, double b, double xtol = 1e-15, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        std::ostringstream msg;
        msg << "brent: root not bracketed: f(" << a << ")=" << fa
            << ", f(" << b << ")=" << fb;
        throw BracketError(msg.str());
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (fb * fc > 0.0) {
            c = a; fc = fa;
            e = d = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

/// Plain bisection; kept separate so verification code can cross-check
/// Brent against a method with no interpolation steps.
template <class F>
double bisect(F&& f, double a, double b, int iterations = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        std::ostringstream msg;
        msg << "bisect: root not bracketed: f(" << a << ")=" << fa
            << ", f(" << b << ")=" << fb;
        throw BracketError(msg.str());
    }
    for (int i = 0; i < iterations; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace cca::rootfind
