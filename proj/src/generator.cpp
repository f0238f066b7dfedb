#include "lorentz/generator.hpp"

#include <cmath>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {

Matrix4 Generator::matrix() const {
    Matrix4 q;
    q(0, 1) = q(1, 0) = eps_[0];
    q(0, 2) = q(2, 0) = eps_[1];
    q(0, 3) = q(3, 0) = eps_[2];
    q(1, 2) = -b_[2];
    q(2, 1) = b_[2];
    q(1, 3) = b_[1];
    q(3, 1) = -b_[1];
    q(2, 3) = -b_[0];
    q(3, 2) = b_[0];
    return q;
}

Generator generator_from_rates(const Vec3& eps, const Vec3& b) { return {eps, b}; }

double generator_pattern_defect(const Matrix4& q) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::fabs(q(i, i)));
    for (int i = 1; i < 4; ++i) d = std::max(d, std::fabs(q(0, i) - q(i, 0)));
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) d = std::max(d, std::fabs(q(i, j) + q(j, i)));
    return d;
}

Generator rates_from_generator(const Matrix4& q, double tol) {
    const double defect = generator_pattern_defect(q);
    if (defect > tol) {
        std::ostringstream os;
        os << "matrix does not match the generator pattern: max deviation " << defect
           << " exceeds tolerance " << tol;
        throw StructuralError(os.str());
    }
    // Average the redundant entries so near-pattern inputs land on the
    // closest exact generator.
    Vec3 eps{0.5 * (q(0, 1) + q(1, 0)), 0.5 * (q(0, 2) + q(2, 0)), 0.5 * (q(0, 3) + q(3, 0))};
    Vec3 b{0.5 * (q(3, 2) - q(2, 3)), 0.5 * (q(1, 3) - q(3, 1)), 0.5 * (q(2, 1) - q(1, 2))};
    return {eps, b};
}

MatrixCurve parametrized_curve(const Generator& gen) {
    const Vec3 b = gen.b();
    const Vec3 eps = gen.eps();
    return [b, eps](double tau) {
        return general_product({b[0] * tau, b[1] * tau, b[2] * tau},
                               {eps[0] * tau, eps[1] * tau, eps[2] * tau});
    };
}

Matrix4 derivative_at_zero(const MatrixCurve& curve, double h) {
    if (!(h > 0.0)) throw ConfigError("finite-difference step h must be positive");
    const Matrix4 p2 = curve(2.0 * h).matrix();
    const Matrix4 p1 = curve(h).matrix();
    const Matrix4 m1 = curve(-h).matrix();
    const Matrix4 m2 = curve(-2.0 * h).matrix();
    return (m2 - p2 + 8.0 * (p1 - m1)) * (1.0 / (12.0 * h));
}

namespace {

// Extended-precision 4x4 helpers for the exponential; the squaring passes
// would otherwise cost a couple of decimal digits at large rapidity.
using Mat4L = std::array<long double, 16>;

Mat4L lmul(const Mat4L& x, const Mat4L& y) {
    Mat4L r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long double s = 0.0L;
            for (int k = 0; k < 4; ++k)
                s += x[static_cast<std::size_t>(i * 4 + k)] *
                     y[static_cast<std::size_t>(k * 4 + j)];
            r[static_cast<std::size_t>(i * 4 + j)] = s;
        }
    return r;
}

long double lmax_abs(const Mat4L& x) {
    long double m = 0.0L;
    for (long double v : x) m = std::max(m, std::fabs(v));
    return m;
}

}  // namespace

ExpWithIntegral exp_and_integral(const Matrix4& a, double t) {
    Mat4L at{};
    for (int i = 0; i < 16; ++i)
        at[static_cast<std::size_t>(i)] =
            static_cast<long double>(a.a[static_cast<std::size_t>(i)]) * t;

    // Scale so max|A t / 2^s| <= 0.5.
    int s = 0;
    long double n = lmax_abs(at);
    while (n > 0.5L) {
        n *= 0.5L;
        ++s;
    }
    const long double scale = std::ldexp(1.0L, -s);
    for (auto& v : at) v *= scale;
    const long double dt = t * scale;

    // Taylor sums: E = sum (At)^k / k!,  P = sum A^k dt^(k+1) / (k+1)!.
    // P carries the scaled time explicitly so the doubling step below is
    // dimensionally an integral.
    Mat4L e{}, term{}, p{}, pterm{};
    for (int i = 0; i < 4; ++i) {
        e[static_cast<std::size_t>(i * 5)] = 1.0L;
        term[static_cast<std::size_t>(i * 5)] = 1.0L;
        p[static_cast<std::size_t>(i * 5)] = dt;
        pterm[static_cast<std::size_t>(i * 5)] = dt;
    }
    for (int k = 1; k <= 40; ++k) {
        term = lmul(term, at);
        for (auto& v : term) v /= k;
        pterm = lmul(pterm, at);
        for (auto& v : pterm) v /= (k + 1);
        for (int i = 0; i < 16; ++i) {
            e[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
            p[static_cast<std::size_t>(i)] += pterm[static_cast<std::size_t>(i)];
        }
        if (lmax_abs(term) < 1e-18L && lmax_abs(pterm) < 1e-18L) break;
    }

    // Doubling: E(2t) = E(t)^2, P(2t) = P(t) + E(t) P(t).
    for (int i = 0; i < s; ++i) {
        const Mat4L ep = lmul(e, p);
        for (int j = 0; j < 16; ++j) p[static_cast<std::size_t>(j)] +=
            ep[static_cast<std::size_t>(j)];
        e = lmul(e, e);
    }

    ExpWithIntegral out;
    for (int i = 0; i < 16; ++i) {
        out.exp.a[static_cast<std::size_t>(i)] =
            static_cast<double>(e[static_cast<std::size_t>(i)]);
        out.integral.a[static_cast<std::size_t>(i)] =
            static_cast<double>(p[static_cast<std::size_t>(i)]);
    }
    return out;
}

LorentzMatrix expm(const Generator& gen, double tau) {
    return LorentzMatrix(exp_and_integral(gen.matrix(), tau).exp);
}

Generator commutator(const Generator& a, const Generator& b) {
    const Matrix4 am = a.matrix();
    const Matrix4 bm = b.matrix();
    const Matrix4 c = am * bm - bm * am;
    // Closure holds to round-off; tolerance scaled to the operand sizes.
    const double tol = 1e-12 * std::max(1.0, am.max_abs() * bm.max_abs());
    return rates_from_generator(c, tol);
}

}  // namespace lorentz
