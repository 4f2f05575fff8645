#include <polysphere/sphere.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace polysphere {

namespace {

int coord_count(int n) { return n - 2; }

void require_coord_shape(int n, std::size_t size) {
    if (n < 4) {
        throw Error(ErrorCode::InvalidCoords, "need n >= 4, got n = " + std::to_string(n));
    }
    if (size != static_cast<std::size_t>(coord_count(n))) {
        std::ostringstream oss;
        oss << "expected " << coord_count(n) << " coordinates for n = " << n << ", got " << size;
        throw Error(ErrorCode::InvalidCoords, oss.str());
    }
}

} // namespace

double norm(const SphereVector& v) {
    double s = 0.0;
    for (double xi : v.x) s += xi * xi;
    return std::sqrt(s);
}

SuspensionCoords make_suspension(int n, std::vector<double> t, int i0, double tol) {
    require_coord_shape(n, t.size());
    const int m = coord_count(n);
    if (i0 < 1 || i0 > m) {
        throw Error(ErrorCode::InvalidCoords,
                    "terminal index " + std::to_string(i0) + " outside [1, " + std::to_string(m) + "]");
    }
    for (int i = 0; i < i0 - 1; ++i) {
        if (!(std::abs(t[i]) < 1.0)) {
            std::ostringstream oss;
            oss << "coordinate " << i + 1 << " has |t| = " << std::abs(t[i])
                << " >= 1 before the terminal index " << i0;
            throw Error(ErrorCode::InvalidCoords, oss.str());
        }
    }
    if (std::abs(std::abs(t[i0 - 1]) - 1.0) > tol) {
        std::ostringstream oss;
        oss << "coordinate " << i0 << " has |t| = " << std::abs(t[i0 - 1])
            << ", expected 1 within tol " << tol;
        throw Error(ErrorCode::InvalidCoords, oss.str());
    }
    t[i0 - 1] = t[i0 - 1] >= 0.0 ? 1.0 : -1.0;
    std::fill(t.begin() + i0, t.end(), 0.0);
    return SuspensionCoords{n, std::move(t), i0};
}

SuspensionCoords make_suspension(int n, std::vector<double> t, double tol) {
    require_coord_shape(n, t.size());
    const int m = coord_count(n);
    for (int i = 0; i < m; ++i) {
        if (std::abs(t[i]) > 1.0 + tol) {
            std::ostringstream oss;
            oss << "coordinate " << i + 1 << " has |t| = " << std::abs(t[i]) << " > 1";
            throw Error(ErrorCode::InvalidCoords, oss.str());
        }
        if (std::abs(t[i]) >= 1.0 - tol) {
            return make_suspension(n, std::move(t), i + 1, tol);
        }
    }
    throw Error(ErrorCode::InvalidCoords, "no terminal +/-1 coordinate found");
}

SphereVector susp_to_cart(const SuspensionCoords& s) {
    const int m = coord_count(s.n);
    SphereVector v;
    v.x.assign(m, 0.0);
    // Extended precision for the shell product, and 1 - t^2 factored as
    // (1 - t)(1 + t): both matter when a coordinate sits within a few ulp of
    // +/-1, where the squared form cancels catastrophically.
    long double shell = 1.0L; // prod_{j<i} sqrt(1 - t_j^2)
    for (int i = 0; i < m; ++i) {
        v.x[i] = static_cast<double>(s.t[i] * shell);
        if (i + 1 >= s.i0) break; // remaining factors vanish; tail stays zero
        const long double ti = s.t[i];
        shell *= std::sqrt((1.0L - ti) * (1.0L + ti));
    }
    return v;
}

SuspensionCoords cart_to_susp(const SphereVector& v, double tol) {
    const int m = static_cast<int>(v.dim());
    if (m < 2) {
        throw Error(ErrorCode::InvalidCoords, "need at least 2 Cartesian coordinates");
    }

    // suffix[i] = sum of squares of x_i..x_{m-1}; suffix[0] is the norm.
    // Extended precision: t_i = x_i / sqrt(suffix_i) needs the suffix accurate
    // even when it is the small remainder of two nearly equal sums.
    std::vector<long double> suffix(m + 1, 0.0L);
    for (int i = m - 1; i >= 0; --i) {
        const long double xi = v.x[i];
        suffix[i] = suffix[i + 1] + xi * xi;
    }
    if (std::abs(static_cast<double>(suffix[0]) - 1.0) > tol) {
        throw Error(ErrorCode::NotUnit,
                    "squared norm " + std::to_string(static_cast<double>(suffix[0])) +
                        " not 1 within tol");
    }

    SuspensionCoords s;
    s.n = m + 2;
    s.t.assign(m, 0.0);
    const long double threshold = static_cast<long double>(tol) * tol;
    int i = 0;
    for (; i < m - 1; ++i) {
        if (suffix[i + 1] <= threshold) break; // negligible mass beyond i: terminal
        const double ti = static_cast<double>(v.x[i] / std::sqrt(suffix[i]));
        if (std::abs(ti) >= 1.0) break; // rounding ate the remaining mass
        s.t[i] = ti;
    }
    // The last coordinate is always a sign: suffix[m] is the empty sum.
    s.t[i] = v.x[i] >= 0.0 ? 1.0 : -1.0;
    s.i0 = i + 1;
    return s;
}

bool susp_equiv(const SuspensionCoords& a, const SuspensionCoords& b, double tol) {
    if (a.n != b.n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "n = " + std::to_string(a.n) + " vs n = " + std::to_string(b.n));
    }
    if (a.i0 != b.i0) return false;
    for (int i = 0; i < a.i0 - 1; ++i) {
        if (std::abs(a.t[i] - b.t[i]) > tol) return false;
    }
    return (a.t[a.i0 - 1] >= 0.0) == (b.t[b.i0 - 1] >= 0.0);
}

SuspensionCoords negate(const SuspensionCoords& s) {
    SuspensionCoords out = s;
    for (int i = 0; i < s.i0; ++i) out.t[i] = -out.t[i];
    return out;
}

SphereVector antipode(const SphereVector& v) {
    SphereVector out = v;
    for (double& xi : out.x) xi = -xi;
    return out;
}

SphereVector projective_canonical(const SphereVector& v, double tol) {
    for (double xi : v.x) {
        if (std::abs(xi) <= tol) continue;
        if (xi > 0.0) return v;
        SphereVector out = v;
        for (double& o : out.x) o = (o == 0.0) ? 0.0 : -o;
        return out;
    }
    return v; // unreachable for unit vectors with sane tol
}

double angle_between(const SphereVector& u, const SphereVector& v) {
    if (u.dim() != v.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "dim " + std::to_string(u.dim()) + " vs " + std::to_string(v.dim()));
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) dot += u.x[i] * v.x[i];
    double rej2 = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const double ri = v.x[i] - dot * u.x[i];
        rej2 += ri * ri;
    }
    return std::atan2(std::sqrt(rej2), dot);
}

SphereVector slerp(const SphereVector& u, const SphereVector& v, double s, double tol) {
    if (u.dim() != v.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "dim " + std::to_string(u.dim()) + " vs " + std::to_string(v.dim()));
    }
    if (s < 0.0 || s > 1.0 || !std::isfinite(s)) {
        throw Error(ErrorCode::OutOfRange, "interpolation fraction " + std::to_string(s));
    }

    double dot = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) dot += u.x[i] * v.x[i];
    SphereVector rej;
    rej.x.resize(u.dim());
    double rej2 = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        rej.x[i] = v.x[i] - dot * u.x[i];
        rej2 += rej.x[i] * rej.x[i];
    }
    const double rejn = std::sqrt(rej2);
    const double theta = std::atan2(rejn, dot);
    if (theta >= std::numbers::pi - tol) {
        throw Error(ErrorCode::AntipodalEndpoints,
                    "endpoints subtend angle " + std::to_string(theta) + "; geodesic not unique");
    }
    if (rejn == 0.0) return u; // coincident endpoints

    const double a = s * theta;
    const double c = std::cos(a);
    const double k = std::sin(a) / rejn;
    SphereVector out;
    out.x.resize(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out.x[i] = c * u.x[i] + k * rej.x[i];
    return out;
}

SphereVector sample_uniform(std::size_t dim, std::mt19937_64& rng) {
    auto uniform01 = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0, 1)
    };
    SphereVector v;
    v.x.resize(dim);
    while (true) {
        for (std::size_t i = 0; i < dim; i += 2) {
            const double u1 = 1.0 - uniform01(); // (0, 1], keeps log finite
            const double u2 = uniform01();
            const double radius = std::sqrt(-2.0 * std::log(u1));
            const double phase = 2.0 * std::numbers::pi * u2;
            v.x[i] = radius * std::cos(phase);
            if (i + 1 < dim) v.x[i + 1] = radius * std::sin(phase);
        }
        const double len = norm(v);
        if (len > 1e-12) {
            for (double& xi : v.x) xi /= len;
            return v;
        }
    }
}

SphereVector sample_uniform(const ModuliSpec& spec, std::uint64_t seed) {
    require_valid_spec(spec);
    std::mt19937_64 rng(seed);
    return sample_uniform(static_cast<std::size_t>(spec.n - 2), rng);
}

} // namespace polysphere
