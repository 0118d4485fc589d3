#include "shrink/holomap.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <variant>

namespace shrink {

namespace {

struct Identity {};
struct RotationScale {
    Complex c;
};
struct Power {
    int n;
};
struct Blaschke {
    Complex a;
};
struct MoebiusDisk {
    Complex a;
    double alpha;
};
struct Polynomial {
    std::vector<Complex> coeffs;  // c1, c2, ...
};
struct Composition {
    std::vector<HoloMap> chain;  // applied first-to-last
};

// Durand-Kerner roots of c0 + c1 z + ... + cn z^n.
std::vector<Complex> poly_roots(std::vector<Complex> c) {
    while (!c.empty() && std::abs(c.back()) < 1e-300) c.pop_back();
    if (c.size() < 2) return {};
    const size_t n = c.size() - 1;
    for (auto& v : c) v /= c.back();
    std::vector<Complex> roots(n);
    Complex seed(0.4, 0.9);
    Complex p = 1.0;
    for (size_t i = 0; i < n; ++i) {
        p *= seed;
        roots[i] = p;
    }
    auto eval = [&c](Complex z) {
        Complex v = 0.0;
        for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (size_t j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const Complex step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14) break;
    }
    return roots;
}

}  // namespace

struct HoloMap::Node {
    std::variant<Identity, RotationScale, Power, Blaschke, MoebiusDisk,
                 Polynomial, Composition>
        v;
};

HoloMap HoloMap::identity() {
    return HoloMap(std::make_shared<const Node>(Node{Identity{}}));
}

HoloMap HoloMap::rotation_scale(Complex c) {
    return HoloMap(std::make_shared<const Node>(Node{RotationScale{c}}));
}

HoloMap HoloMap::power(int n) {
    if (n < 1) throw std::invalid_argument("power: exponent must be >= 1");
    return HoloMap(std::make_shared<const Node>(Node{Power{n}}));
}

HoloMap HoloMap::blaschke(Complex a) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("blaschke: need |a| < 1");
    return HoloMap(std::make_shared<const Node>(Node{Blaschke{a}}));
}

HoloMap HoloMap::moebius_disk(Complex a, double alpha) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("moebius_disk: need |a| < 1");
    return HoloMap(std::make_shared<const Node>(Node{MoebiusDisk{a, alpha}}));
}

HoloMap HoloMap::polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial: need coefficients");
    return HoloMap(std::make_shared<const Node>(Node{Polynomial{std::move(coeffs)}}));
}

HoloMap HoloMap::compose(std::vector<HoloMap> chain) {
    if (chain.empty()) throw std::invalid_argument("compose: empty chain");
    return HoloMap(std::make_shared<const Node>(Node{Composition{std::move(chain)}}));
}

Complex HoloMap::eval(Complex z) const {
    return std::visit(
        [z](const auto& m) -> Complex {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Identity>) {
                return z;
            } else if constexpr (std::is_same_v<T, RotationScale>) {
                return m.c * z;
            } else if constexpr (std::is_same_v<T, Power>) {
                Complex v = 1.0;
                for (int i = 0; i < m.n; ++i) v *= z;
                return v;
            } else if constexpr (std::is_same_v<T, Blaschke>) {
                return (z - m.a) / (1.0 - std::conj(m.a) * z);
            } else if constexpr (std::is_same_v<T, MoebiusDisk>) {
                return std::polar(1.0, m.alpha) * (z - m.a) /
                       (1.0 - std::conj(m.a) * z);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                Complex v = 0.0;
                for (size_t i = m.coeffs.size(); i-- > 0;)
                    v = v * z + m.coeffs[i];
                return v * z;
            } else {
                Complex v = z;
                for (const HoloMap& f : m.chain) v = f.eval(v);
                return v;
            }
        },
        node_->v);
}

Complex HoloMap::deriv(Complex z) const {
    return std::visit(
        [z](const auto& m) -> Complex {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Identity>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, RotationScale>) {
                return m.c;
            } else if constexpr (std::is_same_v<T, Power>) {
                Complex v = 1.0;
                for (int i = 0; i < m.n - 1; ++i) v *= z;
                return static_cast<double>(m.n) * v;
            } else if constexpr (std::is_same_v<T, Blaschke>) {
                const Complex d = 1.0 - std::conj(m.a) * z;
                return (1.0 - std::norm(m.a)) / (d * d);
            } else if constexpr (std::is_same_v<T, MoebiusDisk>) {
                const Complex d = 1.0 - std::conj(m.a) * z;
                return std::polar(1.0, m.alpha) * (1.0 - std::norm(m.a)) / (d * d);
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                // d/dz sum c_k z^(k+1) = sum (k+1) c_k z^k
                Complex v = 0.0;
                for (size_t i = m.coeffs.size(); i-- > 0;)
                    v = v * z + static_cast<double>(i + 1) * m.coeffs[i];
                return v;
            } else {
                Complex v = z;
                Complex d = 1.0;
                for (const HoloMap& f : m.chain) {
                    d *= f.deriv(v);
                    v = f.eval(v);
                }
                return d;
            }
        },
        node_->v);
}

std::vector<ZeroOfMap> HoloMap::zeros(double within_radius) const {
    std::vector<Complex> locs = std::visit(
        [&](const auto& m) -> std::vector<Complex> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Identity> ||
                          std::is_same_v<T, RotationScale> ||
                          std::is_same_v<T, Power>) {
                return {Complex(0.0, 0.0)};
            } else if constexpr (std::is_same_v<T, Blaschke> ||
                                 std::is_same_v<T, MoebiusDisk>) {
                return {m.a};
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                std::vector<Complex> out = {Complex(0.0, 0.0)};
                auto cofactor = poly_roots(m.coeffs);
                out.insert(out.end(), cofactor.begin(), cofactor.end());
                return out;
            } else {
                // Composition: coarse polar scan for |f| minima, refined by
                // Newton with the exact derivative.
                std::vector<Complex> out;
                const int nr = 48, na = 96;
                for (int i = 1; i <= nr; ++i) {
                    for (int j = 0; j < na; ++j) {
                        Complex z = std::polar(within_radius * i / (nr + 1.0),
                                               2.0 * std::numbers::pi * j / na);
                        for (int it = 0; it < 60; ++it) {
                            const Complex fz = eval(z);
                            const Complex dz = deriv(z);
                            if (std::abs(dz) < 1e-14) break;
                            const Complex step = fz / dz;
                            z -= step;
                            if (std::abs(step) < 1e-13) break;
                        }
                        if (std::abs(z) < within_radius && std::abs(eval(z)) < 1e-10) {
                            bool dup = false;
                            for (const Complex& seen : out)
                                if (std::abs(seen - z) < 1e-7) dup = true;
                            if (!dup) out.push_back(z);
                        }
                    }
                }
                return out;
            }
        },
        node_->v);

    std::vector<ZeroOfMap> out;
    for (const Complex& z0 : locs) {
        if (std::abs(z0) >= within_radius) continue;
        const int mult = (std::abs(deriv(z0)) < 1e-9) ? 2 : 1;
        out.push_back({z0, mult});
    }
    return out;
}

std::string HoloMap::describe() const {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, Identity>) {
                os << "identity";
            } else if constexpr (std::is_same_v<T, RotationScale>) {
                os << "rotation_scale(|c|=" << std::abs(m.c)
                   << ", arg=" << std::arg(m.c) << ")";
            } else if constexpr (std::is_same_v<T, Power>) {
                os << "power(" << m.n << ")";
            } else if constexpr (std::is_same_v<T, Blaschke>) {
                os << "blaschke(a=" << m.a.real() << "+" << m.a.imag() << "i)";
            } else if constexpr (std::is_same_v<T, MoebiusDisk>) {
                os << "moebius_disk(a=" << m.a.real() << "+" << m.a.imag()
                   << "i, alpha=" << m.alpha << ")";
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                os << "polynomial(degree " << m.coeffs.size() << ")";
            } else {
                os << "composition(" << m.chain.size() << " maps)";
            }
            return os.str();
        },
        node_->v);
}

double df_norm(const HoloMap& map, const RadialMetric& domain,
               const ConformalSurface& target, Complex z) {
    const double r = std::abs(z);
    if (r > domain.domain_radius())
        throw std::domain_error("df_norm: z outside the domain disk");
    const Complex fz = map.eval(z);
    if (std::abs(fz) >= target.coordinate_radius())
        throw std::domain_error("df_norm: image outside the target chart");
    return target.factor(fz) * std::abs(map.deriv(z)) / domain.factor(r);
}

}  // namespace shrink
