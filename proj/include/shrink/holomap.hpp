#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "shrink/radial_metric.hpp"
#include "shrink/target_surface.hpp"

namespace shrink {

struct ZeroOfMap {
    Complex location;
    int multiplicity;  // 1, or 2 meaning "at least two"
};

/// A holomorphic map from a closed-form catalog, with exact derivative.
/// Immutable value type; copies share the underlying node.
class HoloMap {
public:
    static HoloMap identity();
    static HoloMap rotation_scale(Complex c);
    static HoloMap power(int n);
    /// (z - a) / (1 - conj(a) z), |a| < 1.
    static HoloMap blaschke(Complex a);
    /// e^{i alpha} (z - a) / (1 - conj(a) z).
    static HoloMap moebius_disk(Complex a, double alpha);
    /// c1 z + c2 z^2 + ... (zero constant term).
    static HoloMap polynomial(std::vector<Complex> coeffs);
    /// Chain applied first-to-last: compose({f, g}) is z -> g(f(z)).
    static HoloMap compose(std::vector<HoloMap> chain);

    Complex eval(Complex z) const;
    Complex deriv(Complex z) const;

    /// Zeros of the map with |z| < within_radius.
    std::vector<ZeroOfMap> zeros(double within_radius) const;

    std::string describe() const;

private:
    struct Node;
    explicit HoloMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Norm of the differential with respect to the domain metric and the target
/// surface metric: mu(f(z)) |f'(z)| / lambda(|z|).
double df_norm(const HoloMap& map, const RadialMetric& domain,
               const ConformalSurface& target, Complex z);

}  // namespace shrink
