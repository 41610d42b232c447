#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gyro/errors.hpp"
#include "gyro/model.hpp"
#include "gyro/report.hpp"

namespace gyro {

/// The open complex unit disk with a ⊕ b = (a + b) / (1 + conj(a) b),
/// ⊖a = -a. Gyrations are the unimodular multiplications
/// gyr[a,b] z = ((1 + a conj(b)) / (1 + conj(a) b)) z, i.e. rotations.
class MobiusDisk {
public:
    using element_type = std::complex<double>;

    explicit MobiusDisk(double tolerance = 1e-9) : tolerance_(tolerance) {}

    element_type identity() const { return {0.0, 0.0}; }

    element_type op(const element_type& a, const element_type& b) const {
        require(a);
        require(b);
        return (a + b) / (1.0 + std::conj(a) * b);
    }

    element_type inv(const element_type& a) const {
        require(a);
        return -a;
    }

    std::complex<double> gyration_factor(const element_type& a, const element_type& b) const {
        return (1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b);
    }

    element_type gyr(const element_type& a, const element_type& b, const element_type& z) const {
        require(a);
        require(b);
        require(z);
        return gyration_factor(a, b) * z;
    }

    bool contains(const element_type& a) const { return std::abs(a) < 1.0; }

    double norm(const element_type& a) const { return std::abs(a); }

    double deviation(const element_type& a, const element_type& b) const { return std::abs(a - b); }

    double tolerance() const { return tolerance_; }

    element_type sample(Sampler& rng, double max_norm) const {
        // Area-uniform draw in the closed disk of radius max_norm.
        double r = max_norm * std::sqrt(rng.unit());
        double theta = 2.0 * std::numbers::pi * rng.unit();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    element_type sample(Sampler& rng) const { return sample(rng, kSampleRadius); }

    std::string str(const element_type& a) const {
        return "(" + fmt_g17(a.real()) + ", " + fmt_g17(a.imag()) + ")";
    }

    std::string name() const { return "mobius"; }

private:
    void require(const element_type& a) const {
        if (!(std::abs(a) < kDomainEdge))
            throw input_error("mobius: element " + str(a) + " outside the open unit disk");
    }

    double tolerance_;
};

} // namespace gyro
