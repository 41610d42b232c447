#pragma once

#include <concepts>
#include <cstddef>
#include <string>

#include "gyro/rng.hpp"

namespace gyro {

/// A realization of (G, ⊕, ⊖, gyr): the binary operation, the two-sided
/// inverse, the gyration automorphisms, an identity element, a membership
/// predicate for the carrier, and an equality deviation measure (0 for
/// equal; finite models compare exactly, continuous ones within
/// tolerance()).
template <class M>
concept GyroModel = requires(const M& m, const typename M::element_type& a,
                             const typename M::element_type& b, const typename M::element_type& z) {
    typename M::element_type;
    { m.identity() } -> std::convertible_to<typename M::element_type>;
    { m.op(a, b) } -> std::convertible_to<typename M::element_type>;
    { m.inv(a) } -> std::convertible_to<typename M::element_type>;
    { m.gyr(a, b, z) } -> std::convertible_to<typename M::element_type>;
    { m.contains(a) } -> std::convertible_to<bool>;
    { m.deviation(a, b) } -> std::convertible_to<double>;
    { m.tolerance() } -> std::convertible_to<double>;
    { m.str(a) } -> std::convertible_to<std::string>;
    { m.name() } -> std::convertible_to<std::string>;
};

/// Finite models enumerate their carrier; checks run exhaustively.
template <class M>
concept FiniteGyroModel = GyroModel<M> && requires(const M& m, std::size_t i) {
    { m.size() } -> std::convertible_to<std::size_t>;
    { m.element(i) } -> std::convertible_to<typename M::element_type>;
};

/// Continuous models with a norm whose balls realize the neighborhood
/// machinery; they supply seeded sampling instead of enumeration.
template <class M>
concept RadialGyroModel = GyroModel<M> && requires(const M& m, const typename M::element_type& a,
                                                   Sampler& rng, double r) {
    { m.norm(a) } -> std::convertible_to<double>;
    { m.sample(rng) } -> std::convertible_to<typename M::element_type>;
    { m.sample(rng, r) } -> std::convertible_to<typename M::element_type>;
};

/// Continuous domains are the open unit disk/ball; inputs this close to
/// the boundary are rejected because denominators degenerate there.
inline constexpr double kDomainEdge = 1.0 - 1e-12;

/// Default sampling radius keeps floating-point error bounded away from
/// the boundary singularity.
inline constexpr double kSampleRadius = 0.99;

} // namespace gyro
