#pragma once

#include "gyro/model.hpp"

namespace gyro {

/// The gyration expressed through ⊕ and ⊖ alone:
/// gyr[a,b] z = ⊖(a⊕b) ⊕ (a ⊕ (b⊕z)).
/// Model-free, so it serves both as the oracle for closed-form gyrations
/// and as the gyration of table-driven models.
template <GyroModel M>
typename M::element_type derived_gyr(const M& m, const typename M::element_type& a,
                                     const typename M::element_type& b,
                                     const typename M::element_type& z) {
    return m.op(m.inv(m.op(a, b)), m.op(a, m.op(b, z)));
}

/// ⊖x ⊕ y — the argument of the prenorm in the gyrometric.
template <GyroModel M>
typename M::element_type left_difference(const M& m, const typename M::element_type& x,
                                         const typename M::element_type& y) {
    return m.op(m.inv(x), y);
}

/// x ⊕ (⊖y) — the pairwise difference used for separation tests.
template <GyroModel M>
typename M::element_type q_map(const M& m, const typename M::element_type& x,
                               const typename M::element_type& y) {
    return m.op(x, m.inv(y));
}

} // namespace gyro
