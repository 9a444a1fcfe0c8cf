#pragma once

#include <symplaw/gma.hpp>
#include <symplaw/group_algebra.hpp>
#include <symplaw/random.hpp>

#include <cstdint>

namespace symplaw::fixtures {

/// Type I0 = {1} (d1 = 2), I1 = {2}, I2 = {3} (d = 1), every block Q,
/// all signs +1.
GmaSpec standard_mixed_gma();
/// I1 = {1}, I2 = {2}, dims (1, 1) over Q[u, v] / (u^2, uv, v^2) with
/// A12 = Q u, A21 = Q v and the given sign on (1, 2).
GmaSpec nilpotent_pair_gma(int eps12);

/// Representation of the free group on `generators` letters into
/// Sp_2d or GSp_2d with seeded random images.
InvolutiveRepresentation random_representation(unsigned d, GroupKind kind, unsigned generators,
                                               std::uint64_t seed);

/// Random element with up to `terms` words of length <= max_len and
/// small rational coefficients.
GroupAlgebraElement random_element(Rng &rng, unsigned generators, unsigned terms, unsigned max_len);

/// Random element of SL2(Q): product of elementary matrices.
QMatrix random_sl2(Rng &rng);

} // namespace symplaw::fixtures
