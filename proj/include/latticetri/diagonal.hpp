#pragma once

#include <cstddef>

#include "latticetri/errors.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/partitions.hpp"

namespace latticetri {

/// Diagonal part of m. In the coordinate lattice the atoms are the standard
/// basis vectors, their compressions P_a m P_a are the diagonal entries, and
/// the supremum over finite atom sets is reached at the full set, so the
/// atomic diagonal is exactly diag(m). Defined for any sign; the order
/// properties (0 <= D(m) <= m) apply to nonnegative input.
inline Matrix atomic_diagonal(const Matrix& m) {
    require_square(m, "atomic_diagonal");
    Matrix out(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) out(i, i) = m(i, i);
    return out;
}

/// Maximum dimension accepted by the partition oracle; Bell(12) ~ 4.2e6
/// partitions is the last tolerable size.
inline constexpr std::size_t kSchepDimensionLimit = 12;

/// Brute-force center projection: the entrywise infimum of the block
/// restrictions sum_i P_i m P_i over all partitions {P_i} of the identity
/// into diagonal projections. The restriction family is downward directed
/// under common refinement, so the entrywise minimum is the order infimum.
/// Serves as the independent oracle for atomic_diagonal.
inline Matrix schep_oracle(const Matrix& m) {
    require_square(m, "schep_oracle");
    require_nonnegative(m, "schep_oracle");
    const std::size_t n = m.dim();
    if (n > kSchepDimensionLimit)
        throw DomainError("schep_oracle: dimension exceeds the partition-count guard");

    Matrix infimum = m;  // coarsest partition (a single block) keeps everything
    for_each_set_partition(n, [&](const std::vector<std::size_t>& rgs) {
        const Partition partition = Partition::from_rgs(rgs);
        const Matrix restricted = partition.block_restriction(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (restricted(i, j) < infimum(i, j)) infimum(i, j) = restricted(i, j);
    });
    return infimum;
}

struct VoigtCheck {
    Rational diagonal_norm;
    Rational input_norm;
    bool contraction = false;
};

/// Max-row-sum norms of diag(m) and m, plus the contraction verdict
/// ||diag(m)|| <= ||m||. Exact rational arithmetic throughout.
inline VoigtCheck voigt_contraction_check(const Matrix& m) {
    require_square(m, "voigt_contraction_check");
    VoigtCheck check;
    check.diagonal_norm = atomic_diagonal(m).max_row_sum_norm();
    check.input_norm = m.max_row_sum_norm();
    check.contraction = check.diagonal_norm <= check.input_norm;
    return check;
}

/// Band-projection sanity of the diagonal operator on a concrete input:
/// idempotence, linearity on a derived pair, and 0 <= diag(m) <= m when
/// m is nonnegative.
inline bool diagonal_band_projection_check(const Matrix& m) {
    require_square(m, "diagonal_band_projection_check");
    const Matrix d = atomic_diagonal(m);
    if (atomic_diagonal(d) != d) return false;

    const Matrix companion = m.transpose();
    const Matrix combined = Rational(2) * m + Rational(3) * companion;
    if (atomic_diagonal(combined) !=
        Rational(2) * d + Rational(3) * atomic_diagonal(companion))
        return false;

    if (m.is_nonnegative()) {
        if (!d.is_nonnegative()) return false;
        if (!d.dominated_by(m)) return false;
    }
    return true;
}

}  // namespace latticetri
