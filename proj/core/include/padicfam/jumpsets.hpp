#ifndef PADICFAM_JUMPSETS_HPP
#define PADICFAM_JUMPSETS_HPP

#include <vector>

#include "padicfam/rational.hpp"

namespace padicfam {

/// rho_{p,e}(i) = min(p*i, i + e).
long rho_step(long p, long e, long i);

/// The e integers in [1, ceil(pe/(p-1))) missed by rho_{p,e}.
std::vector<long> non_images(long p, long e);

/// non_images plus pe/(p-1) when (p-1) | e.
std::vector<long> non_images_star(long p, long e);

/// All admissible strictly increasing slope vectors of length w whose entries
/// follow the jump recursion; starred variant allows the extra endpoint.
std::vector<std::vector<long>> jump_sets(long p, long e, long w, bool starred = false);

/// |J_w| (or |J*_w|) without materializing the vectors.
Integer jump_set_count(long p, long e, long w, bool starred = false);

/// Least w0 such that the count is constant for all w >= w0, or -1 if not
/// detected below the probe cap.
long jump_set_stabilization(long p, long e, bool starred = false, long cap = 64);

/// Integer slope vectors realizable by cyclic degree-p^w extensions of Q_p.
std::vector<std::vector<long>> cyclic_invariants_Qp(long p, long w);

/// Jump set [j_0..j_w] of the eps-twisted family whose slopes all exceed one.
std::vector<Integer> jump_set_all_slopes_gt_one(long p, long eps, long w);

}  // namespace padicfam

#endif
