#pragma once

#include "rsing/cstatus.hpp"
#include "rsing/tower.hpp"

namespace rsing {

/// Correction term when the blow-up is smooth and Z is non-reduced:
/// sum over vertices of (n_i - 1)(b_i - 2 + r_i) with r_i = -Z.E_i.
long long c2_formula(const DualGraph& g, const Cycle& z);

/// Determines c(X) for a tower node in the cases settled by the theory:
///   (a) Z reduced                      -> known 0 (reduced_cycle)
///   (b) blow-up smooth, Z non-reduced  -> known c2_formula (xhat_smooth_formula)
///   (c) otherwise                      -> undetermined, with t2hat_zero and
///       the symbolic facts that remain available.
/// Smoothness of the blow-up is decided from the r-vector (all r_i > 0), not
/// from the stored child list, which is truncated at e = 3 nodes.
CStatus correction_term(const TowerNode& node);

/// Fills c_status at every node of the tower.
void annotate_tower(TowerNode& t);

/// Recognizes the combinatorial family with positive correction term:
/// a tree made of a central (-2) vertex with exactly three arms, where a
/// center neighbor on a length-1 arm has b >= 3, on a longer arm b >= 4,
/// and every non-end arm vertex has b >= 3. Advisory metadata only; plays
/// no role in the determination of c.
bool c_positive_family_check(const DualGraph& g);

} // namespace rsing
