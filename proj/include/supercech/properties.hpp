// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include "supercech/random.hpp"

namespace supercech {

// Randomized identity checks. Each draws one instance from `gen` and returns
// whether the identity holds exactly.

/// apply(A o B, a) = A(B(a)), (A o B) o C = A o (B o C), and the graded
/// Leibniz rule for an even derivation and a contraction.
bool check_operator_coherence(InstanceGenerator& gen, int rank, int max_degree = 3);
/// log(exp(u)) = u and exp(u) multiplicative, u a nilpotent derivation.
bool check_exp_log(InstanceGenerator& gen, int rank);
/// Any composite of four operators raising degree by >= 2 vanishes at rank 7.
bool check_nilpotency(InstanceGenerator& gen);
/// r4_closed(u2) = R2q(u2, 2) for a coboundary u2 on a formal cover.
bool check_r4_closed(InstanceGenerator& gen, int rank, int charts);
/// d2(R4(u2)) = 0 for a coboundary u2 on a formal cover.
bool check_r4_cocycle(InstanceGenerator& gen, int rank, int charts);
/// With u4 solving d1 u4 = -R4: r6_closed(u2, u4) = R2q(u2 + u4, 3) and its d2 vanishes.
bool check_r6_closed(InstanceGenerator& gen, int rank, int charts, int bound);
/// prop_p_verify passes on u2 + u4 (u4 solved) when `cocycle`, on a generic u2 otherwise.
bool check_prop_p(InstanceGenerator& gen, int rank, int charts, int bound, bool cocycle);
/// pr_(2q)(exp(v_i) exp(u_ij) exp(-v_j)) = d0 pr_2q v + pr_2q u + F2q(v, u).
bool check_f2q_decomposition(InstanceGenerator& gen, int rank, int charts, int q);
/// nab_d_truncated(F2q(v, u), q) = pr_(2q) nab_d(exp(pr_(2q-2) u)) for u a
/// cocycle up to degree 2q - 2.
bool check_f2q_differential(InstanceGenerator& gen, int rank, int charts, int q);
/// On the two-chart cover of the projective line R4 and R6 vanish and extend
/// succeeds with a certificate.
bool check_two_chart_extend(InstanceGenerator& gen, const std::vector<int>& degrees, int bound);
/// equiv_solve recovers a gauge between u and twisted_action(w, u).
bool check_equiv_orbit(InstanceGenerator& gen, int rank, int charts, int bound);

}  // namespace supercech
