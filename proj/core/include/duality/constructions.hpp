#pragma once
// The concrete languages, machines, and formula families: the addition DPDA,
// the Immerman language and the decomposition of its complement, the
// successor-window criterion, the NPDA for A, the modified Immerman language,
// the Wotschke language, and the tuple transformation formulas.

#include <string>
#include <vector>

#include "duality/formula.hpp"
#include "duality/nfa.hpp"
#include "duality/pda.hpp"

namespace duality {

// <u> for u over {0,1}, leftmost bit most significant.  Throws on empty or
// non-binary input.
long int_of(const std::string& u);

// The eight forbidden 4-bit windows, in fixed order.
const std::vector<std::string>& forbidden_windows();

// Requires |u| = |v| >= 1 and last bits distinct (distinct errors).  True iff
// no window u_i u_{i-1} v_i v_{i-1} lies in the forbidden set, which holds
// iff <u> + 1 = <v> (mod 2^n).
bool successor_window_check(const std::string& u, const std::string& v);

// DPDA over Gamma_3 accepting exactly the unary structures with a + b = c.
dpda addition_dpda();

// L_I: x_1 a x_2 a ... a x_{2^n}, n-bit blocks counting 0^n up to 1^n.
bool immerman_member(const std::string& w);

// A: some maximal binary run u (ending at an 'a') of length n >= 1 is
// followed by an n-bit binary block v with <u> + 1 != <v> (mod 2^n).
bool in_A(const std::string& w);

// NPDA for A.  A violated window is located either by its low-order offset
// or by its high-order offset; one of the two is at distance <= reach from
// the block end whenever the block length is <= 2*reach + 2, so the machine
// is exact on all words of length <= 4*reach + 5.
npda npda_for_A(int reach = 4);

// The displayed union covering the complement of L_I: A, a*, an all-0 or
// all-1 run between two a's, a 1 before the first a, a 0 after the last a,
// or two adjacent runs of different lengths.
bool complement_decomposition_member(const std::string& w);

// Adjacent-runs-of-unequal-length component restricted to run length
// <= max_run, as an NFA over {0,1,a} (bounded regular cross-check).
nfa unequal_adjacent_runs_nfa(int max_run);

// R_I: as L_I but with every block at even 1-based index reversed.
bool modified_immerman_member(const std::string& w);

// W = {(a^n b)^n : n >= 0} over {a,b}.
bool wotschke_member(const std::string& w);

// phi_i = /\_{j in V_i} (y = x_j) /\ /\_{j notin V_i} !(y = x_j), for the
// nonempty subsets V_i of {x_1..x_n} in mask order; the default letter of
// the transformation is (0,{}).
std::vector<formula> build_tuple_transformation(int n);

}  // namespace duality
