#pragma once

#include "starforge/forest.hpp"

namespace starforge::fixtures {

// Two disjoint chains: M1 with edge Q, M2 with edge Z (h-local, dim 1).
ForestRef fx_a();
// One tree: root P (Z) with children M1 (Q) and M2 (Z); not h-local.
ForestRef fx_b();
// Single chain (0)-P-M: root edge Z, leaf edge Q (local, rank 2).
ForestRef fx_c();
// One tree: root P (Z), leaves M1, M2 both Z; all-discrete.
ForestRef fx_d();
// Five chains, three with dense leaf edges (Q, Z[1/2], Z+Z*sqrt(2)).
ForestRef fx_e5();
// Single node M with edge Z (rank-one discrete).
ForestRef chain_z();
// Chain of two discrete edges.
ForestRef chain_zz();
// Chain with dense root edge and discrete leaf edge.
ForestRef chain_qz();

}  // namespace starforge::fixtures
