#pragma once

// Exact-arithmetic construction of the symmetric group's permutation
// representation, its Casimir invariant, the change of basis that
// diagonalizes it, and the closed-form standard representation, plus
// brute-force verification of every identity involved.

#include "snrep/basis.hpp"
#include "snrep/int_matrix.hpp"
#include "snrep/oracle.hpp"
#include "snrep/perm.hpp"
#include "snrep/perm_rep.hpp"
#include "snrep/report.hpp"
#include "snrep/standard_rep.hpp"
