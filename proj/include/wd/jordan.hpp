#pragma once

#include "wd/ratmat.hpp"

namespace wd {

struct JordanChevalley {
    RatMat semisimple;
    RatMat unipotent;
};

bool is_nilpotent(const RatMat& n);
bool is_unipotent(const RatMat& u);

// Multiplicative decomposition M = S * U = U * S with S semisimple (squarefree
// minimal polynomial) and U unipotent, by Newton iteration on the squarefree
// part of the characteristic polynomial. Throws SingularMatrixError if M is
// not invertible.
JordanChevalley jordan_chevalley(const RatMat& m);

// log of a unipotent matrix: the finite series sum (-1)^{k+1} (U-1)^k / k.
RatMat unipotent_log(const RatMat& u);

// exp of a nilpotent matrix: the finite series sum N^k / k!.
RatMat nilpotent_exp(const RatMat& n);

} // namespace wd
