#pragma once

// Joint raw, central, and factorial moments of the multinomial distribution
// (orders 1 through 4) in closed form, plus the independent oracles that
// certify them: full support enumeration, truncated generating-function
// differentiation, the raw-to-central subset expansion, and Monte Carlo.

#include "multimom/enum_oracle.hpp"
#include "multimom/errors.hpp"
#include "multimom/expansion.hpp"
#include "multimom/formulas.hpp"
#include "multimom/io.hpp"
#include "multimom/jet.hpp"
#include "multimom/lattice.hpp"
#include "multimom/mc_oracle.hpp"
#include "multimom/mgf_oracle.hpp"
#include "multimom/model.hpp"
#include "multimom/scalar.hpp"
#include "multimom/verify.hpp"
