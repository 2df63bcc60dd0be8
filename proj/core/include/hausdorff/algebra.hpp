#pragma once

#include "hausdorff/operator.hpp"

namespace hausdorff {

/// Composition H_K o H_L inside the algebra A_a, computed entirely in kernel
/// pair space:
///   Q+ = K+ * L+ + K- * L-,   Q- = K+ * L- + K- * L+
/// (L1 convolutions on the shared lattice).  The symbol of the result equals
/// the pointwise product of the factors' symbols.  Operands must share the
/// scaling function and the t-grid.
HausdorffOperator compose(const HausdorffOperator& hk, const HausdorffOperator& hl);

/// alpha*H_K + beta*H_L, combined on the kernel-pair arrays.
HausdorffOperator lincomb(cd alpha, const HausdorffOperator& hk, cd beta,
                          const HausdorffOperator& hl);

struct CommutativityReport {
    double max_symbol_deviation = 0.0;
    double max_kernel_deviation = 0.0;
    double tol = 0.0;
    bool passed = false;
};

/// Computes both compositions and reports the sup deviations of the symbols
/// and of the Q+- arrays.  Passes when both are <= tol.
CommutativityReport check_commutativity(const HausdorffOperator& hk, const HausdorffOperator& hl,
                                        double tol);

}  // namespace hausdorff
