#pragma once

#include "pviheat/lax.hpp"

namespace pviheat {

/// Logarithmic t- and x-derivatives of the wave-function prefactor
/// t^((1-th0)/2) (t-1)^((1-th1)/2) (t-x)^((1-thx)/2) (t-u)^(-1/2) e^G(x).
/// Only the derivatives are ever needed; G itself is never integrated and its
/// derivative stays the inert symbol gp.
GaugeLog gauge_log_derivatives(const Theta& theta);

struct TransformedPair {
    LinOp L1p;  // monic t-equation with four residues over 4u(u-1)(u-x)
    LinOp L2p;  // x-equation scaled by x(x-1)
};

/// Conjugates the pair by the prefactor and certifies the result
/// coefficientwise against the hard-coded display templates, including the
/// four-residue decomposition of the psi-coefficient.  Throws
/// CertificationError naming the offending coefficient and pole on mismatch.
TransformedPair transform_lax(const LinOp& L1, const LinOp& L2, const GaugeLog& gauge,
                              const Theta& theta);

/// Display template of the transformed t-equation (what transform_lax
/// certifies against); exposed for the independent residue-recomposition test.
LinOp transformed_t_template(const Theta& theta);
LinOp transformed_x_template(const Theta& theta);

}  // namespace pviheat
