#pragma once

// Slow, literal reference computations used to check the fast paths. Nothing
// here shares code with the transform or the closed-form kernels: characters
// are evaluated from their phase sum and every sum is written out in full.

#include <vector>

#include "vilenkin/summability.hpp"

namespace vilenkin::reference {

/// psi_n on the depth-d cell with rank `cell`, as exp(2 pi i sum_k n_k x_k / m_k).
Complex character(const ModulusSequence& ms, std::size_t d, Index n, Index cell);

/// hat f(k) = (1/M_d) sum_c f(c) conj psi_k(c), O(M_d^2).
Spectrum1D naive_forward(const CylinderGrid1D& f);
/// sum_k c_k psi_k(x), O(M_d^2).
CylinderGrid1D naive_inverse(const Spectrum1D& s);

/// max_{i,j < M_d} |<psi_i, psi_j> - delta_ij| with the normalized counting measure.
double orthonormality_defect(const ModulusSequence& ms, std::size_t d);

/// D_n on all depth-d cells by summing n characters.
std::vector<Complex> dirichlet_literal(const ModulusSequence& ms, std::size_t d, Index n);

/// S_n f(x) = (1/M_d) sum_t f(t) D_n(x - t), the convolution form.
CylinderGrid1D convolution_partial_sum(const CylinderGrid1D& f, Index n);

/// S_{n,l} f(x, y) = (1/M_d^2) sum_{s,t} f(s,t) D_n(x - s) D_l(y - t).
CylinderGrid2D convolution_partial_sum_2d(const CylinderGrid2D& f, Index n, Index l);

/// hat f(i, j) by the double sum, O(M_d^4).
std::vector<Complex> naive_spectrum_2d(const CylinderGrid2D& f);

/// sum_{i<M} sum_{j<N} hat f(i,j) psi_i(x) psi_j(y) from the naive spectrum.
CylinderGrid2D naive_rect_partial_sum(const CylinderGrid2D& f, Index M, Index N);

}  // namespace vilenkin::reference
