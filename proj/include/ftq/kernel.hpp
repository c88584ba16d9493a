#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ftq/levels.hpp"

namespace ftq::kernel {

using cplx = std::complex<double>;

// Low-level operations on a buffer interpreted as a tensor with `n` base-5
// indices (site 0 most significant). A density matrix of n physical sites is
// treated as a 2n-index buffer: ket sites are 0..n-1, bra sites n..2n-1, and
// physical operations are applied to both with conjugation on the bra side.

// u acts on the {q0, q1} subspace of `site`; leakage and loss levels idle.
void apply_qubit_gate(std::span<cplx> buf, int n, int site, const cplx u[2][2]);

// Per-level diagonal factors (unitary phases or damping weights).
void apply_level_diag(std::span<cplx> buf, int n, int site, const cplx d[kLevels]);

// -1 phase on components where both sites are in level q1.
void apply_czz_phase(std::span<cplx> buf, int n, int site_a, int site_b);

// dst += coeff * (|to><from| on `site`) applied to src. Buffers must differ.
void accumulate_jump(std::span<cplx> dst, std::span<const cplx> src, int n, int site,
                     int to_level, int from_level, cplx coeff);

// Relabel sites: new site i carries what was at site perm[i].
void apply_relabel(std::span<cplx> buf, int n, std::span<const int> perm);

// Squared norm restricted to components where `site` is at `level`.
double level_population(std::span<const cplx> buf, int n, int site, int level);

}  // namespace ftq::kernel
