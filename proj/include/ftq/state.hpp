#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ftq/kernel.hpp"
#include "ftq/levels.hpp"

namespace ftq {

using cplx = std::complex<double>;

// Joint readout distribution over {dark, bright, lost}^n, base-3 encoded
// with site 0 as the most significant digit.
struct OutcomeTable {
    int n_sites = 0;
    std::vector<double> probs;  // size 3^n_sites

    double total() const;
    // Permute site roles: entry for frame outcome o is read from the buffer
    // outcome whose digit at site map[i] equals o's digit at site i.
    OutcomeTable relabeled(std::span<const int> site_of_role) const;
};

struct ShotRecord {
    std::vector<std::uint8_t> outcomes;  // per-site Outcome values

    bool any_lost() const;
    // Bits of the non-lost sites in site order; lost sites carry no bit.
    std::string bitstring() const;
};

// Per-site 3x5 readout weights: rows dark/bright/lost, columns levels.
struct ReadoutWeights {
    double w[3][kLevels];

    static ReadoutWeights ideal();
    static ReadoutWeights with_misclassification(double eps0, double eps1);
};

class PureState {
  public:
    PureState() = default;
    // All sites initialized to the given level.
    PureState(int n_sites, int level);

    int n_sites() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<cplx> amplitudes() { return amps_; }
    std::span<const cplx> amplitudes() const { return amps_; }

    void apply_qubit_gate(int site, const cplx u[2][2]);
    void apply_level_diag(int site, const cplx d[kLevels]);
    void apply_cz(int site_a, int site_b);
    void apply_relabel(std::span<const int> perm);

    double norm() const;
    void normalize();

    // Readout distribution given per-site weights.
    OutcomeTable outcome_table(const ReadoutWeights& w) const;

    std::vector<double> level_probabilities() const;  // |amp|^2, size 5^n

  private:
    int n_ = 0;
    std::vector<cplx> amps_;
};

class DensityMatrix {
  public:
    DensityMatrix() = default;
    // Product state with the same per-site level populations (diagonal).
    DensityMatrix(int n_sites, std::span<const double> site_diag);

    static DensityMatrix from_pure(const PureState& psi);

    int n_sites() const { return n_; }
    std::size_t dim() const { return dim_; }
    std::span<cplx> data() { return rho_; }
    std::span<const cplx> data() const { return rho_; }
    cplx entry(std::size_t r, std::size_t c) const { return rho_[r * dim_ + c]; }

    // Physical operations act on ket and bra sides.
    void apply_qubit_gate(int site, const cplx u[2][2]);
    void apply_level_diag(int site, const cplx d[kLevels]);
    void apply_cz(int site_a, int site_b);
    void apply_relabel(std::span<const int> perm);

    // rho <- (1-p) rho + p Z rho Z with Z on the qubit subspace of `site`.
    void mix_qubit_phase_flip(int site, double p);

    double trace() const;
    double hermiticity_error() const;
    // Smallest eigenvalue; O(dim^3), intended for small n in tests.
    double min_eigenvalue() const;

    OutcomeTable outcome_table(const ReadoutWeights& w) const;
    std::vector<double> diagonal() const;

    // Helpers used by channel application; treat rho as a 2n-site buffer.
    std::span<cplx> raw() { return rho_; }
    int buffer_sites() const { return 2 * n_; }

  private:
    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<cplx> rho_;
};

// Contract per-site readout weights against a diagonal of level populations.
OutcomeTable contract_readout(std::span<const double> level_probs, int n_sites, const ReadoutWeights& w);

}  // namespace ftq
