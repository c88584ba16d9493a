#include "ftq/state.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace ftq {

double OutcomeTable::total() const {
    double t = 0.0;
    for (double p : probs) t += p;
    return t;
}

OutcomeTable OutcomeTable::relabeled(std::span<const int> site_of_role) const {
    OutcomeTable out;
    out.n_sites = n_sites;
    out.probs.assign(probs.size(), 0.0);
    std::vector<std::size_t> stride(static_cast<std::size_t>(n_sites));
    for (int s = 0; s < n_sites; ++s) stride[static_cast<std::size_t>(s)] = pow3(n_sites - 1 - s);
    for (std::size_t o = 0; o < probs.size(); ++o) {
        std::size_t src = 0;
        for (int role = 0; role < n_sites; ++role) {
            const int digit = outcome_at(o, role, n_sites);
            src += static_cast<std::size_t>(digit) * stride[static_cast<std::size_t>(site_of_role[static_cast<std::size_t>(role)])];
        }
        out.probs[o] = probs[src];
    }
    return out;
}

bool ShotRecord::any_lost() const {
    for (auto o : outcomes) {
        if (o == static_cast<std::uint8_t>(Outcome::kLossOut)) return true;
    }
    return false;
}

std::string ShotRecord::bitstring() const {
    std::string s;
    for (auto o : outcomes) {
        if (o == static_cast<std::uint8_t>(Outcome::kLossOut)) continue;
        s.push_back(o == static_cast<std::uint8_t>(Outcome::kBright) ? '1' : '0');
    }
    return s;
}

ReadoutWeights ReadoutWeights::ideal() { return with_misclassification(0.0, 0.0); }

ReadoutWeights ReadoutWeights::with_misclassification(double eps0, double eps1) {
    ReadoutWeights r{};
    // dark row: P0 diagonal; bright row: P1; lost row: projector on |L>.
    const double d[kLevels] = {1.0 - eps0, eps1, 1.0 - eps0, eps1, 0.0};
    const double b[kLevels] = {eps0, 1.0 - eps1, eps0, 1.0 - eps1, 0.0};
    const double l[kLevels] = {0.0, 0.0, 0.0, 0.0, 1.0};
    for (int i = 0; i < kLevels; ++i) {
        r.w[0][i] = d[i];
        r.w[1][i] = b[i];
        r.w[2][i] = l[i];
    }
    return r;
}

PureState::PureState(int n_sites, int level) : n_(n_sites), amps_(pow5(n_sites), cplx(0.0, 0.0)) {
    std::size_t idx = 0;
    for (int s = 0; s < n_sites; ++s) idx = idx * kLevels + static_cast<std::size_t>(level);
    amps_[idx] = cplx(1.0, 0.0);
}

void PureState::apply_qubit_gate(int site, const cplx u[2][2]) {
    kernel::apply_qubit_gate(amps_, n_, site, u);
}

void PureState::apply_level_diag(int site, const cplx d[kLevels]) {
    kernel::apply_level_diag(amps_, n_, site, d);
}

void PureState::apply_cz(int site_a, int site_b) {
    kernel::apply_czz_phase(amps_, n_, site_a, site_b);
}

void PureState::apply_relabel(std::span<const int> perm) {
    kernel::apply_relabel(amps_, n_, perm);
}

double PureState::norm() const {
    double t = 0.0;
    for (const auto& a : amps_) t += std::norm(a);
    return std::sqrt(t);
}

void PureState::normalize() {
    const double nrm = norm();
    if (nrm <= 0.0) throw std::runtime_error("cannot normalize a zero state");
    for (auto& a : amps_) a /= nrm;
}

std::vector<double> PureState::level_probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

OutcomeTable PureState::outcome_table(const ReadoutWeights& w) const {
    return contract_readout(level_probabilities(), n_, w);
}

DensityMatrix::DensityMatrix(int n_sites, std::span<const double> site_diag)
    : n_(n_sites), dim_(pow5(n_sites)), rho_(pow5(n_sites) * pow5(n_sites), cplx(0.0, 0.0)) {
    for (std::size_t i = 0; i < dim_; ++i) {
        double p = 1.0;
        for (int s = 0; s < n_sites; ++s) p *= site_diag[static_cast<std::size_t>(level_at(i, s, n_sites))];
        rho_[i * dim_ + i] = cplx(p, 0.0);
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    DensityMatrix rho;
    rho.n_ = psi.n_sites();
    rho.dim_ = psi.dim();
    rho.rho_.assign(rho.dim_ * rho.dim_, cplx(0.0, 0.0));
    auto a = psi.amplitudes();
    for (std::size_t r = 0; r < rho.dim_; ++r) {
        for (std::size_t c = 0; c < rho.dim_; ++c) rho.rho_[r * rho.dim_ + c] = a[r] * std::conj(a[c]);
    }
    return rho;
}

void DensityMatrix::apply_qubit_gate(int site, const cplx u[2][2]) {
    kernel::apply_qubit_gate(rho_, 2 * n_, site, u);
    const cplx uc[2][2] = {{std::conj(u[0][0]), std::conj(u[0][1])}, {std::conj(u[1][0]), std::conj(u[1][1])}};
    kernel::apply_qubit_gate(rho_, 2 * n_, n_ + site, uc);
}

void DensityMatrix::apply_level_diag(int site, const cplx d[kLevels]) {
    kernel::apply_level_diag(rho_, 2 * n_, site, d);
    const cplx dc[kLevels] = {std::conj(d[0]), std::conj(d[1]), std::conj(d[2]), std::conj(d[3]), std::conj(d[4])};
    kernel::apply_level_diag(rho_, 2 * n_, n_ + site, dc);
}

void DensityMatrix::apply_cz(int site_a, int site_b) {
    kernel::apply_czz_phase(rho_, 2 * n_, site_a, site_b);
    kernel::apply_czz_phase(rho_, 2 * n_, n_ + site_a, n_ + site_b);
}

void DensityMatrix::apply_relabel(std::span<const int> perm) {
    std::vector<int> full(static_cast<std::size_t>(2 * n_));
    for (int s = 0; s < n_; ++s) {
        full[static_cast<std::size_t>(s)] = perm[static_cast<std::size_t>(s)];
        full[static_cast<std::size_t>(n_ + s)] = n_ + perm[static_cast<std::size_t>(s)];
    }
    kernel::apply_relabel(rho_, 2 * n_, full);
}

void DensityMatrix::mix_qubit_phase_flip(int site, double p) {
    if (p == 0.0) return;
    // (1-p) rho + p Z rho Z: off-diagonal q0/q1 coherences of `site` pick up
    // factor (1-2p), everything else unchanged.
    const std::size_t stride_k = pow5(n_ - 1 - site);
    const std::size_t stride_b = pow5(2 * n_ - 1 - (n_ + site));
    const double damp = 1.0 - 2.0 * p;
    for (std::size_t i = 0; i < rho_.size(); ++i) {
        const int lk = static_cast<int>((i / stride_k / dim_) % kLevels);
        const int lb = static_cast<int>((i / stride_b) % kLevels);
        const int zk = (lk == kQ0) ? 1 : (lk == kQ1 ? -1 : 0);
        const int zb = (lb == kQ0) ? 1 : (lb == kQ1 ? -1 : 0);
        if (zk != 0 && zb != 0 && zk != zb) rho_[i] *= damp;
    }
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += rho_[i * dim_ + i].real();
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs(rho_[r * dim_ + c] - std::conj(rho_[c * dim_ + r])));
        }
    }
    return worst;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rho_[r * dim_ + c];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d[i] = rho_[i * dim_ + i].real();
    return d;
}

OutcomeTable DensityMatrix::outcome_table(const ReadoutWeights& w) const {
    return contract_readout(diagonal(), n_, w);
}

OutcomeTable contract_readout(std::span<const double> level_probs, int n_sites, const ReadoutWeights& w) {
    // Contract one site at a time: (3^k, 5^(n-k)) -> (3^(k+1), 5^(n-k-1)).
    std::vector<double> cur(level_probs.begin(), level_probs.end());
    std::size_t lead = 1;                       // 3^k outcome prefix
    std::size_t tail = pow5(n_sites) / kLevels; // remaining 5-digit block
    for (int s = 0; s < n_sites; ++s) {
        std::vector<double> next(lead * 3 * tail, 0.0);
        for (std::size_t a = 0; a < lead; ++a) {
            const double* src = cur.data() + a * kLevels * tail;
            for (int o = 0; o < 3; ++o) {
                double* dst = next.data() + (a * 3 + static_cast<std::size_t>(o)) * tail;
                for (int lv = 0; lv < kLevels; ++lv) {
                    const double f = w.w[o][lv];
                    if (f == 0.0) continue;
                    const double* plane = src + static_cast<std::size_t>(lv) * tail;
                    for (std::size_t i = 0; i < tail; ++i) dst[i] += f * plane[i];
                }
            }
        }
        cur = std::move(next);
        lead *= 3;
        tail /= kLevels;
    }
    OutcomeTable t;
    t.n_sites = n_sites;
    t.probs = std::move(cur);
    return t;
}

}  // namespace ftq
