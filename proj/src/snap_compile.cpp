// Copyright 2026 The btgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "snap_compile.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <algorithm>
#include <random>
#include <sstream>

#include <ceres/ceres.h>
#include <Eigen/Eigenvalues>

namespace btg {

namespace {

using std::numbers::pi;

// D(r e^{i phi}) = E(phi) Q diag(e^{i r kappa}) Q^dagger E(phi)^dagger with
// E(phi) = diag(e^{i phi n}) and a^dagger - a = Q diag(i kappa) Q^dagger.
struct DisplacementBasis {
    int n = 0;
    CMatrix q;
    Eigen::VectorXd kappa;

    explicit DisplacementBasis(int dim) : n(dim) {
        CMatrix gen = CMatrix::Zero(dim, dim);
        for (int k = 1; k < dim; ++k) {
            gen(k, k - 1) = std::sqrt(static_cast<double>(k));
            gen(k - 1, k) = -std::sqrt(static_cast<double>(k));
        }
        Eigen::SelfAdjointEigenSolver<CMatrix> es(cplx(0, -1) * gen);
        q = es.eigenvectors();
        kappa = es.eigenvalues();
    }

    CMatrix matrix(double r, double phi, CMatrix *d_r = nullptr) const {
        CVector e(n), ph(n);
        for (int k = 0; k < n; ++k) {
            e(k) = std::polar(1.0, phi * k);
            ph(k) = std::polar(1.0, r * kappa(k));
        }
        const CMatrix left = e.asDiagonal() * q;
        const CMatrix right = q.adjoint() * e.conjugate().asDiagonal();
        if (d_r) *d_r = left * (cplx(0, 1) * kappa.cast<cplx>().cwiseProduct(ph)).asDiagonal() * right;
        return left * ph.asDiagonal() * right;
    }
};

// Parameter layout: for l = 0..K: r_l, phi_l; then for l = 1..K: theta_l[0..23].
struct Layout {
    int layers;
    int size() const { return 2 * (layers + 1) + kSnapLevels * layers; }
    int r(int l) const { return 2 * l; }
    int phi(int l) const { return 2 * l + 1; }
    int theta(int l, int k) const { return 2 * (layers + 1) + kSnapLevels * (l - 1) + k; }
};

SnapDisplacementAnsatz unpack(const double *x, const Layout &lay, int truncation) {
    SnapDisplacementAnsatz a;
    a.truncation = truncation;
    for (int l = 0; l <= lay.layers; ++l) a.alphas.push_back(std::polar(x[lay.r(l)], x[lay.phi(l)]));
    for (int l = 1; l <= lay.layers; ++l) {
        std::vector<double> t(kSnapLevels);
        for (int k = 0; k < kSnapLevels; ++k) t[static_cast<std::size_t>(k)] = x[lay.theta(l, k)];
        a.thetas.push_back(std::move(t));
    }
    return a;
}

class SubspaceFidelityCost final : public ceres::FirstOrderFunction {
  public:
    SubspaceFidelityCost(const CMatrix &target, int layers, int truncation)
        : lay_{layers}, n_(truncation), basis_(truncation) {
        w_ = CMatrix::Zero(n_, n_);
        w_.topLeftCorner(kSnapLevels, kSnapLevels) = target.adjoint();
    }

    int NumParameters() const override { return lay_.size(); }

    bool Evaluate(const double *x, double *cost, double *gradient) const override {
        const int k_layers = lay_.layers;
        const int ops = 2 * k_layers + 1;  // D_0, S_1, D_1, ..., S_K, D_K in time order
        std::vector<CMatrix> mats(static_cast<std::size_t>(ops)), d_r(static_cast<std::size_t>(ops));
        std::vector<CVector> snaps(static_cast<std::size_t>(ops));
        for (int j = 0; j < ops; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            if (j % 2 == 0) {
                const int l = j / 2;
                mats[ju] = basis_.matrix(x[lay_.r(l)], x[lay_.phi(l)], gradient ? &d_r[ju] : nullptr);
            } else {
                const int l = (j + 1) / 2;
                CVector s = CVector::Ones(n_);
                for (int k = 0; k < kSnapLevels; ++k) s(k) = std::polar(1.0, x[lay_.theta(l, k)]);
                snaps[ju] = s;
            }
        }
        // prefix[j] = M_{j-1} ... M_0
        std::vector<CMatrix> prefix(static_cast<std::size_t>(ops + 1));
        prefix[0] = CMatrix::Identity(n_, n_);
        for (int j = 0; j < ops; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            prefix[ju + 1] = j % 2 == 0 ? CMatrix(mats[ju] * prefix[ju]) : CMatrix(snaps[ju].asDiagonal() * prefix[ju]);
        }
        const cplx z = (w_ * prefix[static_cast<std::size_t>(ops)]).trace();
        const double norm = static_cast<double>(kSnapLevels) * kSnapLevels;
        *cost = 1.0 - std::norm(z) / norm;
        if (!gradient) return true;
        // g = W M_{ops-1} ... M_{j+1}, built from the end.
        CMatrix g = w_;
        for (int j = ops - 1; j >= 0; --j) {
            const auto ju = static_cast<std::size_t>(j);
            // dz = Tr(B dM) with B = prefix[j] g.
            if (j % 2 == 1) {
                const int l = (j + 1) / 2;
                for (int k = 0; k < kSnapLevels; ++k) {
                    const cplx bkk = prefix[ju].row(k).transpose().cwiseProduct(g.col(k)).sum();
                    const cplx dz = cplx(0, 1) * snaps[ju](k) * bkk;
                    gradient[lay_.theta(l, k)] = -2.0 * std::real(std::conj(z) * dz) / norm;
                }
                g = g * snaps[ju].asDiagonal();
            } else {
                const int l = j / 2;
                const CMatrix b = prefix[ju] * g;
                const cplx dz_r = (b.transpose().cwiseProduct(d_r[ju])).sum();
                cplx dz_phi = 0.0;
                for (int a = 0; a < n_; ++a)
                    for (int c = 0; c < n_; ++c) dz_phi += b(c, a) * static_cast<double>(a - c) * mats[ju](a, c);
                dz_phi *= cplx(0, 1);
                gradient[lay_.r(l)] = -2.0 * std::real(std::conj(z) * dz_r) / norm;
                gradient[lay_.phi(l)] = -2.0 * std::real(std::conj(z) * dz_phi) / norm;
                g = g * mats[ju];
            }
        }
        return true;
    }

  private:
    Layout lay_;
    int n_;
    DisplacementBasis basis_;
    CMatrix w_;
};

}  // namespace

CMatrix ansatz_unitary(const SnapDisplacementAnsatz &a) {
    if (static_cast<int>(a.alphas.size()) != a.layers() + 1)
        throw Error(ErrorCode::kInvalidArgument, "ansatz needs one more displacement than SNAP layers");
    const int n = a.truncation;
    if (n < kSnapLevels) throw Error(ErrorCode::kInvalidArgument, "truncation must be at least 24");
    const DisplacementBasis basis(n);
    CMatrix u = basis.matrix(std::abs(a.alphas[0]), std::arg(a.alphas[0]));
    for (int l = 1; l <= a.layers(); ++l) {
        CVector s = CVector::Ones(n);
        const auto &t = a.thetas[static_cast<std::size_t>(l - 1)];
        if (t.size() != static_cast<std::size_t>(kSnapLevels)) throw Error(ErrorCode::kInvalidArgument, "SNAP layer needs 24 phases");
        for (int k = 0; k < kSnapLevels; ++k) s(k) = std::polar(1.0, t[static_cast<std::size_t>(k)]);
        u = s.asDiagonal() * u;
        const cplx al = a.alphas[static_cast<std::size_t>(l)];
        u = basis.matrix(std::abs(al), std::arg(al)) * u;
    }
    return u;
}

double subspace_infidelity(const CMatrix &target, const SnapDisplacementAnsatz &a) {
    const CMatrix sub = ansatz_unitary(a).topLeftCorner(kSnapLevels, kSnapLevels);
    const cplx z = (target.adjoint() * sub).trace();
    return 1.0 - std::norm(z) / (static_cast<double>(kSnapLevels) * kSnapLevels);
}

SnapCompileResult compile_snap_displacement(const CMatrix &target, int layers, const SnapCompileOptions &options) {
    if (target.rows() != kSnapLevels || target.cols() != kSnapLevels)
        throw Error(ErrorCode::kDimension, "SNAP compilation targets a 24 x 24 unitary");
    if (!is_unitary(target, 1e-9)) throw Error(ErrorCode::kNotUnitary, "SNAP compilation target is not unitary");
    if (layers < 1) throw Error(ErrorCode::kInvalidArgument, "layer budget must be at least 1");
    if (options.truncation < 32) throw Error(ErrorCode::kInvalidArgument, "truncation must be at least 32");
    if (options.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "at least one restart is required");

    const Layout lay{layers};
    ceres::GradientProblem problem(new SubspaceFidelityCost(target, layers, options.truncation));
    ceres::GradientProblemSolver::Options solver;
    solver.line_search_direction_type = ceres::LBFGS;
    solver.max_num_iterations = options.max_iterations;
    solver.function_tolerance = 1e-15;
    solver.gradient_tolerance = 1e-14;
    solver.parameter_tolerance = 1e-15;
    solver.logging_type = ceres::SILENT;

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> phase(-pi, pi), radius(0.2, 1.5);
    SnapCompileResult best;
    for (int restart = 0; restart < options.restarts; ++restart) {
        std::vector<double> x(static_cast<std::size_t>(lay.size()), 0.0);
        // Restart 0 starts from the identity; the others from random layers.
        if (restart > 0) {
            for (int l = 0; l <= layers; ++l) {
                x[static_cast<std::size_t>(lay.r(l))] = radius(rng);
                x[static_cast<std::size_t>(lay.phi(l))] = phase(rng);
            }
            for (int l = 1; l <= layers; ++l)
                for (int k = 0; k < kSnapLevels; ++k) x[static_cast<std::size_t>(lay.theta(l, k))] = phase(rng);
        }
        ceres::GradientProblemSolver::Summary summary;
        ceres::Solve(solver, problem, x.data(), &summary);
        const SnapDisplacementAnsatz a = unpack(x.data(), lay, options.truncation);
        const double inf = std::max(0.0, subspace_infidelity(target, a));
        best.restarts_run = restart + 1;
        if (restart == 0 || inf < best.infidelity) {
            best.infidelity = inf;
            best.ansatz = a;
        }
        if (best.infidelity < options.target_infidelity) break;
    }
    SnapDisplacementAnsatz wider = best.ansatz;
    wider.truncation += 16;
    best.truncation_error = max_abs(ansatz_unitary(best.ansatz).topLeftCorner(kSnapLevels, kSnapLevels) -
                                    ansatz_unitary(wider).topLeftCorner(kSnapLevels, kSnapLevels));
    return best;
}

QuditCircuit ansatz_circuit(const SnapDisplacementAnsatz &a) {
    QuditCircuit c(1, a.truncation, "snap_displacement");
    c.add(QuditGate::displacement(0, a.alphas.at(0)));
    for (int l = 1; l <= a.layers(); ++l) {
        std::vector<double> phases(static_cast<std::size_t>(a.truncation), 0.0);
        const auto &t = a.thetas[static_cast<std::size_t>(l - 1)];
        std::copy(t.begin(), t.end(), phases.begin());
        c.add(QuditGate::snap(0, std::move(phases)));
        c.add(QuditGate::displacement(0, a.alphas.at(static_cast<std::size_t>(l))));
    }
    return c;
}

std::string ansatz_to_text(const SnapDisplacementAnsatz &a, double infidelity) {
    std::ostringstream out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", infidelity);
    out << "# layers " << a.layers() << "\n# truncation " << a.truncation << "\n# infidelity " << buf << '\n';
    for (int l = 0; l <= a.layers(); ++l) {
        const cplx al = a.alphas[static_cast<std::size_t>(l)];
        out << l;
        std::snprintf(buf, sizeof buf, " %.17g %.17g", al.real(), al.imag());
        out << buf;
        for (int k = 0; k < kSnapLevels; ++k) {
            const double t = l < a.layers() ? a.thetas[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] : 0.0;
            std::snprintf(buf, sizeof buf, " %.17g", t);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace btg
