#ifndef SQED_PROPAGATOR_HPP
#define SQED_PROPAGATOR_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "sqed/hilbert.hpp"
#include "sqed/model.hpp"

namespace sqed {

/**
 * exp(-i H dt) for one constant Hermitian H, via a single eigendecomposition.
 *
 * MatrixType may be real symmetric or complex Hermitian.
 */
template <typename MatrixType>
class SegmentPropagator {
public:
    using RealVector = typename Eigen::SelfAdjointEigenSolver<MatrixType>::RealVectorType;

    explicit SegmentPropagator(const MatrixType& h, double hermitian_tol = 1e-12) {
        if (h.rows() != h.cols())
            throw std::invalid_argument("SegmentPropagator: matrix is not square");
        const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
        if ((h - h.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol * scale)
            throw std::invalid_argument("SegmentPropagator: matrix is not Hermitian");
        solver_.compute(h);
        if (solver_.info() != Eigen::Success)
            throw std::runtime_error("SegmentPropagator: eigendecomposition failed");
        basis_ = solver_.eigenvectors().template cast<std::complex<double>>();
    }

    const RealVector& energies() const { return solver_.eigenvalues(); }

    /// exp(-i H dt) psi. Negative dt runs the evolution backwards.
    StateVector apply(double dt, const StateVector& psi) const {
        if (psi.size() != basis_.rows())
            throw std::invalid_argument("SegmentPropagator: state dimension mismatch");
        Eigen::VectorXcd coeffs = basis_.adjoint() * psi;
        for (Eigen::Index k = 0; k < coeffs.size(); ++k)
            coeffs(k) *= std::exp(std::complex<double>(0.0, -energies()(k) * dt));
        return basis_ * coeffs;
    }

private:
    Eigen::SelfAdjointEigenSolver<MatrixType> solver_;
    Eigen::MatrixXcd basis_;
};

/// exp(-i H dt) psi for dt >= 0.
template <typename Derived>
StateVector evolve_segment(const Eigen::MatrixBase<Derived>& h, double dt, const StateVector& psi) {
    if (!(dt >= 0.0))
        throw std::invalid_argument("evolve_segment: dt must be >= 0");
    using Plain = typename Derived::PlainObject;
    return SegmentPropagator<Plain>(h.eval()).apply(dt, psi);
}

struct Sample {
    double t = 0.0;
    StateVector state;
};

struct Trajectory {
    SystemParams params;
    CouplingSchedule schedule{0.0, 1.0};
    double sample_dt = 0.0;
    std::vector<Sample> samples;
};

/// Sample instants k * sample_dt up to t_final, plus t_final itself when it is
/// not on the grid.
std::vector<double> sample_times(double t_final, double sample_dt);

/**
 * Exact evolution from |gg...g,0> under the square-wave Hamiltonian.
 *
 * The two constant Hamiltonians (coupling on/off) are diagonalized once.
 * The running state only advances across whole switching segments; samples
 * are projected from the last segment start, so the sampling grid never
 * changes the stepping.
 */
Trajectory propagate(const SystemParams& params, const CouplingSchedule& schedule, double t_final,
                     double sample_dt);

/// Same as propagate(), at caller-chosen instants (sorted, within [0, t_final]).
Trajectory propagate_at(const SystemParams& params, const CouplingSchedule& schedule, double t_final,
                        const std::vector<double>& times);

struct ConvergenceReport {
    int n_max = 0;
    double sup_difference = 0.0;  ///< sup_t |P(n_max) - P(n_max + 1)|
    bool converged = true;        ///< sup_difference <= threshold
    double threshold = 1e-4;
};

/// Compares qubit-0 excitation probabilities at cutoffs n_max and n_max + 1.
ConvergenceReport convergence_check(const SystemParams& params, const CouplingSchedule& schedule,
                                    double t_final, int n_max, double sample_dt = 0.01);

}  // namespace sqed

#endif  // SQED_PROPAGATOR_HPP
