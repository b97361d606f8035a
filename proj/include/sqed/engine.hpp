#ifndef SQED_ENGINE_HPP
#define SQED_ENGINE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "sqed/exppoly.hpp"
#include "sqed/hilbert.hpp"
#include "sqed/model.hpp"

namespace sqed {

/// Order-j coefficients: pieces[state][segment], one ExpPoly per switching segment.
struct CoefficientTable {
    std::vector<std::vector<ExpPolyd>> pieces;
    /// Raising transitions out of the n_max sector that were dropped while
    /// building this order (one per source state and qubit).
    long long truncated_transitions = 0;
};

/**
 * Perturbative coefficients alpha^{(j)}_S(t), j = 0..max_order, as piecewise
 * exponential polynomials over the half-period switching grid on [0, t_final].
 *
 * The expansion parameter is absorbed into g_eff, so the truncated state is
 * the plain sum over orders.
 */
class PerturbativeSolution {
public:
    PerturbativeSolution(SystemParams params, CouplingSchedule schedule, double t_final);

    const SystemParams& params() const { return params_; }
    const CouplingSchedule& schedule() const { return schedule_; }
    const HilbertSpace& space() const { return space_; }
    double t_final() const { return t_final_; }
    const std::vector<Segment>& segments() const { return segments_; }

    /// -1 before zeroth_order has been applied.
    int max_order() const { return int(orders_.size()) - 1; }
    const CoefficientTable& order(int j) const { return orders_.at(std::size_t(j)); }
    const std::vector<ExpPolyd>& pieces(int j, Eigen::Index state) const;

    /// Appends the next order. The table must match the segment grid and basis.
    void push_order(CoefficientTable table);

    /// Index of the segment containing t; t_final maps to the last segment.
    std::size_t segment_index(double t) const;

    std::complex<double> coefficient(int j, Eigen::Index state, double t) const;
    StateVector order_state(int j, double t) const;
    /// Sum of all orders at time t (not normalized).
    StateVector state(double t) const;

    bool vanishes(int j, Eigen::Index state) const;
    /// Basis indices whose order-j coefficient is not identically zero.
    std::vector<Eigen::Index> support(int j) const;

private:
    SystemParams params_;
    CouplingSchedule schedule_;
    HilbertSpace space_;
    double t_final_;
    std::vector<Segment> segments_;
    std::vector<CoefficientTable> orders_;
};

/// Order 0: alpha_init(t) = exp(-i E_init t), every other coefficient zero.
PerturbativeSolution zeroth_order(const SystemParams& params, const CouplingSchedule& schedule,
                                  double t_final, Eigen::Index initial_state = 0);

/**
 * Builds order j from order j - 1 by solving, segment by segment,
 *
 *   i d/dt alpha^{(j)}_S = E_S alpha^{(j)}_S + g(t) sum_T V_{ST} alpha^{(j-1)}_T,
 *
 * with alpha^{(j)}_S(0) = 0 and continuity at every switching instant. With g
 * constant on a segment the solution is
 *
 *   alpha(t) = e^{-i E t} [ alpha(t_b) e^{i E t_b} - i g int_{t_b}^{t} e^{i E u} src(u) du ].
 */
CoefficientTable next_order(const PerturbativeSolution& prev);

/// Orders 0..j_max from |gg...g,0>. The basis is params.space(); n_max >= j_max
/// avoids truncation.
PerturbativeSolution run_to_order(const SystemParams& params, const CouplingSchedule& schedule, int j_max,
                                  double t_final);

double pert_excitation_probability(const PerturbativeSolution& sol, int qubit, double t);

}  // namespace sqed

#endif  // SQED_ENGINE_HPP
