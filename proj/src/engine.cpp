#include "sqed/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqed {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

struct Coupling {
    Eigen::Index from;
    double amplitude;
};

// Nonzero entries of the unit-coupling interaction, by row.
std::vector<std::vector<Coupling>> coupling_rows(const HilbertSpace& space) {
    const Eigen::MatrixXd v = interaction_matrix(space);
    std::vector<std::vector<Coupling>> rows(std::size_t(space.dimension()));
    for (Eigen::Index r = 0; r < v.rows(); ++r)
        for (Eigen::Index c = 0; c < v.cols(); ++c)
            if (v(r, c) != 0.0)
                rows[std::size_t(r)].push_back({c, v(r, c)});
    return rows;
}

}  // namespace

PerturbativeSolution::PerturbativeSolution(SystemParams params, CouplingSchedule schedule, double t_final)
    : params_(params),
      schedule_(schedule),
      space_(params.space()),
      t_final_(t_final),
      segments_(switching_segments(schedule, t_final)) {
    params_.validate();
}

const std::vector<ExpPolyd>& PerturbativeSolution::pieces(int j, Eigen::Index state) const {
    return order(j).pieces.at(std::size_t(state));
}

void PerturbativeSolution::push_order(CoefficientTable table) {
    if (table.pieces.size() != std::size_t(space_.dimension()))
        throw std::invalid_argument("push_order: table does not match the basis dimension");
    for (const auto& row : table.pieces)
        if (row.size() != segments_.size())
            throw std::invalid_argument("push_order: table does not match the segment grid");
    orders_.push_back(std::move(table));
}

std::size_t PerturbativeSolution::segment_index(double t) const {
    if (!(t >= 0.0 && t <= t_final_))
        throw std::out_of_range("PerturbativeSolution: t outside [0, t_final]");
    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](double x, const Segment& s) { return x < s.begin; });
    return std::size_t(it - segments_.begin()) - 1;
}

std::complex<double> PerturbativeSolution::coefficient(int j, Eigen::Index state, double t) const {
    return pieces(j, state)[segment_index(t)](t);
}

StateVector PerturbativeSolution::order_state(int j, double t) const {
    const std::size_t seg = segment_index(t);
    const auto& table = order(j).pieces;
    StateVector out(space_.dimension());
    for (Eigen::Index k = 0; k < space_.dimension(); ++k)
        out(k) = table[std::size_t(k)][seg](t);
    return out;
}

StateVector PerturbativeSolution::state(double t) const {
    StateVector out = StateVector::Zero(space_.dimension());
    for (int j = 0; j <= max_order(); ++j)
        out += order_state(j, t);
    return out;
}

bool PerturbativeSolution::vanishes(int j, Eigen::Index state) const {
    const auto& row = pieces(j, state);
    return std::all_of(row.begin(), row.end(), [](const ExpPolyd& p) { return p.is_zero(); });
}

std::vector<Eigen::Index> PerturbativeSolution::support(int j) const {
    std::vector<Eigen::Index> out;
    for (Eigen::Index k = 0; k < space_.dimension(); ++k)
        if (!vanishes(j, k))
            out.push_back(k);
    return out;
}

PerturbativeSolution zeroth_order(const SystemParams& params, const CouplingSchedule& schedule,
                                  double t_final, Eigen::Index initial_state) {
    PerturbativeSolution sol(params, schedule, t_final);
    const HilbertSpace& space = sol.space();
    if (initial_state < 0 || initial_state >= space.dimension())
        throw std::out_of_range("zeroth_order: initial state outside the basis");

    CoefficientTable table;
    table.pieces.assign(std::size_t(space.dimension()), std::vector<ExpPolyd>(sol.segments().size()));
    const double energy = unperturbed_energy(params, space, space.state(initial_state));
    const ExpPolyd free = ExpPolyd::monomial(1.0, 0, -kI * energy);
    for (auto& piece : table.pieces[std::size_t(initial_state)])
        piece = free;
    sol.push_order(std::move(table));
    return sol;
}

CoefficientTable next_order(const PerturbativeSolution& prev) {
    if (prev.max_order() < 0)
        throw std::invalid_argument("next_order: solution has no orders yet");
    const HilbertSpace& space = prev.space();
    const auto& segments = prev.segments();
    const auto& lower = prev.order(prev.max_order()).pieces;
    const auto rows = coupling_rows(space);
    const auto dim = std::size_t(space.dimension());

    CoefficientTable table;
    table.pieces.assign(dim, std::vector<ExpPolyd>(segments.size()));

    for (std::size_t k = 0; k < dim; ++k) {
        const BasisState& s = space.state(Eigen::Index(k));
        if (s.photons == space.n_max() && !prev.vanishes(prev.max_order(), Eigen::Index(k)))
            table.truncated_transitions += space.n_qubits();
    }

    for (std::size_t k = 0; k < dim; ++k) {
        const double energy = unperturbed_energy(prev.params(), space, space.state(Eigen::Index(k)));
        const std::complex<double> to_rotating = kI * energy;
        std::complex<double> value{0.0, 0.0};  // alpha^{(j)}_k at the segment start

        for (std::size_t seg = 0; seg < segments.size(); ++seg) {
            const Segment& segment = segments[seg];
            ExpPolyd source;
            if (segment.coupling != 0.0)
                for (const Coupling& c : rows[k])
                    source += lower[std::size_t(c.from)][seg] * std::complex<double>(c.amplitude);

            // Homogeneous part carried in the rotating frame as a constant.
            ExpPolyd rotating = ExpPolyd::constant(value * std::exp(to_rotating * segment.begin));
            if (!source.is_zero())
                rotating += integrate_from(mul_exp(source * (-kI * segment.coupling), to_rotating),
                                           segment.begin);
            ExpPolyd piece = mul_exp(rotating, -to_rotating);
            value = piece(segment.end);
            table.pieces[k][seg] = std::move(piece);
        }
    }
    return table;
}

PerturbativeSolution run_to_order(const SystemParams& params, const CouplingSchedule& schedule, int j_max,
                                  double t_final) {
    if (j_max < 0)
        throw std::invalid_argument("run_to_order: j_max must be >= 0");
    PerturbativeSolution sol = zeroth_order(params, schedule, t_final);
    for (int j = 1; j <= j_max; ++j)
        sol.push_order(next_order(sol));
    return sol;
}

double pert_excitation_probability(const PerturbativeSolution& sol, int qubit, double t) {
    return excitation_probability(sol.space(), sol.state(t), qubit);
}

}  // namespace sqed
