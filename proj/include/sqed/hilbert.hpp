#ifndef SQED_HILBERT_HPP
#define SQED_HILBERT_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace sqed {

/// Complex amplitudes over a HilbertSpace basis, in canonical order.
using StateVector = Eigen::VectorXcd;

/// One |x_0 x_1 ... x_{N-1}, n> configuration.
///
/// Qubit 0 is the leftmost character of the label ("eg" has qubit 0 excited)
/// and the most significant bit of `bits`.
struct BasisState {
    std::uint32_t bits = 0;
    int photons = 0;

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// Product space of N qubits and a Fock mode truncated at n_max photons.
///
/// States are enumerated photons-major, then by the bit string read as an
/// integer, so |gg...g,0> is index 0 and |ee...e,n_max> is the last index.
class HilbertSpace {
public:
    HilbertSpace(int n_qubits, int n_max);

    int n_qubits() const { return n_qubits_; }
    int n_max() const { return n_max_; }
    Eigen::Index dimension() const { return Eigen::Index(states_.size()); }

    const std::vector<BasisState>& states() const { return states_; }
    const BasisState& state(Eigen::Index index) const { return states_.at(std::size_t(index)); }

    Eigen::Index index_of(const BasisState& state) const;
    Eigen::Index index_of(std::span<const int> bits, int photons) const;
    /// Accepts labels such as "ge" (one 'g'/'e' per qubit).
    Eigen::Index index_of(std::string_view label, int photons) const;

    bool excited(const BasisState& state, int qubit) const;
    int excitation_count(const BasisState& state) const;
    std::string label(const BasisState& state) const;

    /// Bit mask that flips qubit `qubit` in BasisState::bits.
    std::uint32_t qubit_mask(int qubit) const;

    StateVector basis_vector(Eigen::Index index) const;

private:
    int n_qubits_;
    int n_max_;
    std::vector<BasisState> states_;
};

std::vector<BasisState> enumerate_basis(int n_qubits, int n_max);

/// Weight of the basis states in which qubit `qubit` is excited.
double excitation_probability(const HilbertSpace& space, const StateVector& state, int qubit);

/// <a^dagger a>, without normalizing the state.
double photon_expectation(const HilbertSpace& space, const StateVector& state);

}  // namespace sqed

#endif  // SQED_HILBERT_HPP
