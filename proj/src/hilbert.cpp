#include "sqed/hilbert.hpp"

#include <bit>
#include <stdexcept>

namespace sqed {

namespace {

// Keeps 2^N * (n_max + 1) well inside Eigen::Index and the 32-bit mask.
constexpr int kMaxQubits = 20;

}  // namespace

HilbertSpace::HilbertSpace(int n_qubits, int n_max) : n_qubits_(n_qubits), n_max_(n_max) {
    if (n_qubits < 1)
        throw std::invalid_argument("HilbertSpace: n_qubits must be >= 1");
    if (n_qubits > kMaxQubits)
        throw std::invalid_argument("HilbertSpace: n_qubits must be <= 20");
    if (n_max < 0)
        throw std::invalid_argument("HilbertSpace: n_max must be >= 0");

    const std::uint32_t configs = std::uint32_t(1) << n_qubits;
    states_.reserve(std::size_t(configs) * std::size_t(n_max + 1));
    for (int n = 0; n <= n_max; ++n)
        for (std::uint32_t bits = 0; bits < configs; ++bits)
            states_.push_back({bits, n});
}

Eigen::Index HilbertSpace::index_of(const BasisState& state) const {
    if (state.photons < 0 || state.photons > n_max_)
        throw std::out_of_range("index_of: photon number " + std::to_string(state.photons) +
                                " outside [0, " + std::to_string(n_max_) + "]");
    if (state.bits >> n_qubits_ != 0)
        throw std::out_of_range("index_of: bit string wider than " + std::to_string(n_qubits_) +
                                " qubits");
    return (Eigen::Index(state.photons) << n_qubits_) + Eigen::Index(state.bits);
}

Eigen::Index HilbertSpace::index_of(std::span<const int> bits, int photons) const {
    if (int(bits.size()) != n_qubits_)
        throw std::out_of_range("index_of: expected " + std::to_string(n_qubits_) +
                                " qubit bits, got " + std::to_string(bits.size()));
    std::uint32_t packed = 0;
    for (int b : bits) {
        if (b != 0 && b != 1)
            throw std::out_of_range("index_of: qubit bits must be 0 or 1");
        packed = (packed << 1) | std::uint32_t(b);
    }
    return index_of(BasisState{packed, photons});
}

Eigen::Index HilbertSpace::index_of(std::string_view label, int photons) const {
    std::vector<int> bits;
    bits.reserve(label.size());
    for (char c : label) {
        if (c == 'g')
            bits.push_back(0);
        else if (c == 'e')
            bits.push_back(1);
        else
            throw std::out_of_range("index_of: label characters must be 'g' or 'e'");
    }
    return index_of(bits, photons);
}

std::uint32_t HilbertSpace::qubit_mask(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_)
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " outside [0, " +
                                std::to_string(n_qubits_) + ")");
    return std::uint32_t(1) << (n_qubits_ - 1 - qubit);
}

bool HilbertSpace::excited(const BasisState& state, int qubit) const {
    return (state.bits & qubit_mask(qubit)) != 0;
}

int HilbertSpace::excitation_count(const BasisState& state) const {
    return std::popcount(state.bits);
}

std::string HilbertSpace::label(const BasisState& state) const {
    std::string out;
    for (int q = 0; q < n_qubits_; ++q)
        out += excited(state, q) ? 'e' : 'g';
    return out + "," + std::to_string(state.photons);
}

StateVector HilbertSpace::basis_vector(Eigen::Index index) const {
    if (index < 0 || index >= dimension())
        throw std::out_of_range("basis_vector: index out of range");
    StateVector v = StateVector::Zero(dimension());
    v(index) = 1.0;
    return v;
}

std::vector<BasisState> enumerate_basis(int n_qubits, int n_max) {
    return HilbertSpace(n_qubits, n_max).states();
}

double excitation_probability(const HilbertSpace& space, const StateVector& state, int qubit) {
    if (state.size() != space.dimension())
        throw std::invalid_argument("excitation_probability: state dimension mismatch");
    const std::uint32_t mask = space.qubit_mask(qubit);
    double p = 0.0;
    for (Eigen::Index k = 0; k < state.size(); ++k)
        if (space.state(k).bits & mask)
            p += std::norm(state(k));
    return p;
}

double photon_expectation(const HilbertSpace& space, const StateVector& state) {
    if (state.size() != space.dimension())
        throw std::invalid_argument("photon_expectation: state dimension mismatch");
    double n = 0.0;
    for (Eigen::Index k = 0; k < state.size(); ++k)
        n += space.state(k).photons * std::norm(state(k));
    return n;
}

}  // namespace sqed
