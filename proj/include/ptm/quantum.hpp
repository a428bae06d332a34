#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptm/boolfn.hpp"

namespace ptm {

using Amplitude = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;

/// Pure state of k qubits as 2^k complex amplitudes. Basis indices are
/// big-endian: qubit 0 is the leftmost tensor factor, i.e. the most
/// significant bit of the index.
struct StateVector {
    int num_qubits = 0;
    std::vector<Amplitude> amps;

    static StateVector basis(int num_qubits, std::uint64_t index);

    std::size_t dim() const { return amps.size(); }
    double norm_sq() const;
    /// Throws std::logic_error if the norm strays from 1 beyond tol.
    void check_normalized(double tol = kNormTolerance) const;
};

/// m-qubit gate as a dense 2^m x 2^m row-major matrix.
struct Gate {
    int arity = 0;
    std::vector<Amplitude> matrix;

    static Gate identity(int arity);

    std::size_t dim() const { return std::size_t{1} << arity; }
    Amplitude& at(std::size_t row, std::size_t col) { return matrix[row * dim() + col]; }
    const Amplitude& at(std::size_t row, std::size_t col) const {
        return matrix[row * dim() + col];
    }
    bool is_unitary(double tol = kNormTolerance) const;
};

/// (1/sqrt 2) [[1, 1], [1, -1]].
Gate hadamard();

/// The reversible embedding of f on n+1 qubits: |x, y> -> |x, y xor f(x)>,
/// with x the first n qubits and y the last.
Gate oracle_uf(int n, const BoolFn& f);

/// Kronecker product; a is the leftmost factor.
StateVector tensor(const StateVector& a, const StateVector& b);

/// Applies the gate to the listed qubits (identity on the rest). Targets
/// must be distinct, in range, and match the gate arity; targets[0] is the
/// gate's own leftmost qubit.
StateVector apply(const Gate& gate, const StateVector& sv, const std::vector<int>& targets);

/// Born-rule marginal over the listed qubits: bitstring (in listed qubit
/// order) -> probability, summed over the unlisted qubits. Complete
/// distribution, probabilities sum to 1.
std::map<std::string, double> measure_distribution(const StateVector& sv,
                                                   const std::vector<int>& qubits);

/// |<a|b>|; equals 1 for normalized vectors that agree up to global phase.
double overlap_magnitude(const StateVector& a, const StateVector& b);

struct CircuitOutcome {
    Promise classification = Promise::Neither;
    double probability = 0.0;
    /// Born distribution over the measured qubits (qubit 0 for the Deutsch
    /// circuit, the first n for Deutsch-Jozsa).
    std::map<std::string, double> distribution;
};

/// Deutsch circuit on |01>: H (x) H, U_f, H on qubit 0, measure qubit 0.
/// Outcome 0 means constant, 1 balanced. Cross-checks the intermediate
/// states psi_1..psi_3 against their closed forms (up to global phase) and
/// throws std::logic_error if they drift.
CircuitOutcome deutsch_circuit(const BoolFn& f);

/// Deutsch-Jozsa circuit on |0...0 1>: H layers, U_f, H on the first n
/// qubits, measure the first n. All-zeros means constant, anything else
/// balanced; under the promise the reported probability is 1.
CircuitOutcome dj_circuit(int n, const BoolFn& f);

/// Product test: a 2-qubit state is entangled iff
/// |a00 a11 - a01 a10| > tol.
bool is_entangled_2qubit(const StateVector& sv, double tol);

}  // namespace ptm
