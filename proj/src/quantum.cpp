#include "ptm/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace ptm {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

// Bit position of `qubit` within a k-qubit basis index (qubit 0 is the most
// significant bit).
int bit_position(int num_qubits, int qubit) { return num_qubits - 1 - qubit; }

int index_bit(std::uint64_t index, int num_qubits, int qubit) {
    return static_cast<int>((index >> bit_position(num_qubits, qubit)) & 1u);
}

}  // namespace

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("num_qubits out of range");
    }
    StateVector sv;
    sv.num_qubits = num_qubits;
    sv.amps.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    sv.amps.at(index) = Amplitude{1.0, 0.0};
    return sv;
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const Amplitude& amp : amps) total += std::norm(amp);
    return total;
}

void StateVector::check_normalized(double tol) const {
    if (std::abs(norm_sq() - 1.0) > tol) {
        throw std::logic_error("state vector is not normalized");
    }
}

Gate Gate::identity(int arity) {
    Gate gate;
    gate.arity = arity;
    const std::size_t dim = std::size_t{1} << arity;
    gate.matrix.assign(dim * dim, Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) gate.at(i, i) = Amplitude{1.0, 0.0};
    return gate;
}

bool Gate::is_unitary(double tol) const {
    const std::size_t n = dim();
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            Amplitude dot{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                dot += std::conj(at(k, row)) * at(k, col);
            }
            const Amplitude expected = row == col ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(dot - expected) > tol) return false;
        }
    }
    return true;
}

Gate hadamard() {
    Gate gate;
    gate.arity = 1;
    gate.matrix = {Amplitude{kSqrtHalf, 0.0}, Amplitude{kSqrtHalf, 0.0},
                   Amplitude{kSqrtHalf, 0.0}, Amplitude{-kSqrtHalf, 0.0}};
    return gate;
}

Gate oracle_uf(int n, const BoolFn& f) {
    if (n < 1 || f.arity != n) {
        throw std::invalid_argument("oracle_uf needs n >= 1 and a matching arity");
    }
    Gate gate;
    gate.arity = n + 1;
    const std::size_t dim = std::size_t{1} << gate.arity;
    gate.matrix.assign(dim * dim, Amplitude{0.0, 0.0});
    for (std::uint64_t in = 0; in < dim; ++in) {
        const std::uint64_t x = in >> 1;  // first n qubits
        const std::uint64_t out = in ^ static_cast<std::uint64_t>(f.eval(x));  // y is the LSB
        gate.at(out, in) = Amplitude{1.0, 0.0};
    }
    return gate;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector result;
    result.num_qubits = a.num_qubits + b.num_qubits;
    result.amps.resize(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            result.amps[i * b.dim() + j] = a.amps[i] * b.amps[j];
        }
    }
    return result;
}

StateVector apply(const Gate& gate, const StateVector& sv, const std::vector<int>& targets) {
    if (static_cast<int>(targets.size()) != gate.arity) {
        throw std::invalid_argument("target count does not match gate arity");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= sv.num_qubits) {
            throw std::invalid_argument("target qubit out of range");
        }
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument("duplicate target qubit");
            }
        }
    }

    const std::size_t gate_dim = gate.dim();
    StateVector result;
    result.num_qubits = sv.num_qubits;
    result.amps.assign(sv.dim(), Amplitude{0.0, 0.0});

    for (std::uint64_t index = 0; index < sv.dim(); ++index) {
        std::uint64_t row = 0;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            row = (row << 1) | static_cast<std::uint64_t>(
                                   index_bit(index, sv.num_qubits, targets[t]));
        }
        Amplitude total{0.0, 0.0};
        for (std::uint64_t col = 0; col < gate_dim; ++col) {
            std::uint64_t source = index;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                const int pos = bit_position(sv.num_qubits, targets[t]);
                const std::uint64_t bit = (col >> (targets.size() - 1 - t)) & 1u;
                source = (source & ~(std::uint64_t{1} << pos)) | (bit << pos);
            }
            total += gate.at(row, col) * sv.amps[source];
        }
        result.amps[index] = total;
    }
    return result;
}

std::map<std::string, double> measure_distribution(const StateVector& sv,
                                                   const std::vector<int>& qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0 || qubits[i] >= sv.num_qubits) {
            throw std::invalid_argument("measured qubit out of range");
        }
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) throw std::invalid_argument("duplicate measured qubit");
        }
    }

    std::map<std::string, double> distribution;
    // Complete distribution: list every outcome, including zero-probability ones.
    const std::uint64_t outcomes = std::uint64_t{1} << qubits.size();
    for (std::uint64_t o = 0; o < outcomes; ++o) {
        std::string key(qubits.size(), '0');
        for (std::size_t t = 0; t < qubits.size(); ++t) {
            if ((o >> (qubits.size() - 1 - t)) & 1u) key[t] = '1';
        }
        distribution[key] = 0.0;
    }
    for (std::uint64_t index = 0; index < sv.dim(); ++index) {
        std::string key(qubits.size(), '0');
        for (std::size_t t = 0; t < qubits.size(); ++t) {
            if (index_bit(index, sv.num_qubits, qubits[t])) key[t] = '1';
        }
        distribution[key] += std::norm(sv.amps[index]);
    }
    return distribution;
}

double overlap_magnitude(const StateVector& a, const StateVector& b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("state vectors have different sizes");
    }
    Amplitude inner{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        inner += std::conj(a.amps[i]) * b.amps[i];
    }
    return std::abs(inner);
}

namespace {

StateVector qubit_plus_minus(int sign) {
    StateVector sv;
    sv.num_qubits = 1;
    sv.amps = {Amplitude{kSqrtHalf, 0.0}, Amplitude{sign >= 0 ? kSqrtHalf : -kSqrtHalf, 0.0}};
    return sv;
}

void check_matches(const StateVector& computed, const StateVector& closed_form,
                   const char* label) {
    if (std::abs(overlap_magnitude(computed, closed_form) - 1.0) > kNormTolerance) {
        throw std::logic_error(std::string("deutsch circuit drifted from closed form at ") +
                               label);
    }
}

}  // namespace

CircuitOutcome deutsch_circuit(const BoolFn& f) {
    if (f.arity != 1) {
        throw std::invalid_argument("deutsch_circuit needs an arity-1 function");
    }
    const Gate h = hadamard();
    const bool constant = f.eval(0) == f.eval(1);

    StateVector sv = StateVector::basis(2, 0b01);  // |0 1>
    sv = apply(h, sv, {0});
    sv = apply(h, sv, {1});
    check_matches(sv, tensor(qubit_plus_minus(+1), qubit_plus_minus(-1)), "psi_1");

    sv = apply(oracle_uf(1, f), sv, {0, 1});
    check_matches(sv,
                  tensor(qubit_plus_minus(constant ? +1 : -1), qubit_plus_minus(-1)),
                  "psi_2");

    sv = apply(h, sv, {0});
    check_matches(sv, tensor(StateVector::basis(1, constant ? 0 : 1), qubit_plus_minus(-1)),
                  "psi_3");
    sv.check_normalized();

    auto distribution = measure_distribution(sv, {0});
    const double p0 = distribution.at("0");
    const double p1 = distribution.at("1");
    if (p0 >= p1) return CircuitOutcome{Promise::Constant, p0, std::move(distribution)};
    return CircuitOutcome{Promise::Balanced, p1, std::move(distribution)};
}

CircuitOutcome dj_circuit(int n, const BoolFn& f) {
    if (n < 1 || f.arity != n) {
        throw std::invalid_argument("dj_circuit needs n >= 1 and a matching arity");
    }
    if (classify_fn(f) == Promise::Neither) {
        throw std::invalid_argument("dj_circuit requires the promise: f constant or balanced");
    }

    const Gate h = hadamard();
    StateVector sv = StateVector::basis(n + 1, 1);  // |0...0 1>
    for (int q = 0; q <= n; ++q) sv = apply(h, sv, {q});
    sv = [&] {
        std::vector<int> all(static_cast<std::size_t>(n) + 1);
        for (int q = 0; q <= n; ++q) all[static_cast<std::size_t>(q)] = q;
        return apply(oracle_uf(n, f), sv, all);
    }();
    for (int q = 0; q < n; ++q) sv = apply(h, sv, {q});
    sv.check_normalized();

    std::vector<int> measured(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) measured[static_cast<std::size_t>(q)] = q;
    auto distribution = measure_distribution(sv, measured);

    // P(first n qubits all zero): the last qubit is free.
    const double p_zero = std::norm(sv.amps[0]) + std::norm(sv.amps[1]);
    if (p_zero >= 0.5) return CircuitOutcome{Promise::Constant, p_zero, std::move(distribution)};
    return CircuitOutcome{Promise::Balanced, 1.0 - p_zero, std::move(distribution)};
}

bool is_entangled_2qubit(const StateVector& sv, double tol) {
    if (sv.num_qubits != 2) {
        throw std::invalid_argument("entanglement test needs exactly 2 qubits");
    }
    const Amplitude determinant = sv.amps[0] * sv.amps[3] - sv.amps[1] * sv.amps[2];
    return std::abs(determinant) > tol;
}

}  // namespace ptm
