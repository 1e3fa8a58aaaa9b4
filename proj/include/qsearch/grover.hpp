#pragma once

#include "qsearch/types.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsearch {

/// Uniform superposition over n basis states, all amplitudes 1/sqrt(n).
template <class Real = double>
StateVector<Real> uniform_state(Index n) {
    if (n < 2)
        throw std::invalid_argument("uniform_state: dimension must be >= 2");
    const Real amp = Real(1) / std::sqrt(Real(n));
    return StateVector<Real>::Constant(n, Complex<Real>(amp, 0));
}

/// Oracle call: flips the sign of the marked amplitude.
template <class Real>
StateVector<Real> apply_oracle(StateVector<Real> state, const OracleSpec& oracle) {
    if (state.size() != oracle.n)
        throw std::invalid_argument("apply_oracle: state dimension does not match oracle");
    state[oracle.marked] = -state[oracle.marked];
    return state;
}

/// Reflection about the uniform state, 2|u><u| - I. Works for any dimension.
template <class Real>
StateVector<Real> apply_diffusion(const StateVector<Real>& state) {
    const Complex<Real> mean = state.mean();
    return (Real(2) * mean - state.array()).matrix();
}

/// In-place Walsh-Hadamard transform; requires a power-of-two dimension.
template <class Real>
void walsh_hadamard_inplace(StateVector<Real>& state) {
    const Index n = state.size();
    if (n < 1 || (n & (n - 1)) != 0)
        throw std::invalid_argument("walsh_hadamard_inplace: dimension must be a power of two");
    for (Index h = 1; h < n; h *= 2) {
        for (Index i = 0; i < n; i += 2 * h) {
            for (Index j = i; j < i + h; ++j) {
                const Complex<Real> x = state[j];
                const Complex<Real> y = state[j + h];
                state[j] = x + y;
                state[j + h] = x - y;
            }
        }
    }
    state /= std::sqrt(Real(n));
}

/// Qubit-level route to the diffusion operator: H^l (2|0><0| - I) H^l.
/// Agrees with apply_diffusion exactly, with no global-phase discrepancy.
template <class Real>
StateVector<Real> apply_diffusion_via_hadamard(StateVector<Real> state) {
    walsh_hadamard_inplace(state);
    state.tail(state.size() - 1) = -state.tail(state.size() - 1);
    walsh_hadamard_inplace(state);
    return state;
}

/// One Grover iteration: oracle call followed by diffusion.
template <class Real>
StateVector<Real> grover_step(const StateVector<Real>& state, const OracleSpec& oracle) {
    return apply_diffusion(apply_oracle(state, oracle));
}

/// Runs `steps` Grover iterations from `state`; returns the trace
/// [phi_0, ..., phi_steps] with phi_0 = state.
template <class Real>
Trace<Real> grover_iterate(const StateVector<Real>& state, const OracleSpec& oracle,
                           Index steps) {
    if (steps < 0)
        throw std::invalid_argument("grover_iterate: steps must be >= 0");
    Trace<Real> trace;
    trace.reserve(static_cast<std::size_t>(steps) + 1);
    trace.push_back(state);
    for (Index i = 0; i < steps; ++i)
        trace.push_back(grover_step(trace.back(), oracle));
    return trace;
}

/// Same circuit with the oracle replaced by the identity. For Grover's own
/// circuit the resulting trace is constant at the uniform state.
template <class Real = double>
Trace<Real> empty_oracle_run(Index n, Index steps) {
    if (steps < 0)
        throw std::invalid_argument("empty_oracle_run: steps must be >= 0");
    Trace<Real> trace;
    trace.reserve(static_cast<std::size_t>(steps) + 1);
    trace.push_back(uniform_state<Real>(n));
    for (Index i = 0; i < steps; ++i)
        trace.push_back(apply_diffusion(trace.back()));
    return trace;
}

/// Starting point of the reduced dynamics: the uniform state expressed in
/// the invariant plane, at half the per-step rotation angle.
template <class Real = double>
ReducedState<Real> reduced_initial(Index n) {
    if (n < 2)
        throw std::invalid_argument("reduced_initial: dimension must be >= 2");
    return {std::sqrt(Real(n - 1) / Real(n)), Real(1) / std::sqrt(Real(n))};
}

/// One Grover iteration in the 2D invariant plane (an SO(2) rotation).
template <class Real>
ReducedState<Real> reduced_step(const ReducedState<Real>& state, Index n) {
    if (n < 2)
        throw std::invalid_argument("reduced_step: dimension must be >= 2");
    const Real c = Real(1) - Real(2) / Real(n);
    const Real s = Real(2) * std::sqrt(Real(n - 1)) / Real(n);
    return {c * state.a_unmarked - s * state.b_marked,
            s * state.a_unmarked + c * state.b_marked};
}

/// Probability of measuring the marked element.
template <class Derived>
typename Derived::RealScalar success_probability(const Eigen::MatrixBase<Derived>& state,
                                                 const OracleSpec& oracle) {
    if (state.size() != oracle.n)
        throw std::invalid_argument("success_probability: dimension mismatch");
    return std::norm(state[oracle.marked]);
}

/// Distance of `state` from the plane spanned by |y> and the
/// uniform-over-unmarked vector.
template <class Real>
Real invariant_plane_residual(const StateVector<Real>& state, const OracleSpec& oracle) {
    if (state.size() != oracle.n)
        throw std::invalid_argument("invariant_plane_residual: dimension mismatch");
    StateVector<Real> unmarked = StateVector<Real>::Constant(
        oracle.n, Complex<Real>(Real(1) / std::sqrt(Real(oracle.n - 1)), 0));
    unmarked[oracle.marked] = Complex<Real>(0, 0);
    const Complex<Real> cu = unmarked.dot(state);
    const Complex<Real> cy = state[oracle.marked];
    StateVector<Real> residual = state - cu * unmarked;
    residual[oracle.marked] -= cy;
    return residual.norm();
}

/// Multiplies `target` by the unit phase that makes <reference|target> real
/// and non-negative. States with zero overlap are returned unchanged.
template <class Real>
StateVector<Real> align_global_phase(const StateVector<Real>& reference,
                                     StateVector<Real> target) {
    const Complex<Real> overlap = reference.dot(target);
    const Real mag = std::abs(overlap);
    if (mag > Real(0))
        target *= std::conj(overlap) / mag;
    return target;
}

}  // namespace qsearch
