#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qsearch {

using Index = Eigen::Index;

template <class Real = double>
using Complex = std::complex<Real>;

/// Column vector of complex amplitudes over a finite computational basis.
template <class Real = double>
using StateVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <class Real = double>
using DenseUnitary = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// States recorded after 0, 1, ..., T steps of an algorithm.
template <class Real = double>
using Trace = std::vector<StateVector<Real>>;

/// Search problem: N candidate inputs, exactly one marked element.
struct OracleSpec {
    Index n = 0;
    Index marked = 0;

    OracleSpec(Index n_, Index marked_) : n(n_), marked(marked_) {
        if (n < 2)
            throw std::invalid_argument("OracleSpec: search space must have n >= 2");
        if (marked < 0 || marked >= n)
            throw std::invalid_argument("OracleSpec: marked element out of range");
    }
};

/// Coordinates of a state in the invariant plane spanned by the
/// uniform-over-unmarked vector and the marked basis vector.
template <class Real = double>
struct ReducedState {
    Real a_unmarked;
    Real b_marked;
};

template <class Derived>
typename Derived::RealScalar squared_norm_error(const Eigen::MatrixBase<Derived>& state) {
    using Real = typename Derived::RealScalar;
    return std::abs(state.squaredNorm() - Real(1));
}

}  // namespace qsearch
