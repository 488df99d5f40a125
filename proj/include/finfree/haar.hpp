#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "finfree/ffp.hpp"
#include "finfree/matrix.hpp"
#include "finfree/random.hpp"

namespace finfree {

/// Haar unitary: complex Ginibre matrix, Householder QR, then Q scaled by the
/// phases of diag(R) so that R has a positive real diagonal.
Eigen::MatrixXcd haar_unitary(std::size_t n, CounterRng& rng);

/// Haar orthogonal: the same construction over a real Ginibre matrix.
Eigen::MatrixXd haar_orthogonal(std::size_t n, CounterRng& rng);

using UnitarySampler = std::function<Eigen::MatrixXcd(std::size_t, CounterRng&)>;

struct McOptions {
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    double tolerance = 0.1;
};

struct McResult {
    std::vector<std::complex<double>> coeffs;  ///< averaged, descending order
    Polynomial exact;                          ///< the convolution compared against
    double max_deviation = 0.0;
    bool within_tolerance = false;
    std::size_t samples = 0;
};

Eigen::MatrixXcd to_complex(const Matrix& a);

/// Descending characteristic-polynomial coefficients of a floating matrix.
std::vector<std::complex<double>> char_poly_numeric(const Eigen::MatrixXcd& a);

/// Averages chi_{A + U* B U} (or chi_{A U* B U}) over sampled unitaries and
/// reports the largest coefficient deviation from the exact convolution.
/// The deviation is only reported, never enforced.
McResult expected_charpoly_haar_mc(const Matrix& a, const Matrix& b, Kind kind, const McOptions& options,
                                   const UnitarySampler& sampler = haar_unitary);

}  // namespace finfree
