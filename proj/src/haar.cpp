#include "finfree/haar.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "finfree/error.hpp"

namespace finfree {

namespace {

template <class MatrixT>
MatrixT phase_corrected_q(const MatrixT& ginibre) {
    Eigen::HouseholderQR<MatrixT> qr(ginibre);
    MatrixT q = qr.householderQ();
    const MatrixT& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const auto d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(j) *= d / mag;
    }
    return q;
}

}  // namespace

Eigen::MatrixXcd haar_unitary(std::size_t n, CounterRng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(i, j) = {re, im};
        }
    return phase_corrected_q(z);
}

Eigen::MatrixXd haar_orthogonal(std::size_t n, CounterRng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd z(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = normal(rng);
    return phase_corrected_q(z);
}

Eigen::MatrixXcd to_complex(const Matrix& a) {
    const auto dim = static_cast<Eigen::Index>(a.size());
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) {
            const Scalar& s = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            out(i, j) = {s.re().get_d(), s.im().get_d()};
        }
    return out;
}

std::vector<std::complex<double>> char_poly_numeric(const Eigen::MatrixXcd& a) {
    const auto n = a.rows();
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[0] = 1.0;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        Eigen::MatrixXcd am = a * m;
        const std::complex<double> c = -am.trace() / static_cast<double>(k);
        coeffs[static_cast<std::size_t>(k)] = c;
        am.diagonal().array() += c;
        m = std::move(am);
    }
    return coeffs;
}

McResult expected_charpoly_haar_mc(const Matrix& a, const Matrix& b, Kind kind, const McOptions& options,
                                   const UnitarySampler& sampler) {
    if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "matrices have different dimensions");
    if (a.size() == 0) throw Error(ErrorCode::invalid_argument, "matrices must be at least 1x1");
    if (options.samples < 1) throw Error(ErrorCode::invalid_argument, "need at least one sample");

    const std::size_t n = a.size();
    const Eigen::MatrixXcd fa = to_complex(a);
    const Eigen::MatrixXcd fb = to_complex(b);
    CounterRng rng(options.seed);

    std::vector<std::complex<double>> sum(n + 1);
    for (std::size_t s = 0; s < options.samples; ++s) {
        const Eigen::MatrixXcd u = sampler(n, rng);
        const Eigen::MatrixXcd conj = u.adjoint() * fb * u;
        const auto chi = char_poly_numeric(kind == Kind::additive ? Eigen::MatrixXcd(fa + conj)
                                                                   : Eigen::MatrixXcd(fa * conj));
        for (std::size_t k = 0; k <= n; ++k) sum[k] += chi[k];
    }

    McResult result;
    result.samples = options.samples;
    result.exact = kind == Kind::additive ? boxplus(char_poly(a), char_poly(b)) : boxtimes(char_poly(a), char_poly(b));
    result.coeffs.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        result.coeffs[k] = sum[k] / static_cast<double>(options.samples);
        const std::complex<double> exact{result.exact[k].re().get_d(), result.exact[k].im().get_d()};
        result.max_deviation = std::max(result.max_deviation, std::abs(result.coeffs[k] - exact));
    }
    result.within_tolerance = result.max_deviation < options.tolerance;
    return result;
}

}  // namespace finfree
