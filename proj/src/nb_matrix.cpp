#include "ramlift/nb_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ramlift/spectra.hpp"

namespace ramlift {

namespace {

Eigen::MatrixXd build_nb(const Multigraph& g, const std::vector<std::int8_t>* signs) {
    if (g.has_loops())
        throw std::invalid_argument("non-backtracking matrix needs a loopless graph");
    const std::uint32_t dim = g.directed_edge_count();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
    for (DirectedEdgeId e = 0; e < dim; ++e) {
        const std::uint32_t head = g.de_head(e);
        for (std::uint32_t j : g.incident(head)) {
            const Edge& ej = g.edges()[j];
            // orientation of j that leaves `head`
            const DirectedEdgeId f = 2 * j + (ej.u == head ? 0u : 1u);
            if (f == reverse_edge(e)) continue;
            b(e, f) = signs ? static_cast<double>((*signs)[j]) : 1.0;
        }
    }
    return b;
}

} // namespace

Eigen::MatrixXd build_nb_matrix(const SignedGraph& sg) {
    return build_nb(sg.graph, &sg.signing.signs);
}

Eigen::MatrixXd build_nb_matrix(const Multigraph& g) {
    return build_nb(g, nullptr);
}

std::vector<std::complex<double>> nb_spectrum(const SignedGraph& sg) {
    const Eigen::MatrixXd b = build_nb_matrix(sg);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(b, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("nonsymmetric eigensolve failed");
    std::vector<std::complex<double>> out(b.rows());
    for (Eigen::Index i = 0; i < b.rows(); ++i) out[i] = solver.eigenvalues()[i];
    return out;
}

double ihara_bass_residual(const SignedGraph& sg,
                           std::span<const std::complex<double>> points) {
    const Multigraph& g = sg.graph;
    if (!g.regular()) throw std::invalid_argument("Ihara-Bass check needs a regular graph");
    const double q = static_cast<double>(g.degree()) - 1.0;
    const auto exc = static_cast<double>(g.excess());

    const Eigen::MatrixXd b = build_nb_matrix(sg);
    const Eigen::MatrixXd a = adjacency_matrix(sg);
    const Eigen::MatrixXcd bc = b.cast<std::complex<double>>();
    const Eigen::MatrixXcd ac = a.cast<std::complex<double>>();
    const Eigen::MatrixXcd ib = Eigen::MatrixXcd::Identity(b.rows(), b.cols());
    const Eigen::MatrixXcd ia = Eigen::MatrixXcd::Identity(a.rows(), a.cols());

    double worst = 0;
    for (std::complex<double> z : points) {
        for (int attempt = 0;; ++attempt) {
            const std::complex<double> lhs = (ib - z * bc).determinant();
            const std::complex<double> rhs =
                std::pow(1.0 - z * z, exc) *
                (((1.0 + q * z * z) * ia) - z * ac).determinant();
            if (std::isfinite(lhs.real()) && std::isfinite(lhs.imag()) &&
                std::isfinite(rhs.real()) && std::isfinite(rhs.imag())) {
                worst = std::max(worst, std::abs(lhs - rhs));
                break;
            }
            if (attempt >= 8) throw std::runtime_error("degenerate sample point");
            z *= 1.0009765625;  // resample on a nearby radius
        }
    }
    return worst;
}

std::vector<std::complex<double>> ihara_bass_sample_points(int count, double radius,
                                                           const SeedBytes& seed) {
    std::uint64_t state = fold_seed(seed, "ihara-bass-points");
    std::vector<std::complex<double>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1p-53;
        const double angle = 2.0 * std::numbers::pi * u;
        out.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
    return out;
}

std::pair<std::complex<double>, std::complex<double>> nb_eigenvalue_roots(double mu, int d) {
    const std::complex<double> q(static_cast<double>(d) - 1.0, 0.0);
    const std::complex<double> disc = std::sqrt(std::complex<double>(mu * mu, 0.0) - 4.0 * q);
    return {(mu + disc) / 2.0, (mu - disc) / 2.0};
}

Eigen::VectorXcd lift_eigenvector(const SignedGraph& sg, const Eigen::VectorXd& f,
                                  std::complex<double> lambda, double tol) {
    const Multigraph& g = sg.graph;
    if (!g.regular()) throw std::invalid_argument("lift_eigenvector needs a regular graph");
    if (g.has_loops()) throw std::invalid_argument("lift_eigenvector needs a loopless graph");
    const double fnorm = f.norm();
    if (fnorm == 0) throw std::invalid_argument("f must be nonzero");
    if (std::abs(lambda) < tol || std::abs(lambda - 1.0) < tol || std::abs(lambda + 1.0) < tol)
        throw std::invalid_argument("lambda in {0, +1, -1} is degenerate");

    const double q = static_cast<double>(g.degree()) - 1.0;
    const std::complex<double> mu = lambda + q / lambda;
    if (std::abs(mu.imag()) > tol * (1.0 + std::abs(mu)))
        throw std::invalid_argument("lambda + q/lambda must be real for a symmetric A");

    // verify A f = mu f
    const Eigen::MatrixXd a = adjacency_matrix(sg);
    if ((a * f - mu.real() * f).norm() > tol * (1.0 + std::abs(mu.real())) * fnorm)
        throw std::invalid_argument("f is not an eigenvector for mu = lambda + q/lambda");

    const std::uint32_t dim = g.directed_edge_count();
    Eigen::VectorXcd out(dim);
    for (DirectedEdgeId e = 0; e < dim; ++e) {
        const double s = sg.sign(e >> 1);
        out[e] = s * f[g.de_tail(e)] - lambda * f[g.de_head(e)];
    }
    return out;
}

double nb_eigen_residual(const SignedGraph& sg, const Eigen::VectorXcd& g,
                         std::complex<double> lambda) {
    const Eigen::MatrixXcd b = build_nb_matrix(sg).cast<std::complex<double>>();
    const double gnorm = g.norm();
    if (gnorm == 0) throw std::invalid_argument("zero edge vector");
    return (b * g - lambda * g).norm() / gnorm;
}

double translate_eigenvalue_bound(int d, double eps) {
    if (d < 3) throw std::invalid_argument("degree must be at least 3");
    if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
    const double q = static_cast<double>(d) - 1.0;
    return std::sqrt(q) + std::sqrt(eps) * std::sqrt(std::sqrt(q) + eps / 4.0) + eps / 2.0;
}

} // namespace ramlift
