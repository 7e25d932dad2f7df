#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "ramlift/lifts.hpp"
#include "ramlift/seed.hpp"

namespace ramlift {

// Non-backtracking operator on directed edges: row/column indices are
// directed-edge ids (2*edge_id + orientation), and entry (e, f) is the sign
// of f's edge when head(e) = tail(f) and f != reverse(e).  Reversal is by
// edge id, so stepping back along a distinct parallel copy is allowed; this
// is what makes the Ihara-Bass identity hold on multigraphs.  Graphs with
// loops are rejected.
Eigen::MatrixXd build_nb_matrix(const SignedGraph& sg);
Eigen::MatrixXd build_nb_matrix(const Multigraph& g);

// Dense nonsymmetric eigensolve of B.
std::vector<std::complex<double>> nb_spectrum(const SignedGraph& sg);

// max over the sample points of |det(I - zB) - (1-z^2)^exc det((1+qz^2)I - zA)|
// with q = d-1.  Requires a regular loopless graph.
double ihara_bass_residual(const SignedGraph& sg,
                           std::span<const std::complex<double>> points);

std::vector<std::complex<double>> ihara_bass_sample_points(int count, double radius,
                                                           const SeedBytes& seed);

// The two B-side eigenvalues matching A-side eigenvalue mu: roots of
// z^2 - mu z + (d-1).
std::pair<std::complex<double>, std::complex<double>> nb_eigenvalue_roots(double mu, int d);

// Edge vector g with g_{vw} = A_{vw} f_v - lambda f_w.  When A f = mu f with
// mu = lambda + q/lambda and lambda is not 0 or +-1, it satisfies
// B g = lambda g and is nonzero.
Eigen::VectorXcd lift_eigenvector(const SignedGraph& sg, const Eigen::VectorXd& f,
                                  std::complex<double> lambda, double tol = 1e-8);

// ||B g - lambda g|| / ||g||
double nb_eigen_residual(const SignedGraph& sg, const Eigen::VectorXcd& g,
                         std::complex<double> lambda);

// B-side magnitude corresponding to an A-side magnitude of 2 sqrt(d-1) + eps:
// sqrt(d-1) + sqrt(eps) sqrt(sqrt(q) + eps/4) + eps/2.
double translate_eigenvalue_bound(int d, double eps);

} // namespace ramlift
