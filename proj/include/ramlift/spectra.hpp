#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "ramlift/lifts.hpp"

namespace ramlift {

// Adjacency matrix with the half-edge convention: a loop adds 2 to the
// diagonal, parallel edges accumulate.
Eigen::MatrixXd adjacency_matrix(const Multigraph& g);
Eigen::MatrixXd adjacency_matrix(const SignedGraph& sg);

// Full spectrum in descending order (dense symmetric eigensolve).
std::vector<double> adjacency_spectrum(const Multigraph& g);
std::vector<double> adjacency_spectrum(const SignedGraph& sg);

// max(lambda_2, |lambda_n|) of a descending spectrum.
double lambda_nontrivial(const std::vector<double>& spectrum);
// max |lambda| of a descending spectrum.
double spectral_radius_of(const std::vector<double>& spectrum);

struct IterativeExtremes {
    double lambda_max = 0;   // top of the operator the run targeted
    double lambda_min = 0;
    double lambda2 = 0;      // with the all-ones direction projected out
    double residual = 0;     // worst Ritz residual bound among the above
    int iterations = 0;
};

// Lanczos with full reorthogonalization on the adjacency operator.
IterativeExtremes iterative_extremes(const Multigraph& g, int max_iter = 200,
                                     double tol = 1e-10, std::uint64_t seed = 1);
IterativeExtremes iterative_extremes(const SignedGraph& sg, int max_iter = 200,
                                     double tol = 1e-10, std::uint64_t seed = 1);

enum class Verdict { ramanujan, eps_near_ramanujan, above };

struct SpectralReport {
    double lambda1 = 0;
    double lambda2 = 0;
    double lambda_n = 0;
    double lambda = 0;  // max(lambda2, |lambda_n|); for signed graphs max |eig|
    std::optional<double> rho_b;
    double threshold = 0;  // 2 sqrt(d-1)
    double eps = 0;
    double tolerance = 0;
    Verdict verdict = Verdict::above;
    bool is_signed = false;
    bool estimate = false;  // true when the dense cap forced iterative bounds
    double residual = 0;
};

struct SpectraOptions {
    int dense_cap = 4096;
    double tolerance = 1e-6;
    double eps = 0.0;
    bool with_rho_b = false;
    int trace_ell = 8;
};

SpectralReport spectral_report(const Multigraph& g, const SpectraOptions& opt = {});
SpectralReport spectral_report(const SignedGraph& sg, const SpectraOptions& opt = {});

// True iff lambda(G) <= rho + tol, by dense solve below the cap and by
// certified iterative bounds above it (escalating to dense when the bounds
// cannot separate).
bool decide_threshold(const Multigraph& g, double rho, double tol = 1e-6,
                      int dense_cap = 4096);

struct NbRadiusEstimate {
    double trace_bound = 0;          // tr(B^l (B^T)^l)^(1/2l), an upper bound
    std::optional<double> exact;     // dense rho(B) when the dimension allows
};

NbRadiusEstimate nb_spectral_radius(const SignedGraph& sg, int ell, int dense_cap = 1024);

} // namespace ramlift
