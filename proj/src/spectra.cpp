#include "ramlift/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramlift/nb_matrix.hpp"

namespace ramlift {

namespace {

void add_edge_entries(Eigen::MatrixXd& a, const Multigraph& g,
                      const std::vector<std::int8_t>* signs) {
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[j];
        const double s = signs ? static_cast<double>((*signs)[j]) : 1.0;
        if (e.u == e.v) {
            a(e.u, e.u) += 2 * s;
        } else {
            a(e.u, e.v) += s;
            a(e.v, e.u) += s;
        }
    }
}

// y = A x through the edge list.
void adjacency_apply(const Multigraph& g, const std::vector<std::int8_t>* signs,
                     const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y.setZero();
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[j];
        const double s = signs ? static_cast<double>((*signs)[j]) : 1.0;
        if (e.u == e.v) {
            y[e.u] += 2 * s * x[e.u];
        } else {
            y[e.u] += s * x[e.v];
            y[e.v] += s * x[e.u];
        }
    }
}

std::vector<double> dense_spectrum(const Eigen::MatrixXd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolve failed");
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + a.rows());
    std::reverse(out.begin(), out.end());  // descending
    return out;
}

struct LanczosResult {
    double theta_max = 0, theta_min = 0;
    double res_max = 0, res_min = 0;
    int iterations = 0;
};

LanczosResult lanczos(const Multigraph& g, const std::vector<std::int8_t>* signs,
                      bool deflate_ones, int max_iter, double tol, std::uint64_t seed) {
    const int n = static_cast<int>(g.vertex_count());
    const int m = std::min(max_iter, n);
    Eigen::MatrixXd basis(n, m);
    Eigen::VectorXd alpha(m), beta(m);

    Eigen::VectorXd v(n);
    std::uint64_t state = seed;
    for (int i = 0; i < n; ++i)
        v[i] = static_cast<double>(splitmix64(state) >> 11) * 0x1p-53 - 0.5;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n) / std::sqrt(double(n));
    if (deflate_ones) v -= ones.dot(v) * ones;
    v.normalize();

    auto ritz = [&](int k) {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) {
            t(i, i) = alpha[i];
            if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
        const double beta_last = beta[k - 1];
        LanczosResult r;
        r.iterations = k;
        r.theta_min = solver.eigenvalues()[0];
        r.theta_max = solver.eigenvalues()[k - 1];
        r.res_min = std::abs(beta_last * solver.eigenvectors()(k - 1, 0));
        r.res_max = std::abs(beta_last * solver.eigenvectors()(k - 1, k - 1));
        return r;
    };

    Eigen::VectorXd w(n);
    int k = 0;
    for (; k < m; ++k) {
        basis.col(k) = v;
        adjacency_apply(g, signs, v, w);
        if (deflate_ones) w -= ones.dot(w) * ones;
        alpha[k] = v.dot(w);
        w -= alpha[k] * v;
        if (k > 0) w -= beta[k - 1] * basis.col(k - 1);
        // full reorthogonalization
        for (int pass = 0; pass < 2; ++pass)
            w -= basis.leftCols(k + 1) * (basis.leftCols(k + 1).transpose() * w);
        beta[k] = w.norm();
        if (beta[k] < 1e-14) { ++k; break; }
        v = w / beta[k];
        if (k >= 31 && k % 16 == 15) {
            const LanczosResult probe = ritz(k + 1);
            if (std::max(probe.res_min, probe.res_max) <= tol) return probe;
        }
    }
    return ritz(k);
}

} // namespace

Eigen::MatrixXd adjacency_matrix(const Multigraph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
    add_edge_entries(a, g, nullptr);
    return a;
}

Eigen::MatrixXd adjacency_matrix(const SignedGraph& sg) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(sg.graph.vertex_count(), sg.graph.vertex_count());
    add_edge_entries(a, sg.graph, &sg.signing.signs);
    return a;
}

std::vector<double> adjacency_spectrum(const Multigraph& g) {
    return dense_spectrum(adjacency_matrix(g));
}

std::vector<double> adjacency_spectrum(const SignedGraph& sg) {
    return dense_spectrum(adjacency_matrix(sg));
}

double lambda_nontrivial(const std::vector<double>& spectrum) {
    if (spectrum.size() < 2) throw std::invalid_argument("need at least two eigenvalues");
    return std::max(spectrum[1], std::abs(spectrum.back()));
}

double spectral_radius_of(const std::vector<double>& spectrum) {
    if (spectrum.empty()) throw std::invalid_argument("empty spectrum");
    return std::max(std::abs(spectrum.front()), std::abs(spectrum.back()));
}

IterativeExtremes iterative_extremes(const Multigraph& g, int max_iter, double tol,
                                     std::uint64_t seed) {
    const LanczosResult full = lanczos(g, nullptr, false, max_iter, tol, seed);
    const LanczosResult defl = lanczos(g, nullptr, true, max_iter, tol, seed + 1);
    IterativeExtremes out;
    out.lambda_max = full.theta_max;
    out.lambda_min = full.theta_min;
    out.lambda2 = defl.theta_max;
    out.residual = std::max({full.res_max, full.res_min, defl.res_max});
    out.iterations = full.iterations + defl.iterations;
    return out;
}

IterativeExtremes iterative_extremes(const SignedGraph& sg, int max_iter, double tol,
                                     std::uint64_t seed) {
    const LanczosResult full = lanczos(sg.graph, &sg.signing.signs, false, max_iter, tol, seed);
    IterativeExtremes out;
    out.lambda_max = full.theta_max;
    out.lambda_min = full.theta_min;
    out.lambda2 = full.theta_max;
    out.residual = std::max(full.res_max, full.res_min);
    out.iterations = full.iterations;
    return out;
}

namespace {

SpectralReport report_common(const Multigraph& g, const std::vector<std::int8_t>* signs,
                             bool is_signed, const SpectraOptions& opt) {
    const int n = static_cast<int>(g.vertex_count());
    SpectralReport rep;
    rep.is_signed = is_signed;
    rep.eps = opt.eps;
    rep.tolerance = opt.tolerance;
    const std::uint32_t d = g.regular() ? g.degree() : 0;
    rep.threshold = d >= 1 ? 2.0 * std::sqrt(static_cast<double>(d) - 1.0) : 0.0;

    if (n <= opt.dense_cap) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        add_edge_entries(a, g, signs);
        const std::vector<double> spec = dense_spectrum(a);
        rep.lambda1 = spec.front();
        rep.lambda2 = spec.size() > 1 ? spec[1] : spec.front();
        rep.lambda_n = spec.back();
        rep.lambda = is_signed ? spectral_radius_of(spec) : lambda_nontrivial(spec);
    } else {
        rep.estimate = true;
        if (is_signed) {
            SignedGraph view{g, EdgeSigning{*signs}};
            const IterativeExtremes it = iterative_extremes(view);
            rep.lambda1 = it.lambda_max;
            rep.lambda2 = it.lambda_max;
            rep.lambda_n = it.lambda_min;
            rep.lambda = std::max(std::abs(it.lambda_max), std::abs(it.lambda_min));
            rep.residual = it.residual;
        } else {
            const IterativeExtremes it = iterative_extremes(g);
            rep.lambda1 = it.lambda_max;
            rep.lambda2 = it.lambda2;
            rep.lambda_n = it.lambda_min;
            rep.lambda = std::max(it.lambda2, std::abs(it.lambda_min));
            rep.residual = it.residual;
        }
    }

    if (rep.lambda <= rep.threshold + opt.tolerance)
        rep.verdict = Verdict::ramanujan;
    else if (rep.lambda <= rep.threshold + opt.eps + opt.tolerance)
        rep.verdict = Verdict::eps_near_ramanujan;
    else
        rep.verdict = Verdict::above;
    return rep;
}

} // namespace

SpectralReport spectral_report(const Multigraph& g, const SpectraOptions& opt) {
    SpectralReport rep = report_common(g, nullptr, false, opt);
    if (opt.with_rho_b && !g.has_loops()) {
        SignedGraph sg = sign_all(g, +1);
        rep.rho_b = nb_spectral_radius(sg, opt.trace_ell).trace_bound;
    }
    return rep;
}

SpectralReport spectral_report(const SignedGraph& sg, const SpectraOptions& opt) {
    SpectralReport rep = report_common(sg.graph, &sg.signing.signs, true, opt);
    if (opt.with_rho_b && !sg.graph.has_loops())
        rep.rho_b = nb_spectral_radius(sg, opt.trace_ell).trace_bound;
    return rep;
}

bool decide_threshold(const Multigraph& g, double rho, double tol, int dense_cap) {
    if (rho < 0) throw std::invalid_argument("rho must be nonnegative");
    const int n = static_cast<int>(g.vertex_count());
    if (n <= dense_cap) {
        return lambda_nontrivial(adjacency_spectrum(g)) <= rho + tol;
    }
    const IterativeExtremes it = iterative_extremes(g);
    const double lambda_est = std::max(it.lambda2, std::abs(it.lambda_min));
    if (lambda_est + it.residual <= rho + tol) return true;
    if (lambda_est - it.residual > rho + tol) return false;
    // Bounds straddle the threshold: fall back to the dense path.
    return lambda_nontrivial(adjacency_spectrum(g)) <= rho + tol;
}

NbRadiusEstimate nb_spectral_radius(const SignedGraph& sg, int ell, int dense_cap) {
    if (ell < 1) throw std::invalid_argument("ell must be at least 1");
    const Eigen::MatrixXd b = build_nb_matrix(sg);
    NbRadiusEstimate out;

    // ||B^ell||_F^(1/ell) = tr(B^ell (B^T)^ell)^(1/2ell), in log space.
    Eigen::MatrixXd power = b;
    double log_scale = 0;
    for (int step = 1; step < ell; ++step) {
        power = b * power;
        const double norm = power.norm();
        if (norm == 0) break;
        if (norm > 1e100 || norm < 1e-100) {
            power /= norm;
            log_scale += std::log(norm);
        }
    }
    const double fnorm = power.norm();
    out.trace_bound = fnorm == 0 ? 0.0 : std::exp((std::log(fnorm) + log_scale) / ell);

    if (b.rows() <= dense_cap) {
        double rho = 0;
        for (const auto& z : nb_spectrum(sg)) rho = std::max(rho, std::abs(z));
        out.exact = rho;
    }
    return out;
}

} // namespace ramlift
