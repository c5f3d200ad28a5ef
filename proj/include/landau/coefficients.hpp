#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "landau/grid.hpp"
#include "landau/kernels.hpp"

struct fftw_plan_s;

namespace landau {

/// Discrete convolutions h^3 * sum_w kern(v - w) g(w) on a zero-padded lattice
/// (factor 2 per axis), so wrap-around never reaches the physical box. Kernel
/// spectra are tabulated once per kind and cached. Not thread-safe: confine an
/// engine to one worker or instantiate per worker.
class ConvolutionEngine {
  public:
    explicit ConvolutionEngine(const GridSpec& grid);
    ~ConvolutionEngine();
    ConvolutionEngine(const ConvolutionEngine&) = delete;
    ConvolutionEngine& operator=(const ConvolutionEngine&) = delete;

    const GridSpec& grid() const { return grid_; }

    /// Matrix kernel (Full or CutOff) convolved with g; the z = 0 cell uses
    /// the analytic ball-average rule.
    SymMatrixField convolve_kernel(KernelKind kind, const ScalarField& g);

    /// Scalar kernel |z|^gamma convolved with g (gamma > -3 only).
    ScalarField convolve_radial_gamma(const ScalarField& g);

  private:
    using Spectrum = std::vector<std::complex<double>>;

    void load_padded(const ScalarField& g);
    void forward_into(Spectrum& out);
    void multiply_and_invert(const Spectrum& kernel_spec, const Spectrum& g_spec);
    const std::array<Spectrum, 6>& matrix_spectra(KernelKind kind);
    const Spectrum& scalar_spectrum();

    GridSpec grid_;
    int n_ = 0;            // physical points per axis
    int p_ = 0;            // padded points per axis, 2N
    std::size_t real_count_ = 0;
    std::size_t cplx_count_ = 0;
    double* real_buf_ = nullptr;
    void* cplx_buf_ = nullptr;  // fftw_complex*
    fftw_plan_s* fwd_ = nullptr;
    fftw_plan_s* bwd_ = nullptr;
    std::map<int, std::array<Spectrum, 6>> kernel_spectra_;
    Spectrum scalar_spectrum_;
    Spectrum g_spectrum_;
};

/// a-bar and c-bar of the parabolic form, assembled from one density.
struct CoefficientPair {
    SymMatrixField a_bar;
    ScalarField c_bar;
};

/// a-bar(v) = (a * g)(v). Rejects negative-mass g.
SymMatrixField coeff_a_bar(const ScalarField& g, KernelKind kind, ConvolutionEngine& engine);
SymMatrixField coeff_a_bar(const ScalarField& g, KernelKind kind);

/// c-bar = 8 pi g for gamma = -3, else 2 (gamma + 3) |z|^gamma * g.
ScalarField coeff_c_bar(const ScalarField& g, ConvolutionEngine& engine);
ScalarField coeff_c_bar(const ScalarField& g);

CoefficientPair assemble_coefficients(const ScalarField& g, ConvolutionEngine& engine);

struct CoercivityResult {
    double c0_hat = 0.0;
    std::array<int, 3> argmin_node{};
};

/// c0-hat = min over nodes of lambda_min(at * f (v)) / <v>^gamma.
CoercivityResult coercivity_c0(const ScalarField& f, ConvolutionEngine& engine);
CoercivityResult coercivity_c0(const ScalarField& f);

struct EllipticityReport {
    double lambda_hat = 0.0;        // min lambda_min(a-bar) / <v>^gamma
    double Lambda_hat = 0.0;        // max lambda_max(a-bar) / <v>^(gamma+2)
    double radial_max = 0.0;        // max <a-bar vhat, vhat> / <v>^gamma
    double radial_median = 0.0;     // median of the same quantity
    double general_gamma_max = 0.0; // max lambda_max(a-bar) / <v>^gamma
    std::array<int, 3> argmin_node{};
    std::array<int, 3> argmax_node{};
};

EllipticityReport ellipticity_constants(const SymMatrixField& a_bar);

}  // namespace landau
