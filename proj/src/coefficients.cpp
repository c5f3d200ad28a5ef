#include "landau/coefficients.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr double kCoulombGamma = -3.0;

bool is_coulomb(double gamma) { return gamma == kCoulombGamma; }

}  // namespace

ConvolutionEngine::ConvolutionEngine(const GridSpec& grid) : grid_(grid) {
    n_ = grid.points_per_axis;
    p_ = 2 * n_;
    real_count_ = static_cast<std::size_t>(p_) * p_ * p_;
    cplx_count_ = static_cast<std::size_t>(p_) * p_ * (p_ / 2 + 1);
    real_buf_ = fftw_alloc_real(real_count_);
    cplx_buf_ = fftw_alloc_complex(cplx_count_);
    if (!real_buf_ || !cplx_buf_) throw NumericalError("ConvolutionEngine: allocation failed");
    // FFTW_ESTIMATE keeps the plan choice deterministic across runs.
    fwd_ = fftw_plan_dft_r2c_3d(p_, p_, p_, real_buf_,
                                static_cast<fftw_complex*>(cplx_buf_), FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_c2r_3d(p_, p_, p_, static_cast<fftw_complex*>(cplx_buf_), real_buf_,
                                FFTW_ESTIMATE);
    if (!fwd_ || !bwd_) throw NumericalError("ConvolutionEngine: plan creation failed");
}

ConvolutionEngine::~ConvolutionEngine() {
    if (fwd_) fftw_destroy_plan(fwd_);
    if (bwd_) fftw_destroy_plan(bwd_);
    if (real_buf_) fftw_free(real_buf_);
    if (cplx_buf_) fftw_free(cplx_buf_);
}

void ConvolutionEngine::load_padded(const ScalarField& g) {
    std::fill(real_buf_, real_buf_ + real_count_, 0.0);
    const std::size_t pp = static_cast<std::size_t>(p_);
    std::size_t src = 0;
    for (int ix = 0; ix < n_; ++ix)
        for (int iy = 0; iy < n_; ++iy) {
            double* dst = real_buf_ + (static_cast<std::size_t>(ix) * pp + iy) * pp;
            for (int iz = 0; iz < n_; ++iz) dst[iz] = g.values[src++];
        }
}

void ConvolutionEngine::forward_into(Spectrum& out) {
    fftw_execute(fwd_);
    out.resize(cplx_count_);
    const auto* c = static_cast<const fftw_complex*>(cplx_buf_);
    for (std::size_t i = 0; i < cplx_count_; ++i) out[i] = {c[i][0], c[i][1]};
}

void ConvolutionEngine::multiply_and_invert(const Spectrum& kernel_spec, const Spectrum& g_spec) {
    auto* c = static_cast<fftw_complex*>(cplx_buf_);
    for (std::size_t i = 0; i < cplx_count_; ++i) {
        const std::complex<double> prod = kernel_spec[i] * g_spec[i];
        c[i][0] = prod.real();
        c[i][1] = prod.imag();
    }
    fftw_execute(bwd_);
}

const std::array<ConvolutionEngine::Spectrum, 6>& ConvolutionEngine::matrix_spectra(
    KernelKind kind) {
    const int key = static_cast<int>(kind);
    auto it = kernel_spectra_.find(key);
    if (it != kernel_spectra_.end()) return it->second;

    std::array<Spectrum, 6> spectra;
    const double h = grid_.spacing;
    const SymMat3 singular = singular_cell_matrix(kind, grid_.gamma, h);
    for (int comp = 0; comp < 6; ++comp) {
        auto pick = [comp](const SymMat3& m) {
            switch (comp) {
                case 0: return m.xx;
                case 1: return m.xy;
                case 2: return m.xz;
                case 3: return m.yy;
                case 4: return m.yz;
                default: return m.zz;
            }
        };
        const std::size_t pp = static_cast<std::size_t>(p_);
        for (int qx = 0; qx < p_; ++qx) {
            const int dx = qx <= n_ ? qx : qx - p_;
            for (int qy = 0; qy < p_; ++qy) {
                const int dy = qy <= n_ ? qy : qy - p_;
                double* row = real_buf_ + (static_cast<std::size_t>(qx) * pp + qy) * pp;
                for (int qz = 0; qz < p_; ++qz) {
                    const int dz = qz <= n_ ? qz : qz - p_;
                    if (dx == 0 && dy == 0 && dz == 0) {
                        row[qz] = pick(singular);
                    } else {
                        const Vec3 z{h * dx, h * dy, h * dz};
                        row[qz] = pick(kernel_eval(kind, grid_.gamma, z));
                    }
                }
            }
        }
        forward_into(spectra[comp]);
    }
    return kernel_spectra_.emplace(key, std::move(spectra)).first->second;
}

const ConvolutionEngine::Spectrum& ConvolutionEngine::scalar_spectrum() {
    if (!scalar_spectrum_.empty()) return scalar_spectrum_;
    if (is_coulomb(grid_.gamma))
        throw ConfigError("scalar |z|^gamma convolution undefined for gamma = -3");
    const double h = grid_.spacing;
    const double singular = singular_cell_scalar(grid_.gamma, h);
    const std::size_t pp = static_cast<std::size_t>(p_);
    for (int qx = 0; qx < p_; ++qx) {
        const int dx = qx <= n_ ? qx : qx - p_;
        for (int qy = 0; qy < p_; ++qy) {
            const int dy = qy <= n_ ? qy : qy - p_;
            double* row = real_buf_ + (static_cast<std::size_t>(qx) * pp + qy) * pp;
            for (int qz = 0; qz < p_; ++qz) {
                const int dz = qz <= n_ ? qz : qz - p_;
                if (dx == 0 && dy == 0 && dz == 0) {
                    row[qz] = singular;
                } else {
                    const double r2 = h * h * double(dx * dx + dy * dy + dz * dz);
                    row[qz] = std::pow(r2, 0.5 * grid_.gamma);
                }
            }
        }
    }
    forward_into(scalar_spectrum_);
    return scalar_spectrum_;
}

SymMatrixField ConvolutionEngine::convolve_kernel(KernelKind kind, const ScalarField& g) {
    if (!(g.grid == grid_)) throw ConfigError("convolve_kernel: grid mismatch");
    const auto& spectra = matrix_spectra(kind);

    load_padded(g);
    forward_into(g_spectrum_);

    SymMatrixField out(grid_);
    const double scale = grid_.cell_volume() / static_cast<double>(real_count_);
    const std::size_t pp = static_cast<std::size_t>(p_);
    for (int comp = 0; comp < 6; ++comp) {
        multiply_and_invert(spectra[comp], g_spectrum_);
        std::size_t dst = 0;
        for (int ix = 0; ix < n_; ++ix)
            for (int iy = 0; iy < n_; ++iy) {
                const double* row = real_buf_ + (static_cast<std::size_t>(ix) * pp + iy) * pp;
                for (int iz = 0; iz < n_; ++iz, ++dst) {
                    const double value = row[iz] * scale;
                    SymMat3& m = out.values[dst];
                    switch (comp) {
                        case 0: m.xx = value; break;
                        case 1: m.xy = value; break;
                        case 2: m.xz = value; break;
                        case 3: m.yy = value; break;
                        case 4: m.yz = value; break;
                        default: m.zz = value; break;
                    }
                }
            }
    }
    return out;
}

ScalarField ConvolutionEngine::convolve_radial_gamma(const ScalarField& g) {
    if (!(g.grid == grid_)) throw ConfigError("convolve_radial_gamma: grid mismatch");
    const auto& spec = scalar_spectrum();
    load_padded(g);
    forward_into(g_spectrum_);
    multiply_and_invert(spec, g_spectrum_);

    ScalarField out(grid_);
    const double scale = grid_.cell_volume() / static_cast<double>(real_count_);
    const std::size_t pp = static_cast<std::size_t>(p_);
    std::size_t dst = 0;
    for (int ix = 0; ix < n_; ++ix)
        for (int iy = 0; iy < n_; ++iy) {
            const double* row = real_buf_ + (static_cast<std::size_t>(ix) * pp + iy) * pp;
            for (int iz = 0; iz < n_; ++iz) out.values[dst++] = row[iz] * scale;
        }
    return out;
}

SymMatrixField coeff_a_bar(const ScalarField& g, KernelKind kind, ConvolutionEngine& engine) {
    if (integrate(g) < 0.0) throw ConfigError("coeff_a_bar: negative-mass density");
    return engine.convolve_kernel(kind, g);
}

SymMatrixField coeff_a_bar(const ScalarField& g, KernelKind kind) {
    ConvolutionEngine engine(g.grid);
    return coeff_a_bar(g, kind, engine);
}

ScalarField coeff_c_bar(const ScalarField& g, ConvolutionEngine& engine) {
    const double gamma = g.grid.gamma;
    if (!(gamma >= -3.0 && gamma < 0.0)) throw ConfigError("coeff_c_bar: gamma outside [-3, 0)");
    if (integrate(g) < 0.0) throw ConfigError("coeff_c_bar: negative-mass density");
    if (is_coulomb(gamma)) {
        ScalarField out = g;
        for (double& v : out.values) v *= 8.0 * M_PI;
        return out;
    }
    ScalarField out = engine.convolve_radial_gamma(g);
    const double factor = 2.0 * (gamma + 3.0);
    for (double& v : out.values) v *= factor;
    return out;
}

ScalarField coeff_c_bar(const ScalarField& g) {
    ConvolutionEngine engine(g.grid);
    return coeff_c_bar(g, engine);
}

CoefficientPair assemble_coefficients(const ScalarField& g, ConvolutionEngine& engine) {
    return {coeff_a_bar(g, KernelKind::Full, engine), coeff_c_bar(g, engine)};
}

CoercivityResult coercivity_c0(const ScalarField& f, ConvolutionEngine& engine) {
    const SymMatrixField conv = engine.convolve_kernel(KernelKind::CutOff, f);
    const GridSpec& grid = f.grid;
    const int n = grid.points_per_axis;
    CoercivityResult res;
    res.c0_hat = std::numeric_limits<double>::infinity();
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                const double w = jbracket_pow(grid.node(ix, iy, iz), grid.gamma);
                const double ratio = sym_min_eigenvalue(conv.values[idx]) / w;
                if (ratio < res.c0_hat) {
                    res.c0_hat = ratio;
                    res.argmin_node = {ix, iy, iz};
                }
            }
    return res;
}

CoercivityResult coercivity_c0(const ScalarField& f) {
    ConvolutionEngine engine(f.grid);
    return coercivity_c0(f, engine);
}

EllipticityReport ellipticity_constants(const SymMatrixField& a_bar) {
    const GridSpec& grid = a_bar.grid;
    const int n = grid.points_per_axis;
    EllipticityReport rep;
    rep.lambda_hat = std::numeric_limits<double>::infinity();
    std::vector<double> radial;
    radial.reserve(a_bar.values.size());
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz, ++idx) {
                const Vec3 v = grid.node(ix, iy, iz);
                const double wg = jbracket_pow(v, grid.gamma);
                const double wg2 = jbracket_pow(v, grid.gamma + 2.0);
                const auto ev = sym_eigenvalues(a_bar.values[idx]);
                if (ev[0] / wg < rep.lambda_hat) {
                    rep.lambda_hat = ev[0] / wg;
                    rep.argmin_node = {ix, iy, iz};
                }
                if (ev[2] / wg2 > rep.Lambda_hat) {
                    rep.Lambda_hat = ev[2] / wg2;
                    rep.argmax_node = {ix, iy, iz};
                }
                rep.general_gamma_max = std::max(rep.general_gamma_max, ev[2] / wg);
                const Vec3 vhat = (1.0 / norm(v)) * v;  // cell-centered grid: |v| > 0
                radial.push_back(a_bar.values[idx].quad(vhat) / wg);
            }
    rep.radial_max = *std::max_element(radial.begin(), radial.end());
    std::nth_element(radial.begin(), radial.begin() + radial.size() / 2, radial.end());
    rep.radial_median = radial[radial.size() / 2];
    return rep;
}

}  // namespace landau
