//! Continuous wavelet transform as the affine-group (`ax+b`) special case.
//!
//! Signals are sampled on a uniform grid; the transform evaluates the
//! translated/dilated window by linear interpolation on its samples (zero
//! outside the grid). Reconstruction integrates against the affine Haar
//! measure `db·da/a²` on a log-uniform scale grid with trapezoid weights in
//! `u = ln a`, so everything here is quadrature-approximate; tolerances are
//! grid-dependent and deliberately separate from the exact finite-group
//! modules.
//!
//! The admissibility constant follows the frequency-domain convention
//!
//! ```text
//! C_ψ = ∫_ℝ |ψ̂(ω)|² / |ω| dω
//! ```
//!
//! computed over both signs of ω with the discrete Fourier transform,
//! trapezoid weights, and the ω = 0 bin excluded. Because the scale grid
//! covers only positive `a`, perfect reconstruction for a real-valued
//! window divides by the one-sided constant `C_ψ/2` (real windows have an
//! even power spectrum, so the two one-sided constants agree).
//!
//! A window with nonzero mean makes the integral diverge at ω → 0; this is
//! detected as non-convergence of the estimate under frequency-grid
//! refinement and reported as [`Admissibility::Divergent`].

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::Error;
use crate::C64;

/// Relative change between consecutive refinement levels below which the
/// admissibility estimate counts as converged.
const ADMISSIBILITY_CONVERGENCE: f64 = 1e-3;

/// Admissibility constants below this are treated as vanishing.
const ADMISSIBILITY_FLOOR: f64 = 1e-12;

/// Frequency-refinement levels used by the admissibility estimator.
const ADMISSIBILITY_LEVELS: usize = 4;

/// Uniform sample grid `x_j = x_min + j·dx`, j = 0..n_x (endpoint
/// exclusive: `dx = (x_max − x_min)/n_x`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalGrid {
    x_min: f64,
    dx: f64,
    n_x: usize,
}

impl SignalGrid {
    pub fn new(x_min: f64, x_max: f64, n_x: usize) -> Result<Self, Error> {
        if !(x_min.is_finite() && x_max.is_finite()) || x_min >= x_max {
            return Err(Error::InvalidParameter("signal grid needs finite x_min < x_max"));
        }
        if n_x < 2 {
            return Err(Error::InvalidParameter("signal grid needs at least 2 points"));
        }
        Ok(SignalGrid { x_min, dx: (x_max - x_min) / n_x as f64, n_x })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn len(&self) -> usize {
        self.n_x
    }

    pub fn is_empty(&self) -> bool {
        self.n_x == 0
    }

    #[inline]
    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx
    }

    /// Samples a real-valued function on the grid.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> SampledSignal {
        let values = (0..self.n_x).map(|j| C64::new(f(self.x(j)), 0.0)).collect();
        SampledSignal { values, dx: self.dx }
    }
}

/// A complex signal sampled on a uniform grid with spacing `dx`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    values: Vec<C64>,
    dx: f64,
}

impl SampledSignal {
    pub fn new(values: Vec<C64>, dx: f64) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("signal must have at least one sample"));
        }
        if !dx.is_finite() || dx <= 0.0 {
            return Err(Error::InvalidParameter("signal spacing must be positive and finite"));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidParameter("signal values must be finite"));
        }
        Ok(SampledSignal { values, dx })
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Discrete L² norm `sqrt(dx·Σ|v|²)`.
    pub fn norm(&self) -> f64 {
        (self.dx * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.re == 0.0 && v.im == 0.0)
    }

    /// Linear interpolation at position `u` relative to `grid`, zero
    /// outside the sampled range.
    fn interp(&self, grid: &SignalGrid, u: f64) -> C64 {
        let t = (u - grid.x_min) / grid.dx;
        if !(0.0..=(self.values.len() - 1) as f64).contains(&t) {
            return C64::new(0.0, 0.0);
        }
        let k = t.floor() as usize;
        let frac = t - k as f64;
        if frac == 0.0 || k + 1 >= self.values.len() {
            self.values[k]
        } else {
            self.values[k] * (1.0 - frac) + self.values[k + 1] * frac
        }
    }
}

/// Quadrature grid over the affine parameters `(b, a)` plus the signal grid.
///
/// Scales are log-uniform over `[a_min, a_max]` (inclusive) with trapezoid
/// weights for `da/a²`; shifts are uniform over `[b_min, b_max)` with plain
/// Riemann weight `db`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineGrid {
    scales: Vec<f64>,
    scale_weights: Vec<f64>,
    shifts: Vec<f64>,
    shift_weight: f64,
    signal: SignalGrid,
}

impl AffineGrid {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a_min: f64,
        a_max: f64,
        n_a: usize,
        b_min: f64,
        b_max: f64,
        n_b: usize,
        signal: SignalGrid,
    ) -> Result<Self, Error> {
        if !(a_min.is_finite() && a_max.is_finite()) || a_min <= 0.0 || a_min >= a_max {
            return Err(Error::InvalidParameter("scale range needs 0 < a_min < a_max"));
        }
        if n_a < 2 || n_b < 2 {
            return Err(Error::InvalidParameter("grid needs at least 2 scales and 2 shifts"));
        }
        if !(b_min.is_finite() && b_max.is_finite()) || b_min >= b_max {
            return Err(Error::InvalidParameter("shift range needs finite b_min < b_max"));
        }
        let du = (a_max / a_min).ln() / (n_a - 1) as f64;
        let scales: Vec<f64> = (0..n_a).map(|j| a_min * (du * j as f64).exp()).collect();
        let scale_weights: Vec<f64> = (0..n_a)
            .map(|j| {
                let trapezoid = if j == 0 || j == n_a - 1 { 0.5 } else { 1.0 };
                trapezoid * du / scales[j]
            })
            .collect();
        let db = (b_max - b_min) / n_b as f64;
        let shifts: Vec<f64> = (0..n_b).map(|i| b_min + i as f64 * db).collect();
        Ok(AffineGrid { scales, scale_weights, shifts, shift_weight: db, signal })
    }

    /// Same parameter ranges with `factor`-times as many scales and shifts.
    pub fn refined(&self, factor: usize) -> Result<Self, Error> {
        AffineGrid::new(
            self.scales[0],
            *self.scales.last().expect("nonempty scales"),
            self.scales.len() * factor,
            self.shifts[0],
            self.shifts[0] + self.shift_weight * self.shifts.len() as f64,
            self.shifts.len() * factor,
            self.signal,
        )
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn shifts(&self) -> &[f64] {
        &self.shifts
    }

    pub fn signal_grid(&self) -> &SignalGrid {
        &self.signal
    }

    /// Quadrature weight of the `(b_i, a_j)` cell for the measure `db·da/a²`.
    #[inline]
    pub fn cell_weight(&self, i: usize, j: usize) -> f64 {
        let _ = i;
        self.shift_weight * self.scale_weights[j]
    }

    fn check_signal(&self, s: &SampledSignal) -> Result<(), Error> {
        if s.len() != self.signal.len() || s.dx() != self.signal.dx() {
            return Err(Error::SignalGridMismatch);
        }
        Ok(())
    }
}

/// Mexican-hat window `(1 − x²)·e^{−x²/2}` sampled on the grid. Zero mean,
/// hence admissible.
pub fn mexican_hat(grid: &SignalGrid) -> SampledSignal {
    grid.sample(|x| (1.0 - x * x) * (-x * x / 2.0).exp())
}

/// Gaussian bump `e^{−(x−center)²/(2·width²)}` sampled on the grid.
/// Nonzero mean, hence inadmissible as a window — and a poor reconstruction
/// target on a truncated scale range, since no finite stack of zero-mean
/// wavelets can synthesize its DC content.
pub fn gaussian_bump(grid: &SignalGrid, center: f64, width: f64) -> SampledSignal {
    grid.sample(|x| {
        let t = (x - center) / width;
        (-t * t / 2.0).exp()
    })
}

/// Gaussian wave packet `e^{−(x−center)²/(2·width²)}·cos(frequency·(x−center))`.
///
/// Its spectrum concentrates around `±frequency`, with negligible mass at
/// ω = 0, so a truncated scale range reconstructs it accurately.
pub fn gaussian_packet(
    grid: &SignalGrid,
    center: f64,
    width: f64,
    frequency: f64,
) -> SampledSignal {
    grid.sample(|x| {
        let t = (x - center) / width;
        (-t * t / 2.0).exp() * (frequency * (x - center)).cos()
    })
}

/// Wavelet coefficients `W(b_i, a_j) = dx·Σ_x f(x)·conj(a^{−1/2}·ψ((x−b)/a))`,
/// returned as an `n_b × n_a` matrix.
pub fn wavelet_transform(
    grid: &AffineGrid,
    psi: &SampledSignal,
    f: &SampledSignal,
) -> Result<DMatrix<C64>, Error> {
    grid.check_signal(psi)?;
    grid.check_signal(f)?;
    let sg = grid.signal_grid();
    let dx = sg.dx();
    let mut w = DMatrix::<C64>::zeros(grid.shifts.len(), grid.scales.len());
    for (j, &a) in grid.scales.iter().enumerate() {
        let amp = 1.0 / a.sqrt();
        for (i, &b) in grid.shifts.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for m in 0..sg.len() {
                let window = psi.interp(sg, (sg.x(m) - b) / a);
                if window.re != 0.0 || window.im != 0.0 {
                    acc += f.values()[m] * (window * amp).conj();
                }
            }
            w[(i, j)] = acc * dx;
        }
    }
    Ok(w)
}

/// Synthesizes a signal from wavelet coefficients:
///
/// ```text
/// f̂(x) = (2/C_ψ)·Σ_{i,j} W(b_i,a_j)·a_j^{−1/2}·ψ((x−b_i)/a_j)·w(i,j)
/// ```
///
/// with `w(i,j)` the `db·da/a²` quadrature weight. Errors when the window's
/// admissibility estimate diverges or falls below the floor.
pub fn wavelet_reconstruct(
    grid: &AffineGrid,
    psi: &SampledSignal,
    coeffs: &DMatrix<C64>,
) -> Result<SampledSignal, Error> {
    grid.check_signal(psi)?;
    if coeffs.nrows() != grid.shifts.len() || coeffs.ncols() != grid.scales.len() {
        return Err(Error::DimensionMismatch {
            expected: grid.shifts.len() * grid.scales.len(),
            found: coeffs.nrows() * coeffs.ncols(),
        });
    }
    let c_psi = match admissibility_affine(psi)? {
        Admissibility::Finite(c) if c > ADMISSIBILITY_FLOOR => c,
        _ => return Err(Error::InadmissibleWavelet),
    };
    let one_sided = c_psi / 2.0;
    let sg = grid.signal_grid();
    let mut out = vec![C64::new(0.0, 0.0); sg.len()];
    for (j, &a) in grid.scales.iter().enumerate() {
        let amp = 1.0 / a.sqrt();
        for (i, &b) in grid.shifts.iter().enumerate() {
            let coeff = coeffs[(i, j)] * (grid.cell_weight(i, j) * amp / one_sided);
            if coeff.re == 0.0 && coeff.im == 0.0 {
                continue;
            }
            for (m, slot) in out.iter_mut().enumerate() {
                let window = psi.interp(sg, (sg.x(m) - b) / a);
                *slot += coeff * window;
            }
        }
    }
    SampledSignal::new(out, sg.dx())
}

/// Outcome of the admissibility estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Admissibility {
    /// The estimate converged under frequency-grid refinement.
    Finite(f64),
    /// The ω → 0 contribution keeps growing under refinement (nonzero-mean
    /// window); the integral diverges.
    Divergent { last_estimate: f64 },
}

impl Admissibility {
    pub fn finite(self) -> Option<f64> {
        match self {
            Admissibility::Finite(c) => Some(c),
            Admissibility::Divergent { .. } => None,
        }
    }
}

/// Estimates `C_ψ = ∫ |ψ̂(ω)|²/|ω| dω` with zero-padded DFTs and trapezoid
/// quadrature excluding ω = 0, refining the frequency grid until the value
/// stabilizes. Divergence (nonzero `ψ̂(0)`) shows up as non-convergence.
pub fn admissibility_affine(psi: &SampledSignal) -> Result<Admissibility, Error> {
    if psi.is_zero() {
        return Err(Error::ZeroVector);
    }
    let dx = psi.dx();
    let base = psi.len().next_power_of_two().max(64) * 2;
    let mut estimates = Vec::with_capacity(ADMISSIBILITY_LEVELS);
    for level in 0..ADMISSIBILITY_LEVELS {
        let m = base << level;
        let mut buf = vec![C64::new(0.0, 0.0); m];
        buf[..psi.len()].copy_from_slice(psi.values());
        fft_in_place(&mut buf);
        let d_omega = core::f64::consts::TAU / (m as f64 * dx);
        let mut c = 0.0f64;
        for (bin, value) in buf.iter().enumerate().skip(1) {
            let k = if bin <= m / 2 { bin as f64 } else { bin as f64 - m as f64 };
            let omega = k * d_omega;
            let trapezoid = if bin == 1 || bin == m - 1 { 0.5 } else { 1.0 };
            let spectral = (value * dx).norm_sqr();
            c += trapezoid * spectral / omega.abs() * d_omega;
        }
        estimates.push(c);
    }
    let last = estimates[ADMISSIBILITY_LEVELS - 1];
    let prev = estimates[ADMISSIBILITY_LEVELS - 2];
    let rel_change = (last - prev).abs() / last.abs().max(f64::MIN_POSITIVE);
    if rel_change < ADMISSIBILITY_CONVERGENCE {
        Ok(Admissibility::Finite(last))
    } else {
        Ok(Admissibility::Divergent { last_estimate: last })
    }
}

/// Round-trip relative L² error `‖reconstruct(transform(f)) − f‖ / ‖f‖`.
/// `None` for the zero signal (0/0 is reported as not-applicable).
pub fn reconstruction_error(
    grid: &AffineGrid,
    psi: &SampledSignal,
    f: &SampledSignal,
) -> Result<Option<f64>, Error> {
    grid.check_signal(f)?;
    let f_norm = f.norm();
    if f_norm == 0.0 {
        return Ok(None);
    }
    let coeffs = wavelet_transform(grid, psi, f)?;
    let rec = wavelet_reconstruct(grid, psi, &coeffs)?;
    let mut err = 0.0f64;
    for m in 0..f.len() {
        err += (rec.values()[m] - f.values()[m]).norm_sqr();
    }
    Ok(Some((err * f.dx()).sqrt() / f_norm))
}

/// In-place radix-2 forward DFT (`X_k = Σ_m x_m·e^{−2πi·km/N}`).
fn fft_in_place(buf: &mut [C64]) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = -core::f64::consts::TAU / len as f64;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let tw = C64::from_polar(1.0, step * k as f64);
                let u = buf[start + k];
                let v = buf[start + k + half] * tw;
                buf[start + k] = u + v;
                buf[start + k + half] = u - v;
            }
        }
        len <<= 1;
    }
}
