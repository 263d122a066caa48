//! Adaptive Gauss-Kronrod (7/15) quadrature with bisection.

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_6,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod estimate and its distance from the embedded 7-point Gauss estimate.
pub fn gk15(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

/// Bisects until each piece meets `max(abs_tol, rel_tol * |piece|)`.
/// Returns `None` when a piece is still unresolved at `max_depth`.
pub fn adaptive(
    f: &impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_depth: u32,
) -> Option<Estimate> {
    let mut out = Estimate {
        value: 0.0,
        error: 0.0,
        evaluations: 0,
    };
    let mut stack = vec![(lo, hi, abs_tol, 0u32)];
    while let Some((a, b, tol, depth)) = stack.pop() {
        let (value, error) = gk15(f, a, b);
        out.evaluations += 15;
        if !value.is_finite() {
            return None;
        }
        if error <= tol.max(rel_tol * value.abs()) || error == 0.0 {
            out.value += value;
            out.error += error;
            continue;
        }
        if depth >= max_depth {
            return None;
        }
        let mid = 0.5 * (a + b);
        stack.push((a, mid, 0.5 * tol, depth + 1));
        stack.push((mid, b, 0.5 * tol, depth + 1));
    }
    Some(out)
}
