#![allow(dead_code)]

use ncphase::oscillator::OscillatorParams;
use ncphase::NCParameters;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed of the fixed fuzz corpus.
pub const CORPUS_SEED: u64 = 7;

/// One oscillator draw with `θ < 0.3`, `|k| < 0.5 mω²`, `|l| < 0.5/m` and
/// `μ/ν` near `1/(mω)²`, so the two oscillator quadratures have comparable
/// widths in the Fock basis.
pub fn draw(rng: &mut ChaCha8Rng) -> OscillatorParams {
    let hbar = 1.0;
    let m: f64 = rng.gen_range(0.7..1.4);
    let omega: f64 = rng.gen_range(0.7..1.4);
    let theta: f64 = rng.gen_range(0.01..0.3);
    let ratio = rng.gen_range(0.7..1.4) / (m * omega).powi(2);
    let mu = theta * hbar * ratio.sqrt();
    let nu = theta * hbar / ratio.sqrt();
    let k = rng.gen_range(-0.5..0.5) * m * omega * omega;
    let l = rng.gen_range(-0.5..0.5) / m;
    let nc = NCParameters::new(mu, nu, hbar).expect("valid deformation");
    OscillatorParams::new(nc, m, omega, k, l).expect("valid oscillator")
}

pub fn corpus(seed: u64, count: usize) -> Vec<OscillatorParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw(&mut rng)).collect()
}

pub fn reference_params() -> OscillatorParams {
    let nc = NCParameters::new(0.1, 0.1, 1.0).unwrap();
    OscillatorParams::new(nc, 1.0, 1.0, 0.2, 0.1).unwrap()
}
