//! Independent dense reference implementations.
//!
//! Nothing here goes through the library's Pauli algebra, eigensolver or
//! concurrence code: matrices are built from explicit 2x2 blocks, the
//! exponential is a Taylor series with scaling and squaring, and the
//! concurrence forms `ρ^{T_ij}` explicitly.
#![allow(dead_code)]

pub mod checks;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use rand::Rng;

pub type Mat = DMatrix<C64>;
pub type Vec64 = DVector<C64>;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn sigma(letter: char) -> Mat {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    let entries = match letter {
        'I' => [l, o, o, l],
        'X' => [o, l, l, o],
        'Y' => [o, -i, i, o],
        'Z' => [l, o, o, -l],
        _ => panic!("bad letter {letter}"),
    };
    Mat::from_row_slice(2, 2, &entries)
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    a.kronecker(b)
}

/// Tensor product of single-site matrices, site 1 leftmost.
pub fn kron_all(factors: &[Mat]) -> Mat {
    factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| kron(&acc, f))
}

/// Dense matrix of a bare letter string such as `"YZY"`.
pub fn pauli_dense(letters: &str) -> Mat {
    let fs: Vec<Mat> = letters.chars().map(sigma).collect();
    kron_all(&fs)
}

pub fn all_letter_strings(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s| "IXYZ".chars().map(move |ch| format!("{s}{ch}")))
            .collect();
    }
    out
}

/// `J1 ZZI + J2 IZZ + h2 IXI` built from Kronecker products.
pub fn ising3(j1: f64, j2: f64, h2: f64) -> Mat {
    pauli_dense("ZZI") * c(j1, 0.0)
        + pauli_dense("IZZ") * c(j2, 0.0)
        + pauli_dense("IXI") * c(h2, 0.0)
}

/// Open chain `Σ J_k Z_k Z_{k+1} + Σ h_k X_k`.
pub fn ising_chain_dense(j: &[f64], h: &[f64]) -> Mat {
    let n = h.len();
    let dim = 1 << n;
    let mut m = Mat::zeros(dim, dim);
    let on = |sites: &[(usize, char)]| {
        let fs: Vec<Mat> = (0..n)
            .map(|k| {
                sites
                    .iter()
                    .find(|(s, _)| *s == k)
                    .map_or(sigma('I'), |(_, l)| sigma(*l))
            })
            .collect();
        kron_all(&fs)
    };
    for (k, &jk) in j.iter().enumerate() {
        m += on(&[(k, 'Z'), (k + 1, 'Z')]) * c(jk, 0.0);
    }
    for (k, &hk) in h.iter().enumerate() {
        m += on(&[(k, 'X')]) * c(hk, 0.0);
    }
    m
}

pub fn max_abs(m: &Mat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn norm1(m: &Mat) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(m)` by scaling and squaring around a truncated Taylor series.
pub fn expm(m: &Mat) -> Mat {
    let nrm = norm1(m);
    let s = if nrm > 0.5 {
        (nrm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let a = m * c(0.5f64.powi(s), 0.0);
    let dim = m.nrows();
    let mut term = Mat::identity(dim, dim);
    let mut sum = term.clone();
    for k in 1..=24 {
        term = &term * &a * c(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// `exp(-i H t)`.
pub fn propagator_dense(h: &Mat, t: f64) -> Mat {
    expm(&(h * c(0.0, -t)))
}

pub fn ghz_dense(n: usize) -> Vec64 {
    let mut v = Vec64::zeros(1 << n);
    v[0] = c(0.5f64.sqrt(), 0.0);
    v[(1 << n) - 1] = c(0.5f64.sqrt(), 0.0);
    v
}

/// Explicit partial transpose of `rho` over sites `i` and `j` (1-based).
pub fn partial_transpose(rho: &Mat, n: usize, i: usize, j: usize) -> Mat {
    let dim = 1 << n;
    let mask = (1 << (n - i)) | (1 << (n - j));
    Mat::from_fn(dim, dim, |r, col| {
        let r2 = (r & !mask) | (col & mask);
        let c2 = (col & !mask) | (r & mask);
        rho[(r2, c2)]
    })
}

/// `C^{ij}` computed as `sqrt(<ψ|M ρ^{T_ij} M|ψ>)` with every matrix formed.
pub fn concurrence_dense(psi: &Vec64, n: usize, i: usize, j: usize) -> f64 {
    let s = Mat::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]);
    let fs: Vec<Mat> = (1..=n)
        .map(|k| {
            if k == i || k == j {
                s.clone()
            } else {
                sigma('I')
            }
        })
        .collect();
    let m = kron_all(&fs);
    let rho = psi * psi.adjoint();
    let pt = partial_transpose(&rho, n, i, j);
    let v = (psi.adjoint() * &m * pt * &m * psi)[(0, 0)];
    assert!(v.im.abs() < 1e-9, "radicand not real: {v}");
    v.re.max(0.0).sqrt()
}

pub fn pairwise_dense(psi: &Vec64, n: usize) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(concurrence_dense(psi, n, i, j));
        }
    }
    out
}

pub fn cv_dense(psi: &Vec64, n: usize) -> f64 {
    pairwise_dense(psi, n)
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
}

/// Kicked state assembled as an explicit ordered product of stages:
/// free for `offset`, then repeated `U(T)`, `A`, `U(T)`, `A` until `t`.
/// The kick at an instant is applied (right-continuous).
pub fn kicked_state_dense(h: &Mat, a: &Mat, psi0: &Vec64, offset: f64, half: f64, t: f64) -> Vec64 {
    let mut psi = psi0.clone();
    if t <= offset {
        return propagator_dense(h, t) * psi;
    }
    psi = propagator_dense(h, offset) * psi;
    let step = propagator_dense(h, half);
    let mut now = offset;
    loop {
        if now + half > t + 1e-12 * t.max(1.0) {
            return propagator_dense(h, t - now) * psi;
        }
        psi = a * (&step * psi);
        now += half;
    }
}

/// Letter strings whose dense matrices anticommute with `h`, identity excluded.
pub fn brute_anticommutant(h: &Mat, n: usize) -> Vec<String> {
    let scale = max_abs(h).max(1.0);
    all_letter_strings(n)
        .into_iter()
        .filter(|s| s.chars().any(|ch| ch != 'I'))
        .filter(|s| {
            let a = pauli_dense(s);
            max_abs(&(&a * h + h * &a)) <= 1e-12 * scale
        })
        .collect()
}

/// Free-evolution closed forms for GHZ under the three-site chain, written
/// out directly in `(b, ω, h2, t)`.
pub struct FreeForms {
    pub cv: f64,
    pub c12: f64,
    pub c13: f64,
}

pub fn free_forms(j1: f64, j2: f64, h2: f64, t: f64) -> FreeForms {
    let b = j1 + j2;
    let w2 = b * b + h2 * h2;
    let w = w2.sqrt();
    let g = (4.0 * w * t).cos() - 4.0 * (2.0 * w * t).cos();
    let (b2, h22) = (b * b, h2 * h2);
    let r12 = 2.0 * b2 * b2 + (1.0 - g) * h22 * b2 + 2.0 * h22 * h22;
    let r13 = 2.0 * b2 * b2 + (g + 7.0) * h22 * b2 + 2.0 * h22 * h22;
    FreeForms {
        cv: (2.0 * r12.abs() + r13.abs()).sqrt() / (2.0 * w2),
        c12: r12.max(0.0).sqrt() / (2.0 * w2),
        c13: r13.max(0.0).sqrt() / (2.0 * w2),
    }
}

/// Random single-qubit unitary from a uniformly drawn unit quaternion and phase.
pub fn random_su2<R: Rng>(rng: &mut R) -> Mat {
    let q: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [a, b, cc, d] = q.map(|x| x / n);
    let ph = C64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
    Mat::from_row_slice(
        2,
        2,
        &[c(a, b) * ph, c(cc, d) * ph, c(-cc, d) * ph, c(a, -b) * ph],
    )
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> Vec64 {
    let v = Vec64::from_fn(1 << n, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let nrm = v.norm();
    v / c(nrm, 0.0)
}
