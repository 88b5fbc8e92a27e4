//! Seeded randomized instances for the invariant suites. Each function builds
//! one instance from `seed` and returns the residual to compare against the
//! stated tolerance, so the same checks back both the property tests and the
//! acceptance harness.
#![allow(dead_code)]

use paritykick::dynamics::{Evolver, KickSchedule};
use paritykick::entanglement::concurrence_vector;
use paritykick::hilbert::{eigensolve, DenseOperator, StateVector};
use paritykick::models::ising_chain;
use paritykick::pauli::{anticommutant, PauliString, PauliSum, Phase};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{kron_all, pairwise_dense, random_state, random_su2, Vec64};

pub const MAX_QUBITS: usize = 6;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn lib_state(v: &Vec64) -> StateVector {
    let n = v.len().trailing_zeros() as usize;
    StateVector::new(n, v.clone()).unwrap()
}

pub fn random_string<R: Rng>(rng: &mut R, n: usize) -> PauliString {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let phase = Phase::from_exponent(rng.gen_range(0..4));
    PauliString::from_masks(n, rng.gen::<u64>() & mask, rng.gen::<u64>() & mask, phase).unwrap()
}

/// Random Hermitian Pauli sum with up to eight terms and `|coef| ≤ 10`.
pub fn random_hamiltonian<R: Rng>(rng: &mut R, n: usize) -> PauliSum {
    let k = rng.gen_range(1..=8);
    let terms: Vec<(f64, PauliString)> = (0..k)
        .map(|_| {
            let s = random_string(rng, n).with_phase(Phase::ONE);
            (rng.gen_range(-10.0..10.0), s)
        })
        .collect();
    PauliSum::new(n, terms).unwrap()
}

pub struct KickedChain {
    pub model: PauliSum,
    pub kick: PauliString,
    pub evolver: Evolver,
    pub offset: f64,
    pub half: f64,
    pub cycles: u32,
}

/// Random open Ising chain with a random anticommuting kick and a random
/// initial state. Fields are kept away from zero so the chain is generic.
pub fn random_kicked_chain(seed: u64) -> KickedChain {
    let mut r = rng(seed);
    let n = r.gen_range(2..=MAX_QUBITS);
    let j: Vec<f64> = (0..n - 1).map(|_| r.gen_range(-5.0..5.0)).collect();
    let h: Vec<f64> = (0..n)
        .map(|_| r.gen_range(0.2..5.0) * if r.gen() { 1.0 } else { -1.0 })
        .collect();
    let model = ising_chain(&j, &h).unwrap();
    let kick = anticommutant(&model)
        .unwrap()
        .choose(&mut r)
        .unwrap()
        .clone();
    let half = r.gen_range(0.01..1.0);
    let offset = if r.gen() { 0.0 } else { r.gen_range(0.0..1.0) };
    let cycles = r.gen_range(1..=5);
    let total = offset + 2.0 * half * cycles as f64;
    let schedule = KickSchedule::kicked(&model, kick.clone(), half, offset, total, 16).unwrap();
    let psi = random_state(&mut r, n);
    let evolver = Evolver::new(&model, lib_state(&psi), schedule).unwrap();
    KickedChain {
        model,
        kick,
        evolver,
        offset,
        half,
        cycles,
    }
}

/// `(‖U†U − I‖_max, |‖Uψ‖ − 1|)` for a random Hamiltonian, time and state.
pub fn unitarity(seed: u64) -> (f64, f64) {
    let mut r = rng(seed);
    let n = r.gen_range(1..=MAX_QUBITS);
    let h = random_hamiltonian(&mut r, n);
    let spec = eigensolve(&h.to_matrix().unwrap()).unwrap();
    let t = r.gen_range(-10.0..10.0);
    let u = spec.propagator(t).unwrap();
    let psi = lib_state(&random_state(&mut r, n));
    let out = u.apply(&psi).unwrap();
    let evolved = spec.evolve(&psi, t).unwrap();
    (
        u.unitarity_residual(),
        (out.norm() - 1.0).abs().max((evolved.norm() - 1.0).abs()),
    )
}

/// `‖U(t1+t2) − U(t1)U(t2)‖_max` and the relative spectral reconstruction error.
pub fn group_and_reconstruction(seed: u64) -> (f64, f64) {
    let mut r = rng(seed);
    let n = r.gen_range(1..=MAX_QUBITS);
    let h = random_hamiltonian(&mut r, n).to_matrix().unwrap();
    let spec = eigensolve(&h).unwrap();
    let (t1, t2) = (r.gen_range(-10.0..10.0), r.gen_range(-10.0..10.0));
    let lhs = spec.propagator(t1 + t2).unwrap();
    let rhs = spec
        .propagator(t1)
        .unwrap()
        .compose(&spec.propagator(t2).unwrap())
        .unwrap();
    let recon = spec.reconstruct().max_abs_diff(&h) / h.frobenius_norm().max(1.0);
    (lhs.max_abs_diff(&rhs), recon)
}

/// `|CV² − Σ C_ij²|`, with the components from the dense partial-transpose oracle.
pub fn pythagorean(seed: u64) -> f64 {
    let mut r = rng(seed);
    let n = r.gen_range(2..=MAX_QUBITS);
    let psi = random_state(&mut r, n);
    let cv = concurrence_vector(&lib_state(&psi)).unwrap();
    let sum: f64 = pairwise_dense(&psi, n).iter().map(|c| c * c).sum();
    (cv * cv - sum).abs()
}

/// `|CV(Vψ) − CV(ψ)|` for a random product of single-site unitaries `V`.
pub fn local_unitary_invariance(seed: u64) -> f64 {
    let mut r = rng(seed);
    let n = r.gen_range(2..=MAX_QUBITS);
    let psi = random_state(&mut r, n);
    let factors: Vec<_> = (0..n).map(|_| random_su2(&mut r)).collect();
    let v = DenseOperator::from_matrix(n, kron_all(&factors)).unwrap();
    let psi = lib_state(&psi);
    let moved = v.apply(&psi).unwrap();
    (concurrence_vector(&moved).unwrap() - concurrence_vector(&psi).unwrap()).abs()
}

/// Largest `‖ψ(t0 + 2kT) − ψ(t0)‖` over all complete cycles.
pub fn cycle_return(seed: u64) -> f64 {
    let c = random_kicked_chain(seed);
    let start = c.evolver.state_at(c.offset).unwrap();
    (1..=c.cycles)
        .map(|k| {
            let t = c.offset + 2.0 * c.half * k as f64;
            c.evolver.state_at(t).unwrap().distance(&start).unwrap()
        })
        .fold(0.0, f64::max)
}

/// `|CV(t0 + τ') − CV(t0 + 2T − τ')|` at a random τ' in a random cycle.
pub fn mirror(seed: u64) -> f64 {
    let c = random_kicked_chain(seed);
    let mut r = rng(seed ^ 0x5eed);
    let m = r.gen_range(0..c.cycles) as f64;
    let tau = r.gen_range(0.0..=c.half);
    let base = c.offset + 2.0 * c.half * m;
    let cv = |t: f64| concurrence_vector(&c.evolver.state_at(t).unwrap()).unwrap();
    (cv(base + tau) - cv(base + 2.0 * c.half - tau)).abs()
}

/// CV jump across the first kick instant: the pre-kick state `U(T)ψ(t0)`
/// against the sampled state at the instant itself.
pub fn kick_continuity(seed: u64) -> f64 {
    let c = random_kicked_chain(seed);
    let at_offset = c.evolver.state_at(c.offset).unwrap();
    let before = c.evolver.spectrum().evolve(&at_offset, c.half).unwrap();
    let at = c.evolver.state_at(c.offset + c.half).unwrap();
    (concurrence_vector(&before).unwrap() - concurrence_vector(&at).unwrap()).abs()
}

/// Pauli strings on up to six qubits whose matrices are multiplied densely.
pub fn product_mismatch(seed: u64) -> f64 {
    let mut r = rng(seed);
    let n = r.gen_range(1..=MAX_QUBITS);
    let (p, q) = (random_string(&mut r, n), random_string(&mut r, n));
    let lhs = p.multiply(&q).unwrap().to_matrix().unwrap();
    let rhs = p
        .to_matrix()
        .unwrap()
        .compose(&q.to_matrix().unwrap())
        .unwrap();
    lhs.max_abs_diff(&rhs)
}

/// Whether `anticommutes` agrees with the dense anticommutator vanishing.
pub fn anticommutation_agrees(seed: u64) -> bool {
    let mut r = rng(seed);
    let n = r.gen_range(1..=MAX_QUBITS);
    let (p, q) = (random_string(&mut r, n), random_string(&mut r, n));
    let (mp, mq) = (p.to_matrix().unwrap(), q.to_matrix().unwrap());
    let anti = mp.compose(&mq).unwrap().matrix() + mq.compose(&mp).unwrap().matrix();
    let vanishes = anti.iter().all(|z| z.norm() < 1e-14);
    p.anticommutes(&q).unwrap() == vanishes
}
