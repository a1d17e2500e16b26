//! Jacobson radicals by iterated trace functionals.
//!
//! Over characteristic 0 (or `p` larger than the dimension) the radical is
//! the kernel of the trace form `(a, b) ↦ Tr(L_{ab})`. Over a small prime
//! `p` it is the last term of the chain `A = I_{-1} ⊇ I_0 ⊇ … ⊇ I_l`,
//! `l = ⌊log_p N⌋`, where
//!
//! `I_i = { a ∈ I_{i-1} : g_i(ab) = 0 for all b }` and
//! `g_i(a) = (Tr(Ã^{p^i}) mod p^{i+1}) / p^i`,
//!
//! `Ã` being the integer lift of the matrix of left multiplication by `a`.
//! Each `g_i` is linear on `I_{i-1}`, so it is evaluated only on a basis of
//! `I_{i-1}` and extended to a linear functional `w` on the whole algebra;
//! the conditions `w(u_k b_j) = 0` then form one matrix.

use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// What the chain needs to know about an algebra with basis `b_0..b_{N-1}`.
pub(crate) trait TraceOracle<F: Field> {
    fn field(&self) -> &F;
    fn dim(&self) -> usize;
    /// `τ[t] = Tr(L_{b_t})`.
    fn trace_vector(&self) -> Vec<F::Elem>;
    /// `M[k][j] = w(u_k · b_j)`.
    fn functional_matrix(&self, u: &[Vec<F::Elem>], w: &[F::Elem]) -> Vec<Vec<F::Elem>>;
    /// `Tr(Ũ^{p^i}) mod p^{i+1}` for the lift `Ũ` of `L_u`.
    fn power_trace(&self, u: &[F::Elem], i: u32, modulus: u64) -> u64;
}

pub(crate) fn radical_chain<F: Field, O: TraceOracle<F>>(oracle: &O) -> Subspace<F> {
    let f = oracle.field();
    let n = oracle.dim();
    let p = f.characteristic();
    let levels = if p == 0 { 0 } else { floor_log(p, n as u64) };
    let mut current = Subspace::whole(f.clone(), n);
    for i in 0..=levels {
        if current.is_zero() {
            break;
        }
        let w = if i == 0 {
            oracle.trace_vector()
        } else {
            let pi = p.pow(i);
            let modulus = pi * p;
            let values: Vec<F::Elem> = current
                .basis()
                .iter()
                .map(|u| {
                    let t = oracle.power_trace(u, i, modulus);
                    debug_assert_eq!(t % pi, 0, "p-power trace not divisible by p^i");
                    f.from_i64((t / pi) as i64)
                })
                .collect();
            extend_functional(&current, &values)
        };
        let m = oracle.functional_matrix(current.basis(), &w);
        // y with Σ_k y_k M[k][j] = 0 for every j
        let cols = m.len();
        let mt = Matrix::from_columns(f.clone(), n, &m).expect("consistent shape");
        let mut next = Subspace::new(f.clone(), n);
        for y in mt.kernel_basis() {
            debug_assert_eq!(y.len(), cols);
            let mut v = vec![f.zero(); n];
            for (yk, u) in y.iter().zip(current.basis()) {
                f.axpy(&mut v, yk, u, None);
            }
            next.insert(v);
        }
        current = next;
    }
    current
}

/// A vector `w` with `w · u_l = values[l]` for the stored (semi-echelon)
/// basis, supported on the pivot columns.
fn extend_functional<F: Field>(s: &Subspace<F>, values: &[F::Elem]) -> Vec<F::Elem> {
    let f = s.field();
    let mut w = vec![f.zero(); s.ambient()];
    let (basis, pivots) = (s.basis(), s.pivots());
    // Row l vanishes at the pivots of earlier rows and is 1 at its own.
    for l in (0..basis.len()).rev() {
        let mut acc = values[l].clone();
        for k in l + 1..basis.len() {
            let t = f.mul(&w[pivots[k]], &basis[l][pivots[k]]);
            acc = f.sub(&acc, &t);
        }
        w[pivots[l]] = acc;
    }
    w
}

fn floor_log(p: u64, n: u64) -> u32 {
    let mut l = 0;
    let mut x = p;
    while x <= n {
        l += 1;
        x *= p;
    }
    l
}

/// `Tr(X^e) mod m` for a square integer matrix with entries below `m`.
pub(crate) fn matrix_power_trace(x: &[u64], n: usize, e: u64, m: u64) -> u64 {
    let mul = |a: &[u64], b: &[u64]| {
        let mut c = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % m;
                }
            }
        }
        c
    };
    let mut result: Option<Vec<u64>> = None;
    let mut base = x.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => mul(&r, &base),
            });
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    let r = result.expect("positive exponent");
    (0..n).fold(0, |acc, i| (acc + r[i * n + i]) % m)
}
