//! Seeded random instances for property tests and benchmarks.
//!
//! Generators favour small integer entries so exact arithmetic stays cheap.
//! Where a law is too rare to hit by chance, the generator builds instances
//! from families known to satisfy it and mixes in unconstrained ones.

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::special_left_alia;
use crate::fixtures::{fix_a4, fix_sl2};
use crate::laws::check_d_bialgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::structures::{Algebra, BilinearForm, Coalgebra, LinearMap, TwoTensor};

/// Deterministic generator used by every test suite.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `−2..=2`, occasionally `±1/2`.
pub fn small_scalar(rng: &mut impl Rng) -> Scalar {
    if rng.random_ratio(1, 10) {
        let s = if rng.random_bool(0.5) { 1 } else { -1 };
        Scalar::ratio(s, 2)
    } else {
        Scalar::from_int(rng.random_range(-2..=2))
    }
}

/// Matrix whose entries are nonzero with probability `density`.
pub fn sparse_matrix(rng: &mut impl Rng, rows: usize, cols: usize, density: f64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.random_bool(density) {
            small_scalar(rng)
        } else {
            Scalar::zero()
        }
    })
}

pub fn random_map(rng: &mut impl Rng, n: usize) -> LinearMap {
    LinearMap::new(sparse_matrix(rng, n, n, 0.4))
}

pub fn random_tensor(rng: &mut impl Rng, n: usize) -> TwoTensor {
    TwoTensor::new(sparse_matrix(rng, n, n, 0.4))
}

pub fn antisymmetric_tensor(rng: &mut impl Rng, n: usize) -> TwoTensor {
    let m = sparse_matrix(rng, n, n, 0.4);
    TwoTensor::new(&m - &m.transpose())
}

pub fn skew_form(rng: &mut impl Rng, n: usize) -> BilinearForm {
    let m = sparse_matrix(rng, n, n, 0.4);
    BilinearForm::new(&m - &m.transpose())
}

/// Invertible matrix with small entries: a permuted product of unit
/// triangular factors.
pub fn invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            if rng.random_bool(0.5) {
                lower.set(i, j, Scalar::from_int(rng.random_range(-1..=1)));
            }
            if rng.random_bool(0.5) {
                upper.set(j, i, Scalar::from_int(rng.random_range(-1..=1)));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let p = Matrix::from_fn(n, n, |i, j| {
        if perm[i] == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    &(&p * &lower) * &upper
}

/// Bracket on `A ⊕ B` with no cross terms.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let (n, m) = (a.dim(), b.dim());
    Algebra::from_fn(n + m, |i, j, k| {
        if i < n && j < n && k < n {
            a.c(i, j, k).clone()
        } else if i >= n && j >= n && k >= n {
            b.c(i - n, j - n, k - n).clone()
        } else {
            Scalar::zero()
        }
    })
}

/// `K[x]/(x^k)` with unit (basis `1, x, …`) or its non-unital maximal
/// ideal (basis `x, x², …`).
fn truncated_polynomial(k: usize, unital: bool) -> Algebra {
    let shift = usize::from(!unital);
    Algebra::from_fn(k, |i, j, l| {
        // basis element i is x^(i + shift)
        let deg = i + j + 2 * shift;
        if deg < k + shift && l + shift == deg {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// Commutative associative algebra of dimension `1..=max_dim`: a direct
/// sum of truncated polynomial algebras in a random basis.
pub fn comm_assoc_algebra(rng: &mut impl Rng, max_dim: usize) -> Algebra {
    let n = rng.random_range(1..=max_dim);
    let mut left = n;
    let mut alg: Option<Algebra> = None;
    while left > 0 {
        let k = rng.random_range(1..=left);
        let block = truncated_polynomial(k, rng.random_bool(0.5));
        alg = Some(match alg {
            None => block,
            Some(a) => direct_sum(&a, &block),
        });
        left -= k;
    }
    let alg = alg.expect("n >= 1");
    alg.change_basis(&invertible(rng, n)).expect("invertible")
}

/// Matrix of `v ↦ u·v`.
pub fn multiplication_operator(a: &Algebra, u: &[Scalar]) -> Matrix {
    crate::laws::left_mult(a, u)
}

/// A Nijenhuis map `f = L_u + λ id` on a commutative associative algebra
/// and a map `g = L_v + μ id + ν f` commuting with it.
pub fn nijenhuis_commuting_pair(rng: &mut impl Rng, a: &Algebra) -> (LinearMap, LinearMap) {
    let n = a.dim();
    let u: Vec<Scalar> = (0..n).map(|_| small_scalar(rng)).collect();
    let v: Vec<Scalar> = (0..n).map(|_| small_scalar(rng)).collect();
    let f = &multiplication_operator(a, &u) + &Matrix::scalar(n, &small_scalar(rng));
    let g = &(&multiplication_operator(a, &v) + &Matrix::scalar(n, &small_scalar(rng)))
        + &f.scale(&small_scalar(rng));
    (LinearMap::new(f), LinearMap::new(g))
}

/// Lie algebras of small dimension: `sl2`, Heisenberg, the 2-dim
/// non-abelian algebra.
fn small_lie(rng: &mut impl Rng, max_dim: usize) -> Algebra {
    let s = Scalar::from_int;
    let mut choices = vec![Algebra::from_entries(
        2,
        &[(0, 1, 1, s(1)), (1, 0, 1, s(-1))],
    )];
    if max_dim >= 3 {
        choices.push(fix_sl2());
        choices.push(Algebra::from_entries(
            3,
            &[(0, 1, 2, s(1)), (1, 0, 2, s(-1))],
        ));
    }
    choices.choose(rng).expect("nonempty").clone()
}

/// Brackets whose iterated brackets all vanish: products of the first `m`
/// basis vectors land in the remaining span, everything else is zero.
fn two_step_nilpotent(rng: &mut impl Rng, n: usize) -> Algebra {
    let m = rng.random_range(1..n.max(2)).min(n);
    Algebra::from_fn(n, |i, j, k| {
        if i < m && j < m && k >= m && rng.random_bool(0.5) {
            small_scalar(rng)
        } else {
            Scalar::zero()
        }
    })
}

/// Left Alia algebra of dimension at most `max_dim`.
pub fn left_alia_algebra(rng: &mut impl Rng, max_dim: usize) -> Algebra {
    let max_dim = max_dim.max(2);
    let base = match rng.random_range(0..5) {
        0 => {
            let c = comm_assoc_algebra(rng, max_dim);
            let n = c.dim();
            special_left_alia(&c, &random_map(rng, n), &random_map(rng, n)).expect("comm assoc")
        }
        1 => small_lie(rng, max_dim),
        2 => {
            let n = rng.random_range(2..=max_dim);
            two_step_nilpotent(rng, n)
        }
        3 if max_dim >= 4 => fix_a4(),
        _ => {
            let c = comm_assoc_algebra(rng, max_dim);
            let (f, g) = nijenhuis_commuting_pair(rng, &c);
            special_left_alia(&c, &f, &g).expect("comm assoc")
        }
    };
    let n = base.dim();
    base.change_basis(&invertible(rng, n)).expect("invertible")
}

/// Left Alia coalgebra: the dual of a random left Alia algebra.
pub fn left_alia_coalgebra(rng: &mut impl Rng, max_dim: usize) -> Coalgebra {
    crate::structures::dualize_algebra(&left_alia_algebra(rng, max_dim))
}

/// Coalgebra with unconstrained sparse coefficients.
pub fn random_coalgebra(rng: &mut impl Rng, n: usize) -> Coalgebra {
    Coalgebra::from_fn(n, |_, _, _| {
        if rng.random_bool(0.3) {
            small_scalar(rng)
        } else {
            Scalar::zero()
        }
    })
}

/// A map that is Nijenhuis on every algebra (`λ id`) or, half the time, an
/// unconstrained sparse map.
pub fn candidate_map(rng: &mut impl Rng, n: usize) -> LinearMap {
    if rng.random_bool(0.5) {
        LinearMap::scalar(n, &small_scalar(rng))
    } else {
        random_map(rng, n)
    }
}

/// Commutative cocommutative D-bialgebra: a commutative associative algebra
/// with `δ(a) = (L_a ⊗ id − id ⊗ L_a)(r)` for antisymmetric `r`, kept when
/// it is coassociative; otherwise `δ = 0`.
pub fn d_bialgebra(rng: &mut impl Rng, max_dim: usize) -> (Algebra, Coalgebra) {
    let a = comm_assoc_algebra(rng, max_dim);
    let n = a.dim();
    for _ in 0..8 {
        let r = antisymmetric_tensor(rng, n);
        let c = coboundary_coproduct(&a, &r);
        if check_d_bialgebra(&a, &c).expect("dims").passed() {
            return (a, c);
        }
    }
    (a, Coalgebra::zero(n))
}

/// `δ(a) = (L_a ⊗ id − id ⊗ L_a)(r)` on a commutative associative algebra.
pub fn coboundary_coproduct(a: &Algebra, r: &TwoTensor) -> Coalgebra {
    let n = a.dim();
    let mut out = Coalgebra::zero(n);
    for i in 0..n {
        let l = multiplication_operator(a, &crate::matrix::basis_vector(n, i));
        let m = &(&l * &r.t) - &(&r.t * &l.transpose());
        for j in 0..n {
            for k in 0..n {
                *out.d_mut(i, j, k) = m.get(j, k).clone();
            }
        }
    }
    out
}

/// `P⁻¹ M P`: a map expressed in the basis given by the columns of `p`.
pub fn conjugate_map(m: &LinearMap, p: &Matrix) -> LinearMap {
    LinearMap::new(&(&p.inverse().expect("invertible") * &m.m) * p)
}

/// `Δ` expressed in the basis given by the columns of `p`.
pub fn conjugate_coalgebra(c: &Coalgebra, p: &Matrix) -> Coalgebra {
    let n = c.dim();
    let pinv = p.inverse().expect("invertible");
    let mut out = Coalgebra::zero(n);
    for i in 0..n {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            let w = p.get(k, i);
            if !w.is_zero() {
                m = &m + &c.coproduct(k).scale(w);
            }
        }
        let m = &(&pinv * &m) * &pinv.transpose();
        for j in 0..n {
            for k in 0..n {
                *out.d_mut(i, j, k) = m.get(j, k).clone();
            }
        }
    }
    out
}

/// `Pᵀ w P`: a form expressed in the basis given by the columns of `p`.
pub fn transform_form(w: &BilinearForm, p: &Matrix) -> BilinearForm {
    BilinearForm::new(&(&p.transpose() * &w.w) * p)
}

/// `P⁻¹ t P⁻ᵀ`: a tensor expressed in the basis given by the columns of `p`.
pub fn transform_tensor(r: &TwoTensor, p: &Matrix) -> TwoTensor {
    let pinv = p.inverse().expect("invertible");
    TwoTensor::new(&(&pinv * &r.t) * &pinv.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{
        check_associative, check_commutative, check_left_alia, check_nijenhuis_algebra,
    };

    #[test]
    fn generated_algebras_satisfy_their_laws() {
        let mut g = rng(7);
        for _ in 0..40 {
            let a = comm_assoc_algebra(&mut g, 4);
            assert!(check_associative(&a).passed() && check_commutative(&a).passed());
            let (f, h) = nijenhuis_commuting_pair(&mut g, &a);
            assert!(check_nijenhuis_algebra(&a, &f).unwrap().passed());
            assert_eq!(f.compose(&h), h.compose(&f));
            assert!(check_left_alia(&left_alia_algebra(&mut g, 4)).passed());
            let (a, c) = d_bialgebra(&mut g, 3);
            assert!(check_d_bialgebra(&a, &c).unwrap().passed());
        }
    }

    #[test]
    fn truncated_polynomials() {
        let u = truncated_polynomial(3, true);
        assert_eq!(
            u.product(1, 1),
            &[Scalar::zero(), Scalar::zero(), Scalar::one()]
        );
        let nu = truncated_polynomial(2, false);
        assert_eq!(nu.product(0, 0), &[Scalar::zero(), Scalar::one()]);
        assert!(nu.product(0, 1).iter().all(Scalar::is_zero));
    }
}
