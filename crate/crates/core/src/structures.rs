//! Structure-constant containers and the elementary multilinear operations on
//! them.
//!
//! Storage conventions (0-based internally):
//! * `Algebra`: `c(i, j, k)` is the coefficient of `e_k` in `[e_i, e_j]`.
//! * `Coalgebra`: `d(i, j, k)` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
//! * `LinearMap`: column `j` is the image of `e_j`.
//! * `TwoTensor`: `t(i, j)` is the coefficient of `e_i ⊗ e_j`.
//! * `BilinearForm`: `w(i, j) = ω(e_i, e_j)`.

use std::collections::BTreeMap;

use crate::error::{ensure_dim, AliaError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[inline]
fn idx3(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Algebra {
    dim: usize,
    c: Vec<Scalar>,
}

impl Algebra {
    pub fn zero(dim: usize) -> Self {
        Algebra {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.push(f(i, j, k));
                }
            }
        }
        Algebra { dim, c }
    }

    /// Builds from sparse `(i, j, k, coeff)` entries, 0-based.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut a = Algebra::zero(dim);
        for (i, j, k, v) in entries {
            *a.c_mut(*i, *j, *k) += v;
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[idx3(self.dim, i, j, k)]
    }

    #[inline]
    pub fn c_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        let n = self.dim;
        &mut self.c[idx3(n, i, j, k)]
    }

    /// Coefficient vector of `[e_i, e_j]`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = idx3(self.dim, i, j, 0);
        &self.c[start..start + self.dim]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Same constants expressed in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Option<Algebra> {
        let n = self.dim;
        let pinv = p.inverse()?;
        Some(Algebra::from_fn(n, |a, b, k| {
            // [P e_a, P e_b] expressed back in the new basis via P⁻¹
            let mut acc = Scalar::zero();
            for i in 0..n {
                let pia = p.get(i, a);
                if pia.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let pjb = p.get(j, b);
                    if pjb.is_zero() {
                        continue;
                    }
                    let w = pia * pjb;
                    for l in 0..n {
                        let c = self.c(i, j, l);
                        if !c.is_zero() {
                            acc.add_mul(&(&w * c), pinv.get(k, l));
                        }
                    }
                }
            }
            acc
        }))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coalgebra {
    dim: usize,
    d: Vec<Scalar>,
}

impl Coalgebra {
    pub fn zero(dim: usize) -> Self {
        Coalgebra {
            dim,
            d: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut d = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    d.push(f(i, j, k));
                }
            }
        }
        Coalgebra { dim, d }
    }

    /// Builds from sparse `(i, j, k, coeff)` entries, 0-based.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut c = Coalgebra::zero(dim);
        for (i, j, k, v) in entries {
            *c.d_mut(*i, *j, *k) += v;
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.d[idx3(self.dim, i, j, k)]
    }

    #[inline]
    pub fn d_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        let n = self.dim;
        &mut self.d[idx3(n, i, j, k)]
    }

    /// `Δ(e_i)` as an `n × n` matrix of two-tensor coefficients.
    pub fn coproduct(&self, i: usize) -> Matrix {
        let n = self.dim;
        let start = idx3(n, i, 0, 0);
        Matrix::from_vec(n, n, self.d[start..start + n * n].to_vec())
    }

    /// `Δ(x)` for an arbitrary vector.
    pub fn comul_eval(&self, x: &[Scalar]) -> Result<Matrix> {
        ensure_dim("vector length", x.len(), self.dim)?;
        let n = self.dim;
        let mut out = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    out.get_mut(j, k).add_mul(xi, self.d(i, j, k));
                }
            }
        }
        Ok(out)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Scalar::is_zero)
    }
}

/// A linear map between coordinate spaces, column convention.
///
/// Most maps are square endomorphisms; rectangular maps house operators
/// `T: V → A` between a representation space and its algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearMap {
    pub m: Matrix,
}

impl LinearMap {
    pub fn new(m: Matrix) -> Self {
        LinearMap { m }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        LinearMap::new(Matrix::zeros(n, n))
    }

    pub fn scalar(n: usize, s: &Scalar) -> Self {
        LinearMap::new(Matrix::scalar(n, s))
    }

    /// Builds from `(i, j, coeff)` entries: coefficient of `e_i` in the image
    /// of `e_j`, 0-based.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Scalar)]) -> Self {
        let mut m = Matrix::zeros(n, n);
        for (i, j, v) in entries {
            *m.get_mut(*i, *j) += v;
        }
        LinearMap::new(m)
    }

    /// Domain dimension for square maps.
    pub fn dim(&self) -> usize {
        self.m.cols()
    }

    pub fn is_square(&self) -> bool {
        self.m.is_square()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.m.apply(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(&self.m * &other.m)
    }

    pub fn pow(&self, e: u32) -> LinearMap {
        LinearMap::new(self.m.pow(e))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoTensor {
    pub t: Matrix,
}

impl TwoTensor {
    pub fn new(t: Matrix) -> Self {
        assert!(t.is_square(), "two-tensor must be square");
        TwoTensor { t }
    }

    pub fn zero(n: usize) -> Self {
        TwoTensor::new(Matrix::zeros(n, n))
    }

    /// Builds from `(i, j, coeff)` entries: coefficient of `e_i ⊗ e_j`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Scalar)]) -> Self {
        let mut t = Matrix::zeros(n, n);
        for (i, j, v) in entries {
            *t.get_mut(*i, *j) += v;
        }
        TwoTensor::new(t)
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn is_antisymmetric(&self) -> bool {
        (&self.t + &self.t.transpose()).is_zero()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearForm {
    pub w: Matrix,
}

impl BilinearForm {
    pub fn new(w: Matrix) -> Self {
        assert!(w.is_square(), "bilinear form must be square");
        BilinearForm { w }
    }

    pub fn zero(n: usize) -> Self {
        BilinearForm::new(Matrix::zeros(n, n))
    }

    /// Builds from `(i, j, coeff)` entries: `ω(e_i, e_j) = coeff`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Scalar)]) -> Self {
        let mut w = Matrix::zeros(n, n);
        for (i, j, v) in entries {
            *w.get_mut(*i, *j) += v;
        }
        BilinearForm::new(w)
    }

    pub fn dim(&self) -> usize {
        self.w.rows()
    }

    pub fn is_skew(&self) -> bool {
        (&self.w + &self.w.transpose()).is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.w == self.w.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.w.rank() == self.dim()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::matrix::dot(x, &self.w.apply(y))
    }
}

/// A representation `(V, ℓ, r)`: `ell[i]` and `arr[i]` are the `m × m`
/// matrices of `ℓ(e_i)` and `r(e_i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Representation {
    alg_dim: usize,
    rep_dim: usize,
    pub ell: Vec<Matrix>,
    pub arr: Vec<Matrix>,
}

impl Representation {
    pub fn new(rep_dim: usize, ell: Vec<Matrix>, arr: Vec<Matrix>) -> Result<Self> {
        ensure_dim("representation list lengths", arr.len(), ell.len())?;
        for m in ell.iter().chain(&arr) {
            if m.rows() != rep_dim || m.cols() != rep_dim {
                return Err(AliaError::DimensionMismatch(format!(
                    "representation matrix must be {rep_dim}x{rep_dim}"
                )));
            }
        }
        Ok(Representation {
            alg_dim: ell.len(),
            rep_dim,
            ell,
            arr,
        })
    }

    pub fn zero(alg_dim: usize, rep_dim: usize) -> Self {
        Representation {
            alg_dim,
            rep_dim,
            ell: vec![Matrix::zeros(rep_dim, rep_dim); alg_dim],
            arr: vec![Matrix::zeros(rep_dim, rep_dim); alg_dim],
        }
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn rep_dim(&self) -> usize {
        self.rep_dim
    }

    fn combine(mats: &[Matrix], m: usize, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(m, m);
        for (xi, mat) in x.iter().zip(mats) {
            if !xi.is_zero() {
                out = &out + &mat.scale(xi);
            }
        }
        out
    }

    /// `ℓ(x)` for an arbitrary vector `x`.
    pub fn ell_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.ell, self.rep_dim, x)
    }

    /// `r(x)` for an arbitrary vector `x`.
    pub fn arr_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.arr, self.rep_dim, x)
    }
}

/// A named collection of structures on a common space, as loaded from a
/// fixture or a structure file.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Bundle {
    pub dim: usize,
    pub algebra: Option<Algebra>,
    pub coalgebra: Option<Coalgebra>,
    pub maps: BTreeMap<String, LinearMap>,
    pub tensors: BTreeMap<String, TwoTensor>,
    pub forms: BTreeMap<String, BilinearForm>,
}

impl Bundle {
    pub fn new(dim: usize) -> Self {
        Bundle {
            dim,
            ..Default::default()
        }
    }

    pub fn algebra_or_zero(&self) -> Algebra {
        self.algebra
            .clone()
            .unwrap_or_else(|| Algebra::zero(self.dim))
    }

    pub fn coalgebra_or_zero(&self) -> Coalgebra {
        self.coalgebra
            .clone()
            .unwrap_or_else(|| Coalgebra::zero(self.dim))
    }
}

/// `τ(t)`: swaps tensor factors.
pub fn flip(t: &TwoTensor) -> TwoTensor {
    TwoTensor::new(t.t.transpose())
}

/// `[x, y]` for arbitrary coefficient vectors.
pub fn bracket_eval(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.dim();
    ensure_dim("left operand length", x.len(), n)?;
    ensure_dim("right operand length", y.len(), n)?;
    let mut out = vec![Scalar::zero(); n];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let w = xi * yj;
            for (k, c) in a.product(i, j).iter().enumerate() {
                out[k].add_mul(&w, c);
            }
        }
    }
    Ok(out)
}

/// The adjoint representation `(A, ℒ, ℛ)`.
pub fn left_right_operators(a: &Algebra) -> Representation {
    let n = a.dim();
    let ell = (0..n)
        .map(|i| Matrix::from_fn(n, n, |k, j| a.c(i, j, k).clone()))
        .collect();
    let arr = (0..n)
        .map(|i| Matrix::from_fn(n, n, |k, j| a.c(j, i, k).clone()))
        .collect();
    Representation {
        alg_dim: n,
        rep_dim: n,
        ell,
        arr,
    }
}

/// The plain dual (transpose) of a map.
pub fn dual_map(m: &LinearMap) -> LinearMap {
    LinearMap::new(m.m.transpose())
}

/// The algebra on the dual space defined by `⟨[a*, b*], x⟩ = ⟨a* ⊗ b*, Δ(x)⟩`.
pub fn dualize_coalgebra(c: &Coalgebra) -> Algebra {
    Algebra::from_fn(c.dim(), |j, k, i| c.d(i, j, k).clone())
}

/// The coalgebra on the dual space defined by `⟨Δ(a*), x ⊗ y⟩ = ⟨a*, [x, y]⟩`.
pub fn dualize_algebra(a: &Algebra) -> Coalgebra {
    Coalgebra::from_fn(a.dim(), |i, j, k| a.c(j, k, i).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::basis_vector;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn left_right_operators_agree_with_bracket() {
        let a = Algebra::from_entries(2, &[(0, 1, 1, s(3)), (1, 0, 0, s(-1))]);
        let rep = left_right_operators(&a);
        for i in 0..2 {
            for j in 0..2 {
                let x = basis_vector(2, i);
                let y = basis_vector(2, j);
                let b = bracket_eval(&a, &x, &y).unwrap();
                assert_eq!(rep.ell[i].apply(&y), b);
                assert_eq!(rep.arr[j].apply(&x), b);
            }
        }
    }

    #[test]
    fn bracket_eval_rejects_bad_length() {
        let a = Algebra::zero(2);
        let err = bracket_eval(&a, &[s(1)], &[s(0), s(1)]).unwrap_err();
        assert!(matches!(err, AliaError::DimensionMismatch(_)));
    }

    #[test]
    fn dualize_round_trip() {
        let c = Coalgebra::from_entries(3, &[(2, 0, 1, s(-1)), (1, 1, 2, s(5))]);
        assert_eq!(dualize_algebra(&dualize_coalgebra(&c)), c);
    }

    #[test]
    fn change_basis_identity_is_noop() {
        let a = Algebra::from_entries(2, &[(0, 1, 1, s(3))]);
        assert_eq!(a.change_basis(&Matrix::identity(2)).unwrap(), a);
    }

    #[test]
    fn representation_shape_checked() {
        let err = Representation::new(2, vec![Matrix::zeros(2, 2)], vec![Matrix::zeros(3, 3)]);
        assert!(err.is_err());
    }
}
