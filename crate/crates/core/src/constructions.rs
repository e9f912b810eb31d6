//! Structure-building operations: special left Alia (co)algebras, dual
//! representations, semidirect products, matched-pair sums, the double on
//! `A ⊕ A*` and adjoints with respect to a bilinear form.

use crate::error::{ensure_dim, AliaError, Result};
use crate::laws::{
    check_associative, check_coassociative, check_cocommutative, check_commutative,
    check_left_alia, check_nijenhuis_algebra, check_representation, ensure_map,
};
use crate::matrix::Matrix;
use crate::residual::Residual;
use crate::scalar::Scalar;
use crate::structures::{
    dualize_coalgebra, left_right_operators, Algebra, BilinearForm, Coalgebra, LinearMap,
    Representation,
};

/// `[x, y] = x·f(y) + g(x·y)` on a commutative associative algebra.
pub fn special_left_alia(a: &Algebra, f: &LinearMap, g: &LinearMap) -> Result<Algebra> {
    let n = a.dim();
    ensure_map("f", f, n)?;
    ensure_map("g", g, n)?;
    if !(check_associative(a).passed() && check_commutative(a).passed()) {
        return Err(AliaError::NotCommAssoc);
    }
    let out = Algebra::from_fn(n, |i, j, k| {
        let mut acc = Scalar::zero();
        for b in 0..n {
            acc.add_mul(f.m.get(b, j), a.c(i, b, k));
        }
        for p in 0..n {
            acc.add_mul(a.c(i, j, p), g.m.get(k, p));
        }
        acc
    });
    debug_assert!(check_left_alia(&out).passed());
    Ok(out)
}

/// `Δ(x) = x_[1] ⊗ F(x_[2]) + G(x)_[1] ⊗ G(x)_[2]` on a cocommutative
/// coassociative coalgebra.
pub fn special_left_alia_coalgebra(
    c: &Coalgebra,
    big_f: &LinearMap,
    big_g: &LinearMap,
) -> Result<Coalgebra> {
    let n = c.dim();
    ensure_map("F", big_f, n)?;
    ensure_map("G", big_g, n)?;
    if !(check_coassociative(c).passed() && check_cocommutative(c).passed()) {
        return Err(AliaError::NotCocommCoassoc);
    }
    let ft = big_f.m.transpose();
    let mut out = Coalgebra::zero(n);
    for i in 0..n {
        let m = &(&c.coproduct(i) * &ft) + &c.comul_eval(&big_g.m.col(i))?;
        for j in 0..n {
            for k in 0..n {
                *out.d_mut(i, j, k) = m.get(j, k).clone();
            }
        }
    }
    debug_assert!(crate::laws::check_left_alia_coalgebra(&out).passed());
    Ok(out)
}

/// The dual module `(V*, ℓ*, ℓ* − r*)` where `⟨ρ*(x)u*, v⟩ = −⟨u*, ρ(x)v⟩`.
pub fn dual_representation(rep: &Representation) -> Representation {
    let ell: Vec<Matrix> = rep.ell.iter().map(|l| -l.transpose()).collect();
    let arr: Vec<Matrix> = rep
        .ell
        .iter()
        .zip(&rep.arr)
        .map(|(l, r)| &r.transpose() - &l.transpose())
        .collect();
    Representation::new(rep.rep_dim(), ell, arr).expect("shapes preserved")
}

/// Bracket on `A ⊕ V`: `[x + u, y + v] = [x, y] + ℓ(x)v + r(y)u`, basis of
/// `A` first. Fails with `RepInvalid` unless `rep` is a representation.
pub fn semidirect_product(a: &Algebra, rep: &Representation) -> Result<Algebra> {
    if !check_representation(a, rep)?.passed() {
        return Err(AliaError::RepInvalid);
    }
    Ok(semidirect_unchecked(a, rep))
}

/// Semidirect product together with the block map `N + α`. Whether the
/// block map is Nijenhuis is left to the caller to check.
pub fn semidirect_product_with_maps(
    a: &Algebra,
    rep: &Representation,
    nmap: &LinearMap,
    alpha: &LinearMap,
) -> Result<(Algebra, LinearMap)> {
    ensure_map("N", nmap, a.dim())?;
    ensure_map("alpha", alpha, rep.rep_dim())?;
    let big = semidirect_product(a, rep)?;
    Ok((big, LinearMap::new(Matrix::block_diag(&nmap.m, &alpha.m))))
}

fn semidirect_unchecked(a: &Algebra, rep: &Representation) -> Algebra {
    let (n, m) = (a.dim(), rep.rep_dim());
    let mut out = Algebra::zero(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *out.c_mut(i, j, k) = a.c(i, j, k).clone();
            }
        }
        for q in 0..m {
            for p in 0..m {
                // [e_i, f_q] = ℓ(e_i) f_q and [f_q, e_i] = r(e_i) f_q
                *out.c_mut(i, n + q, n + p) = rep.ell[i].get(p, q).clone();
                *out.c_mut(n + q, i, n + p) = rep.arr[i].get(p, q).clone();
            }
        }
    }
    out
}

/// Two algebras acting on each other: `rep_ab` is `(ℓ_A, r_A)` acting on
/// `B`, `rep_ba` is `(ℓ_B, r_B)` acting on `A`.
#[derive(Clone, Debug)]
pub struct MatchedPairData {
    pub alg_a: Algebra,
    pub alg_b: Algebra,
    pub rep_ab: Representation,
    pub rep_ba: Representation,
    pub nij_a: Option<LinearMap>,
    pub nij_b: Option<LinearMap>,
}

#[derive(Clone, Debug)]
pub struct MatchedPairSum {
    pub algebra: Algebra,
    pub nij: Option<LinearMap>,
    /// Left Alia residual of the sum.
    pub left_alia: Residual,
    /// Nijenhuis residual of `N_A + N_B` on the sum, when both maps are given.
    pub nijenhuis: Option<Residual>,
}

impl MatchedPairSum {
    pub fn matched(&self) -> bool {
        self.left_alia.passed() && self.nijenhuis.as_ref().is_none_or(Residual::passed)
    }
}

fn sum_bracket(md: &MatchedPairData) -> Result<Algebra> {
    let (n, m) = (md.alg_a.dim(), md.alg_b.dim());
    ensure_dim("rep_ab algebra dimension", md.rep_ab.alg_dim(), n)?;
    ensure_dim("rep_ab module dimension", md.rep_ab.rep_dim(), m)?;
    ensure_dim("rep_ba algebra dimension", md.rep_ba.alg_dim(), m)?;
    ensure_dim("rep_ba module dimension", md.rep_ba.rep_dim(), n)?;
    let (a, b) = (&md.alg_a, &md.alg_b);
    let mut out = Algebra::zero(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *out.c_mut(i, j, k) = a.c(i, j, k).clone();
            }
        }
    }
    for p in 0..m {
        for q in 0..m {
            for k in 0..m {
                *out.c_mut(n + p, n + q, n + k) = b.c(p, q, k).clone();
            }
        }
    }
    for i in 0..n {
        for q in 0..m {
            // [e_i, f_q] = r_B(f_q) e_i + ℓ_A(e_i) f_q
            for k in 0..n {
                *out.c_mut(i, n + q, k) = md.rep_ba.arr[q].get(k, i).clone();
            }
            for k in 0..m {
                *out.c_mut(i, n + q, n + k) = md.rep_ab.ell[i].get(k, q).clone();
            }
            // [f_q, e_i] = ℓ_B(f_q) e_i + r_A(e_i) f_q
            for k in 0..n {
                *out.c_mut(n + q, i, k) = md.rep_ba.ell[q].get(k, i).clone();
            }
            for k in 0..m {
                *out.c_mut(n + q, i, n + k) = md.rep_ab.arr[i].get(k, q).clone();
            }
        }
    }
    Ok(out)
}

/// Builds the bracket on `A ⊕ B` and decides whether the data is a matched
/// pair by checking the left Alia identity on the sum (and the Nijenhuis
/// identity for `N_A + N_B` when both maps are present).
pub fn matched_pair_sum(md: &MatchedPairData) -> Result<MatchedPairSum> {
    let algebra = sum_bracket(md)?;
    let left_alia = check_left_alia(&algebra);
    let (nij, nijenhuis) = match (&md.nij_a, &md.nij_b) {
        (Some(na), Some(nb)) => {
            ensure_map("nij_a", na, md.alg_a.dim())?;
            ensure_map("nij_b", nb, md.alg_b.dim())?;
            let big = LinearMap::new(Matrix::block_diag(&na.m, &nb.m));
            let res = check_nijenhuis_algebra(&algebra, &big)?;
            (Some(big), Some(res))
        }
        _ => (None, None),
    };
    Ok(MatchedPairSum {
        algebra,
        nij,
        left_alia,
        nijenhuis,
    })
}

/// The double on `A ⊕ A*` with its natural pairing form.
#[derive(Clone, Debug)]
pub struct DoubleBundle {
    pub big: Algebra,
    pub form: BilinearForm,
    /// `N + S*`, when `N` and `S` were supplied.
    pub nij: Option<LinearMap>,
    /// `S + N*`, the adjoint of `N + S*` with respect to `form`.
    pub adm: Option<LinearMap>,
    /// The matched-pair data the double was assembled from.
    pub pair: MatchedPairData,
}

/// Assembles the double of `(A, Δ)`: `A*` carries the bracket dual to `Δ`,
/// and the two algebras act on each other through the duals of their
/// adjoint representations. No law is asserted.
pub fn drinfeld_double(
    a: &Algebra,
    c: &Coalgebra,
    maps: Option<(&LinearMap, &LinearMap)>,
) -> Result<DoubleBundle> {
    let n = a.dim();
    ensure_dim("coalgebra dimension", c.dim(), n)?;
    let dual = dualize_coalgebra(c);
    let pair = MatchedPairData {
        alg_a: a.clone(),
        alg_b: dual.clone(),
        rep_ab: dual_representation(&left_right_operators(a)),
        rep_ba: dual_representation(&left_right_operators(&dual)),
        nij_a: maps.map(|(nm, _)| nm.clone()),
        nij_b: maps.map(|(_, s)| crate::structures::dual_map(s)),
    };
    let big = sum_bracket(&pair)?;
    let mut w = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        w.set(i, n + i, Scalar::one());
        w.set(n + i, i, Scalar::one());
    }
    let (nij, adm) = match maps {
        Some((nm, s)) => {
            ensure_map("N", nm, n)?;
            ensure_map("S", s, n)?;
            (
                Some(LinearMap::new(Matrix::block_diag(&nm.m, &s.m.transpose()))),
                Some(LinearMap::new(Matrix::block_diag(&s.m, &nm.m.transpose()))),
            )
        }
        None => (None, None),
    };
    Ok(DoubleBundle {
        big,
        form: BilinearForm::new(w),
        nij,
        adm,
        pair,
    })
}

/// The unique `N̂` with `B(N x, y) = B(x, N̂ y)`, i.e. `B⁻¹ Nᵀ B`.
pub fn adjoint_wrt_form(nmap: &LinearMap, b: &BilinearForm) -> Result<LinearMap> {
    ensure_map("N", nmap, b.dim())?;
    let inv = b.w.inverse().ok_or(AliaError::DegenerateForm)?;
    Ok(LinearMap::new(&(&inv * &nmap.m.transpose()) * &b.w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::laws::*;

    #[test]
    fn special_bracket_on_dual_numbers() {
        let f = LinearMap::from_entries(2, &[(1, 0, Scalar::one())]);
        let out = special_left_alia(&fix_dual2(), &f, &LinearMap::zero(2)).unwrap();
        let expected = Algebra::from_entries(2, &[(0, 0, 1, Scalar::one())]);
        assert_eq!(out, expected);
    }

    #[test]
    fn special_rejects_noncommutative() {
        let err = special_left_alia(&fix_a4(), &LinearMap::zero(4), &LinearMap::zero(4));
        assert_eq!(err.unwrap_err(), AliaError::NotCommAssoc);
    }

    #[test]
    fn double_of_four_dim_bialgebra() {
        let d = drinfeld_double(&fix_a4(), &fix_d4(), Some((&fix_n4(), &fix_s4()))).unwrap();
        assert!(check_left_alia(&d.big).passed());
        assert!(check_quadratic(&d.big, &d.form).unwrap().passed());
        let nij = d.nij.as_ref().unwrap();
        assert!(check_nijenhuis_algebra(&d.big, nij).unwrap().passed());
        assert_eq!(
            &adjoint_wrt_form(nij, &d.form).unwrap(),
            d.adm.as_ref().unwrap()
        );
    }

    #[test]
    fn degenerate_form_rejected() {
        let err = adjoint_wrt_form(&LinearMap::identity(2), &BilinearForm::zero(2));
        assert_eq!(err.unwrap_err(), AliaError::DegenerateForm);
    }
}
