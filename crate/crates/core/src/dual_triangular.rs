//! The co-Yang–Baxter equation for bilinear forms, the bracket a form
//! induces on a coalgebra, and Nijenhuis operators built from
//! (co)symplectic data.

use crate::error::{ensure_dim, AliaError, Result};
use crate::laws::{
    check_cosymplectic, check_left_alia_coalgebra, check_nijenhuis_algebra,
    check_nijenhuis_coalgebra, check_symplectic, run,
};
use crate::matrix::Matrix;
use crate::residual::{LawId, Residual};
use crate::scalar::Scalar;
use crate::structures::{Algebra, BilinearForm, Coalgebra, LinearMap, TwoTensor};
use crate::yang_baxter::{alia_ybe_residual, delta_r};

fn ensure_form(c: &Coalgebra, w: &BilinearForm) -> Result<()> {
    ensure_dim("form dimension", w.dim(), c.dim())
}

/// Residual of
/// `ω(x₍₁₎, y)ω(x₍₂₎, z) + ω(x, y₍₂₎)ω(y₍₁₎, z) − ω(x, y₍₁₎)ω(y₍₂₎, z) − ω(x, z₍₂₎)ω(y, z₍₁₎)`
/// per basis triple `(x, y, z)`.
pub fn co_ybe_residual(c: &Coalgebra, w: &BilinearForm) -> Result<Residual> {
    ensure_form(c, w)?;
    let n = c.dim();
    let wm = &w.w;
    let wt = wm.transpose();
    let coproducts: Vec<Matrix> = (0..n).map(|i| c.coproduct(i)).collect();
    // first[i] = Wᵀ D_i W, mid[j] = W (D_jᵀ − D_j) W, last[k] = W D_kᵀ Wᵀ
    let first: Vec<Matrix> = coproducts.iter().map(|d| &(&wt * d) * wm).collect();
    let mid: Vec<Matrix> = coproducts
        .iter()
        .map(|d| &(wm * &(&d.transpose() - d)) * wm)
        .collect();
    let last: Vec<Matrix> = coproducts
        .iter()
        .map(|d| &(wm * &d.transpose()) * &wt)
        .collect();
    let entries = run(LawId::CoYbe, "main", n, |i, sink| {
        for j in 0..n {
            for k in 0..n {
                let v = &(first[i].get(j, k) + mid[j].get(i, k)) - last[k].get(i, j);
                sink.push(&[i, j, k], v);
            }
        }
    });
    Ok(Residual {
        law: LawId::CoYbe,
        entries,
    })
}

/// `[x, y]_ω = x₍₂₎ω(x₍₁₎, y) − x₍₁₎ω(x₍₂₎, y) − y₍₂₎ω(x, y₍₁₎)` without any
/// hypothesis on `ω`.
pub fn bracket_omega_raw(c: &Coalgebra, w: &BilinearForm) -> Result<Algebra> {
    ensure_form(c, w)?;
    let n = c.dim();
    let wm = &w.w;
    Ok(Algebra::from_fn(n, |i, j, l| {
        let mut acc = Scalar::zero();
        for a in 0..n {
            acc.add_mul(c.d(i, a, l), wm.get(a, j));
            acc.sub_mul(c.d(i, l, a), wm.get(a, j));
            acc.sub_mul(c.d(j, a, l), wm.get(i, a));
        }
        acc
    }))
}

/// The bracket induced by a skew-symmetric solution of the co-Yang–Baxter
/// equation.
pub fn bracket_omega(c: &Coalgebra, w: &BilinearForm) -> Result<Algebra> {
    ensure_form(c, w)?;
    if !w.is_skew() {
        return Err(AliaError::NotSkew);
    }
    if !co_ybe_residual(c, w)?.passed() {
        return Err(AliaError::NotCoYbeSolution);
    }
    bracket_omega_raw(c, w)
}

/// The two bracket reformulations of the co-Yang–Baxter equation.
///
/// Part `mw`: `ω(x, [y, z]_ω) + ω(x₍₁₎, y)ω(x₍₂₎, z)`. Part `mwr`, only for
/// skew `ω`: `ω([x, y]_ω, z) − ω(x, z₍₁₎)ω(y, z₍₂₎)`. Index `(x, y, z)`.
pub fn check_co_ybe_bracket(c: &Coalgebra, w: &BilinearForm) -> Result<Residual> {
    let br = bracket_omega_raw(c, w)?;
    let n = c.dim();
    let wm = &w.w;
    let wt = wm.transpose();
    let law = LawId::CoYbeBracket;
    let mut entries = run(law, "mw", n, |x, sink| {
        let quad = &(&wt * &c.coproduct(x)) * wm;
        for y in 0..n {
            for z in 0..n {
                let mut v = quad.get(y, z).clone();
                for (l, cl) in br.product(y, z).iter().enumerate() {
                    v.add_mul(wm.get(x, l), cl);
                }
                sink.push(&[x, y, z], v);
            }
        }
    });
    if w.is_skew() {
        let quads: Vec<Matrix> = (0..n).map(|z| &(wm * &c.coproduct(z)) * &wt).collect();
        entries.extend(run(law, "mwr", n, |x, sink| {
            for y in 0..n {
                let xy = br.product(x, y);
                for z in 0..n {
                    let mut v = -quads[z].get(x, y);
                    for (l, cl) in xy.iter().enumerate() {
                        v.add_mul(cl, wm.get(l, z));
                    }
                    sink.push(&[x, y, z], v);
                }
            }
        }));
    }
    Ok(Residual { law, entries })
}

/// `ω_r(x, y) = ⟨(r^#)⁻¹(x), y⟩`; its matrix is `t⁻¹`.
pub fn omega_from_r(r: &TwoTensor) -> Result<BilinearForm> {
    r.t.inverse()
        .map(BilinearForm::new)
        .ok_or(AliaError::DegenerateR)
}

/// `N(x) = Σ ω(x, a_i) b_i` for `r = Σ a_i ⊗ b_i`, without hypotheses.
pub fn nijenhuis_map_from_form(w: &BilinearForm, r: &TwoTensor) -> LinearMap {
    LinearMap::new((&w.w * &r.t).transpose())
}

/// `S(x) = Σ a_i ω(b_i, x)` for `r = Σ a_i ⊗ b_i`, without hypotheses.
pub fn coalgebra_map_from_form(r: &TwoTensor, w: &BilinearForm) -> LinearMap {
    LinearMap::new(&r.t * &w.w)
}

fn require(ok: bool, which: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(AliaError::hypothesis(which))
    }
}

/// Nijenhuis operator from a symplectic form and a tensor whose coboundary
/// makes a triangular bialgebra that is also dual triangular for the form.
///
/// Hypotheses are checked in order and the first failure is named:
/// `symplectic`, `r-antisymmetric`, `ybe`, `omega-skew`, `co-ybe`. The
/// Nijenhuis property of the result is verified before returning.
pub fn nijenhuis_from_symplectic(
    a: &Algebra,
    w: &BilinearForm,
    r: &TwoTensor,
) -> Result<LinearMap> {
    ensure_dim("form dimension", w.dim(), a.dim())?;
    ensure_dim("tensor dimension", r.dim(), a.dim())?;
    require(check_symplectic(a, w)?.passed(), "symplectic")?;
    require(r.is_antisymmetric(), "r-antisymmetric")?;
    require(alia_ybe_residual(a, r)?.passed(), "ybe")?;
    require(w.is_skew(), "omega-skew")?;
    let d = delta_r(a, r)?;
    require(co_ybe_residual(&d, w)?.passed(), "co-ybe")?;
    let nmap = nijenhuis_map_from_form(w, r);
    if !check_nijenhuis_algebra(a, &nmap)?.passed() {
        return Err(AliaError::ConclusionViolated("nijenhuis-algebra".into()));
    }
    Ok(nmap)
}

/// Nijenhuis coalgebra map from a cosymplectic tensor and a form that is
/// dual triangular for the coalgebra, where the tensor also solves the
/// Yang–Baxter equation in the induced bracket.
///
/// Hypotheses in order: `left-alia-coalgebra`, `r-antisymmetric`,
/// `cosymplectic`, `omega-skew`, `co-ybe`, `ybe`. The Nijenhuis property of
/// the result is verified before returning.
pub fn nijenhuis_coalgebra_from_cosymplectic(
    c: &Coalgebra,
    r: &TwoTensor,
    w: &BilinearForm,
) -> Result<LinearMap> {
    ensure_form(c, w)?;
    ensure_dim("tensor dimension", r.dim(), c.dim())?;
    require(check_left_alia_coalgebra(c).passed(), "left-alia-coalgebra")?;
    require(r.is_antisymmetric(), "r-antisymmetric")?;
    require(check_cosymplectic(c, r)?.passed(), "cosymplectic")?;
    require(w.is_skew(), "omega-skew")?;
    require(co_ybe_residual(c, w)?.passed(), "co-ybe")?;
    let br = bracket_omega_raw(c, w)?;
    require(alia_ybe_residual(&br, r)?.passed(), "ybe")?;
    let s = coalgebra_map_from_form(r, w);
    if !check_nijenhuis_coalgebra(c, &s)?.passed() {
        return Err(AliaError::ConclusionViolated("nijenhuis-coalgebra".into()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn running_family_gives_nl() {
        for l in [1, 2, 3, 5] {
            let lam = Scalar::from_int(l);
            let nmap = nijenhuis_from_symplectic(&fix_a4(), &fix_w4(&lam), &fix_r23()).unwrap();
            assert_eq!(nmap, fix_nl(&lam));
        }
    }

    #[test]
    fn nondegenerate_plane_gives_identity() {
        let (a, r) = fix_ab2();
        let w = omega_from_r(&r).unwrap();
        assert_eq!(w.w.get(0, 1), &Scalar::from_int(-1));
        assert_eq!(
            nijenhuis_from_symplectic(&a, &w, &r).unwrap(),
            LinearMap::identity(2)
        );
    }

    #[test]
    fn degenerate_r_rejected() {
        assert_eq!(
            omega_from_r(&fix_r12()).unwrap_err(),
            AliaError::DegenerateR
        );
    }

    #[test]
    fn co_ybe_on_running_family() {
        for l in [0, 1, 2, 3, 5] {
            let w = fix_w4(&Scalar::from_int(l));
            assert!(co_ybe_residual(&fix_d5(), &w).unwrap().passed());
            assert!(check_co_ybe_bracket(&fix_d5(), &w).unwrap().passed());
        }
    }
}
