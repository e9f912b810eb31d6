//! Yang–Baxter residuals, the coboundary comultiplication `Δ_r`, and the
//! relative Rota–Baxter operators attached to two-tensors.
//!
//! A tensor `r = Σ t[p][q] e_p ⊗ e_q` is always expanded over the canonical
//! basis decomposition. Rank-3 residuals are indexed `(α, β, γ)`, the
//! coefficient of `e_α ⊗ e_β ⊗ e_γ`.

use crate::constructions::{dual_representation, semidirect_product};
use crate::error::{ensure_dim, AliaError, Result};
use crate::laws::{
    check_adjoint_admissible, check_representation, ensure_map, push_matrix, push_vector, run,
};
use crate::matrix::Matrix;
use crate::residual::{LawId, Residual};
use crate::scalar::Scalar;
use crate::structures::{
    left_right_operators, Algebra, Coalgebra, LinearMap, Representation, TwoTensor,
};

fn ensure_tensor(a: &Algebra, r: &TwoTensor) -> Result<()> {
    ensure_dim("tensor dimension", r.dim(), a.dim())
}

/// Matrices `C_α[p][u] = c(p, u, α)`, one per output coordinate.
fn output_slices(a: &Algebra) -> Vec<Matrix> {
    let n = a.dim();
    (0..n)
        .map(|k| Matrix::from_fn(n, n, |p, u| a.c(p, u, k).clone()))
        .collect()
}

/// `Σ [a_i, a_j] ⊗ b_i ⊗ b_j` at first coordinate `α`, as a matrix in `(β, γ)`.
fn first_term(t: &Matrix, slice: &Matrix) -> Matrix {
    &(&t.transpose() * slice) * t
}

/// Rank-3 residual of the left Alia Yang–Baxter equation.
pub fn alia_ybe_residual(a: &Algebra, r: &TwoTensor) -> Result<Residual> {
    ensure_tensor(a, r)?;
    let n = a.dim();
    let t = &r.t;
    let slices = output_slices(a);
    let entries = run(LawId::AliaYbe, "main", n, |al, sink| {
        let row = t.row(al);
        // K[β][s] = Σ_q t[α][q] (c(s,q,β) − c(q,s,β))
        let k = Matrix::from_fn(n, n, |b, s| {
            let mut acc = Scalar::zero();
            for (q, tq) in row.iter().enumerate() {
                if !tq.is_zero() {
                    acc.add_mul(tq, &(a.c(s, q, b) - a.c(q, s, b)));
                }
            }
            acc
        });
        // W[u][γ] = Σ_q t[α][q] c(u,q,γ)
        let w = Matrix::from_fn(n, n, |u, g| {
            let mut acc = Scalar::zero();
            for (q, tq) in row.iter().enumerate() {
                if !tq.is_zero() {
                    acc.add_mul(tq, a.c(u, q, g));
                }
            }
            acc
        });
        let v = &(&first_term(t, &slices[al]) + &(&k * t)) - &(t * &w);
        push_matrix(sink, &[al], &v);
    });
    Ok(Residual {
        law: LawId::AliaYbe,
        entries,
    })
}

/// `Δ_r(x) = Σ ([a_i, x] − [x, a_i]) ⊗ b_i − a_i ⊗ [b_i, x]`.
pub fn delta_r(a: &Algebra, r: &TwoTensor) -> Result<Coalgebra> {
    ensure_tensor(a, r)?;
    let n = a.dim();
    let adj = left_right_operators(a);
    let t = &r.t;
    let mut out = Coalgebra::zero(n);
    for x in 0..n {
        let (l, rr) = (&adj.ell[x], &adj.arr[x]);
        let m = &(&(rr - l) * t) - &(t * &rr.transpose());
        for j in 0..n {
            for k in 0..n {
                *out.d_mut(x, j, k) = m.get(j, k).clone();
            }
        }
    }
    Ok(out)
}

/// The two reformulations of the Yang–Baxter equation through `Δ_r`.
///
/// Part `dra`: `(id ⊗ Δ_r)(r) + Σ [a_i, a_j] ⊗ b_i ⊗ b_j`. Part `dr`, only
/// for antisymmetric `r`: `(Δ_r ⊗ id)(r) − Σ a_i ⊗ a_j ⊗ [b_i, b_j]`.
pub fn check_ybe_coproduct(a: &Algebra, r: &TwoTensor) -> Result<Residual> {
    let d = delta_r(a, r)?;
    let n = a.dim();
    let t = &r.t;
    let slices = output_slices(a);
    let mut entries = run(LawId::YbeCoproduct, "dra", n, |al, sink| {
        let mut v = first_term(t, &slices[al]);
        for (q, tq) in t.row(al).iter().enumerate() {
            if tq.is_zero() {
                continue;
            }
            for b in 0..n {
                for g in 0..n {
                    v.get_mut(b, g).add_mul(tq, d.d(q, b, g));
                }
            }
        }
        push_matrix(sink, &[al], &v);
    });
    if r.is_antisymmetric() {
        entries.extend(run(LawId::YbeCoproduct, "dr", n, |al, sink| {
            let mut v = Matrix::zeros(n, n);
            for b in 0..n {
                for g in 0..n {
                    let x = v.get_mut(b, g);
                    for p in 0..n {
                        x.add_mul(t.get(p, g), d.d(p, al, b));
                    }
                    for q in 0..n {
                        let taq = t.get(al, q);
                        if taq.is_zero() {
                            continue;
                        }
                        for u in 0..n {
                            x.sub_mul(&(taq * t.get(b, u)), a.c(q, u, g));
                        }
                    }
                }
            }
            push_matrix(sink, &[al], &v);
        }));
    }
    Ok(Residual {
        law: LawId::YbeCoproduct,
        entries,
    })
}

/// `(S ⊗ id − id ⊗ N)(r)`, indexed `(row, column)` of the tensor matrix.
pub fn s_admissibility_residual(
    r: &TwoTensor,
    nmap: &LinearMap,
    s: &LinearMap,
) -> Result<Residual> {
    let n = r.dim();
    ensure_map("N", nmap, n)?;
    ensure_map("S", s, n)?;
    let v = &(&s.m * &r.t) - &(&r.t * &nmap.m.transpose());
    let entries = run(LawId::SAdmissibility, "main", 1, |_, sink| {
        push_matrix(sink, &[], &v)
    });
    Ok(Residual {
        law: LawId::SAdmissibility,
        entries,
    })
}

/// Both Yang–Baxter residuals for a tensor on a Nijenhuis algebra with an
/// admissible map.
#[derive(Clone, Debug)]
pub struct YbeReport {
    pub al_residual: Residual,
    pub s_adm_residual: Residual,
    pub antisymmetric: bool,
}

impl YbeReport {
    pub fn solution(&self) -> bool {
        self.al_residual.passed()
    }

    pub fn s_admissible_solution(&self) -> bool {
        self.al_residual.passed() && self.s_adm_residual.passed()
    }
}

pub fn ybe_report(
    a: &Algebra,
    r: &TwoTensor,
    nmap: &LinearMap,
    s: &LinearMap,
) -> Result<YbeReport> {
    Ok(YbeReport {
        al_residual: alia_ybe_residual(a, r)?,
        s_adm_residual: s_admissibility_residual(r, nmap, s)?,
        antisymmetric: r.is_antisymmetric(),
    })
}

fn vec_of(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

/// The three coboundary conditions on `r` for an `S`-adjoint-admissible
/// Nijenhuis algebra, as operators on `A ⊗ A` applied to `r`.
///
/// Part `nijenhuis` is equivalent to `Δ_r` being Nijenhuis for `S`; parts
/// `coadjoint-left` and `coadjoint-right` to the two coadjoint
/// admissibility identities. Index `(x, row, column)`.
pub fn check_coboundary_conditions(
    a: &Algebra,
    nmap: &LinearMap,
    s: &LinearMap,
    r: &TwoTensor,
) -> Result<Residual> {
    ensure_tensor(a, r)?;
    if !check_adjoint_admissible(a, nmap, s)?.passed() {
        return Err(AliaError::NotAdjointAdmissible);
    }
    let n = a.dim();
    let adj = left_right_operators(a);
    let (nm, sm, t) = (&nmap.m, &s.m, &r.t);
    let id = Matrix::identity(n);
    let (n2, s2) = (nm.pow(2), sm.pow(2));
    // P = (N ⊗ id − id ⊗ S)(r), Q = (S ⊗ id − id ⊗ N)(r)
    let p = vec_of(&(&(nm * t) - &(t * &sm.transpose())));
    let q = vec_of(&(&(sm * t) - &(t * &nm.transpose())));
    let rv = vec_of(t);
    let push = |sink: &mut crate::residual::EntrySink, x: usize, v: Vec<Scalar>| {
        push_matrix(sink, &[x], &Matrix::from_vec(n, n, v));
    };
    let sum = |u: Vec<Scalar>, w: Vec<Scalar>| -> Vec<Scalar> {
        u.into_iter().zip(w).map(|(a, b)| a + b).collect()
    };

    let mut entries = run(LawId::CoboundaryNijenhuis, "nijenhuis", n, |x, sink| {
        let (l, rr) = (&adj.ell[x], &adj.arr[x]);
        let sx = sm.col(x);
        let (l_s, r_s) = (adj.ell_of(&sx), adj.arr_of(&sx));
        let op_p = (&(&r_s - &l_s) - &(sm * &(rr - l))).kron(&id);
        let op_q = id.kron(&(&r_s - &(sm * rr)));
        push(sink, x, sum(op_p.apply(&p), op_q.apply(&q)));
    });
    entries.extend(run(
        LawId::CoboundaryNijenhuis,
        "coadjoint-left",
        n,
        |x, sink| {
            let (l, rr) = (&adj.ell[x], &adj.arr[x]);
            let nx = nm.col(x);
            let (l_n, r_n) = (adj.ell_of(&nx), adj.arr_of(&nx));
            let op_q = &(&id.kron(&(&(nm * rr) - &r_n)) + &(&r_n - &l_n).kron(&id))
                + &(sm * &(rr - l)).kron(&id);
            let op_r = &(&(l - rr) * &s2).kron(&id) + &(rr - l).kron(&n2);
            push(sink, x, sum(op_q.apply(&q), op_r.apply(&rv)));
        },
    ));
    entries.extend(run(
        LawId::CoboundaryNijenhuis,
        "coadjoint-right",
        n,
        |x, sink| {
            let (l, rr) = (&adj.ell[x], &adj.arr[x]);
            let nx = nm.col(x);
            let (l_n, r_n) = (adj.ell_of(&nx), adj.arr_of(&nx));
            let op_p = &(&(nm * &(rr - l)).kron(&id) - &(&r_n - &l_n).kron(&id))
                + &id.kron(&(&r_n + &(sm * rr)));
            let op_r = &id.kron(&(rr * &s2)) - &n2.kron(rr);
            push(sink, x, sum(op_p.apply(&p), op_r.apply(&rv)));
        },
    ));
    Ok(Residual {
        law: LawId::CoboundaryNijenhuis,
        entries,
    })
}

/// `r^# : A* → A`, `⟨b*, r^#(a*)⟩ = ⟨a* ⊗ b*, r⟩`; its matrix is `tᵀ`.
pub fn r_sharp(r: &TwoTensor) -> LinearMap {
    LinearMap::new(r.t.transpose())
}

fn ensure_operator(a: &Algebra, rep: &Representation, tmap: &LinearMap) -> Result<()> {
    ensure_dim("representation algebra dimension", rep.alg_dim(), a.dim())?;
    let (rows, cols) = (tmap.m.rows(), tmap.m.cols());
    if rows != a.dim() || cols != rep.rep_dim() {
        return Err(AliaError::DimensionMismatch(format!(
            "T: expected {}x{} map, got {rows}x{cols}",
            a.dim(),
            rep.rep_dim()
        )));
    }
    Ok(())
}

fn relative_rb_entries(
    law: LawId,
    a: &Algebra,
    rep: &Representation,
    tmap: &LinearMap,
) -> Vec<crate::residual::Entry> {
    let m = rep.rep_dim();
    let tm = &tmap.m;
    let adj = left_right_operators(a);
    let tcols: Vec<Vec<Scalar>> = (0..m).map(|u| tm.col(u)).collect();
    let ell_t: Vec<Matrix> = tcols.iter().map(|c| rep.ell_of(c)).collect();
    let arr_t: Vec<Matrix> = tcols.iter().map(|c| rep.arr_of(c)).collect();
    run(law, "main", m, |u, sink| {
        let l_tu = adj.ell_of(&tcols[u]);
        for v in 0..m {
            let lhs = l_tu.apply(&tcols[v]);
            let mut inner = ell_t[u].col(v);
            for (x, y) in inner.iter_mut().zip(arr_t[v].col(u)) {
                *x += y;
            }
            let rhs = tm.apply(&inner);
            let res: Vec<Scalar> = lhs.into_iter().zip(rhs).map(|(x, y)| x - y).collect();
            push_vector(sink, &[u, v], &res);
        }
    })
}

/// `[T u, T v] − T(ℓ(T u) v + r(T v) u)` per basis pair `(u, v)` of the module.
pub fn check_relative_rota_baxter(
    a: &Algebra,
    rep: &Representation,
    tmap: &LinearMap,
) -> Result<Residual> {
    ensure_operator(a, rep, tmap)?;
    if !check_representation(a, rep)?.passed() {
        return Err(AliaError::RepInvalid);
    }
    Ok(Residual {
        law: LawId::RelativeRotaBaxter,
        entries: relative_rb_entries(LawId::RelativeRotaBaxter, a, rep, tmap),
    })
}

/// Relative Rota–Baxter identity (part `main`) together with
/// `N ∘ T − T ∘ α` (part `intertwining`).
pub fn check_weak_rrb(
    a: &Algebra,
    nmap: &LinearMap,
    rep: &Representation,
    alpha: &LinearMap,
    tmap: &LinearMap,
) -> Result<Residual> {
    ensure_operator(a, rep, tmap)?;
    ensure_map("N", nmap, a.dim())?;
    ensure_map("alpha", alpha, rep.rep_dim())?;
    if !check_representation(a, rep)?.passed() {
        return Err(AliaError::RepInvalid);
    }
    let law = LawId::WeakRelativeRotaBaxter;
    let mut entries = relative_rb_entries(law, a, rep, tmap);
    let v = &(&nmap.m * &tmap.m) - &(&tmap.m * &alpha.m);
    entries.extend(run(law, "intertwining", 1, |_, sink| {
        push_matrix(sink, &[], &v)
    }));
    Ok(Residual { law, entries })
}

/// Output of [`t_sharp_lift`].
#[derive(Clone, Debug)]
pub struct TSharpLift {
    /// The semidirect product on `A ⊕ V*`, basis of `A` first.
    pub big: Algebra,
    /// `T♯ − τ(T♯)`.
    pub r: TwoTensor,
    /// `N + β*`, when `N` and `β` were given.
    pub nij: Option<LinearMap>,
    /// `S + α*`, when `S` and `α` were given.
    pub adm: Option<LinearMap>,
}

/// Optional maps for [`t_sharp_lift`].
#[derive(Clone, Copy, Debug, Default)]
pub struct LiftMaps<'a> {
    pub nmap: Option<&'a LinearMap>,
    pub s: Option<&'a LinearMap>,
    pub alpha: Option<&'a LinearMap>,
    pub beta: Option<&'a LinearMap>,
}

/// Embeds `T : V → A` as the antisymmetric tensor `T♯ − τ(T♯)` in the
/// semidirect product of `A` with the dual module `V*`.
pub fn t_sharp_lift(
    a: &Algebra,
    rep: &Representation,
    tmap: &LinearMap,
    maps: LiftMaps<'_>,
) -> Result<TSharpLift> {
    ensure_operator(a, rep, tmap)?;
    let (n, m) = (a.dim(), rep.rep_dim());
    let big = semidirect_product(a, &dual_representation(rep))?;
    let mut t = Matrix::zeros(n + m, n + m);
    for i in 0..m {
        for k in 0..n {
            let v = tmap.m.get(k, i);
            if !v.is_zero() {
                t.set(n + i, k, v.clone());
                t.set(k, n + i, -v);
            }
        }
    }
    let block = |x: Option<&LinearMap>, y: Option<&LinearMap>, nx: usize, ny: usize| match (x, y) {
        (Some(x), Some(y)) => {
            ensure_map("map on A", x, nx)?;
            ensure_map("map on V", y, ny)?;
            Ok(Some(LinearMap::new(Matrix::block_diag(
                &x.m,
                &y.m.transpose(),
            ))))
        }
        _ => Ok::<_, AliaError>(None),
    };
    Ok(TSharpLift {
        big,
        r: TwoTensor::new(t),
        nij: block(maps.nmap, maps.beta, n, m)?,
        adm: block(maps.s, maps.alpha, n, m)?,
    })
}

/// The two mixed identities relating `S`, `α`, `β` through the module
/// action: part `arr` is `β r(x) α + r(S²x) − r(Sx) α − β r(Sx)` and part
/// `ell` its `ℓ` analogue, indexed `(x, row, v)`.
pub fn check_semidirect_admissibility(
    a: &Algebra,
    nmap: &LinearMap,
    rep: &Representation,
    s: &LinearMap,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("representation algebra dimension", rep.alg_dim(), n)?;
    ensure_map("N", nmap, n)?;
    ensure_map("S", s, n)?;
    ensure_map("alpha", alpha, rep.rep_dim())?;
    ensure_map("beta", beta, rep.rep_dim())?;
    let (al, be, sm) = (&alpha.m, &beta.m, &s.m);
    let s2 = sm.pow(2);
    let law = LawId::SemidirectAdmissibility;
    let part = |name: &'static str| {
        run(law, name, n, |x, sink| {
            let op = |v: &[Scalar]| {
                if name == "arr" {
                    rep.arr_of(v)
                } else {
                    rep.ell_of(v)
                }
            };
            let o_x = op(&crate::matrix::basis_vector(n, x));
            let (o_s2x, o_sx) = (op(&s2.col(x)), op(&sm.col(x)));
            let v = &(&(&(be * &o_x) * al) + &o_s2x) - &(&(&o_sx * al) + &(be * &o_sx));
            push_matrix(sink, &[x], &v);
        })
    };
    let mut entries = part("arr");
    entries.extend(part("ell"));
    Ok(Residual { law, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn coboundary_of_r12_and_r23() {
        assert_eq!(delta_r(&fix_a4(), &fix_r12()).unwrap(), fix_d4());
        assert_eq!(delta_r(&fix_a4(), &fix_r23()).unwrap(), fix_d5());
        assert!(alia_ybe_residual(&fix_a4(), &fix_r12()).unwrap().passed());
        assert!(alia_ybe_residual(&fix_a4(), &fix_r23()).unwrap().passed());
    }

    #[test]
    fn r_sharp_of_r12() {
        let m = r_sharp(&fix_r12());
        assert_eq!(m.m.col(0), crate::matrix::basis_vector(4, 1));
        assert_eq!(m.m.col(1), (-&LinearMap::identity(4).m).col(0));
        assert!(m
            .m
            .col(2)
            .iter()
            .chain(m.m.col(3).iter())
            .all(Scalar::is_zero));
    }

    #[test]
    fn coboundary_conditions_on_four_dim_bialgebra() {
        let res = check_coboundary_conditions(&fix_a4(), &fix_n4(), &fix_s4(), &fix_r12()).unwrap();
        assert!(res.passed(), "{res:?}");
    }
}
