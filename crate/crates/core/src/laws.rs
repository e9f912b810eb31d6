//! Exact residuals of the algebra, coalgebra and bialgebra identities.
//!
//! Every check returns a [`Residual`] listing the nonzero coordinates of
//! `LHS − RHS`. Multi-indices are 0-based: first the basis elements the
//! identity is instantiated at, then the output coordinates. Matrix-valued
//! outputs append `(row, column)`; for representation identities the column
//! is the basis vector `v` of the module and the row its output coordinate.

use crate::error::{ensure_dim, AliaError, Result};
use crate::exec::flat_map_range;
use crate::matrix::Matrix;
use crate::residual::{Entry, EntrySink, LawId, Residual};
use crate::scalar::Scalar;
use crate::structures::{
    left_right_operators, Algebra, BilinearForm, Coalgebra, LinearMap, Representation, TwoTensor,
};

pub(crate) fn ensure_map(what: &str, m: &LinearMap, n: usize) -> Result<()> {
    if m.m.rows() == n && m.m.cols() == n {
        Ok(())
    } else {
        Err(AliaError::DimensionMismatch(format!(
            "{what}: expected {n}x{n} map, got {}x{}",
            m.m.rows(),
            m.m.cols()
        )))
    }
}

/// Matrix of `v ↦ [x, v]`.
pub(crate) fn left_mult(a: &Algebra, x: &[Scalar]) -> Matrix {
    let n = a.dim();
    let mut m = Matrix::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for b in 0..n {
            for (k, c) in a.product(i, b).iter().enumerate() {
                m.get_mut(k, b).add_mul(xi, c);
            }
        }
    }
    m
}

/// Matrix of `v ↦ [v, x]`.
pub(crate) fn right_mult(a: &Algebra, x: &[Scalar]) -> Matrix {
    let n = a.dim();
    let mut m = Matrix::zeros(n, n);
    for (j, xj) in x.iter().enumerate() {
        if xj.is_zero() {
            continue;
        }
        for b in 0..n {
            for (k, c) in a.product(b, j).iter().enumerate() {
                m.get_mut(k, b).add_mul(xj, c);
            }
        }
    }
    m
}

pub(crate) fn push_matrix(sink: &mut EntrySink, prefix: &[usize], m: &Matrix) {
    let mut idx = prefix.to_vec();
    idx.extend([0, 0]);
    let p = prefix.len();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if !v.is_zero() {
                idx[p] = r;
                idx[p + 1] = c;
                sink.push(&idx, v.clone());
            }
        }
    }
}

pub(crate) fn push_vector(sink: &mut EntrySink, prefix: &[usize], v: &[Scalar]) {
    let mut idx = prefix.to_vec();
    idx.push(0);
    let p = prefix.len();
    for (k, x) in v.iter().enumerate() {
        if !x.is_zero() {
            idx[p] = k;
            sink.push(&idx, x.clone());
        }
    }
}

/// Runs a kernel over the first index and assembles the residual.
pub(crate) fn run<F>(law: LawId, part: &'static str, n: usize, kernel: F) -> Vec<Entry>
where
    F: Fn(usize, &mut EntrySink) + Sync + Send,
{
    flat_map_range(n, |i| {
        let mut sink = EntrySink::new(law, part);
        kernel(i, &mut sink);
        sink.out
    })
}

/// `[[e_i, e_j], e_k]` coefficients, flat `n⁴` array.
fn double_brackets(a: &Algebra) -> Vec<Scalar> {
    let n = a.dim();
    flat_map_range(n, |i| {
        let mut out = vec![Scalar::zero(); n * n * n];
        for j in 0..n {
            for (p, cp) in a.product(i, j).iter().enumerate() {
                if cp.is_zero() {
                    continue;
                }
                for k in 0..n {
                    for (l, c) in a.product(p, k).iter().enumerate() {
                        out[(j * n + k) * n + l].add_mul(cp, c);
                    }
                }
            }
        }
        out
    })
}

/// Symmetric Jacobi identity.
pub fn check_left_alia(a: &Algebra) -> Residual {
    let n = a.dim();
    let bb = double_brackets(a);
    let at = |i: usize, j: usize, k: usize, l: usize| &bb[((i * n + j) * n + k) * n + l];
    let entries = run(LawId::LeftAlia, "main", n, |i, sink| {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = at(i, j, k, l) + at(j, k, i, l) + at(k, i, j, l)
                        - at(j, i, k, l)
                        - at(k, j, i, l)
                        - at(i, k, j, l);
                    sink.push(&[i, j, k, l], v);
                }
            }
        }
    });
    Residual {
        law: LawId::LeftAlia,
        entries,
    }
}

pub fn check_associative(a: &Algebra) -> Residual {
    let n = a.dim();
    let bb = double_brackets(a);
    let entries = run(LawId::Associative, "main", n, |i, sink| {
        for j in 0..n {
            for k in 0..n {
                let mut rhs = vec![Scalar::zero(); n];
                for (p, cp) in a.product(j, k).iter().enumerate() {
                    if cp.is_zero() {
                        continue;
                    }
                    for (l, c) in a.product(i, p).iter().enumerate() {
                        rhs[l].add_mul(cp, c);
                    }
                }
                for (l, r) in rhs.iter().enumerate() {
                    sink.push(&[i, j, k, l], &bb[((i * n + j) * n + k) * n + l] - r);
                }
            }
        }
    });
    Residual {
        law: LawId::Associative,
        entries,
    }
}

pub fn check_commutative(a: &Algebra) -> Residual {
    let n = a.dim();
    let entries = run(LawId::Commutative, "main", n, |i, sink| {
        for j in 0..n {
            for k in 0..n {
                sink.push(&[i, j, k], a.c(i, j, k) - a.c(j, i, k));
            }
        }
    });
    Residual {
        law: LawId::Commutative,
        entries,
    }
}

/// `(Δ⊗id)Δ(e_i)` coefficients, flat `n³` array indexed `(a, b, c)`.
fn double_coproduct(c: &Coalgebra, i: usize) -> Vec<Scalar> {
    let n = c.dim();
    let mut out = vec![Scalar::zero(); n * n * n];
    for p in 0..n {
        for cc in 0..n {
            let w = c.d(i, p, cc);
            if w.is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    out[(a * n + b) * n + cc].add_mul(w, c.d(p, a, b));
                }
            }
        }
    }
    out
}

pub fn check_coassociative(c: &Coalgebra) -> Residual {
    let n = c.dim();
    let entries = run(LawId::Coassociative, "main", n, |i, sink| {
        let lhs = double_coproduct(c, i);
        let mut rhs = vec![Scalar::zero(); n * n * n];
        for a in 0..n {
            for p in 0..n {
                let w = c.d(i, a, p);
                if w.is_zero() {
                    continue;
                }
                for b in 0..n {
                    for cc in 0..n {
                        rhs[(a * n + b) * n + cc].add_mul(w, c.d(p, b, cc));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let q = (a * n + b) * n + cc;
                    sink.push(&[i, a, b, cc], &lhs[q] - &rhs[q]);
                }
            }
        }
    });
    Residual {
        law: LawId::Coassociative,
        entries,
    }
}

pub fn check_cocommutative(c: &Coalgebra) -> Residual {
    let n = c.dim();
    let entries = run(LawId::Cocommutative, "main", n, |i, sink| {
        for j in 0..n {
            for k in 0..n {
                sink.push(&[i, j, k], c.d(i, j, k) - c.d(i, k, j));
            }
        }
    });
    Residual {
        law: LawId::Cocommutative,
        entries,
    }
}

/// Nijenhuis condition `N x∘N y + N²(x∘y) − N(N x∘y) − N(x∘N y)`.
pub fn check_nijenhuis_algebra(a: &Algebra, nmap: &LinearMap) -> Result<Residual> {
    let n = a.dim();
    ensure_map("N", nmap, n)?;
    let nm = &nmap.m;
    let n2 = nm.pow(2);
    let entries = run(LawId::NijenhuisAlgebra, "main", n, |i, sink| {
        let nx = nm.col(i);
        // ℒ(N e_i) and ℒ(e_i) as matrices, then act on columns of N
        let l_nx = left_mult(a, &nx);
        let l_nx_n = &l_nx * nm;
        let l_x_n = &left_mult(a, &crate::matrix::basis_vector(n, i)) * nm;
        for j in 0..n {
            let xy = a.product(i, j);
            let mut v = l_nx_n.col(j);
            let n2xy = n2.apply(xy);
            let mut inner: Vec<Scalar> = l_nx.col(j);
            for (t, s) in inner.iter_mut().zip(l_x_n.col(j)) {
                *t += s;
            }
            let ninner = nm.apply(&inner);
            for k in 0..n {
                v[k] += &n2xy[k];
                v[k] -= &ninner[k];
            }
            push_vector(sink, &[i, j], &v);
        }
    });
    Ok(Residual {
        law: LawId::NijenhuisAlgebra,
        entries,
    })
}

pub fn check_left_alia_coalgebra(c: &Coalgebra) -> Residual {
    let n = c.dim();
    let entries = run(LawId::LeftAliaCoalgebra, "main", n, |i, sink| {
        let t = double_coproduct(c, i);
        let at = |a: usize, b: usize, cc: usize| &t[(a * n + b) * n + cc];
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let v = at(b, a, cc) + at(a, cc, b) + at(cc, b, a)
                        - at(a, b, cc)
                        - at(cc, a, b)
                        - at(b, cc, a);
                    sink.push(&[i, a, b, cc], v);
                }
            }
        }
    });
    Residual {
        law: LawId::LeftAliaCoalgebra,
        entries,
    }
}

/// Coproduct of every column of `m`: `Δ(m e_i)`.
fn coproducts_of_columns(c: &Coalgebra, m: &Matrix) -> Vec<Matrix> {
    (0..c.dim())
        .map(|i| c.comul_eval(&m.col(i)).expect("square map"))
        .collect()
}

pub fn check_nijenhuis_coalgebra(c: &Coalgebra, s: &LinearMap) -> Result<Residual> {
    let n = c.dim();
    ensure_map("S", s, n)?;
    let sm = &s.m;
    let st = sm.transpose();
    let d_s = coproducts_of_columns(c, sm);
    let d_s2 = coproducts_of_columns(c, &sm.pow(2));
    let entries = run(LawId::NijenhuisCoalgebra, "main", n, |i, sink| {
        let di = c.coproduct(i);
        let v = &(&(sm * &di) * &st) + &d_s2[i];
        let v = &(&v - &(sm * &d_s[i])) - &(&d_s[i] * &st);
        push_matrix(sink, &[i], &v);
    });
    Ok(Residual {
        law: LawId::NijenhuisCoalgebra,
        entries,
    })
}

fn ensure_rep(a: &Algebra, rep: &Representation) -> Result<()> {
    ensure_dim("representation algebra dimension", rep.alg_dim(), a.dim())
}

pub fn check_representation(a: &Algebra, rep: &Representation) -> Result<Residual> {
    ensure_rep(a, rep)?;
    let n = a.dim();
    let entries = run(LawId::Representation, "main", n, |i, sink| {
        for j in 0..n {
            let mut anti = a.product(i, j).to_vec();
            for (t, s) in anti.iter_mut().zip(a.product(j, i)) {
                *t -= s;
            }
            let (ri, rj) = (&rep.arr[i], &rep.arr[j]);
            let (li, lj) = (&rep.ell[i], &rep.ell[j]);
            let v = &(&rep.ell_of(&anti) - &(ri * &(rj - lj))) + &(rj * &(ri - li));
            push_matrix(sink, &[i, j], &v);
        }
    });
    Ok(Residual {
        law: LawId::Representation,
        entries,
    })
}

fn ensure_rep_map(what: &str, m: &LinearMap, rep: &Representation) -> Result<()> {
    ensure_map(what, m, rep.rep_dim())
}

/// Representation of a Nijenhuis algebra: the `ℓ` and `r` identities with
/// the module map `alpha`. Fails with `RepInvalid` if `rep` is not a
/// representation of `a`.
pub fn check_nijenhuis_representation(
    a: &Algebra,
    nmap: &LinearMap,
    rep: &Representation,
    alpha: &LinearMap,
) -> Result<Residual> {
    let n = a.dim();
    ensure_map("N", nmap, n)?;
    ensure_rep_map("alpha", alpha, rep)?;
    if !check_representation(a, rep)?.passed() {
        return Err(AliaError::RepInvalid);
    }
    let al = &alpha.m;
    let al2 = al.pow(2);
    let part = |mats: &'static str| -> Vec<Entry> {
        run(LawId::NijenhuisRepresentation, mats, n, |i, sink| {
            let nx = nmap.m.col(i);
            let (op_nx, op_x) = if mats == "ell" {
                (rep.ell_of(&nx), rep.ell[i].clone())
            } else {
                (rep.arr_of(&nx), rep.arr[i].clone())
            };
            let v = &(&op_nx * al) + &(&al2 * &op_x);
            let v = &(&v - &(al * &op_nx)) - &(&(al * &op_x) * al);
            push_matrix(sink, &[i], &v);
        })
    };
    let mut entries = part("ell");
    entries.extend(part("arr"));
    Ok(Residual {
        law: LawId::NijenhuisRepresentation,
        entries,
    })
}

/// Admissibility of `beta` on the module `rep` of the Nijenhuis algebra
/// `(a, N)`: the `ℓ` and `r` identities whose conjunction says the dual
/// module with `β*` is a representation of `(a, N)`.
pub fn check_admissible(
    a: &Algebra,
    nmap: &LinearMap,
    rep: &Representation,
    beta: &LinearMap,
) -> Result<Residual> {
    let n = a.dim();
    ensure_map("N", nmap, n)?;
    ensure_rep(a, rep)?;
    ensure_rep_map("beta", beta, rep)?;
    let b = &beta.m;
    let b2 = b.pow(2);
    let part = |mats: &'static str| -> Vec<Entry> {
        run(LawId::Admissible, mats, n, |i, sink| {
            let nx = nmap.m.col(i);
            let (op_nx, op_x) = if mats == "ell" {
                (rep.ell_of(&nx), rep.ell[i].clone())
            } else {
                (rep.arr_of(&nx), rep.arr[i].clone())
            };
            let v = &(b * &op_nx) + &(&op_x * &b2);
            let v = &(&v - &(&op_nx * b)) - &(&(b * &op_x) * b);
            push_matrix(sink, &[i], &v);
        })
    };
    let mut entries = part("ell");
    entries.extend(part("arr"));
    Ok(Residual {
        law: LawId::Admissible,
        entries,
    })
}

/// `S` adjoint-admissible to `(a, N)`: parts `left` and `right` are the two
/// defining identities, indexed `(x, y, k)`.
pub fn check_adjoint_admissible(a: &Algebra, nmap: &LinearMap, s: &LinearMap) -> Result<Residual> {
    let n = a.dim();
    ensure_map("N", nmap, n)?;
    ensure_map("S", s, n)?;
    let (nm, sm) = (&nmap.m, &s.m);
    let s2 = sm.pow(2);
    let adj = left_right_operators(a);
    // columns: [e_i, e_j] for fixed i are ℒ(e_i) e_j, so products with maps
    // reduce to matrix products on ℒ and ℛ
    let left = run(LawId::AdjointAdmissible, "left", n, |i, sink| {
        // S[N x, y] + [x, S² y] − S[x, S y] − [N x, S y], y ranging over columns
        let l_nx = adj_ell(&adj, &nm.col(i));
        let l_x = &adj.ell[i];
        let v = &(sm * &l_nx) + &(l_x * &s2);
        let v = &(&v - &(&(sm * l_x) * sm)) - &(&l_nx * sm);
        push_matrix_transposed(sink, &[i], &v);
    });
    let right = run(LawId::AdjointAdmissible, "right", n, |i, sink| {
        // S[x, N y] + [S² x, y] − S[S x, y] − [S x, N y]
        let l_x = &adj.ell[i];
        let l_s2x = adj_ell(&adj, &s2.col(i));
        let l_sx = adj_ell(&adj, &sm.col(i));
        let v = &(&(sm * l_x) * nm) + &l_s2x;
        let v = &(&v - &(sm * &l_sx)) - &(&l_sx * nm);
        push_matrix_transposed(sink, &[i], &v);
    });
    let mut entries = left;
    entries.extend(right);
    Ok(Residual {
        law: LawId::AdjointAdmissible,
        entries,
    })
}

fn adj_ell(adj: &Representation, x: &[Scalar]) -> Matrix {
    adj.ell_of(x)
}

/// Pushes `m` with index `(prefix, column, row)`: used where the column
/// ranges over the second basis argument of a binary identity.
fn push_matrix_transposed(sink: &mut EntrySink, prefix: &[usize], m: &Matrix) {
    push_matrix(sink, prefix, &m.transpose());
}

/// Coadjoint admissibility: parts `left` and `right` are the two identities
/// obtained by dualising adjoint admissibility, indexed `(x, a, b)`.
pub fn check_coadjoint_admissible(
    c: &Coalgebra,
    s: &LinearMap,
    nmap: &LinearMap,
) -> Result<Residual> {
    let n = c.dim();
    ensure_map("S", s, n)?;
    ensure_map("N", nmap, n)?;
    let (sm, nm) = (&s.m, &nmap.m);
    let (st, nt) = (sm.transpose(), nm.transpose());
    let n2 = nm.pow(2);
    let n2t = n2.transpose();
    let d_n = coproducts_of_columns(c, nm);
    let left = run(LawId::CoadjointAdmissible, "left", n, |i, sink| {
        let di = c.coproduct(i);
        let v = &(sm * &d_n[i]) + &(&di * &n2t);
        let v = &(&v - &(&(sm * &di) * &nt)) - &(&d_n[i] * &nt);
        push_matrix(sink, &[i], &v);
    });
    let right = run(LawId::CoadjointAdmissible, "right", n, |i, sink| {
        let di = c.coproduct(i);
        let v = &(&d_n[i] * &st) + &(&n2 * &di);
        let v = &(&v - &(&(nm * &di) * &st)) - &(nm * &d_n[i]);
        push_matrix(sink, &[i], &v);
    });
    let mut entries = left;
    entries.extend(right);
    Ok(Residual {
        law: LawId::CoadjointAdmissible,
        entries,
    })
}

/// Left Alia bialgebra compatibility between a bracket and a coproduct,
/// over all ordered basis pairs.
pub fn check_bialgebra_compat(a: &Algebra, c: &Coalgebra) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("coalgebra dimension", c.dim(), n)?;
    let adj = left_right_operators(a);
    let entries = run(LawId::BialgebraCompat, "main", n, |i, sink| {
        let di = c.coproduct(i);
        for j in 0..n {
            let mut anti = a.product(i, j).to_vec();
            for (t, s) in anti.iter_mut().zip(a.product(j, i)) {
                *t -= s;
            }
            let dj = c.coproduct(j);
            let x = &(&c.comul_eval(&anti).expect("length") - &(&adj.arr[j] * &di))
                + &(&adj.arr[i] * &dj);
            let v = &x.transpose() - &x;
            push_matrix(sink, &[i, j], &v);
        }
    });
    Ok(Residual {
        law: LawId::BialgebraCompat,
        entries,
    })
}

/// All defining conditions of a Nijenhuis left Alia bialgebra, evaluated in
/// full; entries keep the sub-law that produced them.
pub fn check_nijenhuis_left_alia_bialgebra(
    a: &Algebra,
    c: &Coalgebra,
    nmap: &LinearMap,
    s: &LinearMap,
) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("coalgebra dimension", c.dim(), n)?;
    ensure_map("N", nmap, n)?;
    ensure_map("S", s, n)?;
    let mut out = Residual::empty(LawId::NijLeftAliaBialgebra);
    out.absorb(check_left_alia(a));
    out.absorb(check_left_alia_coalgebra(c));
    out.absorb(check_bialgebra_compat(a, c)?);
    out.absorb(check_nijenhuis_algebra(a, nmap)?);
    out.absorb(check_nijenhuis_coalgebra(c, s)?);
    out.absorb(check_adjoint_admissible(a, nmap, s)?);
    out.absorb(check_coadjoint_admissible(c, s, nmap)?);
    Ok(out)
}

/// Quadratic structure: part `symmetric` `(i, j)`, part `nondegenerate`
/// (empty index, value `n − rank`), part `invariant` `(x, y, z)`.
pub fn check_quadratic(a: &Algebra, b: &BilinearForm) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("form dimension", b.dim(), n)?;
    let w = &b.w;
    let mut entries = run(LawId::Quadratic, "symmetric", n, |i, sink| {
        for j in 0..n {
            sink.push(&[i, j], w.get(i, j) - w.get(j, i));
        }
    });
    let mut nd = EntrySink::new(LawId::Quadratic, "nondegenerate");
    nd.push(&[], Scalar::from_int((n - w.rank()) as i64));
    entries.extend(nd.out);
    // B(u, e_k) for every bracket u = [e_i, e_j] is (Bᵀ u)_k
    let wt = w.transpose();
    entries.extend(run(LawId::Quadratic, "invariant", n, |i, sink| {
        for j in 0..n {
            let lhs = wt.apply(a.product(i, j));
            for k in 0..n {
                let mut anti = a.product(k, j).to_vec();
                for (t, s) in anti.iter_mut().zip(a.product(j, k)) {
                    *t -= s;
                }
                let rhs = crate::matrix::dot(w.row(i), &anti);
                sink.push(&[i, j, k], &lhs[k] - &rhs);
            }
        }
    }));
    Ok(Residual {
        law: LawId::Quadratic,
        entries,
    })
}

/// Symplectic structure: part `skew` `(i, j)` and part `main` `(x, y, z)`.
pub fn check_symplectic(a: &Algebra, w: &BilinearForm) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("form dimension", w.dim(), n)?;
    let wm = &w.w;
    let wt = wm.transpose();
    let mut entries = run(LawId::Symplectic, "skew", n, |i, sink| {
        for j in 0..n {
            sink.push(&[i, j], wm.get(i, j) + wm.get(j, i));
        }
    });
    // first-slot evaluations ω([e_p, e_q], e_k) = (ωᵀ [e_p, e_q])_k
    let first: Vec<Vec<Scalar>> = (0..n * n)
        .map(|pq| wt.apply(a.product(pq / n, pq % n)))
        .collect();
    let om = |p: usize, q: usize, k: usize| &first[p * n + q][k];
    entries.extend(run(LawId::Symplectic, "main", n, |i, sink| {
        for j in 0..n {
            for k in 0..n {
                let v = om(j, k, i) - om(k, j, i) - om(i, j, k) + om(i, k, j);
                sink.push(&[i, j, k], v);
            }
        }
    }));
    Ok(Residual {
        law: LawId::Symplectic,
        entries,
    })
}

/// Cosymplectic condition on an antisymmetric two-tensor; index `(a, b, c)`.
pub fn check_cosymplectic(c: &Coalgebra, r: &TwoTensor) -> Result<Residual> {
    let n = c.dim();
    ensure_dim("tensor dimension", r.dim(), n)?;
    if !r.is_antisymmetric() {
        return Err(AliaError::NotAntisymmetric);
    }
    let t = &r.t;
    // u[g][a][b] = Σ_p t[p][g] d[p][a][b]
    let u: Vec<Scalar> = flat_map_range(n, |g| {
        let mut out = vec![Scalar::zero(); n * n];
        for p in 0..n {
            let w = t.get(p, g);
            if w.is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    out[a * n + b].add_mul(w, c.d(p, a, b));
                }
            }
        }
        out
    });
    let at = |g: usize, a: usize, b: usize| &u[(g * n + a) * n + b];
    let entries = run(LawId::Cosymplectic, "main", n, |a, sink| {
        for b in 0..n {
            for g in 0..n {
                let v = at(g, a, b) - at(g, b, a) - at(b, g, a) + at(a, g, b);
                sink.push(&[a, b, g], v);
            }
        }
    });
    Ok(Residual {
        law: LawId::Cosymplectic,
        entries,
    })
}

/// Commutative cocommutative D-bialgebra: sub-laws for the four structural
/// axioms plus the compatibility, part `compat`, indexed `(a, b, p, q)`.
pub fn check_d_bialgebra(a: &Algebra, c: &Coalgebra) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("coalgebra dimension", c.dim(), n)?;
    let mut out = Residual::empty(LawId::DBialgebra);
    out.absorb(check_commutative(a));
    out.absorb(check_cocommutative(c));
    out.absorb(check_associative(a));
    out.absorb(check_coassociative(c));
    let rmul: Vec<Matrix> = (0..n)
        .map(|j| right_mult(a, &crate::matrix::basis_vector(n, j)))
        .collect();
    let lmul: Vec<Matrix> = (0..n)
        .map(|i| left_mult(a, &crate::matrix::basis_vector(n, i)))
        .collect();
    out.entries
        .extend(run(LawId::DBialgebra, "compat", n, |i, sink| {
            let di = c.coproduct(i);
            for j in 0..n {
                // δ(e_i e_j) − (R_{e_j} ⊗ id)δ(e_i) − (id ⊗ L_{e_i})δ(e_j)
                let lhs = c.comul_eval(a.product(i, j)).expect("length");
                let dj = c.coproduct(j);
                let v = &(&lhs - &(&rmul[j] * &di)) - &(&dj * &lmul[i].transpose());
                push_matrix(sink, &[i, j], &v);
            }
        }));
    Ok(out)
}

/// Nijenhuis compatibility of `(f, F)` with a D-bialgebra: part `product`
/// `(x, y, k)` and part `coproduct` `(x, a, b)`.
pub fn check_nijenhuis_d_compat(
    a: &Algebra,
    c: &Coalgebra,
    f: &LinearMap,
    big_f: &LinearMap,
) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("coalgebra dimension", c.dim(), n)?;
    ensure_map("f", f, n)?;
    ensure_map("F", big_f, n)?;
    let (fm, ffm) = (&f.m, &big_f.m);
    let ff2 = ffm.pow(2);
    let mut entries = run(LawId::NijenhuisDCompat, "product", n, |i, sink| {
        // F(f(x)·y) + x·F²(y) − f(x)·F(y) − F(x·F(y)), y over columns
        let l_fx = left_mult(a, &fm.col(i));
        let l_x = left_mult(a, &crate::matrix::basis_vector(n, i));
        let v = &(ffm * &l_fx) + &(&l_x * &ff2);
        let v = &(&v - &(&l_fx * ffm)) - &(&(ffm * &l_x) * ffm);
        push_matrix_transposed(sink, &[i], &v);
    });
    let ft = fm.transpose();
    let f2t = fm.pow(2).transpose();
    let d_f = coproducts_of_columns(c, fm);
    entries.extend(run(LawId::NijenhuisDCompat, "coproduct", n, |i, sink| {
        let di = c.coproduct(i);
        let v = &(ffm * &d_f[i]) + &(&di * &f2t);
        let v = &(&v - &(&(ffm * &di) * &ft)) - &(&d_f[i] * &ft);
        push_matrix(sink, &[i], &v);
    }));
    Ok(Residual {
        law: LawId::NijenhuisDCompat,
        entries,
    })
}

/// Compatibility condition for the special left Alia bialgebra built from a
/// commutative cocommutative D-bialgebra and maps `(f, g, F, G)`; index
/// `(x, y, a, b)`.
pub fn check_special_bialgebra_condition(
    a: &Algebra,
    c: &Coalgebra,
    f: &LinearMap,
    g: &LinearMap,
    big_f: &LinearMap,
    big_g: &LinearMap,
) -> Result<Residual> {
    let n = a.dim();
    ensure_dim("coalgebra dimension", c.dim(), n)?;
    for (name, m) in [("f", f), ("g", g), ("F", big_f), ("G", big_g)] {
        ensure_map(name, m, n)?;
    }
    if !check_d_bialgebra(a, c)?.passed() {
        return Err(AliaError::DBialgebraInvalid);
    }
    let (fm, gm, ffm, ggm) = (&f.m, &g.m, &big_f.m, &big_g.m);
    let d_f = coproducts_of_columns(c, fm);
    let d_gg = coproducts_of_columns(c, ggm);
    let basis = |i: usize| crate::matrix::basis_vector(n, i);
    let lmul: Vec<Matrix> = (0..n).map(|i| left_mult(a, &basis(i))).collect();
    let rmul: Vec<Matrix> = (0..n).map(|j| right_mult(a, &basis(j))).collect();
    let r_f: Vec<Matrix> = (0..n).map(|j| right_mult(a, &fm.col(j))).collect();
    // half(x, y): the four terms whose flips complete the display
    let half = |i: usize, j: usize| -> Matrix {
        let g_ry_t = (gm * &rmul[j]).transpose();
        let t1 = &d_f[j] * &(ffm * &lmul[i]).transpose();
        let t3 = &(ffm * &c.coproduct(i).transpose()) * &g_ry_t;
        let mg_t = d_gg[i].transpose();
        let t5 = &mg_t * &r_f[j].transpose();
        let t7 = &mg_t * &g_ry_t;
        &(&(&t1 + &t3) + &t5) + &t7
    };
    let entries = run(LawId::SpecialBialgebra, "main", n, |i, sink| {
        for j in 0..n {
            let q_xy = half(i, j);
            let q_yx = half(j, i);
            let p_xy = &q_xy - &q_xy.transpose();
            let p_yx = &q_yx - &q_yx.transpose();
            push_matrix(sink, &[i, j], &(&p_xy - &p_yx));
        }
    });
    Ok(Residual {
        law: LawId::SpecialBialgebra,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn four_dim_bialgebra_laws() {
        let (a, c, n, s) = (fix_a4(), fix_d4(), fix_n4(), fix_s4());
        assert!(check_left_alia(&a).passed());
        assert!(check_left_alia_coalgebra(&c).passed());
        assert!(check_bialgebra_compat(&a, &c).unwrap().passed());
        assert!(check_nijenhuis_algebra(&a, &n).unwrap().passed());
        assert!(check_nijenhuis_coalgebra(&c, &s).unwrap().passed());
        assert!(check_adjoint_admissible(&a, &n, &s).unwrap().passed());
        assert!(check_coadjoint_admissible(&c, &s, &n).unwrap().passed());
    }

    #[test]
    fn a4_is_not_commutative_at_3_1() {
        let r = check_commutative(&fix_a4());
        assert!(r.entries.iter().any(|e| e.index[..2] == [2, 0]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = check_nijenhuis_algebra(&fix_a4(), &LinearMap::identity(3)).unwrap_err();
        assert!(matches!(err, AliaError::DimensionMismatch(_)));
    }

    #[test]
    fn dim_one_d_bialgebra_value() {
        let a = Algebra::from_entries(1, &[(0, 0, 0, Scalar::one())]);
        let c = Coalgebra::from_entries(1, &[(0, 0, 0, Scalar::one())]);
        let r = check_d_bialgebra(&a, &c).unwrap();
        let compat: Vec<_> = r.entries.iter().filter(|e| e.part == "compat").collect();
        assert_eq!(compat.len(), 1);
        assert_eq!(compat[0].value, Scalar::from_int(-1));
    }
}
