//! Brute-force reference evaluator.
//!
//! Every identity is evaluated element by element with nested loops over
//! basis vectors: brackets through structure constants, coproducts as
//! explicit Sweedler lists, tensors as dense arrays. Nothing here shares
//! code with the optimized kernels apart from the plain data types.

#![allow(clippy::needless_range_loop)]

use alia_core::{
    Algebra, BilinearForm, Coalgebra, Entry, LawId, LinearMap, Matrix, Representation, Scalar,
    TwoTensor,
};

pub type V = Vec<Scalar>;
type T2 = Vec<Vec<Scalar>>;
type T3 = Vec<Vec<Vec<Scalar>>>;

fn zero(n: usize) -> V {
    vec![Scalar::zero(); n]
}

pub fn e(n: usize, i: usize) -> V {
    let mut v = zero(n);
    v[i] = Scalar::one();
    v
}

fn add(u: &V, v: &V) -> V {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn sub(u: &V, v: &V) -> V {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

fn scale(s: &Scalar, v: &V) -> V {
    v.iter().map(|a| s * a).collect()
}

fn t2(n1: usize, n2: usize) -> T2 {
    vec![zero(n2); n1]
}

fn t3(n: usize) -> T3 {
    vec![t2(n, n); n]
}

fn outer2(t: &mut T2, s: &Scalar, u: &V, v: &V) {
    for (a, ua) in u.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (b, vb) in v.iter().enumerate() {
            t[a][b] += &(&(s * ua) * vb);
        }
    }
}

fn outer3(t: &mut T3, s: &Scalar, u: &V, v: &V, w: &V) {
    for (a, ua) in u.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (b, vb) in v.iter().enumerate() {
            if vb.is_zero() {
                continue;
            }
            for (c, wc) in w.iter().enumerate() {
                t[a][b][c] += &(&(&(s * ua) * vb) * wc);
            }
        }
    }
}

/// `[x, y]` straight from the structure constants.
pub fn br(a: &Algebra, x: &V, y: &V) -> V {
    let n = a.dim();
    let mut out = zero(n);
    for i in 0..n {
        for j in 0..n {
            let w = &x[i] * &y[j];
            if w.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &(&w * a.c(i, j, k));
            }
        }
    }
    out
}

/// Matrix times vector.
pub fn app(m: &Matrix, v: &V) -> V {
    (0..m.rows())
        .map(|r| {
            let mut acc = Scalar::zero();
            for (c, vc) in v.iter().enumerate() {
                acc += &(m.get(r, c) * vc);
            }
            acc
        })
        .collect()
}

fn lin(m: &LinearMap, v: &V) -> V {
    app(&m.m, v)
}

/// Sweedler list of `Δ(x)`: pairs `(x₍₁₎, x₍₂₎)`.
pub fn sweedler(c: &Coalgebra, x: &V) -> Vec<(V, V)> {
    let n = c.dim();
    let mut out = Vec::new();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for j in 0..n {
            for k in 0..n {
                let d = c.d(i, j, k);
                if !d.is_zero() {
                    out.push((scale(&(xi * d), &e(n, j)), e(n, k)));
                }
            }
        }
    }
    out
}

fn omega(w: &BilinearForm, x: &V, y: &V) -> Scalar {
    let mut acc = Scalar::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += &(&(xi * yj) * w.w.get(i, j));
        }
    }
    acc
}

/// `r = Σ a_i ⊗ b_i` over the canonical basis decomposition.
fn decomposition(r: &TwoTensor) -> Vec<(Scalar, usize, usize)> {
    let n = r.dim();
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let v = r.t.get(p, q);
            if !v.is_zero() {
                out.push((v.clone(), p, q));
            }
        }
    }
    out
}

fn ell(rep: &Representation, x: &V, v: &V) -> V {
    let mut out = zero(rep.rep_dim());
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            out = add(&out, &scale(xi, &app(&rep.ell[i], v)));
        }
    }
    out
}

fn arr(rep: &Representation, x: &V, v: &V) -> V {
    let mut out = zero(rep.rep_dim());
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            out = add(&out, &scale(xi, &app(&rep.arr[i], v)));
        }
    }
    out
}

struct Out {
    law: LawId,
    entries: Vec<Entry>,
}

impl Out {
    fn new(law: LawId) -> Self {
        Out {
            law,
            entries: Vec::new(),
        }
    }

    fn scalar(&mut self, part: &'static str, index: Vec<usize>, value: Scalar) {
        if !value.is_zero() {
            self.entries.push(Entry {
                law: self.law,
                part,
                index,
                value,
            });
        }
    }

    fn vector(&mut self, part: &'static str, prefix: &[usize], v: &V) {
        for (k, x) in v.iter().enumerate() {
            let mut idx = prefix.to_vec();
            idx.push(k);
            self.scalar(part, idx, x.clone());
        }
    }

    fn matrix(&mut self, part: &'static str, prefix: &[usize], t: &T2) {
        for (a, row) in t.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                let mut idx = prefix.to_vec();
                idx.extend([a, b]);
                self.scalar(part, idx, x.clone());
            }
        }
    }

    fn cube(&mut self, part: &'static str, prefix: &[usize], t: &T3) {
        for (a, m) in t.iter().enumerate() {
            let mut p = prefix.to_vec();
            p.push(a);
            self.matrix(part, &p, m);
        }
    }
}

fn sub2(a: &T2, b: &T2) -> T2 {
    a.iter().zip(b).map(|(x, y)| sub(x, y)).collect()
}

fn transpose2(a: &T2) -> T2 {
    let (n1, n2) = (a.len(), a.first().map_or(0, Vec::len));
    (0..n2)
        .map(|j| (0..n1).map(|i| a[i][j].clone()).collect())
        .collect()
}

fn one() -> Scalar {
    Scalar::one()
}

fn neg1() -> Scalar {
    -Scalar::one()
}

// ---- algebra identities ----

pub fn left_alia(a: &Algebra) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::LeftAlia);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let lhs = add(
                    &add(&br(a, &br(a, &x, &y), &z), &br(a, &br(a, &y, &z), &x)),
                    &br(a, &br(a, &z, &x), &y),
                );
                let rhs = add(
                    &add(&br(a, &br(a, &y, &x), &z), &br(a, &br(a, &z, &y), &x)),
                    &br(a, &br(a, &x, &z), &y),
                );
                out.vector("main", &[i, j, k], &sub(&lhs, &rhs));
            }
        }
    }
    out.entries
}

pub fn associative(a: &Algebra) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::Associative);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let v = sub(&br(a, &br(a, &x, &y), &z), &br(a, &x, &br(a, &y, &z)));
                out.vector("main", &[i, j, k], &v);
            }
        }
    }
    out.entries
}

pub fn commutative(a: &Algebra) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::Commutative);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            out.vector("main", &[i, j], &sub(&br(a, &x, &y), &br(a, &y, &x)));
        }
    }
    out.entries
}

pub fn nijenhuis_algebra(a: &Algebra, nm: &LinearMap) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::NijenhuisAlgebra);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let (nx, ny) = (lin(nm, &x), lin(nm, &y));
            let lhs = add(&br(a, &nx, &ny), &lin(nm, &lin(nm, &br(a, &x, &y))));
            let rhs = lin(nm, &add(&br(a, &nx, &y), &br(a, &x, &ny)));
            out.vector("main", &[i, j], &sub(&lhs, &rhs));
        }
    }
    out.entries
}

// ---- coalgebra identities ----

pub fn coassociative(c: &Coalgebra) -> Vec<Entry> {
    let n = c.dim();
    let mut out = Out::new(LawId::Coassociative);
    for i in 0..n {
        let mut t = t3(n);
        for (u, v) in sweedler(c, &e(n, i)) {
            for (u1, u2) in sweedler(c, &u) {
                outer3(&mut t, &one(), &u1, &u2, &v);
            }
            for (v1, v2) in sweedler(c, &v) {
                outer3(&mut t, &neg1(), &u, &v1, &v2);
            }
        }
        out.cube("main", &[i], &t);
    }
    out.entries
}

pub fn cocommutative(c: &Coalgebra) -> Vec<Entry> {
    let n = c.dim();
    let mut out = Out::new(LawId::Cocommutative);
    for i in 0..n {
        let mut t = t2(n, n);
        for (u, v) in sweedler(c, &e(n, i)) {
            outer2(&mut t, &one(), &u, &v);
            outer2(&mut t, &neg1(), &v, &u);
        }
        out.matrix("main", &[i], &t);
    }
    out.entries
}

pub fn left_alia_coalgebra(c: &Coalgebra) -> Vec<Entry> {
    let n = c.dim();
    let mut out = Out::new(LawId::LeftAliaCoalgebra);
    for i in 0..n {
        let mut t = t3(n);
        for (x1, x2) in sweedler(c, &e(n, i)) {
            for (x11, x12) in sweedler(c, &x1) {
                outer3(&mut t, &one(), &x12, &x11, &x2);
                outer3(&mut t, &one(), &x11, &x2, &x12);
                outer3(&mut t, &one(), &x2, &x12, &x11);
                outer3(&mut t, &neg1(), &x11, &x12, &x2);
                outer3(&mut t, &neg1(), &x12, &x2, &x11);
                outer3(&mut t, &neg1(), &x2, &x11, &x12);
            }
        }
        out.cube("main", &[i], &t);
    }
    out.entries
}

pub fn nijenhuis_coalgebra(c: &Coalgebra, s: &LinearMap) -> Vec<Entry> {
    let n = c.dim();
    let mut out = Out::new(LawId::NijenhuisCoalgebra);
    for i in 0..n {
        let x = e(n, i);
        let sx = lin(s, &x);
        let mut t = t2(n, n);
        for (x1, x2) in sweedler(c, &x) {
            outer2(&mut t, &one(), &lin(s, &x1), &lin(s, &x2));
        }
        for (u, v) in sweedler(c, &lin(s, &sx)) {
            outer2(&mut t, &one(), &u, &v);
        }
        for (u, v) in sweedler(c, &sx) {
            outer2(&mut t, &neg1(), &lin(s, &u), &v);
            outer2(&mut t, &neg1(), &u, &lin(s, &v));
        }
        out.matrix("main", &[i], &t);
    }
    out.entries
}

// ---- representations ----

pub fn representation(a: &Algebra, rep: &Representation) -> Vec<Entry> {
    let (n, m) = (a.dim(), rep.rep_dim());
    let mut out = Out::new(LawId::Representation);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let mut t = t2(m, m);
            for col in 0..m {
                let v = e(m, col);
                let lhs = sub(&ell(rep, &br(a, &x, &y), &v), &ell(rep, &br(a, &y, &x), &v));
                let rx = arr(rep, &x, &sub(&arr(rep, &y, &v), &ell(rep, &y, &v)));
                let ry = arr(rep, &y, &sub(&arr(rep, &x, &v), &ell(rep, &x, &v)));
                let res = sub(&lhs, &sub(&rx, &ry));
                for (row, val) in res.into_iter().enumerate() {
                    t[row][col] = val;
                }
            }
            out.matrix("main", &[i, j], &t);
        }
    }
    out.entries
}

type Action = fn(&Representation, &V, &V) -> V;

fn by_part(part: &str) -> Action {
    if part == "ell" {
        ell
    } else {
        arr
    }
}

pub fn nijenhuis_representation(
    a: &Algebra,
    nm: &LinearMap,
    rep: &Representation,
    alpha: &LinearMap,
) -> Vec<Entry> {
    let (n, m) = (a.dim(), rep.rep_dim());
    let mut out = Out::new(LawId::NijenhuisRepresentation);
    for part in ["ell", "arr"] {
        let act = by_part(part);
        for i in 0..n {
            let x = e(n, i);
            let nx = lin(nm, &x);
            let mut t = t2(m, m);
            for col in 0..m {
                let v = e(m, col);
                let lhs = add(
                    &act(rep, &nx, &lin(alpha, &v)),
                    &lin(alpha, &lin(alpha, &act(rep, &x, &v))),
                );
                let rhs = add(
                    &lin(alpha, &act(rep, &nx, &v)),
                    &lin(alpha, &act(rep, &x, &lin(alpha, &v))),
                );
                for (row, val) in sub(&lhs, &rhs).into_iter().enumerate() {
                    t[row][col] = val;
                }
            }
            out.matrix(part, &[i], &t);
        }
    }
    out.entries
}

pub fn admissible(
    a: &Algebra,
    nm: &LinearMap,
    rep: &Representation,
    beta: &LinearMap,
) -> Vec<Entry> {
    let (n, m) = (a.dim(), rep.rep_dim());
    let mut out = Out::new(LawId::Admissible);
    for part in ["ell", "arr"] {
        let act = by_part(part);
        for i in 0..n {
            let x = e(n, i);
            let nx = lin(nm, &x);
            let mut t = t2(m, m);
            for col in 0..m {
                let v = e(m, col);
                let lhs = add(
                    &lin(beta, &act(rep, &nx, &v)),
                    &act(rep, &x, &lin(beta, &lin(beta, &v))),
                );
                let rhs = add(
                    &act(rep, &nx, &lin(beta, &v)),
                    &lin(beta, &act(rep, &x, &lin(beta, &v))),
                );
                for (row, val) in sub(&lhs, &rhs).into_iter().enumerate() {
                    t[row][col] = val;
                }
            }
            out.matrix(part, &[i], &t);
        }
    }
    out.entries
}

pub fn adjoint_admissible(a: &Algebra, nm: &LinearMap, s: &LinearMap) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::AdjointAdmissible);
    let l = |v: &V| lin(s, v);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let (nx, sy) = (lin(nm, &x), l(&y));
            let lhs = add(&l(&br(a, &nx, &y)), &br(a, &x, &l(&sy)));
            let rhs = add(&l(&br(a, &x, &sy)), &br(a, &nx, &sy));
            out.vector("left", &[i, j], &sub(&lhs, &rhs));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let (ny, sx) = (lin(nm, &y), l(&x));
            let lhs = add(&l(&br(a, &x, &ny)), &br(a, &l(&sx), &y));
            let rhs = add(&l(&br(a, &sx, &y)), &br(a, &sx, &ny));
            out.vector("right", &[i, j], &sub(&lhs, &rhs));
        }
    }
    out.entries
}

pub fn coadjoint_admissible(c: &Coalgebra, s: &LinearMap, nm: &LinearMap) -> Vec<Entry> {
    let n = c.dim();
    let mut out = Out::new(LawId::CoadjointAdmissible);
    let nn = |v: &V| lin(nm, v);
    let ss = |v: &V| lin(s, v);
    for i in 0..n {
        let x = e(n, i);
        let nx = nn(&x);
        let mut t = t2(n, n);
        for (u, v) in sweedler(c, &nx) {
            outer2(&mut t, &one(), &ss(&u), &v);
            outer2(&mut t, &neg1(), &u, &nn(&v));
        }
        for (x1, x2) in sweedler(c, &x) {
            outer2(&mut t, &one(), &x1, &nn(&nn(&x2)));
            outer2(&mut t, &neg1(), &ss(&x1), &nn(&x2));
        }
        out.matrix("left", &[i], &t);
    }
    for i in 0..n {
        let x = e(n, i);
        let nx = nn(&x);
        let mut t = t2(n, n);
        for (u, v) in sweedler(c, &nx) {
            outer2(&mut t, &one(), &u, &ss(&v));
            outer2(&mut t, &neg1(), &nn(&u), &v);
        }
        for (x1, x2) in sweedler(c, &x) {
            outer2(&mut t, &one(), &nn(&nn(&x1)), &x2);
            outer2(&mut t, &neg1(), &nn(&x1), &ss(&x2));
        }
        out.matrix("right", &[i], &t);
    }
    out.entries
}

pub fn bialgebra_compat(a: &Algebra, c: &Coalgebra) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::BialgebraCompat);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            // X = Δ([x,y] − [y,x]) − (R(y) ⊗ id)Δ(x) + (R(x) ⊗ id)Δ(y)
            let mut big = t2(n, n);
            for (u, v) in sweedler(c, &sub(&br(a, &x, &y), &br(a, &y, &x))) {
                outer2(&mut big, &one(), &u, &v);
            }
            for (u, v) in sweedler(c, &x) {
                outer2(&mut big, &neg1(), &br(a, &u, &y), &v);
            }
            for (u, v) in sweedler(c, &y) {
                outer2(&mut big, &one(), &br(a, &u, &x), &v);
            }
            // (τ − id)(X)
            out.matrix("main", &[i, j], &sub2(&transpose2(&big), &big));
        }
    }
    out.entries
}

pub fn nijenhuis_bialgebra(
    a: &Algebra,
    c: &Coalgebra,
    nm: &LinearMap,
    s: &LinearMap,
) -> Vec<Entry> {
    let mut all = left_alia(a);
    all.extend(left_alia_coalgebra(c));
    all.extend(bialgebra_compat(a, c));
    all.extend(nijenhuis_algebra(a, nm));
    all.extend(nijenhuis_coalgebra(c, s));
    all.extend(adjoint_admissible(a, nm, s));
    all.extend(coadjoint_admissible(c, s, nm));
    all
}

// ---- forms and tensors ----

/// Rank by plain Gaussian elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut rows: Vec<V> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let piv = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &piv;
                let pr = rows[rank].clone();
                rows[r] = sub(&rows[r], &scale(&f, &pr));
            }
        }
        rank += 1;
    }
    rank
}

pub fn quadratic(a: &Algebra, b: &BilinearForm) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::Quadratic);
    for i in 0..n {
        for j in 0..n {
            out.scalar("symmetric", vec![i, j], b.w.get(i, j) - b.w.get(j, i));
        }
    }
    out.scalar(
        "nondegenerate",
        vec![],
        Scalar::from_int((n - rank(&b.w)) as i64),
    );
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let lhs = omega(b, &br(a, &x, &y), &z);
                let rhs = omega(b, &x, &sub(&br(a, &z, &y), &br(a, &y, &z)));
                out.scalar("invariant", vec![i, j, k], lhs - rhs);
            }
        }
    }
    out.entries
}

pub fn symplectic(a: &Algebra, w: &BilinearForm) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::Symplectic);
    for i in 0..n {
        for j in 0..n {
            out.scalar("skew", vec![i, j], w.w.get(i, j) + w.w.get(j, i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let lhs = omega(w, &sub(&br(a, &y, &z), &br(a, &z, &y)), &x);
                let rhs = omega(w, &br(a, &x, &y), &z) - omega(w, &br(a, &x, &z), &y);
                out.scalar("main", vec![i, j, k], lhs - rhs);
            }
        }
    }
    out.entries
}

pub fn cosymplectic(c: &Coalgebra, r: &TwoTensor) -> Vec<Entry> {
    let n = c.dim();
    let mut out = Out::new(LawId::Cosymplectic);
    let mut t = t3(n);
    for (coef, p, q) in decomposition(r) {
        let b = e(n, q);
        for (a1, a2) in sweedler(c, &e(n, p)) {
            outer3(&mut t, &coef, &a1, &a2, &b);
            outer3(&mut t, &-&coef, &a2, &a1, &b);
            outer3(&mut t, &-&coef, &a2, &b, &a1);
            outer3(&mut t, &coef, &b, &a2, &a1);
        }
    }
    out.cube("main", &[], &t);
    out.entries
}

// ---- D-bialgebras and special structures ----

pub fn d_bialgebra(a: &Algebra, c: &Coalgebra) -> Vec<Entry> {
    let n = a.dim();
    let mut all = commutative(a);
    all.extend(cocommutative(c));
    all.extend(associative(a));
    all.extend(coassociative(c));
    let mut out = Out::new(LawId::DBialgebra);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let mut t = t2(n, n);
            for (u, v) in sweedler(c, &br(a, &x, &y)) {
                outer2(&mut t, &one(), &u, &v);
            }
            for (u, v) in sweedler(c, &x) {
                outer2(&mut t, &neg1(), &br(a, &u, &y), &v);
            }
            for (u, v) in sweedler(c, &y) {
                outer2(&mut t, &neg1(), &u, &br(a, &x, &v));
            }
            out.matrix("compat", &[i, j], &t);
        }
    }
    all.extend(out.entries);
    all
}

pub fn nijenhuis_d_compat(a: &Algebra, c: &Coalgebra, f: &LinearMap, ff: &LinearMap) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::NijenhuisDCompat);
    let fl = |v: &V| lin(f, v);
    let big = |v: &V| lin(ff, v);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let lhs = add(&big(&br(a, &fl(&x), &y)), &br(a, &x, &big(&big(&y))));
            let rhs = add(&br(a, &fl(&x), &big(&y)), &big(&br(a, &x, &big(&y))));
            out.vector("product", &[i, j], &sub(&lhs, &rhs));
        }
    }
    for i in 0..n {
        let x = e(n, i);
        let mut t = t2(n, n);
        for (u, v) in sweedler(c, &fl(&x)) {
            outer2(&mut t, &one(), &big(&u), &v);
            outer2(&mut t, &neg1(), &u, &fl(&v));
        }
        for (x1, x2) in sweedler(c, &x) {
            outer2(&mut t, &one(), &x1, &fl(&fl(&x2)));
            outer2(&mut t, &neg1(), &big(&x1), &fl(&x2));
        }
        out.matrix("coproduct", &[i], &t);
    }
    out.entries
}

/// All sixteen terms of the special bialgebra compatibility display.
pub fn special_bialgebra(
    a: &Algebra,
    c: &Coalgebra,
    f: &LinearMap,
    g: &LinearMap,
    ff: &LinearMap,
    gg: &LinearMap,
) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Out::new(LawId::SpecialBialgebra);
    let m = |x: &V, y: &V| br(a, x, y);
    for i in 0..n {
        for j in 0..n {
            let mut t = t2(n, n);
            for (x, y, sign) in [(e(n, i), e(n, j), one()), (e(n, j), e(n, i), neg1())] {
                let neg = -&sign;
                // f(y)_[1] ⊗ F(x·f(y)_[2]) − F(x·f(y)_[2]) ⊗ f(y)_[1]
                for (u, v) in sweedler(c, &lin(f, &y)) {
                    let w = lin(ff, &m(&x, &v));
                    outer2(&mut t, &sign, &u, &w);
                    outer2(&mut t, &neg, &w, &u);
                }
                for (x1, x2) in sweedler(c, &x) {
                    // F(x_[2]) ⊗ g(x_[1]·y) − g(x_[1]·y) ⊗ F(x_[2])
                    let (p, q) = (lin(ff, &x2), lin(g, &m(&x1, &y)));
                    outer2(&mut t, &sign, &p, &q);
                    outer2(&mut t, &neg, &q, &p);
                }
                for (u, v) in sweedler(c, &lin(gg, &x)) {
                    // G(x)_[2] ⊗ G(x)_[1]·f(y) − G(x)_[1]·f(y) ⊗ G(x)_[2]
                    let p = m(&u, &lin(f, &y));
                    outer2(&mut t, &sign, &v, &p);
                    outer2(&mut t, &neg, &p, &v);
                    // G(x)_[2] ⊗ g(G(x)_[1]·y) − g(G(x)_[1]·y) ⊗ G(x)_[2]
                    let q = lin(g, &m(&u, &y));
                    outer2(&mut t, &sign, &v, &q);
                    outer2(&mut t, &neg, &q, &v);
                }
            }
            out.matrix("main", &[i, j], &t);
        }
    }
    out.entries
}

// ---- Yang–Baxter ----

pub fn ybe(a: &Algebra, r: &TwoTensor) -> Vec<Entry> {
    let mut out = Out::new(LawId::AliaYbe);
    out.cube("main", &[], &al_tensor(a, r));
    out.entries
}

fn al_tensor(a: &Algebra, r: &TwoTensor) -> T3 {
    let n = a.dim();
    let dec = decomposition(r);
    let mut t = t3(n);
    for (ci, pi, qi) in &dec {
        for (cj, pj, qj) in &dec {
            let w = ci * cj;
            let (ai, bi, aj, bj) = (e(n, *pi), e(n, *qi), e(n, *pj), e(n, *qj));
            outer3(&mut t, &w, &br(a, &ai, &aj), &bi, &bj);
            let mid = sub(&br(a, &aj, &bi), &br(a, &bi, &aj));
            outer3(&mut t, &w, &ai, &mid, &bj);
            outer3(&mut t, &-&w, &ai, &aj, &br(a, &bj, &bi));
        }
    }
    t
}

pub fn delta_r(a: &Algebra, r: &TwoTensor) -> Coalgebra {
    let n = a.dim();
    let mut c = Coalgebra::zero(n);
    for i in 0..n {
        let x = e(n, i);
        let mut t = t2(n, n);
        for (coef, p, q) in decomposition(r) {
            let (ap, bq) = (e(n, p), e(n, q));
            outer2(&mut t, &coef, &sub(&br(a, &ap, &x), &br(a, &x, &ap)), &bq);
            outer2(&mut t, &-&coef, &ap, &br(a, &bq, &x));
        }
        for (j, row) in t.into_iter().enumerate() {
            for (k, v) in row.into_iter().enumerate() {
                *c.d_mut(i, j, k) = v;
            }
        }
    }
    c
}

pub fn ybe_coproduct(a: &Algebra, r: &TwoTensor) -> Vec<Entry> {
    let n = a.dim();
    let d = delta_r(a, r);
    let dec = decomposition(r);
    let mut out = Out::new(LawId::YbeCoproduct);
    let mut t = t3(n);
    for (ci, pi, qi) in &dec {
        for (u, v) in sweedler(&d, &e(n, *qi)) {
            outer3(&mut t, ci, &e(n, *pi), &u, &v);
        }
        for (cj, pj, qj) in &dec {
            let w = ci * cj;
            outer3(
                &mut t,
                &w,
                &br(a, &e(n, *pi), &e(n, *pj)),
                &e(n, *qi),
                &e(n, *qj),
            );
        }
    }
    out.cube("dra", &[], &t);
    if r.is_antisymmetric() {
        let mut t = t3(n);
        for (ci, pi, qi) in &dec {
            for (u, v) in sweedler(&d, &e(n, *pi)) {
                outer3(&mut t, ci, &u, &v, &e(n, *qi));
            }
            for (cj, pj, qj) in &dec {
                let w = ci * cj;
                outer3(
                    &mut t,
                    &-&w,
                    &e(n, *pi),
                    &e(n, *pj),
                    &br(a, &e(n, *qi), &e(n, *qj)),
                );
            }
        }
        out.cube("dr", &[], &t);
    }
    out.entries
}

/// `Σ t[p][q] f(e_p) ⊗ g(e_q)`.
fn op2(n: usize, r: &T2, f: &dyn Fn(&V) -> V, g: &dyn Fn(&V) -> V) -> T2 {
    let mut t = t2(n, n);
    for (p, row) in r.iter().enumerate() {
        for (q, coef) in row.iter().enumerate() {
            if !coef.is_zero() {
                outer2(&mut t, coef, &f(&e(n, p)), &g(&e(n, q)));
            }
        }
    }
    t
}

fn add2(a: &T2, b: &T2) -> T2 {
    a.iter().zip(b).map(|(x, y)| add(x, y)).collect()
}

fn dense(r: &TwoTensor) -> T2 {
    let n = r.dim();
    (0..n)
        .map(|p| (0..n).map(|q| r.t.get(p, q).clone()).collect())
        .collect()
}

pub fn s_admissibility(r: &TwoTensor, nm: &LinearMap, s: &LinearMap) -> Vec<Entry> {
    let n = r.dim();
    let t = dense(r);
    let id = |v: &V| v.clone();
    let res = sub2(
        &op2(n, &t, &|v| lin(s, v), &id),
        &op2(n, &t, &id, &|v| lin(nm, v)),
    );
    let mut out = Out::new(LawId::SAdmissibility);
    out.matrix("main", &[], &res);
    out.entries
}

pub fn coboundary_conditions(
    a: &Algebra,
    nm: &LinearMap,
    s: &LinearMap,
    r: &TwoTensor,
) -> Vec<Entry> {
    let n = a.dim();
    let t = dense(r);
    let id = |v: &V| v.clone();
    let nf = |v: &V| lin(nm, v);
    let sf = |v: &V| lin(s, v);
    let p = sub2(&op2(n, &t, &nf, &id), &op2(n, &t, &id, &sf));
    let q = sub2(&op2(n, &t, &sf, &id), &op2(n, &t, &id, &nf));
    let mut out = Out::new(LawId::CoboundaryNijenhuis);
    let bl = |y: V| move |v: &V| br(a, &y, v);
    let brr = |y: V| move |v: &V| br(a, v, &y);
    for i in 0..n {
        let x = e(n, i);
        let sx = sf(&x);
        let (l_sx, r_sx, l_x, r_x) = (
            bl(sx.clone()),
            brr(sx.clone()),
            bl(x.clone()),
            brr(x.clone()),
        );
        let first = |v: &V| sub(&sub(&r_sx(v), &l_sx(v)), &sf(&sub(&r_x(v), &l_x(v))));
        let second = |v: &V| sub(&r_sx(v), &sf(&r_x(v)));
        let res = add2(&op2(n, &p, &first, &id), &op2(n, &q, &id, &second));
        out.matrix("nijenhuis", &[i], &res);
    }
    for i in 0..n {
        let x = e(n, i);
        let nx = nf(&x);
        let (l_nx, r_nx, l_x, r_x) = (
            bl(nx.clone()),
            brr(nx.clone()),
            bl(x.clone()),
            brr(x.clone()),
        );
        let a1 = |v: &V| sub(&nf(&r_x(v)), &r_nx(v));
        let a2 = |v: &V| sub(&r_nx(v), &l_nx(v));
        let a3 = |v: &V| sf(&sub(&r_x(v), &l_x(v)));
        let b1 = |v: &V| sub(&l_x(&sf(&sf(v))), &r_x(&sf(&sf(v))));
        let b2 = |v: &V| sub(&r_x(v), &l_x(v));
        let b2r = |v: &V| nf(&nf(v));
        let mut res = op2(n, &q, &id, &a1);
        res = add2(&res, &op2(n, &q, &a2, &id));
        res = add2(&res, &op2(n, &q, &a3, &id));
        res = add2(&res, &op2(n, &t, &b1, &id));
        res = add2(&res, &op2(n, &t, &b2, &b2r));
        out.matrix("coadjoint-left", &[i], &res);
    }
    for i in 0..n {
        let x = e(n, i);
        let nx = nf(&x);
        let (l_nx, r_nx, l_x, r_x) = (
            bl(nx.clone()),
            brr(nx.clone()),
            bl(x.clone()),
            brr(x.clone()),
        );
        let a1 = |v: &V| nf(&sub(&r_x(v), &l_x(v)));
        let a2 = |v: &V| sub(&r_nx(v), &l_nx(v));
        let a3 = |v: &V| add(&r_nx(v), &sf(&r_x(v)));
        let b1 = |v: &V| r_x(&sf(&sf(v)));
        let n2 = |v: &V| nf(&nf(v));
        let mut res = op2(n, &p, &a1, &id);
        res = sub2(&res, &op2(n, &p, &a2, &id));
        res = add2(&res, &op2(n, &p, &id, &a3));
        res = add2(&res, &op2(n, &t, &id, &b1));
        res = sub2(&res, &op2(n, &t, &n2, &r_x));
        out.matrix("coadjoint-right", &[i], &res);
    }
    out.entries
}

fn rrb_into(out: &mut Out, a: &Algebra, rep: &Representation, tm: &LinearMap) {
    let m = rep.rep_dim();
    for i in 0..m {
        for j in 0..m {
            let (u, v) = (e(m, i), e(m, j));
            let (tu, tv) = (lin(tm, &u), lin(tm, &v));
            let inner = add(&ell(rep, &tu, &v), &arr(rep, &tv, &u));
            out.vector("main", &[i, j], &sub(&br(a, &tu, &tv), &lin(tm, &inner)));
        }
    }
}

pub fn relative_rota_baxter(a: &Algebra, rep: &Representation, tm: &LinearMap) -> Vec<Entry> {
    let mut out = Out::new(LawId::RelativeRotaBaxter);
    rrb_into(&mut out, a, rep, tm);
    out.entries
}

pub fn weak_rrb(
    a: &Algebra,
    nm: &LinearMap,
    rep: &Representation,
    alpha: &LinearMap,
    tm: &LinearMap,
) -> Vec<Entry> {
    let mut out = Out::new(LawId::WeakRelativeRotaBaxter);
    rrb_into(&mut out, a, rep, tm);
    let m = rep.rep_dim();
    let mut t = t2(a.dim(), m);
    for j in 0..m {
        let v = e(m, j);
        let col = sub(&lin(nm, &lin(tm, &v)), &lin(tm, &lin(alpha, &v)));
        for (row, val) in col.into_iter().enumerate() {
            t[row][j] = val;
        }
    }
    out.matrix("intertwining", &[], &t);
    out.entries
}

pub fn semidirect_admissibility(
    a: &Algebra,
    rep: &Representation,
    s: &LinearMap,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Vec<Entry> {
    let (n, m) = (a.dim(), rep.rep_dim());
    let mut out = Out::new(LawId::SemidirectAdmissibility);
    for part in ["arr", "ell"] {
        let act = by_part(part);
        for i in 0..n {
            let x = e(n, i);
            let sx = lin(s, &x);
            let s2x = lin(s, &sx);
            let mut t = t2(m, m);
            for col in 0..m {
                let v = e(m, col);
                let av = lin(alpha, &v);
                let lhs = add(&lin(beta, &act(rep, &x, &av)), &act(rep, &s2x, &v));
                let rhs = add(&act(rep, &sx, &av), &lin(beta, &act(rep, &sx, &v)));
                for (row, val) in sub(&lhs, &rhs).into_iter().enumerate() {
                    t[row][col] = val;
                }
            }
            out.matrix(part, &[i], &t);
        }
    }
    out.entries
}

// ---- co-Yang–Baxter ----

pub fn co_ybe(c: &Coalgebra, w: &BilinearForm) -> Vec<Entry> {
    let n = c.dim();
    let mut out = Out::new(LawId::CoYbe);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                let mut v = Scalar::zero();
                for (x1, x2) in sweedler(c, &x) {
                    v += &(omega(w, &x1, &y) * omega(w, &x2, &z));
                }
                for (y1, y2) in sweedler(c, &y) {
                    v += &(omega(w, &x, &y2) * omega(w, &y1, &z));
                    v -= &(omega(w, &x, &y1) * omega(w, &y2, &z));
                }
                for (z1, z2) in sweedler(c, &z) {
                    v -= &(omega(w, &x, &z2) * omega(w, &y, &z1));
                }
                out.scalar("main", vec![i, j, k], v);
            }
        }
    }
    out.entries
}

pub fn bracket_omega(c: &Coalgebra, w: &BilinearForm) -> Algebra {
    let n = c.dim();
    let mut a = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let mut v = zero(n);
            for (x1, x2) in sweedler(c, &x) {
                v = add(&v, &scale(&omega(w, &x1, &y), &x2));
                v = sub(&v, &scale(&omega(w, &x2, &y), &x1));
            }
            for (y1, y2) in sweedler(c, &y) {
                v = sub(&v, &scale(&omega(w, &x, &y1), &y2));
            }
            for (k, val) in v.into_iter().enumerate() {
                *a.c_mut(i, j, k) = val;
            }
        }
    }
    a
}

pub fn co_ybe_bracket(c: &Coalgebra, w: &BilinearForm) -> Vec<Entry> {
    let n = c.dim();
    let b = bracket_omega(c, w);
    let mut out = Out::new(LawId::CoYbeBracket);
    for part in ["mw", "mwr"] {
        if part == "mwr" && !w.is_skew() {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (e(n, i), e(n, j), e(n, k));
                    let mut v;
                    if part == "mw" {
                        v = omega(w, &x, &br(&b, &y, &z));
                        for (x1, x2) in sweedler(c, &x) {
                            v += &(omega(w, &x1, &y) * omega(w, &x2, &z));
                        }
                    } else {
                        v = omega(w, &br(&b, &x, &y), &z);
                        for (z1, z2) in sweedler(c, &z) {
                            v -= &(omega(w, &x, &z1) * omega(w, &y, &z2));
                        }
                    }
                    out.scalar(part, vec![i, j, k], v);
                }
            }
        }
    }
    out.entries
}

// ---- constructions ----

pub fn special_left_alia(a: &Algebra, f: &LinearMap, g: &LinearMap) -> Algebra {
    let n = a.dim();
    let mut out = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (e(n, i), e(n, j));
            let v = add(&br(a, &x, &lin(f, &y)), &lin(g, &br(a, &x, &y)));
            for (k, val) in v.into_iter().enumerate() {
                *out.c_mut(i, j, k) = val;
            }
        }
    }
    out
}

pub fn special_left_alia_coalgebra(c: &Coalgebra, ff: &LinearMap, gg: &LinearMap) -> Coalgebra {
    let n = c.dim();
    let mut out = Coalgebra::zero(n);
    for i in 0..n {
        let x = e(n, i);
        let mut t = t2(n, n);
        for (x1, x2) in sweedler(c, &x) {
            outer2(&mut t, &one(), &x1, &lin(ff, &x2));
        }
        for (u, v) in sweedler(c, &lin(gg, &x)) {
            outer2(&mut t, &one(), &u, &v);
        }
        for (j, row) in t.into_iter().enumerate() {
            for (k, val) in row.into_iter().enumerate() {
                *out.d_mut(i, j, k) = val;
            }
        }
    }
    out
}

/// `[x + u, y + v] = [x, y] + ℓ(x)v + r(y)u`.
pub fn semidirect(a: &Algebra, rep: &Representation) -> Algebra {
    let (n, m) = (a.dim(), rep.rep_dim());
    let mut out = Algebra::zero(n + m);
    for i in 0..n + m {
        for j in 0..n + m {
            let split = |k: usize| -> (V, V) {
                if k < n {
                    (e(n, k), zero(m))
                } else {
                    (zero(n), e(m, k - n))
                }
            };
            let ((x, u), (y, v)) = (split(i), split(j));
            let top = br(a, &x, &y);
            let bottom = add(&ell(rep, &x, &v), &arr(rep, &y, &u));
            for (k, val) in top.into_iter().chain(bottom).enumerate() {
                *out.c_mut(i, j, k) = val;
            }
        }
    }
    out
}

/// `⟨ρ*(x)u*, v⟩ = −⟨u*, ρ(x)v⟩` applied to `(ℓ, r)`, giving `(ℓ*, ℓ* − r*)`.
pub fn dual_representation(rep: &Representation) -> Representation {
    let m = rep.rep_dim();
    let star = |mat: &Matrix| -> Matrix {
        // column u* of ρ*(x): coefficient on v* is −⟨u*, ρ(x) v⟩
        Matrix::from_fn(m, m, |vrow, ucol| -mat.get(ucol, vrow))
    };
    let ell: Vec<Matrix> = rep.ell.iter().map(star).collect();
    let arr: Vec<Matrix> = rep
        .ell
        .iter()
        .zip(&rep.arr)
        .map(|(l, r)| &star(l) - &star(r))
        .collect();
    Representation::new(m, ell, arr).expect("shapes")
}

/// Bracket on `A ⊕ B` assembled from the two actions.
pub fn matched_sum(
    a: &Algebra,
    b: &Algebra,
    rep_ab: &Representation,
    rep_ba: &Representation,
) -> Algebra {
    let (n, m) = (a.dim(), b.dim());
    let mut out = Algebra::zero(n + m);
    let split = |k: usize| -> (V, V) {
        if k < n {
            (e(n, k), zero(m))
        } else {
            (zero(n), e(m, k - n))
        }
    };
    for i in 0..n + m {
        for j in 0..n + m {
            let ((x, p), (y, q)) = (split(i), split(j));
            // [x, y]_A + ℓ_B(a)y + r_B(b)x  and  [a, b]_B + ℓ_A(x)b + r_A(y)a
            let top = add(
                &add(&br(a, &x, &y), &ell(rep_ba, &p, &y)),
                &arr(rep_ba, &q, &x),
            );
            let bottom = add(
                &add(&br(b, &p, &q), &ell(rep_ab, &x, &q)),
                &arr(rep_ab, &y, &p),
            );
            for (k, val) in top.into_iter().chain(bottom).enumerate() {
                *out.c_mut(i, j, k) = val;
            }
        }
    }
    out
}

/// `⟨[a*, b*], x⟩ = ⟨a* ⊗ b*, Δ(x)⟩`.
pub fn dual_of_coalgebra(c: &Coalgebra) -> Algebra {
    let n = c.dim();
    let mut out = Algebra::zero(n);
    for x in 0..n {
        for (u, v) in sweedler(c, &e(n, x)) {
            for (p, up) in u.iter().enumerate() {
                for (q, vq) in v.iter().enumerate() {
                    *out.c_mut(p, q, x) += &(up * vq);
                }
            }
        }
    }
    out
}

/// Canonical order for comparing entry lists.
pub fn sorted(mut v: Vec<Entry>) -> Vec<Entry> {
    v.sort_by(|a, b| (a.law, a.part, &a.index).cmp(&(b.law, b.part, &b.index)));
    v
}
