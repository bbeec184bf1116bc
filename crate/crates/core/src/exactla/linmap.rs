//! Exact linear maps between labelled spaces.
//!
//! Storage is column-sparse: column `j` lists the nonzero entries of the image
//! of basis vector `j`, sorted by row with no explicit zeros, so structural
//! equality of two maps is equality of the matrices.

use crate::error::Error;
use crate::exactla::scalar::{Field, Scalar};
use crate::exactla::space::Space;

type Column = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    dom: Space,
    cod: Space,
    field: Field,
    cols: Vec<Column>,
}

/// Position and values of the first entry where two maps disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub col: usize,
    pub row: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

fn normalize(mut col: Column) -> Column {
    col.sort_by_key(|e| e.0);
    let mut out: Column = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = &*lv + &v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `dst - c * src` on sorted sparse vectors.
fn sub_scaled(dst: &[(usize, Scalar)], c: &Scalar, src: &[(usize, Scalar)]) -> Column {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        if j == src.len() || (i < dst.len() && dst[i].0 < src[j].0) {
            out.push(dst[i].clone());
            i += 1;
        } else if i == dst.len() || src[j].0 < dst[i].0 {
            out.push((src[j].0, -&(c * &src[j].1)));
            j += 1;
        } else {
            let v = &dst[i].1 - &(c * &src[j].1);
            if !v.is_zero() {
                out.push((dst[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup(col: &[(usize, Scalar)], row: usize) -> Option<&Scalar> {
    col.binary_search_by_key(&row, |e| e.0).ok().map(|k| &col[k].1)
}

/// Mixed-radix digits of `idx` for the given factor dimensions.
pub fn digits(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub fn undigits(ds: &[usize], dims: &[usize]) -> usize {
    ds.iter().zip(dims).fold(0, |acc, (d, n)| acc * n + d)
}

impl LinMap {
    /// Builds a map from unsorted, possibly duplicated column entries;
    /// duplicates are summed and zeros dropped.
    pub fn from_columns(dom: Space, cod: Space, field: Field, cols: Vec<Column>) -> Self {
        assert_eq!(cols.len(), dom.dim(), "column count must equal domain dimension");
        let cols: Vec<Column> = cols.into_iter().map(normalize).collect();
        debug_assert!(cols.iter().flatten().all(|(r, _)| *r < cod.dim()));
        LinMap { dom, cod, field, cols }
    }

    pub fn from_fn(dom: Space, cod: Space, field: Field, mut f: impl FnMut(usize) -> Column) -> Self {
        let cols = (0..dom.dim()).map(&mut f).collect();
        LinMap::from_columns(dom, cod, field, cols)
    }

    /// Dense row-major input, `cod.dim` rows of `dom.dim` entries.
    pub fn from_dense(dom: Space, cod: Space, field: Field, rows: &[Vec<Scalar>]) -> Result<Self, Error> {
        if rows.len() != cod.dim() || rows.iter().any(|r| r.len() != dom.dim()) {
            return Err(Error::Shape(format!(
                "expected {}x{} matrix for {dom} -> {cod}",
                cod.dim(),
                dom.dim()
            )));
        }
        Ok(LinMap::from_fn(dom.clone(), cod, field, |j| {
            rows.iter().enumerate().map(|(i, r)| (i, r[j].clone())).collect()
        }))
    }

    pub fn from_i64_rows(dom: Space, cod: Space, field: Field, rows: &[&[i64]]) -> Result<Self, Error> {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        LinMap::from_dense(dom, cod, field, &rows)
    }

    pub fn identity(space: &Space, field: Field) -> Self {
        LinMap::from_fn(space.clone(), space.clone(), field, |j| vec![(j, field.one())])
    }

    pub fn zero(dom: &Space, cod: &Space, field: Field) -> Self {
        LinMap::from_fn(dom.clone(), cod.clone(), field, |_| Vec::new())
    }

    pub fn dom(&self) -> &Space {
        &self.dom
    }

    pub fn cod(&self) -> &Space {
        &self.cod
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        lookup(&self.cols[col], row)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.dom.dim()]; self.cod.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    /// Same matrix with new labels of equal dimension.
    pub fn relabel(&self, dom: &Space, cod: &Space) -> Result<Self, Error> {
        if dom.dim() != self.dom.dim() || cod.dim() != self.cod.dim() {
            return Err(Error::Shape(format!(
                "cannot relabel {} -> {} as {dom} -> {cod}",
                self.dom, self.cod
            )));
        }
        Ok(LinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            field: self.field,
            cols: self.cols.clone(),
        })
    }

    /// `g ∘ f`.
    pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap, Error> {
        if f.cod != g.dom {
            return Err(Error::DimensionMismatch {
                expected: g.dom.to_string(),
                found: f.cod.to_string(),
            });
        }
        let n = g.cod.dim();
        let mut acc: Vec<Option<Scalar>> = vec![None; n];
        let mut touched = Vec::new();
        let cols = f
            .cols
            .iter()
            .map(|fc| {
                for (k, fv) in fc {
                    for (i, gv) in &g.cols[*k] {
                        let p = gv * fv;
                        match &mut acc[*i] {
                            Some(s) => *s = &*s + &p,
                            slot @ None => {
                                *slot = Some(p);
                                touched.push(*i);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let mut col = Vec::with_capacity(touched.len());
                for &i in &touched {
                    let v = acc[i].take().unwrap();
                    if !v.is_zero() {
                        col.push((i, v));
                    }
                }
                touched.clear();
                col
            })
            .collect();
        Ok(LinMap {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            field: f.field,
            cols,
        })
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &LinMap) -> Result<LinMap, Error> {
        LinMap::compose(g, self)
    }

    /// Composite of a path of maps, applied left to right.
    pub fn chain(maps: &[&LinMap]) -> Result<LinMap, Error> {
        let (first, rest) = maps.split_first().expect("chain of no maps");
        rest.iter().try_fold((*first).clone(), |acc, m| acc.then(m))
    }

    /// Kronecker product, left factor most significant.
    pub fn tensor_map(f: &LinMap, g: &LinMap) -> LinMap {
        let gd = g.dom.dim();
        let gc = g.cod.dim();
        let dom = f.dom.tensor(&g.dom);
        let cod = f.cod.tensor(&g.cod);
        let mut cols = Vec::with_capacity(dom.dim());
        for fc in &f.cols {
            for gcol in &g.cols {
                let mut col = Vec::with_capacity(fc.len() * gcol.len());
                for (fi, fv) in fc {
                    for (gi, gv) in gcol {
                        col.push((fi * gc + gi, fv * gv));
                    }
                }
                cols.push(col);
            }
        }
        debug_assert_eq!(cols.len(), f.dom.dim() * gd);
        LinMap {
            dom,
            cod,
            field: f.field,
            cols,
        }
    }

    /// Kronecker product of a list of maps.
    pub fn tensor_all(maps: &[&LinMap]) -> LinMap {
        let (first, rest) = maps.split_first().expect("tensor_all of no maps");
        rest.iter().fold((*first).clone(), |acc, m| LinMap::tensor_map(&acc, m))
    }

    pub fn transpose(&self) -> LinMap {
        let mut cols: Vec<Column> = vec![Vec::new(); self.cod.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        LinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            field: self.field,
            cols,
        }
    }

    fn check_parallel(&self, other: &LinMap) -> Result<(), Error> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::Shape(format!(
                "maps {} -> {} and {} -> {} are not parallel",
                self.dom, self.cod, other.dom, other.cod
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, Error> {
        self.check_parallel(other)?;
        let minus_one = -&self.field.one();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| sub_scaled(a, &minus_one, b))
            .collect();
        Ok(LinMap { cols, ..self.clone() })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, Error> {
        self.check_parallel(other)?;
        let one = self.field.one();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| sub_scaled(a, &one, b))
            .collect();
        Ok(LinMap { cols, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, v)| (*i, c * v))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        LinMap { cols, ..self.clone() }
    }

    pub fn neg(&self) -> LinMap {
        self.scale(&-&self.field.one())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// First entry (scanning columns, then rows) where the matrices differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<Difference> {
        let zero = self.field.zero();
        for (j, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let (mut p, mut q) = (0, 0);
            loop {
                let ra = a.get(p).map(|e| e.0).unwrap_or(usize::MAX);
                let rb = b.get(q).map(|e| e.0).unwrap_or(usize::MAX);
                let row = ra.min(rb);
                let va = if ra == row { &a[p].1 } else { &zero };
                let vb = if rb == row { &b[q].1 } else { &zero };
                if va != vb {
                    return Some(Difference {
                        col: j,
                        row,
                        lhs: va.clone(),
                        rhs: vb.clone(),
                    });
                }
                if ra == row {
                    p += 1;
                }
                if rb == row {
                    q += 1;
                }
            }
        }
        None
    }

    /// Two-sided inverse by sparse Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<LinMap, Error> {
        let n = self.dom.dim();
        if n != self.cod.dim() {
            return Err(Error::NotInvertible(format!(
                "{} -> {} is not square",
                self.dom, self.cod
            )));
        }
        let t = self.transpose();
        let mut rows: Vec<Column> = t.cols;
        let mut aug: Vec<Column> = (0..n).map(|i| vec![(i, self.field.one())]).collect();
        for c in 0..n {
            let p = (c..n).find(|&r| lookup(&rows[r], c).is_some()).ok_or_else(|| {
                Error::NotInvertible(format!("{} -> {} is singular (column {c})", self.dom, self.cod))
            })?;
            rows.swap(c, p);
            aug.swap(c, p);
            let inv = lookup(&rows[c], c).unwrap().inv().unwrap();
            for e in rows[c].iter_mut().chain(aug[c].iter_mut()) {
                e.1 = &e.1 * &inv;
            }
            let (pr, pa) = (rows[c].clone(), aug[c].clone());
            for r in 0..n {
                if r == c {
                    continue;
                }
                if let Some(f) = lookup(&rows[r], c).cloned() {
                    rows[r] = sub_scaled(&rows[r], &f, &pr);
                    aug[r] = sub_scaled(&aug[r], &f, &pa);
                }
            }
        }
        let rowmap = LinMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            field: self.field,
            cols: aug,
        };
        // `aug` holds rows of the inverse, indexed like columns of `self`.
        let inv = rowmap.transpose();
        Ok(LinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            field: self.field,
            cols: inv.cols,
        })
    }

    /// Reorders tensor blocks: output block `k` is input block `perm[k]`.
    pub fn permute_factors(blocks: &[Space], perm: &[usize], field: Field) -> LinMap {
        assert_eq!(blocks.len(), perm.len());
        let dims: Vec<usize> = blocks.iter().map(Space::dim).collect();
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let dom = Space::tensor_all(blocks);
        let cod = Space::tensor_all(perm.iter().map(|&p| &blocks[p]));
        LinMap::from_fn(dom, cod, field, |j| {
            let d = digits(j, &dims);
            let od: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
            vec![(undigits(&od, &out_dims), field.one())]
        })
    }

    /// The symmetry `v ⊗ w → w ⊗ v`.
    pub fn flip(v: &Space, w: &Space, field: Field) -> LinMap {
        LinMap::permute_factors(&[v.clone(), w.clone()], &[1, 0], field)
    }

    /// `f: x ⊗ a → y` to `x → hom(a, y)`.
    pub fn curry(f: &LinMap, x: &Space, a: &Space) -> Result<LinMap, Error> {
        if f.dom != x.tensor(a) {
            return Err(Error::NotATensorDomain(format!("{} is not {x}⊗{a}", f.dom)));
        }
        let da = a.dim();
        let cod = Space::hom(a, &f.cod);
        Ok(LinMap::from_fn(x.clone(), cod, f.field, |xi| {
            let mut col = Vec::new();
            for ai in 0..da {
                for (y, v) in &f.cols[xi * da + ai] {
                    col.push((y * da + ai, v.clone()));
                }
            }
            col
        }))
    }

    /// `g: x → hom(a, y)` to `x ⊗ a → y`.
    pub fn uncurry(g: &LinMap) -> Result<LinMap, Error> {
        let (a, y) = g
            .cod
            .hom_parts()
            .ok_or_else(|| Error::Shape(format!("{} is not a hom space", g.cod)))?;
        let da = a.dim();
        let dom = g.dom.tensor(a);
        let mut cols: Vec<Column> = vec![Vec::new(); dom.dim()];
        for (xi, col) in g.cols.iter().enumerate() {
            for (idx, v) in col {
                cols[xi * da + idx % da].push((idx / da, v.clone()));
            }
        }
        Ok(LinMap::from_columns(dom, y.clone(), g.field, cols))
    }

    /// `h ↦ g ∘ h ∘ f` as a map `hom(f.cod, g.dom) → hom(f.dom, g.cod)`.
    pub fn hom_map(f: &LinMap, g: &LinMap) -> LinMap {
        let k = LinMap::tensor_map(g, &f.transpose());
        let dom = Space::hom(&f.cod, &g.dom);
        let cod = Space::hom(&f.dom, &g.cod);
        LinMap { dom, cod, ..k }
    }

    /// Evaluation `hom(a, y) ⊗ a → y`.
    pub fn evaluation(a: &Space, y: &Space, field: Field) -> LinMap {
        let id = LinMap::identity(&Space::hom(a, y), field);
        LinMap::uncurry(&id).expect("identity on a hom space")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(name: &str, d: usize) -> Space {
        Space::generator(name, d)
    }

    #[test]
    fn compose_swaps_rows() {
        let q = Field::Rational;
        let v = sp("V", 2);
        let swap = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[0, 1], &[1, 0]]).unwrap();
        let m = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[1, 2], &[3, 4]]).unwrap();
        let expect = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[3, 4], &[1, 2]]).unwrap();
        assert_eq!(LinMap::compose(&swap, &m).unwrap(), expect);
        assert_eq!(LinMap::compose(&LinMap::identity(&v, q), &m).unwrap(), m);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let q = Field::Rational;
        let f = LinMap::zero(&Space::unit(), &sp("V", 2), q);
        let g = LinMap::zero(&sp("W", 3), &Space::unit(), q);
        assert!(matches!(LinMap::compose(&g, &f), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn kronecker_block_layout() {
        let q = Field::Rational;
        let v = sp("V", 2);
        let w = sp("W", 2);
        let a = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[1, 1], &[0, 1]]).unwrap();
        let b = LinMap::from_i64_rows(w.clone(), w.clone(), q, &[&[0, 1], &[1, 0]]).unwrap();
        let vw = v.tensor(&w);
        let expect = LinMap::from_i64_rows(
            vw.clone(),
            vw,
            q,
            &[&[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]],
        )
        .unwrap();
        assert_eq!(LinMap::tensor_map(&a, &b), expect);
    }

    #[test]
    fn kronecker_of_scalars_and_identities() {
        let q = Field::Rational;
        let k = Space::unit();
        let two = LinMap::from_i64_rows(k.clone(), k.clone(), q, &[&[2]]).unwrap();
        let three = LinMap::from_i64_rows(k.clone(), k.clone(), q, &[&[3]]).unwrap();
        assert_eq!(LinMap::tensor_map(&two, &three).entry(0, 0), q.from_i64(6));
        let i2 = LinMap::identity(&sp("V", 2), q);
        let i3 = LinMap::identity(&sp("W", 3), q);
        assert!(LinMap::tensor_map(&i2, &i3).is_identity());
    }

    #[test]
    fn curry_of_evaluation_is_identity() {
        let q = Field::Rational;
        let a = sp("A", 2);
        let b = sp("B", 2);
        let ev = LinMap::evaluation(&a, &b, q);
        let h = Space::hom(&a, &b);
        let c = LinMap::curry(&ev, &h, &a).unwrap();
        assert!(c.is_identity());
        // brute force: ev(E_{y,a'} ⊗ e_a) = δ_{a,a'} e_y
        for idx in 0..h.dim() {
            for ai in 0..2 {
                let col = ev.column(idx * 2 + ai);
                if idx % 2 == ai {
                    assert_eq!(col, &[(idx / 2, q.one())]);
                } else {
                    assert!(col.is_empty());
                }
            }
        }
    }

    #[test]
    fn curry_with_unit_left_factor() {
        let q = Field::Rational;
        let a = sp("A", 2);
        let b = sp("B", 3);
        let f = LinMap::from_i64_rows(a.clone(), b.clone(), q, &[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        let k = Space::unit();
        let c = LinMap::curry(&f, &k, &a).unwrap();
        assert_eq!(c.dom(), &k);
        // single column listing f row-major
        let expect: Vec<(usize, Scalar)> = (1..=6).map(|v| (v as usize - 1, q.from_i64(v))).collect();
        assert_eq!(c.column(0), &expect[..]);
        assert!(matches!(
            LinMap::curry(&f, &sp("X", 1), &a),
            Err(Error::NotATensorDomain(_))
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let q = Field::Rational;
        let v = sp("V", 3);
        let m = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[0, 2, 1], &[1, 1, 0], &[0, 0, 3]]).unwrap();
        let mi = m.inverse().unwrap();
        assert!(LinMap::compose(&m, &mi).unwrap().is_identity());
        assert!(LinMap::compose(&mi, &m).unwrap().is_identity());
        let s = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).unwrap();
        assert!(matches!(s.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn hom_map_is_pre_and_post_composition() {
        let q = Field::Rational;
        let v = sp("V", 2);
        let v2 = sp("V'", 3);
        let w = sp("W", 2);
        let w2 = sp("W'", 1);
        let f = LinMap::from_i64_rows(v.clone(), v2.clone(), q, &[&[1, 0], &[2, 1], &[0, -1]]).unwrap();
        let g = LinMap::from_i64_rows(w.clone(), w2.clone(), q, &[&[3, -2]]).unwrap();
        let hm = LinMap::hom_map(&f, &g);
        let hv = Space::hom(&v2, &w);
        for idx in 0..hv.dim() {
            let h = LinMap::from_fn(v2.clone(), w.clone(), q, |a| {
                if a == idx % 3 {
                    vec![(idx / 3, q.one())]
                } else {
                    vec![]
                }
            });
            let direct = LinMap::compose(&g, &LinMap::compose(&h, &f).unwrap()).unwrap();
            let via = LinMap::curry(
                &direct.relabel(&Space::unit().tensor(&v), &w2).unwrap(),
                &Space::unit(),
                &v,
            )
            .unwrap();
            let col = hm.column(idx);
            assert_eq!(col, via.column(0));
        }
    }

    #[test]
    fn permute_three_blocks() {
        let q = Field::Rational;
        let a = sp("A", 2);
        let b = sp("B", 3);
        let c = sp("C", 2);
        let p = LinMap::permute_factors(&[a.clone(), b.clone(), c.clone()], &[2, 0, 1], q);
        assert_eq!(p.cod(), &Space::tensor_all([&c, &a, &b]));
        // e_(1,2,0) -> e_(0,1,2)
        let j = undigits(&[1, 2, 0], &[2, 3, 2]);
        assert_eq!(p.column(j), &[(undigits(&[0, 1, 2], &[2, 2, 3]), q.one())]);
        let back = LinMap::permute_factors(&[c, a, b], &[1, 2, 0], q);
        assert!(LinMap::compose(&back, &p).unwrap().is_identity());
    }

    #[test]
    fn first_difference_reports_entries() {
        let q = Field::Rational;
        let v = sp("V", 2);
        let m = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[1, 0], &[0, 1]]).unwrap();
        let n = LinMap::from_i64_rows(v.clone(), v.clone(), q, &[&[1, 0], &[5, 1]]).unwrap();
        let d = m.first_difference(&n).unwrap();
        assert_eq!((d.col, d.row), (0, 1));
        assert_eq!((d.lhs, d.rhs), (q.zero(), q.from_i64(5)));
        assert!(m.first_difference(&m).is_none());
    }
}
