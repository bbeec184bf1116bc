//! Bialgebras given by structure constants, and cobraidings on them.
//!
//! A cobraiding is a convolution-invertible functional `r: B⊗B → K`. The
//! laws checked here, in Sweedler notation, are
//!
//! ```text
//! CB1  r(ab ⊗ c) = Σ r(a ⊗ c₂) r(b ⊗ c₁)
//! CB2  r(a ⊗ bc) = Σ r(a₁ ⊗ b) r(a₂ ⊗ c)
//! CB3  Σ r(a₁ ⊗ b₁) b₂a₂ = Σ a₁b₁ r(a₂ ⊗ b₂)
//! ```
//!
//! which are exactly the conditions for `y(b⊗x⊗b'⊗y) = Σ r(b₁⊗b'₁) b'₂⊗y⊗b₂⊗x`
//! to be a braiding on the comonad `B⊗−`.

use crate::error::Error;
use crate::exactla::{Field, LinMap, Scalar, Space};
use crate::report::{AxiomReport, Law};

pub const BIALGEBRA_LAWS: [&str; 7] = ["assoc", "unit-l", "unit-r", "coassoc", "counit-l", "counit-r", "compat"];
pub const COBRAIDING_LAWS: [&str; 4] = ["inv", "CB1", "CB2", "CB3"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    space: Space,
    field: Field,
    mu: LinMap,
    eta: LinMap,
    delta: LinMap,
    eps: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobraiding {
    pub r: LinMap,
    pub rbar: LinMap,
}

fn expect_shape(m: &LinMap, dom: &Space, cod: &Space, what: &str) -> Result<(), Error> {
    if m.dom().dim() != dom.dim() || m.cod().dim() != cod.dim() {
        return Err(Error::Shape(format!(
            "{what} is {}x{}, expected {}x{}",
            m.cod().dim(),
            m.dom().dim(),
            cod.dim(),
            dom.dim()
        )));
    }
    Ok(())
}

impl Bialgebra {
    /// Assembles a bialgebra from its four structure maps; only shapes are
    /// checked here, the laws by [`Bialgebra::check`].
    pub fn new(space: Space, field: Field, mu: LinMap, eta: LinMap, delta: LinMap, eps: LinMap) -> Result<Self, Error> {
        let k = Space::unit();
        let bb = space.tensor(&space);
        expect_shape(&mu, &bb, &space, "mu")?;
        expect_shape(&eta, &k, &space, "eta")?;
        expect_shape(&delta, &space, &bb, "delta")?;
        expect_shape(&eps, &space, &k, "eps")?;
        Ok(Bialgebra {
            mu: mu.relabel(&bb, &space)?,
            eta: eta.relabel(&k, &space)?,
            delta: delta.relabel(&space, &bb)?,
            eps: eps.relabel(&space, &k)?,
            space,
            field,
        })
    }

    /// Builds from integer structure constants: `mul(i, j)` lists
    /// `(k, c)` with `e_i e_j = Σ c e_k`, `comul(i)` lists `((j, k), c)`.
    pub fn from_constants(
        basis: Vec<String>,
        field: Field,
        mul: impl Fn(usize, usize) -> Vec<(usize, i64)>,
        unit: usize,
        comul: impl Fn(usize) -> Vec<((usize, usize), i64)>,
        counit: impl Fn(usize) -> i64,
    ) -> Self {
        let n = basis.len();
        let b = Space::with_basis("B", basis);
        let k = Space::unit();
        let bb = b.tensor(&b);
        let conv = |v: Vec<(usize, i64)>| v.into_iter().map(|(i, c)| (i, field.from_i64(c))).collect();
        let mu = LinMap::from_fn(bb.clone(), b.clone(), field, |j| conv(mul(j / n, j % n)));
        let eta = LinMap::from_fn(k.clone(), b.clone(), field, |_| vec![(unit, field.one())]);
        let delta = LinMap::from_fn(b.clone(), bb, field, |i| {
            conv(comul(i).into_iter().map(|((p, q), c)| (p * n + q, c)).collect())
        });
        let eps = LinMap::from_fn(b.clone(), k, field, |i| conv(vec![(0, counit(i))]));
        Bialgebra {
            space: b,
            field,
            mu,
            eta,
            delta,
            eps,
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mu(&self) -> &LinMap {
        &self.mu
    }

    pub fn eta(&self) -> &LinMap {
        &self.eta
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn eps(&self) -> &LinMap {
        &self.eps
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(&self.space, self.field)
    }

    /// `ε ⊗ ε : B⊗B → K`, the unit for convolution.
    pub fn eps2(&self) -> LinMap {
        LinMap::tensor_map(&self.eps, &self.eps)
    }

    /// Permutation of `k` copies of `B`.
    pub fn shuffle(&self, perm: &[usize]) -> LinMap {
        let blocks = vec![self.space.clone(); perm.len()];
        LinMap::permute_factors(&blocks, perm, self.field)
    }

    /// Comultiplication of `B⊗B`: `a⊗b ↦ Σ a₁⊗b₁⊗a₂⊗b₂`.
    pub fn delta2(&self) -> LinMap {
        LinMap::tensor_map(&self.delta, &self.delta)
            .then(&self.shuffle(&[0, 2, 1, 3]))
            .expect("shapes agree")
    }

    pub fn is_commutative(&self) -> bool {
        let sw = LinMap::flip(&self.space, &self.space, self.field);
        self.mu == sw.then(&self.mu).unwrap()
    }

    /// The seven bialgebra laws. `compat` covers all four conditions making
    /// `Δ` and `ε` algebra maps.
    pub fn check(&self) -> Result<AxiomReport, Error> {
        let i = self.id();
        let k = LinMap::identity(&Space::unit(), self.field);
        let t = LinMap::tensor_map;
        let mut rep = AxiomReport::default();
        let none: [String; 0] = [];

        let mut law = Law::new("assoc");
        law.check(
            &none,
            &t(&self.mu, &i).then(&self.mu)?,
            &t(&i, &self.mu).then(&self.mu)?,
        )?;
        rep.push(law.finish());

        let mut law = Law::new("unit-l");
        law.check(
            &none,
            &t(&self.eta, &i).then(&self.mu)?.relabel(&self.space, &self.space)?,
            &i,
        )?;
        rep.push(law.finish());

        let mut law = Law::new("unit-r");
        law.check(
            &none,
            &t(&i, &self.eta).then(&self.mu)?.relabel(&self.space, &self.space)?,
            &i,
        )?;
        rep.push(law.finish());

        let mut law = Law::new("coassoc");
        law.check(
            &none,
            &self.delta.then(&t(&self.delta, &i))?,
            &self.delta.then(&t(&i, &self.delta))?,
        )?;
        rep.push(law.finish());

        let mut law = Law::new("counit-l");
        law.check(
            &none,
            &self.delta.then(&t(&self.eps, &i))?.relabel(&self.space, &self.space)?,
            &i,
        )?;
        rep.push(law.finish());

        let mut law = Law::new("counit-r");
        law.check(
            &none,
            &self.delta.then(&t(&i, &self.eps))?.relabel(&self.space, &self.space)?,
            &i,
        )?;
        rep.push(law.finish());

        let mut law = Law::new("compat");
        law.check(
            &["Δμ".to_string()],
            &self.mu.then(&self.delta)?,
            &self.delta2().then(&t(&self.mu, &self.mu))?,
        )?;
        law.check(
            &["Δη".to_string()],
            &self.eta.then(&self.delta)?,
            &t(&self.eta, &self.eta),
        )?;
        law.check(&["εμ".to_string()], &self.mu.then(&self.eps)?, &self.eps2())?;
        law.check(&["εη".to_string()], &self.eta.then(&self.eps)?, &k)?;
        rep.push(law.finish());
        Ok(rep)
    }

    /// `Ok(())` when every bialgebra law holds.
    pub fn validate(&self) -> Result<(), Error> {
        let rep = self.check()?;
        if rep.all_pass() {
            Ok(())
        } else {
            Err(Error::BialgebraAxiomFailure(rep.failing().join(", ")))
        }
    }

    /// Convolution `(f*g)(a⊗b) = Σ f(a₁⊗b₁) g(a₂⊗b₂)` of functionals on `B⊗B`.
    pub fn convolution(&self, f: &LinMap, g: &LinMap) -> Result<LinMap, Error> {
        let bb = self.space.tensor(&self.space);
        let k = Space::unit();
        let f = f.relabel(&bb, &k)?;
        let g = g.relabel(&bb, &k)?;
        self.delta2().then(&LinMap::tensor_map(&f, &g))
    }

    /// The two-sided convolution inverse, found by inverting `g ↦ f*g` on the
    /// dual of `B⊗B`.
    pub fn convolution_inverse(&self, f: &LinMap) -> Result<LinMap, Error> {
        let bb = self.space.tensor(&self.space);
        let k = Space::unit();
        let n = bb.dim();
        let dual = Space::generator("(B⊗B)*", n);
        let unit_fn = |j: usize| {
            LinMap::from_fn(bb.clone(), k.clone(), self.field, |c| {
                if c == j {
                    vec![(0, self.field.one())]
                } else {
                    vec![]
                }
            })
        };
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let h = self.convolution(f, &unit_fn(j))?;
            cols.push(
                (0..n)
                    .filter_map(|c| {
                        let v = h.entry(0, c);
                        (!v.is_zero()).then_some((c, v))
                    })
                    .collect(),
            );
        }
        let left_mult = LinMap::from_columns(dual.clone(), dual.clone(), self.field, cols);
        let inv = left_mult
            .inverse()
            .map_err(|_| Error::NotInvertible("functional has no convolution inverse".into()))?;
        let e = self.eps2();
        let target: Vec<(usize, Scalar)> = (0..n)
            .filter_map(|c| {
                let v = e.entry(0, c);
                (!v.is_zero()).then_some((c, v))
            })
            .collect();
        let t = LinMap::from_columns(Space::unit(), dual, self.field, vec![target]);
        let g = t.then(&inv)?;
        Ok(LinMap::from_fn(bb, k, self.field, |c| {
            let v = g.entry(c, 0);
            if v.is_zero() {
                vec![]
            } else {
                vec![(0, v)]
            }
        }))
    }

    /// Checks `inv`, `CB1`, `CB2`, `CB3` for a cobraiding.
    pub fn check_cobraiding(&self, c: &Cobraiding) -> Result<AxiomReport, Error> {
        let bb = self.space.tensor(&self.space);
        let k = Space::unit();
        let r = c.r.relabel(&bb, &k)?;
        let rbar = c.rbar.relabel(&bb, &k)?;
        let i = self.id();
        let t = LinMap::tensor_map;
        let rr = t(&r, &r);
        let none: [String; 0] = [];
        let mut rep = AxiomReport::default();

        let mut law = Law::new("inv");
        let e = self.eps2();
        law.check(&["r*rbar".to_string()], &self.convolution(&r, &rbar)?, &e)?;
        law.check(&["rbar*r".to_string()], &self.convolution(&rbar, &r)?, &e)?;
        rep.push(law.finish());

        let mut law = Law::new("CB1");
        let lhs = t(&self.mu, &i).then(&r)?;
        let rhs = t(&t(&i, &i), &self.delta)
            .then(&self.shuffle(&[0, 3, 1, 2]))?
            .then(&rr)?;
        law.check(&none, &lhs, &rhs)?;
        rep.push(law.finish());

        let mut law = Law::new("CB2");
        let lhs = t(&i, &self.mu).then(&r)?;
        let rhs = t(&self.delta, &t(&i, &i))
            .then(&self.shuffle(&[0, 2, 1, 3]))?
            .then(&rr)?;
        law.check(&none, &lhs, &rhs)?;
        rep.push(law.finish());

        let mut law = Law::new("CB3");
        let dd = t(&self.delta, &self.delta);
        let lhs = dd.then(&self.shuffle(&[0, 2, 3, 1]))?.then(&t(&r, &self.mu))?;
        let rhs = dd.then(&self.shuffle(&[0, 2, 1, 3]))?.then(&t(&self.mu, &r))?;
        law.check(&none, &lhs, &rhs)?;
        rep.push(law.finish());
        Ok(rep)
    }

    /// A cobraiding from `r` alone, with `rbar` its convolution inverse.
    pub fn cobraiding(&self, r: LinMap) -> Result<Cobraiding, Error> {
        let bb = self.space.tensor(&self.space);
        let r = r.relabel(&bb, &Space::unit())?;
        let rbar = self.convolution_inverse(&r)?;
        Ok(Cobraiding { r, rbar })
    }

    /// `r = rbar = ε⊗ε`.
    pub fn trivial_cobraiding(&self) -> Cobraiding {
        Cobraiding {
            r: self.eps2(),
            rbar: self.eps2(),
        }
    }

    /// Functional on `B⊗B` from a table, `table[i][j] = r(e_i ⊗ e_j)`.
    pub fn functional(&self, table: &[Vec<Scalar>]) -> Result<LinMap, Error> {
        let n = self.dim();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("functional table must be {n}x{n}")));
        }
        let bb = self.space.tensor(&self.space);
        Ok(LinMap::from_fn(bb, Space::unit(), self.field, |c| {
            vec![(0, table[c / n][c % n].clone())]
        }))
    }
}

/// Group algebra of a finite group given by its multiplication table.
pub fn group_algebra(
    table: &[Vec<usize>],
    unit: usize,
    field: Field,
    names: Option<Vec<String>>,
) -> Result<Bialgebra, Error> {
    let n = table.len();
    if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) || unit >= n {
        return Err(Error::NotAGroup(
            "table is not a square table over its index set".into(),
        ));
    }
    for a in 0..n {
        if table[unit][a] != a || table[a][unit] != a {
            return Err(Error::NotAGroup(format!("{unit} is not a unit for element {a}")));
        }
        if !(0..n).any(|b| table[a][b] == unit && table[b][a] == unit) {
            return Err(Error::NotAGroup(format!("element {a} has no inverse")));
        }
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let names = names.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
    Ok(Bialgebra::from_constants(
        names,
        field,
        |a, b| vec![(table[a][b], 1)],
        unit,
        |a| vec![((a, a), 1)],
        |_| 1,
    ))
}

fn cyclic_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|a| match a {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{a}"),
        })
        .collect()
}

/// `K[Z/n]`, basis `g^a` at index `a`.
pub fn cyclic_group_algebra(n: usize, field: Field) -> Bialgebra {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_algebra(&table, 0, field, Some(cyclic_names(n))).expect("cyclic table is a group")
}

/// The one-dimensional bialgebra `K`.
pub fn trivial_bialgebra(field: Field) -> Bialgebra {
    cyclic_group_algebra(1, field)
}

/// Elements of S3 as images of (0, 1, 2), in basis order.
pub const S3_ELEMENTS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
pub const S3_NAMES: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];

/// `K[S3]`, product `(στ)(i) = σ(τ(i))`.
pub fn s3_group_algebra(field: Field) -> Bialgebra {
    let idx = |p: [usize; 3]| S3_ELEMENTS.iter().position(|q| *q == p).unwrap();
    let table: Vec<Vec<usize>> = S3_ELEMENTS
        .iter()
        .map(|s| S3_ELEMENTS.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    group_algebra(&table, 0, field, Some(S3_NAMES.iter().map(|s| s.to_string()).collect()))
        .expect("S3 table is a group")
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx`.
pub fn sweedler(field: Field) -> Bialgebra {
    // basis index: bit 0 = power of g, bit 1 = power of x, element g^i x^j
    let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let mul = |a: usize, b: usize| -> Vec<(usize, i64)> {
        let (ga, xa) = (a & 1, a >> 1);
        let (gb, xb) = (b & 1, b >> 1);
        if xa + xb > 1 {
            return vec![];
        }
        // g^ga x^xa g^gb x^xb = (-1)^(xa*gb) g^(ga+gb) x^(xa+xb)
        let sign = if xa * gb == 1 { -1 } else { 1 };
        vec![(((ga + gb) % 2) | ((xa + xb) << 1), sign)]
    };
    let comul = |a: usize| -> Vec<((usize, usize), i64)> {
        match a {
            0 => vec![((0, 0), 1)],
            1 => vec![((1, 1), 1)],
            2 => vec![((2, 0), 1), ((1, 2), 1)],
            _ => vec![((3, 1), 1), ((0, 3), 1)],
        }
    };
    Bialgebra::from_constants(names, field, mul, 0, comul, |a| if a < 2 { 1 } else { 0 })
}

/// `r(g^a ⊗ g^b) = ζ^{ab}` on `K[Z/n]`.
pub fn bicharacter_cobraiding(n: usize, zeta: &Scalar, field: Field) -> Result<(Bialgebra, Cobraiding), Error> {
    if !field.contains(zeta) || zeta.is_zero() || zeta.pow(n as i64) != field.one() {
        return Err(Error::NotARootOfUnity(format!("{zeta:?} does not satisfy ζ^{n} = 1")));
    }
    let b = cyclic_group_algebra(n, field);
    let table = |z: &Scalar| -> Vec<Vec<Scalar>> {
        (0..n)
            .map(|a| (0..n).map(|c| z.pow((a * c % n) as i64)).collect())
            .collect()
    };
    let r = b.functional(&table(zeta))?;
    let rbar = b.functional(&table(&zeta.inv().unwrap()))?;
    Ok((b, Cobraiding { r, rbar }))
}

/// The cobraiding family on Sweedler's algebra with `r(g⊗g) = -1`,
/// `r(x⊗x) = λ`, `r(g⊗x) = r(x⊗g) = 0`, `r(1⊗−) = r(−⊗1) = ε`.
pub fn sweedler_cobraiding(b: &Bialgebra, lambda: &Scalar) -> Result<Cobraiding, Error> {
    let f = b.field();
    let (o, z, l) = (f.one(), f.zero(), lambda.clone());
    let m = -&o;
    let ml = -&l;
    let table = vec![
        vec![o.clone(), o.clone(), z.clone(), z.clone()],
        vec![o.clone(), m.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), l.clone(), ml],
        vec![z.clone(), z, l.clone(), l],
    ];
    b.cobraiding(b.functional(&table)?)
}
