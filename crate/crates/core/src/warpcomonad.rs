//! The monoidal comonad `G = B ⊗ −` of a bialgebra, the skew monoidal
//! category `Vect[B]` it cowarps to, and braidings `y : GX⊗GY → GY⊗GX`.
//!
//! `Vect[B]` has `X ⋆ Y = X ⊗ B ⊗ Y`, unit `K`, and
//!
//! ```text
//! a(x⊗b⊗y⊗b'⊗z) = Σ x ⊗ bb'₁ ⊗ y ⊗ b'₂ ⊗ z
//! ℓ(b⊗x) = ε(b) x
//! r(x) = x ⊗ 1
//! ```

use std::sync::Arc;

use crate::bialg::{Bialgebra, Cobraiding};
use crate::error::Error;
use crate::exactla::{Field, LinMap, Space};
use crate::probes::{tuple_names, Probes};
use crate::report::{AxiomReport, Law};
use crate::skewcheck::{Braiding, SkewMonCat, SkewStructure};

pub const COMONAD_LAWS: [&str; 6] = [
    "comonad-coassoc",
    "comonad-counit",
    "G2-assoc",
    "G2-unit",
    "G2-delta",
    "G2-eps",
];
pub const Y_LAWS: [&str; 4] = ["eq:1", "eq:1a", "eq:1b", "eq:funny"];
pub const Y_CONSEQUENCE_LAWS: [&str; 3] = ["eq:y.delta1", "eq:y.delta", "y-coalgebra-map"];

#[derive(Clone, Debug)]
pub struct MonoidalComonad {
    b: Arc<Bialgebra>,
}

impl MonoidalComonad {
    /// Fails with `BialgebraAxiomFailure` unless every bialgebra law holds.
    pub fn from_bialgebra(b: Bialgebra) -> Result<Self, Error> {
        b.validate()?;
        Ok(MonoidalComonad { b: Arc::new(b) })
    }

    pub fn bialgebra(&self) -> &Bialgebra {
        &self.b
    }

    pub fn field(&self) -> Field {
        self.b.field()
    }

    /// The algebra's underlying space.
    pub fn bspace(&self) -> &Space {
        self.b.space()
    }

    fn id(&self, x: &Space) -> LinMap {
        LinMap::identity(x, self.field())
    }

    fn idb(&self) -> LinMap {
        self.b.id()
    }

    /// `GX = B ⊗ X`.
    pub fn g(&self, x: &Space) -> Space {
        self.bspace().tensor(x)
    }

    /// `Gf = 1_B ⊗ f`.
    pub fn g_map(&self, f: &LinMap) -> LinMap {
        LinMap::tensor_map(&self.idb(), f)
    }

    /// `δ_X = Δ ⊗ 1_X`.
    pub fn delta(&self, x: &Space) -> LinMap {
        LinMap::tensor_map(self.b.delta(), &self.id(x))
    }

    /// `ε_X = ε ⊗ 1_X`.
    pub fn eps(&self, x: &Space) -> LinMap {
        LinMap::tensor_map(self.b.eps(), &self.id(x))
    }

    /// `G2 = (μ ⊗ 1 ⊗ 1) ∘ (1 ⊗ flip_{X,B} ⊗ 1) : GX ⊗ GY → G(X ⊗ Y)`.
    pub fn g2(&self, x: &Space, y: &Space) -> LinMap {
        let f = self.field();
        let b = self.bspace();
        let sw = LinMap::tensor_all(&[&self.idb(), &LinMap::flip(x, b, f), &self.id(y)]);
        let m = LinMap::tensor_all(&[self.b.mu(), &self.id(x), &self.id(y)]);
        sw.then(&m).expect("G2 shapes")
    }

    /// `G0 = η : K → GK`.
    pub fn g0(&self) -> LinMap {
        self.b.eta().clone()
    }

    /// Cowarping map `v = G2_{X,GY} ∘ (1 ⊗ δ_Y) : GX ⊗ GY → G(X ⊗ GY)`.
    pub fn v(&self, x: &Space, y: &Space) -> LinMap {
        let pre = LinMap::tensor_map(&self.id(&self.g(x)), &self.delta(y));
        pre.then(&self.g2(x, &self.g(y))).expect("v shapes")
    }

    /// Comonad and monoidal-comonad laws on probe objects.
    pub fn check_laws(&self, probes: &Probes) -> Result<AxiomReport, Error> {
        let t = LinMap::tensor_map;
        let k = Space::unit();
        let mut coassoc = Law::new("comonad-coassoc");
        let mut counit = Law::new("comonad-counit");
        let mut unit = Law::new("G2-unit");
        let mut g2eps = Law::new("G2-eps");
        let mut g2delta = Law::new("G2-delta");
        let mut g2assoc = Law::new("G2-assoc");
        for p in probes.tuples(1) {
            let n = tuple_names(&p);
            let x = &p[0];
            let gx = self.g(x);
            coassoc.check(
                &n,
                &self.delta(x).then(&self.delta(&gx))?,
                &self.delta(x).then(&self.g_map(&self.delta(x)))?,
            )?;
            counit.check(&n, &self.delta(x).then(&self.eps(&gx))?, &self.id(&gx))?;
            counit.check(&n, &self.delta(x).then(&self.g_map(&self.eps(x)))?, &self.id(&gx))?;
            unit.check(&n, &t(&self.g0(), &self.id(&gx)).then(&self.g2(&k, x))?, &self.id(&gx))?;
            unit.check(&n, &t(&self.id(&gx), &self.g0()).then(&self.g2(x, &k))?, &self.id(&gx))?;
        }
        unit.check(
            &["I".into()],
            &self.g0().then(&self.delta(&k))?,
            &self.g0().then(&self.g_map(&self.g0()))?,
        )?;
        g2eps.check(&["I".into()], &self.g0().then(&self.eps(&k))?, &self.id(&k))?;
        for p in probes.tuples(2) {
            let n = tuple_names(&p);
            let (x, y) = (&p[0], &p[1]);
            let xy = x.tensor(y);
            g2eps.check(&n, &self.g2(x, y).then(&self.eps(&xy))?, &t(&self.eps(x), &self.eps(y)))?;
            let lhs = self.g2(x, y).then(&self.delta(&xy))?;
            let rhs = LinMap::chain(&[
                &t(&self.delta(x), &self.delta(y)),
                &self.g2(&self.g(x), &self.g(y)),
                &self.g_map(&self.g2(x, y)),
            ])?;
            g2delta.check(&n, &lhs, &rhs)?;
        }
        for p in probes.tuples(3) {
            let n = tuple_names(&p);
            let (x, y, z) = (&p[0], &p[1], &p[2]);
            let lhs = t(&self.g2(x, y), &self.id(&self.g(z))).then(&self.g2(&x.tensor(y), z))?;
            let rhs = t(&self.id(&self.g(x)), &self.g2(y, z)).then(&self.g2(x, &y.tensor(z)))?;
            g2assoc.check(&n, &lhs, &rhs)?;
        }
        let mut rep = AxiomReport::default();
        for law in [coassoc, counit, g2assoc, unit, g2delta, g2eps] {
            rep.push(law.finish());
        }
        Ok(rep)
    }
}

/// The cowarped structure on `Vect` for a monoidal comonad.
struct CowarpedVect {
    g: MonoidalComonad,
    drop_delta: bool,
}

impl SkewStructure for CowarpedVect {
    fn field(&self) -> Field {
        self.g.field()
    }

    fn unit(&self) -> Space {
        Space::unit()
    }

    fn tensor(&self, x: &Space, y: &Space) -> Space {
        Space::tensor_all([x, self.g.bspace(), y])
    }

    fn tensor_map(&self, f: &LinMap, g: &LinMap) -> LinMap {
        LinMap::tensor_all(&[f, &self.g.idb(), g])
    }

    fn assoc(&self, x: &Space, y: &Space, z: &Space) -> LinMap {
        let v = if self.drop_delta {
            // b⊗y⊗b'⊗z ↦ bb'⊗y⊗1⊗z
            let ins = LinMap::tensor_all(&[&self.g.idb(), &self.g.id(y), self.g.b.eta(), &self.g.id(z)]);
            self.g.g2(y, z).then(&ins).expect("tampered v shapes")
        } else {
            self.g.v(y, z)
        };
        LinMap::tensor_map(&self.g.id(x), &v)
    }

    fn left_unit(&self, x: &Space) -> LinMap {
        self.g.eps(x)
    }

    fn right_unit(&self, x: &Space) -> LinMap {
        LinMap::tensor_map(&self.g.id(x), self.g.b.eta())
    }
}

/// `Vect[B]`: `X ⋆ Y = X ⊗ B ⊗ Y` with `a = 1 ⊗ v`, `ℓ = ε ⊗ 1`, `r = 1 ⊗ η`.
pub fn skewmon_from_cowarp(g: &MonoidalComonad) -> SkewMonCat {
    SkewMonCat::new(Arc::new(CowarpedVect {
        g: g.clone(),
        drop_delta: false,
    }))
}

/// `Vect[B]` with the comultiplication left out of `v`, so that
/// `a(x⊗b⊗y⊗b'⊗z) = x⊗bb'⊗y⊗1⊗z`. Used as a mutation target.
pub fn tampered_skewmon(g: &MonoidalComonad) -> SkewMonCat {
    SkewMonCat::new(Arc::new(CowarpedVect {
        g: g.clone(),
        drop_delta: true,
    }))
}

/// A braiding on the comonad, determined by `core : B⊗B → B⊗B` through
/// `y(b⊗x⊗b'⊗y) = P((core(b⊗b')) ⊗ x ⊗ y)`, `P` moving `y` before `x`.
#[derive(Clone, Debug)]
pub struct BraidingOnComonad {
    g: MonoidalComonad,
    core: LinMap,
    core_inv: Option<LinMap>,
}

impl BraidingOnComonad {
    pub fn from_core(g: &MonoidalComonad, core: LinMap) -> Result<Self, Error> {
        let bb = g.bspace().tensor(g.bspace());
        let core = core.relabel(&bb, &bb)?;
        let core_inv = core.inverse().ok();
        Ok(BraidingOnComonad {
            g: g.clone(),
            core,
            core_inv,
        })
    }

    pub fn comonad(&self) -> &MonoidalComonad {
        &self.g
    }

    pub fn core(&self) -> &LinMap {
        &self.core
    }

    pub fn is_invertible(&self) -> bool {
        self.core_inv.is_some()
    }

    /// `y_{X,Y} : B⊗X⊗B⊗Y → B⊗Y⊗B⊗X`.
    pub fn y(&self, x: &Space, y: &Space) -> LinMap {
        self.assemble(&self.core, x, y)
    }

    fn assemble(&self, core: &LinMap, x: &Space, y: &Space) -> LinMap {
        let f = self.g.field();
        let b = self.g.bspace();
        let pre = LinMap::tensor_all(&[&self.g.idb(), &LinMap::flip(x, b, f), &self.g.id(y)]);
        let mid = LinMap::tensor_all(&[core, &self.g.id(x), &self.g.id(y)]);
        let post = LinMap::permute_factors(&[b.clone(), b.clone(), x.clone(), y.clone()], &[0, 3, 1, 2], f);
        LinMap::chain(&[&pre, &mid, &post]).expect("y shapes")
    }

    /// Inverse of `y_{X,Y}`, a map `B⊗Y⊗B⊗X → B⊗X⊗B⊗Y`.
    pub fn y_inv(&self, x: &Space, y: &Space) -> Result<LinMap, Error> {
        let ci = self
            .core_inv
            .as_ref()
            .ok_or_else(|| Error::NotInvertible("braiding core is singular".into()))?;
        let f = self.g.field();
        let b = self.g.bspace();
        let pre = LinMap::permute_factors(&[b.clone(), y.clone(), b.clone(), x.clone()], &[0, 2, 3, 1], f);
        let mid = LinMap::tensor_all(&[ci, &self.g.id(x), &self.g.id(y)]);
        let post = LinMap::tensor_all(&[&self.g.idb(), &LinMap::flip(b, x, f), &self.g.id(y)]);
        LinMap::chain(&[&pre, &mid, &post])
    }
}

/// `y(b⊗x⊗b'⊗y) = Σ r(b₁⊗b'₁) b'₂⊗y⊗b₂⊗x`.
pub fn y_from_cobraiding(g: &MonoidalComonad, c: &Cobraiding) -> Result<BraidingOnComonad, Error> {
    let b = g.bialgebra();
    let bb = b.space().tensor(b.space());
    let r = c.r.relabel(&bb, &Space::unit())?;
    // b⊗b' ↦ b₁⊗b₂⊗b'₁⊗b'₂ ↦ b₁⊗b'₁⊗b'₂⊗b₂ ↦ r(b₁⊗b'₁) b'₂⊗b₂
    let core = LinMap::chain(&[
        &LinMap::tensor_map(b.delta(), b.delta()),
        &b.shuffle(&[0, 2, 3, 1]),
        &LinMap::tensor_all(&[&r, &b.id(), &b.id()]),
    ])?;
    BraidingOnComonad::from_core(g, core)
}

/// `r = (ε ⊗ ε) ∘ core`.
pub fn cobraiding_from_y(y: &BraidingOnComonad) -> LinMap {
    y.core
        .then(&y.g.bialgebra().eps2())
        .expect("core is an endomorphism of B⊗B")
}

struct VectBraiding(BraidingOnComonad);

impl Braiding for VectBraiding {
    fn component(&self, x: &Space, a: &Space, b: &Space) -> LinMap {
        LinMap::tensor_map(&self.0.g.id(x), &self.0.y(a, b))
    }

    fn inverse_component(&self, x: &Space, a: &Space, b: &Space) -> Result<LinMap, Error> {
        Ok(LinMap::tensor_map(&self.0.g.id(x), &self.0.y_inv(a, b)?))
    }
}

/// `s_{X,Y,Z} = 1_X ⊗ y_{Y,Z}` on `Vect[B]`.
pub fn s_from_y(y: &BraidingOnComonad) -> Arc<dyn Braiding> {
    Arc::new(VectBraiding(y.clone()))
}

/// `Vect[B]` braided by `1 ⊗ y`.
pub fn braided_vect(y: &BraidingOnComonad) -> SkewMonCat {
    skewmon_from_cowarp(&y.g).with_braiding(s_from_y(y))
}

/// Reads a braiding on the comonad off a braiding on `Vect[B]`:
/// `y_{Y,Z} = s_{I,Y,Z}`, so the core is `s_{I,K,K}`.
pub fn y_from_s(c: &SkewMonCat, g: &MonoidalComonad) -> Result<BraidingOnComonad, Error> {
    let k = Space::unit();
    let core = c.s(&k, &k, &k)?;
    BraidingOnComonad::from_core(g, core)
}

/// Compares `s_{I,Y,Z}` with `y_{Y,Z}` on all probe pairs.
pub fn check_s_restricts_to_y(c: &SkewMonCat, y: &BraidingOnComonad, probes: &Probes) -> Result<AxiomReport, Error> {
    let k = Space::unit();
    let mut law = Law::new("s-restricts-to-y");
    for p in probes.tuples(2) {
        law.check(&tuple_names(&p), &c.s(&k, &p[0], &p[1])?, &y.y(&p[0], &p[1]))?;
    }
    let mut rep = AxiomReport::default();
    rep.push(law.finish());
    Ok(rep)
}

/// The four diagrams characterising braidings on the comonad.
pub fn check_y_axioms(g: &MonoidalComonad, y: &BraidingOnComonad, probes: &Probes) -> Result<AxiomReport, Error> {
    if !y.is_invertible() {
        return Err(Error::NotInvertible("braiding core is singular".into()));
    }
    let t = LinMap::tensor_map;
    let id = |x: &Space| LinMap::identity(x, g.field());
    let mut ybe = Law::new("eq:1");
    let mut e1a = Law::new("eq:1a");
    let mut e1b = Law::new("eq:1b");
    let mut funny = Law::new("eq:funny");
    for p in probes.tuples(3) {
        let n = tuple_names(&p);
        let (x, yy, z) = (&p[0], &p[1], &p[2]);
        let (gx, gy, gz) = (g.g(x), g.g(yy), g.g(z));

        let lhs = LinMap::chain(&[
            &t(&y.y(x, yy), &id(&gz)),
            &t(&id(&gy), &y.y(x, z)),
            &t(&y.y(yy, z), &id(&gx)),
        ])?;
        let rhs = LinMap::chain(&[
            &t(&id(&gx), &y.y(yy, z)),
            &t(&y.y(x, z), &id(&gy)),
            &t(&id(&gz), &y.y(x, yy)),
        ])?;
        ybe.check(&n, &lhs, &rhs)?;

        let lhs = LinMap::chain(&[
            &t(&y.y(x, yy), &id(&gz)),
            &t(&id(&gy), &y.y(x, z)),
            &t(&g.v(yy, z), &id(&gx)),
        ])?;
        let rhs = t(&id(&gx), &g.v(yy, z)).then(&y.y(x, &yy.tensor(&gz)))?;
        e1a.check(&n, &lhs, &rhs)?;

        let lhs = LinMap::chain(&[
            &t(&id(&gx), &y.y(yy, z)),
            &t(&y.y(x, z), &id(&gy)),
            &t(&id(&gz), &g.v(x, yy)),
        ])?;
        let rhs = t(&g.v(x, yy), &id(&gz)).then(&y.y(&x.tensor(&gy), z))?;
        e1b.check(&n, &lhs, &rhs)?;

        let lhs = LinMap::chain(&[
            &t(&g.v(x, yy), &id(&gz)),
            &g.v(&x.tensor(&gy), z),
            &g.g_map(&t(&id(x), &y.y(yy, z))),
        ])?;
        let rhs = LinMap::chain(&[
            &t(&id(&gx), &y.y(yy, z)),
            &t(&g.v(x, z), &id(&gy)),
            &g.v(&x.tensor(&gz), yy),
        ])?;
        funny.check(&n, &lhs, &rhs)?;
    }
    let mut rep = AxiomReport::default();
    for law in [ybe, e1a, e1b, funny] {
        rep.push(law.finish());
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::{
        bicharacter_cobraiding, cyclic_group_algebra, s3_group_algebra, sweedler, sweedler_cobraiding,
        trivial_bialgebra,
    };
    use crate::exactla::{Field, Scalar};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn g2_on_z2() {
        let g = MonoidalComonad::from_bialgebra(cyclic_group_algebra(2, q())).unwrap();
        let x = Space::generator("X", 2);
        let y = Space::generator("Y", 2);
        let m = g.g2(&x, &y);
        // g⊗x1⊗g⊗y0 ↦ e⊗x1⊗y0
        let col = crate::exactla::undigits(&[1, 1, 1, 0], &[2, 2, 2, 2]);
        let row = crate::exactla::undigits(&[0, 1, 0], &[2, 2, 2]);
        assert_eq!(m.column(col), &[(row, q().one())]);
    }

    #[test]
    fn comonad_laws_hold_on_fixtures() {
        let probes = Probes::from_dims(&[1, 2], 3);
        for b in [
            trivial_bialgebra(q()),
            cyclic_group_algebra(2, q()),
            s3_group_algebra(q()),
            sweedler(q()),
        ] {
            let g = MonoidalComonad::from_bialgebra(b).unwrap();
            let rep = g.check_laws(&probes).unwrap();
            assert!(rep.all_pass(), "{rep}");
            assert_eq!(rep.ids(), COMONAD_LAWS.to_vec());
        }
    }

    #[test]
    fn trivial_comonad_is_identity() {
        let g = MonoidalComonad::from_bialgebra(trivial_bialgebra(q())).unwrap();
        let x = Space::generator("X", 2);
        assert!(g.eps(&x).to_dense() == LinMap::identity(&x, q()).to_dense());
        assert_eq!(
            g.v(&x, &x).to_dense(),
            LinMap::identity(&g.g(&x).tensor(&g.g(&x)), q()).to_dense()
        );
    }

    /// `v(b⊗x⊗b'⊗y) = Σ b b'₁ ⊗ x ⊗ b'₂ ⊗ y`, evaluated from the structure
    /// constants directly.
    #[test]
    fn v_matches_sweedler_formula() {
        for b in [s3_group_algebra(q()), sweedler(q())] {
            let g = MonoidalComonad::from_bialgebra(b.clone()).unwrap();
            let x = Space::generator("X", 2);
            let y = Space::generator("Y", 1);
            let v = g.v(&x, &y);
            let n = b.dim();
            let dims = [n, 2, n, 1];
            for c in 0..v.dom().dim() {
                let d = crate::exactla::digits(c, &dims);
                let mut expect: Vec<(usize, Scalar)> = Vec::new();
                for (k, dv) in b.delta().column(d[2]) {
                    let (b1, b2) = (k / n, k % n);
                    for (p, mv) in b.mu().column(d[0] * n + b1) {
                        expect.push((crate::exactla::undigits(&[*p, d[1], b2, d[3]], &dims), dv * mv));
                    }
                }
                let want = LinMap::from_columns(Space::unit(), v.cod().clone(), q(), vec![expect]);
                assert_eq!(v.column(c), want.column(0));
            }
        }
    }

    #[test]
    fn z2_structure_maps_on_basis() {
        let g = MonoidalComonad::from_bialgebra(cyclic_group_algebra(2, q())).unwrap();
        let c = skewmon_from_cowarp(&g);
        let k = Space::unit();
        let a = c.a(&k, &k, &k);
        // a(g⊗g) = e⊗g: input (g, g) = index 3, output (e, g) = index 1
        assert_eq!(a.column(3), &[(1, q().one())]);
        let x = Space::generator("X", 2);
        let l = c.l(&x);
        assert_eq!(l.column(2 + 1), &[(1, q().one())]);
        let r = c.r(&x);
        assert_eq!(r.column(1), &[(2, q().one())]);
    }

    #[test]
    fn sign_y_negates_g_g() {
        let (b, cb) = bicharacter_cobraiding(2, &q().from_i64(-1), q()).unwrap();
        let g = MonoidalComonad::from_bialgebra(b).unwrap();
        let y = y_from_cobraiding(&g, &cb).unwrap();
        let x = Space::generator("X", 1);
        let m = y.y(&x, &x);
        assert_eq!(m.column(3), &[(3, q().from_i64(-1))]);
        assert_eq!(m.column(2), &[(1, q().one())]);
    }

    #[test]
    fn trivial_r_gives_plain_flip() {
        let b = s3_group_algebra(q());
        let g = MonoidalComonad::from_bialgebra(b.clone()).unwrap();
        let y = y_from_cobraiding(&g, &b.trivial_cobraiding()).unwrap();
        let x = Space::generator("X", 2);
        let z = Space::generator("Z", 1);
        let gx = g.g(&x);
        let gz = g.g(&z);
        assert_eq!(y.y(&x, &z).to_dense(), LinMap::flip(&gx, &gz, q()).to_dense());
    }

    #[test]
    fn z4_coefficient_is_zeta() {
        let f5 = Field::prime(5).unwrap();
        let (b, cb) = bicharacter_cobraiding(4, &f5.from_i64(2), f5).unwrap();
        let g = MonoidalComonad::from_bialgebra(b).unwrap();
        let y = y_from_cobraiding(&g, &cb).unwrap();
        assert_eq!(y.core().column(4 + 1), &[(4 + 1, f5.from_i64(2))]);
    }

    #[test]
    fn cobraiding_round_trips() {
        let (b, cb) = bicharacter_cobraiding(2, &q().from_i64(-1), q()).unwrap();
        let g = MonoidalComonad::from_bialgebra(b).unwrap();
        assert_eq!(cobraiding_from_y(&y_from_cobraiding(&g, &cb).unwrap()), cb.r);

        let sw = sweedler(q());
        let c = sweedler_cobraiding(&sw, &q().one()).unwrap();
        let g = MonoidalComonad::from_bialgebra(sw.clone()).unwrap();
        assert_eq!(cobraiding_from_y(&y_from_cobraiding(&g, &c).unwrap()), c.r);

        let tri = y_from_cobraiding(&g, &sw.trivial_cobraiding()).unwrap();
        assert_eq!(cobraiding_from_y(&tri), sw.eps2());
    }

    #[test]
    fn y_inverse_is_inverse() {
        let sw = sweedler(q());
        let c = sweedler_cobraiding(&sw, &q().from_i64(2)).unwrap();
        let g = MonoidalComonad::from_bialgebra(sw).unwrap();
        let y = y_from_cobraiding(&g, &c).unwrap();
        let x = Space::generator("X", 2);
        let z = Space::generator("Z", 1);
        assert!(y.y(&x, &z).then(&y.y_inv(&x, &z).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn y_axioms_on_fixtures() {
        let probes = Probes::from_dims(&[1], 0);
        let (b, cb) = bicharacter_cobraiding(2, &q().from_i64(-1), q()).unwrap();
        let g = MonoidalComonad::from_bialgebra(b).unwrap();
        let y = y_from_cobraiding(&g, &cb).unwrap();
        assert!(check_y_axioms(&g, &y, &probes).unwrap().all_pass());

        let sw = sweedler(q());
        let c = sweedler_cobraiding(&sw, &q().one()).unwrap();
        let g = MonoidalComonad::from_bialgebra(sw.clone()).unwrap();
        let y = y_from_cobraiding(&g, &c).unwrap();
        let rep = check_y_axioms(&g, &y, &probes).unwrap();
        assert!(rep.all_pass(), "{rep}");

        let s3 = s3_group_algebra(q());
        let g = MonoidalComonad::from_bialgebra(s3.clone()).unwrap();
        let y = y_from_cobraiding(&g, &s3.trivial_cobraiding()).unwrap();
        let rep = check_y_axioms(&g, &y, &probes).unwrap();
        assert_eq!(rep.failing(), vec!["eq:funny"]);
    }

    #[test]
    fn transposed_sweedler_functional_breaks_y_axioms() {
        let sw = sweedler(q());
        let c = sweedler_cobraiding(&sw, &q().one()).unwrap();
        let rt = LinMap::flip(sw.space(), sw.space(), q()).then(&c.r).unwrap();
        let ct = sw.cobraiding(rt).unwrap();
        let g = MonoidalComonad::from_bialgebra(sw).unwrap();
        let y = y_from_cobraiding(&g, &ct).unwrap();
        let rep = check_y_axioms(&g, &y, &Probes::from_dims(&[1], 0)).unwrap();
        assert!(!rep.all_pass());
    }

    #[test]
    fn s_and_y_correspond() {
        let (b, cb) = bicharacter_cobraiding(2, &q().from_i64(-1), q()).unwrap();
        let g = MonoidalComonad::from_bialgebra(b).unwrap();
        let y = y_from_cobraiding(&g, &cb).unwrap();
        let c = braided_vect(&y);
        let back = y_from_s(&c, &g).unwrap();
        assert_eq!(back.core(), y.core());
        let probes = Probes::from_dims(&[1, 2], 0);
        assert!(check_s_restricts_to_y(&c, &back, &probes).unwrap().all_pass());
        let x = Space::generator("X", 2);
        let k = Space::unit();
        let s = c.s(&x, &k, &k).unwrap();
        assert_eq!(s, LinMap::tensor_map(&LinMap::identity(&x, q()), &y.y(&k, &k)));
    }

    #[test]
    fn bialgebra_failure_propagates() {
        let bad = Bialgebra::from_constants(
            vec!["e".into(), "g".into()],
            q(),
            |a, c| vec![((a + c) % 2, 1)],
            0,
            |a| vec![((a, 0), 1)],
            |_| 1,
        );
        assert!(matches!(
            MonoidalComonad::from_bialgebra(bad),
            Err(Error::BialgebraAxiomFailure(_))
        ));
    }

    #[test]
    fn vect_b_is_skew_monoidal() {
        let probes = Probes::from_dims(&[1], 0);
        for b in [trivial_bialgebra(q()), cyclic_group_algebra(2, q()), sweedler(q())] {
            let g = MonoidalComonad::from_bialgebra(b).unwrap();
            let rep = crate::skewcheck::check_skew_axioms(&skewmon_from_cowarp(&g), &probes).unwrap();
            assert!(rep.all_pass(), "{rep}");
        }
    }

    /// Dropping δ folds everything into one associative product, so the
    /// pentagon survives; the left unit law is what breaks.
    #[test]
    fn tampered_associator_breaks_left_unit_law() {
        let probes = Probes::from_dims(&[1, 2], 0);
        for b in [cyclic_group_algebra(2, q()), s3_group_algebra(q()), sweedler(q())] {
            let g = MonoidalComonad::from_bialgebra(b).unwrap();
            let rep = crate::skewcheck::check_skew_axioms(&tampered_skewmon(&g), &probes).unwrap();
            assert_eq!(rep.failing(), vec!["M2"], "{rep}");
        }
    }

    #[test]
    fn braiding_laws_on_fixtures() {
        use crate::skewcheck::{check_braiding_axioms, check_derived_properties};
        let probes = Probes::from_dims(&[1], 0);
        let (b, cb) = bicharacter_cobraiding(2, &q().from_i64(-1), q()).unwrap();
        let g = MonoidalComonad::from_bialgebra(b).unwrap();
        let c = braided_vect(&y_from_cobraiding(&g, &cb).unwrap());
        let rep = check_braiding_axioms(&c, &probes).unwrap();
        assert!(rep.all_pass(), "{rep}");
        let der = check_derived_properties(&c, &probes, &rep).unwrap();
        assert!(der.all_pass(), "{der}");

        let s3 = s3_group_algebra(q());
        let g = MonoidalComonad::from_bialgebra(s3.clone()).unwrap();
        let c = braided_vect(&y_from_cobraiding(&g, &s3.trivial_cobraiding()).unwrap());
        let rep = check_braiding_axioms(&c, &probes).unwrap();
        assert_eq!(rep.failing(), vec!["Sstar"], "{rep}");
    }
}
