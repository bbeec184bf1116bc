//! Internal homs of a closed skew monoidal category whose tensor has the form
//! `X ⋆ A = X ⊗ M ⊗ A` (such as `Vect[B]`, with `M = B`), its skew closed
//! structure `L, i, j, t`, and braidings `s' : [B,[A,Y]] → [A,[B,Y]]`
//! obtained as mates of `s : (XA)B → (XB)A`.
//!
//! `[A,Y]` is `Lin(M ⊗ A, Y)` with the row-major basis of [`Space::hom`].

use std::sync::Arc;

use crate::error::Error;
use crate::exactla::{Field, LinMap, Space};
use crate::probes::{tuple_names, Probes};
use crate::report::{AxiomReport, Law};
use crate::skewcheck::SkewMonCat;

pub const CLOSED_BRAIDING_LAWS: [&str; 7] = [
    "bourkeS2",
    "bourkeS3",
    "bourkeS3b",
    "bourkeSstar",
    "bourkeS1",
    "sprime-r",
    "unit-redundancy",
];

#[derive(Clone, Debug)]
pub struct ClosedStructure {
    cat: SkewMonCat,
    m: Space,
}

impl ClosedStructure {
    /// `cat` must have tensor `X ⋆ A = X ⊗ m ⊗ A` and unit `K`.
    pub fn new(cat: SkewMonCat, m: Space) -> Result<Self, Error> {
        let x = Space::generator("X", 1);
        if cat.unit() != Space::unit() || cat.ts(&x, &x) != Space::tensor_all([&x, &m, &x]) {
            return Err(Error::Shape(format!("tensor is not of the form X⊗{m}⊗A")));
        }
        Ok(ClosedStructure { cat, m })
    }

    pub fn category(&self) -> &SkewMonCat {
        &self.cat
    }

    pub fn field(&self) -> Field {
        self.cat.field()
    }

    fn id(&self, x: &Space) -> LinMap {
        LinMap::identity(x, self.field())
    }

    fn ts(&self, x: &Space, a: &Space) -> Space {
        self.cat.ts(x, a)
    }

    /// `[A, Y]`.
    pub fn internal_hom(&self, a: &Space, y: &Space) -> Space {
        Space::hom(&self.m.tensor(a), y)
    }

    /// Counit `[A,Y] ⋆ A → Y`.
    pub fn ev(&self, a: &Space, y: &Space) -> LinMap {
        LinMap::evaluation(&self.m.tensor(a), y, self.field())
    }

    /// `f : X ⋆ A → Y` to `X → [A,Y]`.
    pub fn transpose(&self, f: &LinMap, x: &Space, a: &Space) -> Result<LinMap, Error> {
        LinMap::curry(f, x, &self.m.tensor(a))
    }

    /// `g : X → [A,Y]` to `X ⋆ A → Y`.
    pub fn untranspose(&self, g: &LinMap) -> Result<LinMap, Error> {
        LinMap::uncurry(g)
    }

    /// `h : (XA)B → Y` to `X → [A,[B,Y]]`.
    pub fn transpose2(&self, h: &LinMap, x: &Space, a: &Space, b: &Space) -> Result<LinMap, Error> {
        let inner = self.transpose(h, &self.ts(x, a), b)?;
        self.transpose(&inner, x, a)
    }

    /// `g : X → [A,[B,Y]]` to `(XA)B → Y`.
    pub fn untranspose2(&self, g: &LinMap) -> Result<LinMap, Error> {
        self.untranspose(&self.untranspose(g)?)
    }

    /// Unit `X → [A, X⋆A]`.
    pub fn unit_u(&self, x: &Space, a: &Space) -> LinMap {
        let xa = self.ts(x, a);
        self.transpose(&self.id(&xa), x, a).expect("identity has tensor domain")
    }

    /// `[f, g] : [A,Y] → [A',Y']` for `f : A' → A`, `g : Y → Y'`.
    pub fn hom_fn(&self, f: &LinMap, g: &LinMap) -> LinMap {
        LinMap::hom_map(&LinMap::tensor_map(&self.id(&self.m), f), g)
    }

    /// `[1_A, g]`.
    pub fn hom_right(&self, a: &Space, g: &LinMap) -> LinMap {
        self.hom_fn(&self.id(a), g)
    }

    /// `[f, 1_Y]`.
    pub fn hom_left(&self, f: &LinMap, y: &Space) -> LinMap {
        self.hom_fn(f, &self.id(y))
    }

    /// `L : [B,C] → [[A,B],[A,C]]`, the transpose of
    /// `([B,C][A,B])A → [B,C]([A,B]A) → [B,C]B → C`.
    pub fn big_l(&self, a: &Space, b: &Space, c: &Space) -> Result<LinMap, Error> {
        let bc = self.internal_hom(b, c);
        let ab = self.internal_hom(a, b);
        let h = LinMap::chain(&[
            &self.cat.a(&bc, &ab, a),
            &self.cat.tl(&bc, &self.ev(a, b)),
            &self.ev(b, c),
        ])?;
        self.transpose2(&h, &bc, &ab, a)
    }

    /// `i : [I,A] → A`, evaluation at the unit: `ev ∘ r`.
    pub fn i(&self, a: &Space) -> LinMap {
        let ia = self.internal_hom(&Space::unit(), a);
        self.cat.r(&ia).then(&self.ev(&Space::unit(), a)).expect("i shapes")
    }

    /// `j : I → [A,A]`, the transpose of `ℓ_A`.
    pub fn j(&self, a: &Space) -> LinMap {
        self.transpose(&self.cat.l(a), &Space::unit(), a)
            .expect("ℓ has tensor domain")
    }

    /// `t : [AB,Y] → [A,[B,Y]]`, the transpose of `ev ∘ a`.
    pub fn t(&self, a: &Space, b: &Space, y: &Space) -> Result<LinMap, Error> {
        let ab = self.ts(a, b);
        let h = self.internal_hom(&ab, y);
        let m = self.cat.a(&h, a, b).then(&self.ev(&ab, y))?;
        self.transpose2(&m, &h, a, b)
    }

    /// `t` rebuilt from `L` as `[u,1] ∘ L : [AB,Y] → [[B,AB],[B,Y]] → [A,[B,Y]]`.
    pub fn t_from_l(&self, a: &Space, b: &Space, y: &Space) -> Result<LinMap, Error> {
        let ab = self.ts(a, b);
        let l = self.big_l(b, &ab, y)?;
        l.then(&self.hom_left(&self.unit_u(a, b), &self.internal_hom(b, y)))
    }

    /// `L` rebuilt from `t` as `t ∘ [ε,1] : [B,C] → [[A,B]A,C] → [[A,B],[A,C]]`.
    pub fn l_from_t(&self, a: &Space, b: &Space, c: &Space) -> Result<LinMap, Error> {
        let ab = self.internal_hom(a, b);
        self.hom_left(&self.ev(a, b), c).then(&self.t(&ab, a, c)?)
    }

    /// Compares `t` with `[u,1]∘L` and `L` with `t∘[ε,1]` on probe triples,
    /// and checks that transposing seeded maps round-trips.
    pub fn check_structure(&self, probes: &Probes) -> Result<AxiomReport, Error> {
        let mut tl = Law::new("t-from-L");
        let mut lt = Law::new("L-from-t");
        let mut rt = Law::new("transpose-round-trip");
        for p in probes.tuples(3) {
            let n = tuple_names(&p);
            tl.check(&n, &self.t_from_l(&p[0], &p[1], &p[2])?, &self.t(&p[0], &p[1], &p[2])?)?;
            lt.check(
                &n,
                &self.l_from_t(&p[0], &p[1], &p[2])?,
                &self.big_l(&p[0], &p[1], &p[2])?,
            )?;
        }
        for (k, p) in probes.tuples(3).into_iter().enumerate() {
            let (x, a, y) = (&p[0], &p[1], &p[2]);
            for f in probes.morphisms(&self.ts(x, a), y, self.field(), 40 + k as u64) {
                let back = self.untranspose(&self.transpose(&f, x, a)?)?;
                rt.check(&tuple_names(&p), &back, &f)?;
            }
        }
        let mut rep = AxiomReport::default();
        for law in [tl, lt, rt] {
            rep.push(law.finish());
        }
        Ok(rep)
    }
}

/// A family `s'_{A,B,Y} : [B,[A,Y]] → [A,[B,Y]]`.
pub trait ClosedBraiding: Send + Sync {
    fn component(&self, a: &Space, b: &Space, y: &Space) -> Result<LinMap, Error>;
}

struct Mate(ClosedStructure);

impl ClosedBraiding for Mate {
    fn component(&self, a: &Space, b: &Space, y: &Space) -> Result<LinMap, Error> {
        let cs = &self.0;
        let x = cs.internal_hom(b, &cs.internal_hom(a, y));
        let ay = cs.internal_hom(a, y);
        // ((XB)A → [A,Y]A → Y) ∘ s_{X,A,B}
        let counit = cs.cat.tr(&cs.ev(b, &ay), a).then(&cs.ev(a, y))?;
        let h = cs.cat.s(&x, a, b)?.then(&counit)?;
        cs.transpose2(&h, &x, a, b)
    }
}

/// `s'` from the braiding of the underlying category: the component at
/// `(A,B,Y)` is the transpose of `(XA)B → (XB)A → Y` at `X = [B,[A,Y]]`.
pub fn mate_s_to_sprime(cs: &ClosedStructure) -> Result<Arc<dyn ClosedBraiding>, Error> {
    cs.cat
        .braiding()
        .ok_or_else(|| Error::Shape("category carries no braiding".into()))?;
    Ok(Arc::new(Mate(cs.clone())))
}

/// Recovers `s_{X,A,B}` from `s'`: untranspose `s'_{A,B,(XB)A} ∘ u` where
/// `u : X → [B,[A,(XB)A]]` is the double unit.
pub fn mate_sprime_to_s(
    cs: &ClosedStructure,
    sp: &dyn ClosedBraiding,
    x: &Space,
    a: &Space,
    b: &Space,
) -> Result<LinMap, Error> {
    let y = cs.ts(&cs.ts(x, b), a);
    let u = cs.transpose2(&cs.id(&y), x, b, a)?;
    cs.untranspose2(&u.then(&sp.component(a, b, &y)?)?)
}

/// The defining square of the mate: for seeded `g : X → [B,[A,Y]]`,
/// `s' ∘ g` and `g` transposed and composed with `s` agree.
pub fn check_mate_square(cs: &ClosedStructure, sp: &dyn ClosedBraiding, probes: &Probes) -> Result<AxiomReport, Error> {
    let mut law = Law::new("mate-square");
    for (k, p) in probes.tuples(4).into_iter().enumerate() {
        let (x, a, b, y) = (&p[0], &p[1], &p[2], &p[3]);
        let target = cs.internal_hom(b, &cs.internal_hom(a, y));
        for g in probes.morphisms(x, &target, cs.field(), 60 + k as u64) {
            let lhs = cs.untranspose2(&g.then(&sp.component(a, b, y)?)?)?;
            let rhs = cs.cat.s(x, a, b)?.then(&cs.untranspose2(&g)?)?;
            law.check(&tuple_names(&p), &lhs, &rhs)?;
        }
    }
    let mut rep = AxiomReport::default();
    rep.push(law.finish());
    Ok(rep)
}

/// The closed braiding axioms together with the unit triangle `[1,i]∘s' = i`
/// and the composite `[1,i]∘s'∘[j,1]∘L`, which must be the identity.
pub fn check_closed_braiding_axioms(
    cs: &ClosedStructure,
    sp: &dyn ClosedBraiding,
    probes: &Probes,
) -> Result<AxiomReport, Error> {
    let h = |a: &Space, y: &Space| cs.internal_hom(a, y);
    let s = |a: &Space, b: &Space, y: &Space| sp.component(a, b, y);
    let i = Space::unit();

    let mut s2 = Law::new("bourkeS2");
    let mut s3 = Law::new("bourkeS3");
    let mut s3b = Law::new("bourkeS3b");
    let mut sstar = Law::new("bourkeSstar");
    for p in probes.tuples(4) {
        let n = tuple_names(&p);
        let (a, b, c, y) = (&p[0], &p[1], &p[2], &p[3]);
        let ay = h(a, y);
        let by = h(b, y);
        let cy = h(c, y);

        // [C,[B,[A,Y]]] → [A,[B,[C,Y]]]
        let lhs = LinMap::chain(&[&s(b, c, &ay)?, &cs.hom_right(b, &s(a, c, y)?), &s(a, b, &cy)?])?;
        let rhs = LinMap::chain(&[
            &cs.hom_right(c, &s(a, b, y)?),
            &s(a, c, &by)?,
            &cs.hom_right(a, &s(b, c, y)?),
        ])?;
        s2.check(&n, &lhs, &rhs)?;

        // [B,[A,Y]] → [A,[[C,B],[C,Y]]]
        let cb = h(c, b);
        let lhs = s(a, b, y)?.then(&cs.hom_right(a, &cs.big_l(c, b, y)?))?;
        let rhs = LinMap::chain(&[
            &cs.big_l(c, b, &ay)?,
            &cs.hom_right(&cb, &s(a, c, y)?),
            &s(a, &cb, &cy)?,
        ])?;
        s3.check(&n, &lhs, &rhs)?;

        // [B,[A,Y]] → [[C,A],[C,[B,Y]]]
        let ca = h(c, a);
        let lhs = LinMap::chain(&[
            &cs.hom_right(b, &cs.big_l(c, a, y)?),
            &s(&ca, b, &cy)?,
            &cs.hom_right(&ca, &s(c, b, y)?),
        ])?;
        let rhs = s(a, b, y)?.then(&cs.big_l(c, a, &by)?)?;
        s3b.check(&n, &lhs, &rhs)?;

        // with (X, Y, B, C) = (a, y, b, c): [X,Y] → [[B,[C,X]],[C,[B,Y]]]
        let x = a;
        let cx = h(c, x);
        let bx = h(b, x);
        let lhs = LinMap::chain(&[
            &cs.big_l(c, x, y)?,
            &cs.big_l(b, &cx, &cy)?,
            &cs.hom_right(&h(b, &cx), &s(c, b, y)?),
        ])?;
        let rhs = LinMap::chain(&[
            &cs.big_l(b, x, y)?,
            &cs.big_l(c, &bx, &by)?,
            &cs.hom_left(&s(c, b, x)?, &h(c, &by)),
        ])?;
        sstar.check(&n, &lhs, &rhs)?;
    }

    let mut s1 = Law::new("bourkeS1");
    for p in probes.tuples(3) {
        let (a, b, y) = (&p[0], &p[1], &p[2]);
        let lhs = s(a, b, y)?.then(&s(b, a, y)?)?;
        s1.check(&tuple_names(&p), &lhs, &LinMap::identity(&h(b, &h(a, y)), cs.field()))?;
    }

    let mut spr = Law::new("sprime-r");
    let mut red = Law::new("unit-redundancy");
    for p in probes.tuples(2) {
        let n = tuple_names(&p);
        let (b, c) = (&p[0], &p[1]);
        let bc = h(b, c);
        let lhs = s(b, &i, c)?.then(&cs.hom_right(b, &cs.i(c)))?;
        spr.check(&n, &lhs, &cs.i(&bc))?;

        let lhs = LinMap::chain(&[
            &cs.big_l(b, b, c)?,
            &cs.hom_left(&cs.j(b), &bc),
            &s(b, &i, c)?,
            &cs.hom_right(b, &cs.i(c)),
        ])?;
        red.check(&n, &lhs, &LinMap::identity(&bc, cs.field()))?;
    }

    let mut rep = AxiomReport::default();
    for law in [s2, s3, s3b, sstar, s1, spr, red] {
        rep.push(law.finish());
    }
    Ok(rep)
}
