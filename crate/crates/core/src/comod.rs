//! Finite-dimensional comodules over a bialgebra (coalgebras for
//! `G = B ⊗ −`), their tensor product, and the braiding they inherit from a
//! braiding `y` on `G`.

use crate::bialg::Bialgebra;
use crate::error::Error;
use crate::exactla::{LinMap, Space};
use crate::probes::random_maps;
use crate::report::{AxiomReport, Law};
use crate::warpcomonad::{BraidingOnComonad, MonoidalComonad};

pub const COMODULE_BRAIDING_LAWS: [&str; 6] = [
    "c-comodule-map",
    "c-invertible",
    "c-natural",
    "c-hexagon1",
    "c-hexagon2",
    "c-cofree-is-y",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Comodule {
    name: String,
    carrier: Space,
    coaction: LinMap,
}

impl Comodule {
    /// Checks counit and coassociativity of `coaction : A → B ⊗ A`.
    pub fn new(b: &Bialgebra, name: impl Into<String>, coaction: LinMap) -> Result<Self, Error> {
        let name = name.into();
        let carrier = coaction.dom().clone();
        let bad = |what: &str| Error::InvalidComodule(format!("{name}: {what}"));
        let expect = b.space().tensor(&carrier);
        if coaction.cod() != &expect {
            return Err(bad(&format!("coaction lands in {}, expected {expect}", coaction.cod())));
        }
        let g = ComonadView(b);
        let counit = coaction.then(&g.eps(&carrier))?;
        if !counit.is_identity() {
            return Err(bad("counit law fails"));
        }
        let lhs = coaction.then(&g.delta(&carrier))?;
        let rhs = coaction.then(&LinMap::tensor_map(&b.id(), &coaction))?;
        if lhs != rhs {
            return Err(bad("coassociativity fails"));
        }
        Ok(Comodule {
            name,
            carrier,
            coaction,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &Space {
        &self.carrier
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }
}

struct ComonadView<'a>(&'a Bialgebra);

impl ComonadView<'_> {
    fn delta(&self, x: &Space) -> LinMap {
        LinMap::tensor_map(self.0.delta(), &LinMap::identity(x, self.0.field()))
    }

    fn eps(&self, x: &Space) -> LinMap {
        LinMap::tensor_map(self.0.eps(), &LinMap::identity(x, self.0.field()))
    }

    fn g2(&self, x: &Space, y: &Space) -> LinMap {
        let b = self.0;
        let f = b.field();
        let sw = LinMap::tensor_all(&[&b.id(), &LinMap::flip(x, b.space(), f), &LinMap::identity(y, f)]);
        sw.then(&LinMap::tensor_all(&[
            b.mu(),
            &LinMap::identity(x, f),
            &LinMap::identity(y, f),
        ]))
        .expect("G2 shapes")
    }
}

/// `B ⊗ X` with coaction `Δ ⊗ 1`.
pub fn cofree(b: &Bialgebra, x: &Space) -> Comodule {
    Comodule {
        name: format!("G{x}"),
        carrier: b.space().tensor(x),
        coaction: ComonadView(b).delta(x),
    }
}

/// `X` with coaction `x ↦ 1 ⊗ x`.
pub fn trivial_comodule(b: &Bialgebra, x: &Space) -> Comodule {
    let f = b.field();
    Comodule {
        name: format!("triv({x})"),
        carrier: x.clone(),
        coaction: LinMap::tensor_map(b.eta(), &LinMap::identity(x, f)),
    }
}

/// The one-dimensional comodule `1 ↦ g ⊗ 1` for a group-like basis element.
pub fn group_like_comodule(b: &Bialgebra, idx: usize) -> Result<Comodule, Error> {
    let k = Space::unit();
    let f = b.field();
    let coaction = LinMap::from_fn(k.clone(), b.space().clone(), f, |_| vec![(idx, f.one())]);
    Comodule::new(b, format!("deg({})", b.space().basis_name(idx)), coaction)
}

/// Basis elements `g` with `Δg = g ⊗ g` and `ε(g) = 1`.
pub fn group_likes(b: &Bialgebra) -> Vec<usize> {
    let n = b.dim();
    (0..n)
        .filter(|&i| b.delta().column(i) == [(i * n + i, b.field().one())] && b.eps().entry(0, i).is_one())
        .collect()
}

/// Carrier `A ⊗ A'`, coaction `a⊗a' ↦ Σ a₋₁a'₋₁ ⊗ a₀ ⊗ a'₀`.
pub fn tensor_comodules(b: &Bialgebra, m: &Comodule, n: &Comodule) -> Comodule {
    let g2 = ComonadView(b).g2(&m.carrier, &n.carrier);
    Comodule {
        name: format!("{}·{}", m.name, n.name),
        carrier: m.carrier.tensor(&n.carrier),
        coaction: LinMap::tensor_map(&m.coaction, &n.coaction)
            .then(&g2)
            .expect("tensor coaction shapes"),
    }
}

/// `c = (ε⊗1⊗ε⊗1) ∘ y_{A,A'} ∘ (α⊗α') : A⊗A' → A'⊗A`, checked against the
/// square `y ∘ (α⊗α') = (α'⊗α) ∘ c`.
pub fn braiding_on_comodules(y: &BraidingOnComonad, m: &Comodule, n: &Comodule) -> Result<LinMap, Error> {
    let g = y.comonad();
    let (a, a2) = (&m.carrier, &n.carrier);
    let lifted = LinMap::tensor_map(&m.coaction, &n.coaction).then(&y.y(a, a2))?;
    let c = lifted.then(&LinMap::tensor_map(&g.eps(a2), &g.eps(a)))?;
    let other = c.then(&LinMap::tensor_map(&n.coaction, &m.coaction))?;
    if let Some(d) = lifted.first_difference(&other) {
        return Err(Error::EqualizerSquareFailure(format!(
            "{}, {} at input {} output {}: {} vs {}",
            m.name,
            n.name,
            lifted.dom().basis_name(d.col),
            lifted.cod().basis_name(d.row),
            d.lhs,
            d.rhs
        )));
    }
    Ok(c)
}

/// Probe comodules: trivial on `K`, cofree on `K` and on a 2-dimensional
/// space, and the one-dimensional comodules of the non-unit group-likes.
pub fn probe_comodules(b: &Bialgebra) -> Vec<Comodule> {
    let mut out = vec![
        trivial_comodule(b, &Space::unit()),
        cofree(b, &Space::unit()),
        cofree(b, &Space::with_basis("P2", vec!["x0".into(), "x1".into()])),
    ];
    let unit = b.eta().column(0).to_vec();
    for i in group_likes(b) {
        if unit != [(i, b.field().one())] {
            out.push(group_like_comodule(b, i).expect("group-like elements give comodules"));
        }
    }
    out
}

/// Comodule maps out of `m`: its coaction into the cofree comodule, and for
/// cofree `m = GX` the maps `Gf` for seeded `f : X → X`.
fn comodule_maps(b: &Bialgebra, m: &Comodule, seed: u64) -> Vec<(Comodule, LinMap)> {
    let mut out = vec![(cofree(b, &m.carrier), m.coaction.clone())];
    if let Some(x) = m.carrier.strip_prefix(b.space()) {
        if m.coaction == ComonadView(b).delta(&x) {
            for f in random_maps(&x, &x, b.field(), seed, 7, 2) {
                out.push((m.clone(), LinMap::tensor_map(&b.id(), &f)));
            }
        }
    }
    out
}

/// The braiding on comodules induced by `y`: comodule-map property,
/// invertibility, naturality, both hexagons (associativity is strict), and
/// agreement with `y` on cofree comodules.
pub fn check_comodule_braiding(y: &BraidingOnComonad, comodules: &[Comodule], seed: u64) -> Result<AxiomReport, Error> {
    let g: &MonoidalComonad = y.comonad();
    let b = g.bialgebra();
    let f = b.field();
    let c = |m: &Comodule, n: &Comodule| braiding_on_comodules(y, m, n);
    let id = |m: &Comodule| LinMap::identity(&m.carrier, f);
    let names = |ms: &[&Comodule]| ms.iter().map(|m| m.name.clone()).collect::<Vec<_>>();

    let mut cmap = Law::new("c-comodule-map");
    let mut inv = Law::new("c-invertible");
    let mut nat = Law::new("c-natural");
    for m in comodules {
        for n in comodules {
            let tag = names(&[m, n]);
            let cmn = c(m, n)?;
            let lhs = tensor_comodules(b, m, n)
                .coaction
                .then(&LinMap::tensor_map(&b.id(), &cmn))?;
            let rhs = cmn.then(&tensor_comodules(b, n, m).coaction)?;
            cmap.check(&tag, &lhs, &rhs)?;
            match cmn.inverse() {
                Ok(ci) => {
                    inv.check(&tag, &cmn.then(&ci)?, &LinMap::identity(cmn.dom(), f))?;
                }
                Err(_) => inv.fail_with(crate::report::Witness {
                    probes: tag.clone(),
                    input: "singular".into(),
                    output: "-".into(),
                    lhs: f.zero(),
                    rhs: f.one(),
                }),
            }
            for (k, (m2, h)) in comodule_maps(b, m, seed).into_iter().enumerate() {
                let mut tag = tag.clone();
                tag.push(format!("h{k}:{}->{}", m.name, m2.name));
                let lhs = LinMap::tensor_map(&h, &id(n)).then(&c(&m2, n)?)?;
                let rhs = cmn.then(&LinMap::tensor_map(&id(n), &h))?;
                nat.check(&tag, &lhs, &rhs)?;
            }
        }
    }

    let mut h1 = Law::new("c-hexagon1");
    let mut h2 = Law::new("c-hexagon2");
    for m in comodules {
        for n in comodules {
            for p in comodules {
                let tag = names(&[m, n, p]);
                let np = tensor_comodules(b, n, p);
                let lhs = LinMap::tensor_map(&c(m, n)?, &id(p)).then(&LinMap::tensor_map(&id(n), &c(m, p)?))?;
                h1.check(&tag, &c(m, &np)?, &lhs)?;
                let mn = tensor_comodules(b, m, n);
                let lhs = LinMap::tensor_map(&id(m), &c(n, p)?).then(&LinMap::tensor_map(&c(m, p)?, &id(n)))?;
                h2.check(&tag, &c(&mn, p)?, &lhs)?;
            }
        }
    }

    let mut cof = Law::new("c-cofree-is-y");
    let xs: Vec<Space> = comodules
        .iter()
        .filter_map(|m| {
            let x = m.carrier.strip_prefix(b.space())?;
            (m.coaction == ComonadView(b).delta(&x)).then_some(x)
        })
        .collect();
    for x in &xs {
        for z in &xs {
            let tag = vec![format!("G{x}"), format!("G{z}")];
            cof.check(&tag, &c(&cofree(b, x), &cofree(b, z))?, &y.y(x, z))?;
        }
    }

    let mut rep = AxiomReport::default();
    for law in [cmap, inv, nat, h1, h2, cof] {
        rep.push(law.finish());
    }
    Ok(rep)
}

/// `c ∘ c = 1` on all pairs of probe comodules.
pub fn check_comodule_symmetry(y: &BraidingOnComonad, comodules: &[Comodule]) -> Result<AxiomReport, Error> {
    let mut law = Law::new("c-S1");
    for m in comodules {
        for n in comodules {
            let lhs = braiding_on_comodules(y, m, n)?.then(&braiding_on_comodules(y, n, m)?)?;
            law.check(
                &[m.name.clone(), n.name.clone()],
                &lhs,
                &LinMap::identity(&m.carrier.tensor(&n.carrier), y.comonad().field()),
            )?;
        }
    }
    let mut rep = AxiomReport::default();
    rep.push(law.finish());
    Ok(rep)
}

/// `(1⊗δ)∘y = y∘(δ⊗1)`, `(δ⊗δ)∘y = y∘(δ⊗δ)`, and `y` as a map of tensor
/// comodules `GX·GZ → GZ·GX`. A failure whose premise passed in `premises`
/// (eq:1b; eq:1a and eq:1b; eq:funny) is reported `Inconsistent`.
pub fn check_comonad_braiding_consequences(
    g: &MonoidalComonad,
    y: &BraidingOnComonad,
    probes: &crate::probes::Probes,
    premises: &AxiomReport,
) -> Result<AxiomReport, Error> {
    let b = g.bialgebra();
    let t = LinMap::tensor_map;
    let mut d1 = Law::new("eq:y.delta1");
    let mut dd = Law::new("eq:y.delta");
    let mut cm = Law::new("y-coalgebra-map");
    for p in probes.tuples(2) {
        let n = crate::probes::tuple_names(&p);
        let (x, z) = (&p[0], &p[1]);
        let (gx, gz) = (g.g(x), g.g(z));
        let idgz = LinMap::identity(&gz, g.field());
        let lhs = y.y(x, z).then(&t(&idgz, &g.delta(x)))?;
        let rhs = t(&g.delta(x), &idgz).then(&y.y(&gx, z))?;
        d1.check(&n, &lhs, &rhs)?;

        let lhs = y.y(x, z).then(&t(&g.delta(z), &g.delta(x)))?;
        let rhs = t(&g.delta(x), &g.delta(z)).then(&y.y(&gx, &gz))?;
        dd.check(&n, &lhs, &rhs)?;

        let (cx, cz) = (cofree(b, x), cofree(b, z));
        let lhs = tensor_comodules(b, &cx, &cz).coaction.then(&g.g_map(&y.y(x, z)))?;
        let rhs = y.y(x, z).then(&tensor_comodules(b, &cz, &cx).coaction)?;
        cm.check(&n, &lhs, &rhs)?;
    }
    let p1a = premises.passed("eq:1a");
    let p1b = premises.passed("eq:1b");
    let mut rep = AxiomReport::default();
    rep.push(d1.finish_implied(p1b));
    rep.push(dd.finish_implied(p1a && p1b));
    rep.push(cm.finish_implied(premises.passed("eq:funny")));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::{
        bicharacter_cobraiding, cyclic_group_algebra, s3_group_algebra, sweedler, sweedler_cobraiding,
        trivial_bialgebra,
    };
    use crate::exactla::Field;
    use crate::probes::Probes;
    use crate::warpcomonad::cobraiding_from_y;
    use crate::warpcomonad::{check_y_axioms, y_from_cobraiding, BraidingOnComonad};

    fn q() -> Field {
        Field::Rational
    }

    fn sign() -> BraidingOnComonad {
        let (b, cb) = bicharacter_cobraiding(2, &q().from_i64(-1), q()).unwrap();
        let g = MonoidalComonad::from_bialgebra(b).unwrap();
        y_from_cobraiding(&g, &cb).unwrap()
    }

    #[test]
    fn cofree_on_k_is_group_like() {
        let b = cyclic_group_algebra(2, q());
        let m = cofree(&b, &Space::unit());
        assert_eq!(m.carrier().dim(), 2);
        assert_eq!(m.coaction().column(1), &[(3, q().one())]);
        assert!(Comodule::new(&b, "again", m.coaction().clone()).is_ok());
        let s3 = s3_group_algebra(q());
        let m = cofree(&s3, &Space::generator("X", 2));
        assert_eq!(m.carrier().dim(), 12);
        assert!(Comodule::new(&s3, "again", m.coaction().clone()).is_ok());
    }

    #[test]
    fn rejects_bad_coaction() {
        let b = cyclic_group_algebra(2, q());
        let k = Space::unit();
        let zero = LinMap::zero(&k, b.space(), q());
        assert!(matches!(
            Comodule::new(&b, "zero", zero),
            Err(Error::InvalidComodule(_))
        ));
        let sw = sweedler(q());
        // x is not group-like
        assert!(group_like_comodule(&sw, 2).is_err());
        assert_eq!(group_likes(&sw), vec![0, 1]);
    }

    #[test]
    fn tensor_multiplies_degrees() {
        let b = cyclic_group_algebra(2, q());
        let m = cofree(&b, &Space::unit());
        let t = tensor_comodules(&b, &m, &m);
        for i in 0..2 {
            for j in 0..2 {
                // gⁱ⊗gʲ ↦ g^{i+j} ⊗ gⁱ ⊗ gʲ
                assert_eq!(
                    t.coaction().column(2 * i + j),
                    &[((i + j) % 2 * 4 + 2 * i + j, q().one())]
                );
            }
        }
        assert!(Comodule::new(&b, "t", t.coaction().clone()).is_ok());
        let triv = trivial_comodule(&b, &Space::unit());
        assert_eq!(tensor_comodules(&b, &m, &triv).coaction(), m.coaction());
    }

    #[test]
    fn tensor_is_associative() {
        let b = s3_group_algebra(q());
        let ms = probe_comodules(&b);
        for x in &ms[..3] {
            for y in &ms[..3] {
                for z in &ms[..3] {
                    let l = tensor_comodules(&b, &tensor_comodules(&b, x, y), z);
                    let r = tensor_comodules(&b, x, &tensor_comodules(&b, y, z));
                    assert_eq!(l.coaction(), r.coaction());
                }
            }
        }
    }

    #[test]
    fn koszul_sign_rule() {
        let y = sign();
        let b = y.comonad().bialgebra().clone();
        let even = trivial_comodule(&b, &Space::unit());
        let odd = group_like_comodule(&b, 1).unwrap();
        for (m, dm) in [(&even, 0), (&odd, 1)] {
            for (n, dn) in [(&even, 0), (&odd, 1)] {
                let c = braiding_on_comodules(&y, m, n).unwrap();
                let s = if dm * dn == 1 { -1 } else { 1 };
                assert_eq!(c.column(0), &[(0, q().from_i64(s))]);
            }
        }
    }

    #[test]
    fn flip_gives_flip_on_trivial_comodules() {
        let b = cyclic_group_algebra(3, q());
        let g = MonoidalComonad::from_bialgebra(b.clone()).unwrap();
        let y = y_from_cobraiding(&g, &b.trivial_cobraiding()).unwrap();
        let x = Space::generator("X", 2);
        let z = Space::generator("Z", 3);
        let c = braiding_on_comodules(&y, &trivial_comodule(&b, &x), &trivial_comodule(&b, &z)).unwrap();
        assert_eq!(c, LinMap::flip(&x, &z, q()));
    }

    #[test]
    fn comodule_braiding_on_fixtures() {
        let sw = sweedler(q());
        let g = MonoidalComonad::from_bialgebra(sw.clone()).unwrap();
        let ysw = y_from_cobraiding(&g, &sweedler_cobraiding(&sw, &q().from_i64(3)).unwrap()).unwrap();
        let tri = trivial_bialgebra(q());
        let gt = MonoidalComonad::from_bialgebra(tri.clone()).unwrap();
        let yt = y_from_cobraiding(&gt, &tri.trivial_cobraiding()).unwrap();
        for y in [sign(), ysw, yt] {
            let ms = probe_comodules(y.comonad().bialgebra());
            let rep = check_comodule_braiding(&y, &ms, 1).unwrap();
            assert!(rep.all_pass(), "{rep}");
            assert_eq!(rep.ids(), COMODULE_BRAIDING_LAWS.to_vec());
        }
    }

    #[test]
    fn round_trip_through_comodules() {
        let sw = sweedler(q());
        let cb = sweedler_cobraiding(&sw, &q().from_i64(2)).unwrap();
        let g = MonoidalComonad::from_bialgebra(sw.clone()).unwrap();
        let y = y_from_cobraiding(&g, &cb).unwrap();
        let k = Space::unit();
        let c = braiding_on_comodules(&y, &cofree(&sw, &k), &cofree(&sw, &k)).unwrap();
        let back = BraidingOnComonad::from_core(&g, c).unwrap();
        assert_eq!(cobraiding_from_y(&back), cb.r);
    }

    #[test]
    fn symmetry_transfers() {
        let ms = probe_comodules(sign().comonad().bialgebra());
        assert!(check_comodule_symmetry(&sign(), &ms).unwrap().all_pass());
        let sw = sweedler(q());
        let g = MonoidalComonad::from_bialgebra(sw.clone()).unwrap();
        // λ ≠ 0 makes the Sweedler braiding non-symmetric
        let y = y_from_cobraiding(&g, &sweedler_cobraiding(&sw, &q().one()).unwrap()).unwrap();
        let rep = check_comodule_symmetry(&y, &probe_comodules(&sw)).unwrap();
        let s1 =
            crate::skewcheck::check_braiding_axioms(&crate::warpcomonad::braided_vect(&y), &Probes::from_dims(&[1], 0))
                .unwrap();
        assert_eq!(rep.all_pass(), s1.passed("S1"));
    }

    #[test]
    fn consequences() {
        let probes = Probes::from_dims(&[1], 0);
        let y = sign();
        let g = y.comonad().clone();
        let prem = check_y_axioms(&g, &y, &probes).unwrap();
        assert!(check_comonad_braiding_consequences(&g, &y, &probes, &prem)
            .unwrap()
            .all_pass());

        let s3 = s3_group_algebra(q());
        let g = MonoidalComonad::from_bialgebra(s3.clone()).unwrap();
        let y = y_from_cobraiding(&g, &s3.trivial_cobraiding()).unwrap();
        let prem = check_y_axioms(&g, &y, &probes).unwrap();
        let rep = check_comonad_braiding_consequences(&g, &y, &probes, &prem).unwrap();
        assert_eq!(rep.failing(), vec!["y-coalgebra-map"]);
        assert!(!rep.has_inconsistency());
    }

    #[test]
    fn non_braiding_fails_the_square() {
        // a core that is not of the form y_r: swap plus a stray term
        let b = cyclic_group_algebra(2, q());
        let g = MonoidalComonad::from_bialgebra(b.clone()).unwrap();
        let bb = b.space().tensor(b.space());
        let core = LinMap::from_fn(bb.clone(), bb, q(), |j| {
            let (i, k) = (j / 2, j % 2);
            vec![(k * 2 + i, q().one()), (0, q().from_i64(if j == 3 { 1 } else { 0 }))]
        });
        let y = BraidingOnComonad::from_core(&g, core).unwrap();
        let m = cofree(&b, &Space::unit());
        let err = braiding_on_comodules(&y, &m, &m).unwrap_err();
        assert!(matches!(err, Error::EqualizerSquareFailure(_)));
    }
}
