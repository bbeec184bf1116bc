//! Skew multicategories represented by a skew monoidal category, braid group
//! actions on their multimaps, the braided skew multicategory laws, and
//! recovery of the braiding from the action of `σ₂`.
//!
//! A tight multimap `a₁, …, aₙ → b` is a map out of `((a₁a₂)a₃)…aₙ`; a loose
//! one is a map out of `((Ia₁)a₂)…aₙ`. `σᵢ` acts by precomposing with
//! `s_{X,aᵢ₊₁,aᵢ}` where `X` is the bracketed prefix, so `σ₁` acts on loose
//! maps through `s_{I,a₂,a₁}` and not at all on tight ones.

use std::fmt;

use crate::braidop::{braid_equal, braid_to_perm, operad_subst, BraidWord};
use crate::error::Error;
use crate::exactla::{LinMap, Space};
use crate::probes::{random_maps, Probes};
use crate::report::{AxiomReport, Law, Witness};
use crate::skewcheck::{Braiding, SkewMonCat};

pub const MULTICAT_LAWS: [&str; 5] = [
    "action-eq",
    "equivariance-loose",
    "equivariance-tight",
    "tight-closure",
    "symmetry-cond",
];
pub const SUBSTITUTION_LAWS: [&str; 2] = ["subst-unit", "subst-assoc"];
pub const EXTRACTION_LAWS: [&str; 2] = ["universal-identity", "extract-s"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tightness {
    Tight,
    Loose,
}

impl fmt::Display for Tightness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tightness::Tight => "tight",
            Tightness::Loose => "loose",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multimap {
    sources: Vec<Space>,
    target: Space,
    tightness: Tightness,
    payload: LinMap,
}

impl Multimap {
    pub fn sources(&self) -> &[Space] {
        &self.sources
    }

    pub fn target(&self) -> &Space {
        &self.target
    }

    pub fn tightness(&self) -> Tightness {
        self.tightness
    }

    pub fn is_tight(&self) -> bool {
        self.tightness == Tightness::Tight
    }

    pub fn arity(&self) -> usize {
        self.sources.len()
    }

    pub fn payload(&self) -> &LinMap {
        &self.payload
    }
}

#[derive(Clone, Debug)]
pub struct SkewMulticategory {
    cat: SkewMonCat,
}

impl SkewMulticategory {
    /// The skew multicategory represented by `cat`.
    pub fn new(cat: SkewMonCat) -> Self {
        SkewMulticategory { cat }
    }

    pub fn category(&self) -> &SkewMonCat {
        &self.cat
    }

    fn bracket_from(&self, start: Space, items: &[Space]) -> Space {
        items.iter().fold(start, |acc, a| self.cat.ts(&acc, a))
    }

    /// `((a₁a₂)…)aₙ`; tight multimaps are never nullary.
    pub fn tight_domain(&self, sources: &[Space]) -> Result<Space, Error> {
        match sources.split_first() {
            None => Err(Error::ArityMismatch { expected: 1, got: 0 }),
            Some((first, rest)) => Ok(self.bracket_from(first.clone(), rest)),
        }
    }

    /// `((Ia₁)…)aₙ`, which is `I` when nullary.
    pub fn loose_domain(&self, sources: &[Space]) -> Space {
        self.bracket_from(self.cat.unit(), sources)
    }

    pub fn domain(&self, sources: &[Space], tightness: Tightness) -> Result<Space, Error> {
        match tightness {
            Tightness::Tight => self.tight_domain(sources),
            Tightness::Loose => Ok(self.loose_domain(sources)),
        }
    }

    pub fn multimap(
        &self,
        sources: Vec<Space>,
        target: Space,
        tightness: Tightness,
        payload: LinMap,
    ) -> Result<Multimap, Error> {
        let dom = self.domain(&sources, tightness)?;
        if payload.dom() != &dom || payload.cod() != &target {
            return Err(Error::DimensionMismatch {
                expected: format!("{dom} -> {target}"),
                found: format!("{} -> {}", payload.dom(), payload.cod()),
            });
        }
        Ok(Multimap {
            sources,
            target,
            tightness,
            payload,
        })
    }

    /// The tight unary identity on `a`.
    pub fn identity(&self, a: &Space) -> Multimap {
        Multimap {
            sources: vec![a.clone()],
            target: a.clone(),
            tightness: Tightness::Tight,
            payload: self.cat.id(a),
        }
    }

    /// The universal tight multimap `e : a, b → ab`.
    pub fn universal(&self, a: &Space, b: &Space) -> Multimap {
        let ab = self.cat.ts(a, b);
        Multimap {
            sources: vec![a.clone(), b.clone()],
            target: ab.clone(),
            tightness: Tightness::Tight,
            payload: self.cat.id(&ab),
        }
    }

    /// The identity of `I` as a nullary loose multimap.
    pub fn unit_multimap(&self) -> Multimap {
        let i = self.cat.unit();
        Multimap {
            sources: Vec::new(),
            target: i.clone(),
            tightness: Tightness::Loose,
            payload: self.cat.id(&i),
        }
    }

    /// `((Ia₁)…)aₙ → ((a₁…)aₙ)`, the `ℓ` at the front whiskered by identities.
    pub fn comparison(&self, sources: &[Space]) -> Result<LinMap, Error> {
        let (first, rest) = sources
            .split_first()
            .ok_or(Error::ArityMismatch { expected: 1, got: 0 })?;
        Ok(rest.iter().fold(self.cat.l(first), |m, a| self.cat.tr(&m, a)))
    }

    pub fn j(&self, f: &Multimap) -> Result<Multimap, Error> {
        match f.tightness {
            Tightness::Loose => Ok(f.clone()),
            Tightness::Tight => Ok(Multimap {
                sources: f.sources.clone(),
                target: f.target.clone(),
                tightness: Tightness::Loose,
                payload: self.comparison(&f.sources)?.then(&f.payload)?,
            }),
        }
    }

    /// `((S a₁)…)aₘ → S ⋆ G` where `G` is the tight or loose bracketing of
    /// `a₁ … aₘ`, built from associators (and `r_S` for the empty loose case).
    fn attach(&self, s: &Space, items: &[Space], tightness: Tightness) -> Result<LinMap, Error> {
        let c = &self.cat;
        let (mut map, mut g, rest) = match tightness {
            Tightness::Tight => {
                let (first, rest) = items
                    .split_first()
                    .ok_or(Error::ArityMismatch { expected: 1, got: 0 })?;
                (c.id(&c.ts(s, first)), first.clone(), rest)
            }
            Tightness::Loose => (c.r(s), c.unit(), items),
        };
        for a in rest {
            map = c.tr(&map, a).then(&c.a(s, &g, a))?;
            g = c.ts(&g, a);
        }
        Ok(map)
    }

    /// `f(g₁, …, gₙ)`, tight exactly when `f` and `g₁` are.
    pub fn substitute(&self, f: &Multimap, gs: &[Multimap]) -> Result<Multimap, Error> {
        let c = &self.cat;
        if gs.len() != f.arity() {
            return Err(Error::ArityMismatch {
                expected: f.arity(),
                got: gs.len(),
            });
        }
        for (g, b) in gs.iter().zip(&f.sources) {
            if g.target != *b {
                return Err(Error::DimensionMismatch {
                    expected: b.to_string(),
                    found: g.target.to_string(),
                });
            }
        }
        let sources: Vec<Space> = gs.iter().flat_map(|g| g.sources.iter().cloned()).collect();
        let tight = f.is_tight() && gs.first().is_some_and(Multimap::is_tight);
        let tightness = if tight { Tightness::Tight } else { Tightness::Loose };

        // The canonical map from the bracketing of all sources to f's
        // bracketing with each gᵢ's domain in place of bᵢ, followed by the
        // gᵢ. By naturality of a and r the gᵢ can be applied as soon as
        // their inputs are grouped, so `phi` only ever lands in
        // ((b₁b₂)…)bₖ (or ((Ib₁)…)bₖ), never in the padded domains.
        let (mut phi, mut prefix, rest) = match (f.tightness, gs.split_first()) {
            (Tightness::Tight, Some((g1, rest))) => (g1.payload.clone(), g1.target.clone(), rest),
            _ => {
                let i = c.unit();
                (c.id(&i), i, gs)
            }
        };
        for g in rest {
            phi = LinMap::chain(&[
                &g.sources.iter().fold(phi, |m, a| c.tr(&m, a)),
                &self.attach(&prefix, &g.sources, g.tightness)?,
                &c.tl(&prefix, &g.payload),
            ])?;
            prefix = c.ts(&prefix, &g.target);
        }
        let payload = phi.then(&f.payload)?;
        self.multimap(sources, f.target.clone(), tightness, payload)
    }

    /// `f·σᵢ^{±1}` for one generator.
    fn act_letter(&self, f: &Multimap, index: usize, positive: bool) -> Result<Multimap, Error> {
        let c = &self.cat;
        let i = index - 1;
        let prefix = match f.tightness {
            Tightness::Tight if i == 0 => return Err(Error::TightSigmaOne),
            Tightness::Tight => self.tight_domain(&f.sources[..i])?,
            Tightness::Loose => self.loose_domain(&f.sources[..i]),
        };
        let (ai, aj) = (&f.sources[i], &f.sources[i + 1]);
        let swap = if positive {
            c.s(&prefix, aj, ai)?
        } else {
            c.s_inv(&prefix, ai, aj)?
        };
        let whiskered = f.sources[i + 2..].iter().fold(swap, |m, a| c.tr(&m, a));
        let mut sources = f.sources.clone();
        sources.swap(i, i + 1);
        Ok(Multimap {
            sources,
            target: f.target.clone(),
            tightness: f.tightness,
            payload: whiskered.then(&f.payload)?,
        })
    }

    /// `f·w`, with sources permuted by `|w|`.
    pub fn act(&self, f: &Multimap, w: &BraidWord) -> Result<Multimap, Error> {
        if w.strands() != f.arity() {
            return Err(Error::StrandMismatch {
                left: w.strands(),
                right: f.arity(),
            });
        }
        if f.is_tight() && w.uses_sigma_one() {
            return Err(Error::TightSigmaOne);
        }
        w.letters()
            .iter()
            .try_fold(f.clone(), |g, l| self.act_letter(&g, l.index, l.positive))
    }

    /// `s_{A,B,C}` read off `(e_{AC,B} ∘₁ e_{A,C})·σ₂` through the universal
    /// `e_{AB,C} ∘₁ e_{A,B}`.
    pub fn extract_component(&self, a: &Space, b: &Space, cc: &Space) -> Result<LinMap, Error> {
        let id_b = self.identity(b);
        let id_c = self.identity(cc);
        let acb = self.substitute(&self.universal(&self.cat.ts(a, cc), b), &[self.universal(a, cc), id_b])?;
        let acted = self.act(&acb, &BraidWord::new(3, &[2])?)?;
        let u = self.substitute(&self.universal(&self.cat.ts(a, b), cc), &[self.universal(a, b), id_c])?;
        u.payload.inverse()?.then(&acted.payload)
    }

    /// The same category braided by the components extracted from the
    /// `σ₂` action.
    pub fn extracted_category(&self) -> SkewMonCat {
        self.cat.with_braiding(std::sync::Arc::new(Extracted(self.clone())))
    }
}

struct Extracted(SkewMulticategory);

impl Braiding for Extracted {
    fn component(&self, x: &Space, a: &Space, b: &Space) -> LinMap {
        self.0
            .extract_component(x, a, b)
            .expect("extraction from a braided multicategory")
    }
}

/// Braiding components recovered from the multicategory, with the checks
/// that the universal multimaps are identities and that the components agree
/// with the original braiding.
#[derive(Clone, Debug)]
pub struct Extraction {
    pub components: Vec<(Vec<String>, LinMap)>,
    pub report: AxiomReport,
}

pub fn multicat_from_skewmon(c: SkewMonCat) -> SkewMulticategory {
    SkewMulticategory::new(c)
}

/// Extracts `s` on all probe triples. A disagreement with the category's own
/// braiding is an internal inconsistency.
pub fn extract_braiding(m: &SkewMulticategory, probes: &Probes) -> Result<Extraction, Error> {
    let c = m.category();
    let mut universal = Law::new("universal-identity");
    let mut law = Law::new("extract-s");
    let mut components = Vec::new();
    for t in probes.tuples(3) {
        let (a, b, cc) = (&t[0], &t[1], &t[2]);
        let names = crate::probes::tuple_names(&t);
        let u = m.substitute(&m.universal(&c.ts(a, b), cc), &[m.universal(a, b), m.identity(cc)])?;
        universal.check(&names, &u.payload, &c.id(&c.ts(&c.ts(a, b), cc)))?;
        let s = m.extract_component(a, b, cc)?;
        if !law.check(&names, &s, &c.s(a, b, cc)?)? {
            return Err(Error::ExtractionMismatch(format!("at ({})", names.join(", "))));
        }
        components.push((names, s));
    }
    let mut report = AxiomReport::default();
    report.push(universal.finish());
    report.push(law.finish());
    Ok(Extraction { components, report })
}

/// Deterministic multimap generator over the probe objects.
struct Gen<'a> {
    m: &'a SkewMulticategory,
    probes: &'a Probes,
    salt: u64,
    next_object: usize,
}

impl<'a> Gen<'a> {
    fn new(m: &'a SkewMulticategory, probes: &'a Probes) -> Self {
        Gen {
            m,
            probes,
            salt: 0,
            next_object: 0,
        }
    }

    fn object(&mut self) -> Space {
        let s = self.probes.spaces();
        let o = s[self.next_object % s.len()].clone();
        self.next_object += 1;
        o
    }

    fn objects(&mut self, n: usize) -> Vec<Space> {
        (0..n).map(|_| self.object()).collect()
    }

    fn multimap(&mut self, sources: Vec<Space>, target: Space, tightness: Tightness) -> Result<Multimap, Error> {
        let dom = self.m.domain(&sources, tightness)?;
        self.salt += 1;
        let payload = random_maps(
            &dom,
            &target,
            self.m.cat.field(),
            self.probes.seed(),
            1000 + self.salt,
            1,
        )
        .remove(0);
        self.m.multimap(sources, target, tightness, payload)
    }

    /// A random multimap out of `sources` into the next probe object.
    fn over(&mut self, sources: Vec<Space>, tightness: Tightness) -> Result<Multimap, Error> {
        let target = self.object();
        self.multimap(sources, target, tightness)
    }

    fn fresh(&mut self, arity: usize, tightness: Tightness) -> Result<Multimap, Error> {
        let sources = self.objects(arity);
        let target = self.object();
        self.multimap(sources, target, tightness)
    }
}

fn words(n: usize, signed: &[&[i64]]) -> Vec<BraidWord> {
    signed
        .iter()
        .filter(|w| w.iter().all(|l| (l.unsigned_abs() as usize) < n))
        .map(|w| BraidWord::new(n, w).expect("word within range"))
        .collect()
}

/// Short words in `Bₙ`; with `fix_first`, only those in `B¹ₙ`.
fn sample_words(n: usize, fix_first: bool) -> Vec<BraidWord> {
    let all: &[&[i64]] = &[&[], &[1], &[-1], &[2], &[-2], &[1, 2], &[2, -1], &[1, 1], &[2, 3, -2]];
    words(n, all)
        .into_iter()
        .filter(|w| !fix_first || !w.uses_sigma_one())
        .collect()
}

fn same(law: &mut Law, tag: &[String], lhs: &Multimap, rhs: &Multimap) -> Result<(), Error> {
    if lhs.sources != rhs.sources || lhs.tightness != rhs.tightness {
        return Err(Error::InternalInconsistency(format!(
            "{tag:?}: multimaps of different type compared ({} vs {})",
            lhs.tightness, rhs.tightness
        )));
    }
    law.check(tag, &lhs.payload, &rhs.payload)?;
    Ok(())
}

fn tag(parts: &[String]) -> Vec<String> {
    parts.to_vec()
}

fn action_eq(m: &SkewMulticategory, gen: &mut Gen) -> Result<Law, Error> {
    let mut law = Law::new("action-eq");
    let relations: &[(&[i64], &[i64])] = &[
        (&[1, 2, 1], &[2, 1, 2]),
        (&[2, 3, 2], &[3, 2, 3]),
        (&[1, 3], &[3, 1]),
        (&[1, -1], &[]),
        (&[-2, 2], &[]),
        (&[1, 2, -1], &[-2, 1, 2]),
    ];
    for tightness in [Tightness::Tight, Tightness::Loose] {
        for n in 2..=4 {
            let f = gen.fresh(n, tightness)?;
            let t = tightness == Tightness::Tight;
            same(
                &mut law,
                &tag(&[format!("{tightness} arity {n}"), "unit".into()]),
                &m.act(&f, &BraidWord::identity(n))?,
                &f,
            )?;
            let ws = sample_words(n, t);
            for u in &ws {
                for v in &ws {
                    let lhs = m.act(&m.act(&f, u)?, v)?;
                    let rhs = m.act(&f, &u.mul(v)?)?;
                    same(
                        &mut law,
                        &[format!("{tightness} arity {n}"), format!("({u})({v})")],
                        &lhs,
                        &rhs,
                    )?;
                }
            }
            for (l, r) in relations {
                let (Ok(u), Ok(v)) = (BraidWord::new(n, l), BraidWord::new(n, r)) else {
                    continue;
                };
                if t && (u.uses_sigma_one() || v.uses_sigma_one()) {
                    continue;
                }
                if !braid_equal(&u, &v)? {
                    return Err(Error::InternalInconsistency(format!(
                        "{u} and {v} are not equal braids"
                    )));
                }
                same(
                    &mut law,
                    &[format!("{tightness} arity {n}"), format!("{u} = {v}")],
                    &m.act(&f, &u)?,
                    &m.act(&f, &v)?,
                )?;
            }
        }
    }
    Ok(law)
}

/// Compares `(f(g⃗))·s(t⃗)` with `(f·s)(g_{s1}·t_{s1}, …)`.
fn equivariance_instance(
    m: &SkewMulticategory,
    law: &mut Law,
    f: &Multimap,
    gs: &[Multimap],
    s: &BraidWord,
    ts: &[BraidWord],
) -> Result<(), Error> {
    let lhs = m.act(&m.substitute(f, gs)?, &operad_subst(s, ts)?)?;
    let perm = braid_to_perm(s);
    let moved: Vec<Multimap> = (1..=gs.len())
        .map(|i| {
            let k = perm.image(i) - 1;
            m.act(&gs[k], &ts[k])
        })
        .collect::<Result<_, _>>()?;
    let rhs = m.substitute(&m.act(f, s)?, &moved)?;
    let arities: Vec<String> = gs
        .iter()
        .map(|g| format!("{}{}", g.arity(), &g.tightness.to_string()[..1]))
        .collect();
    let ts: Vec<String> = ts.iter().map(BraidWord::to_string).collect();
    same(
        law,
        &[
            format!("f{}{}", f.arity(), &f.tightness.to_string()[..1]),
            arities.join(","),
            format!("s={s}"),
            ts.join("; "),
        ],
        &lhs,
        &rhs,
    )
}

/// All choices of one part word per part from the given lists, varying one
/// part at a time.
fn part_word_choices(lists: &[Vec<BraidWord>]) -> Vec<Vec<BraidWord>> {
    let base: Vec<BraidWord> = lists.iter().map(|l| l[0].clone()).collect();
    let mut out = vec![base.clone()];
    for (i, l) in lists.iter().enumerate() {
        for w in &l[1..] {
            let mut c = base.clone();
            c[i] = w.clone();
            out.push(c);
        }
    }
    out
}

fn arity_vectors(n: usize, max_each: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (0..=max_each).map(move |k| [v.clone(), vec![k]].concat()))
            .collect();
    }
    out.retain(|v| v.iter().sum::<usize>() <= max_total);
    out
}

fn equivariance_loose(m: &SkewMulticategory, gen: &mut Gen) -> Result<Law, Error> {
    let mut law = Law::new("equivariance-loose");
    for n in 1..=3 {
        for ks in arity_vectors(n, 2, 3) {
            let gs: Vec<Multimap> = ks
                .iter()
                .map(|&k| gen.fresh(k, Tightness::Loose))
                .collect::<Result<_, _>>()?;
            let f = gen.multimap(
                gs.iter().map(|g| g.target.clone()).collect(),
                gen.probes.spaces()[0].clone(),
                Tightness::Loose,
            )?;
            let lists: Vec<Vec<BraidWord>> = ks.iter().map(|&k| sample_words(k, false)).collect();
            for s in sample_words(n, false) {
                for ts in part_word_choices(&lists) {
                    equivariance_instance(m, &mut law, &f, &gs, &s, &ts)?;
                }
            }
        }
    }
    Ok(law)
}

fn equivariance_tight(m: &SkewMulticategory, gen: &mut Gen) -> Result<Law, Error> {
    let mut law = Law::new("equivariance-tight");
    for n in 1..=3 {
        for ks in arity_vectors(n, 3, 4) {
            if ks[0] == 0 || ks.iter().skip(1).any(|&k| k > 2) {
                continue;
            }
            let mut gs = vec![gen.fresh(ks[0], Tightness::Tight)?];
            for &k in &ks[1..] {
                gs.push(gen.fresh(k, Tightness::Loose)?);
            }
            let f = gen.multimap(
                gs.iter().map(|g| g.target.clone()).collect(),
                gen.probes.spaces()[0].clone(),
                Tightness::Tight,
            )?;
            let lists: Vec<Vec<BraidWord>> = ks.iter().enumerate().map(|(i, &k)| sample_words(k, i == 0)).collect();
            for s in sample_words(n, true) {
                for ts in part_word_choices(&lists) {
                    equivariance_instance(m, &mut law, &f, &gs, &s, &ts)?;
                }
            }
        }
    }
    Ok(law)
}

fn flag_witness(tag: Vec<String>, what: &str, field: crate::exactla::Field) -> Witness {
    Witness {
        probes: tag,
        input: what.to_string(),
        output: "-".into(),
        lhs: field.zero(),
        rhs: field.one(),
    }
}

/// `fw` is tight with `j(fw) = j(f)w` for tight `f` and `w ∈ B¹`, and
/// `f(g⃗)` is tight exactly when `f` and `g₁` are.
fn tight_closure(m: &SkewMulticategory, gen: &mut Gen) -> Result<Law, Error> {
    let mut law = Law::new("tight-closure");
    let field = m.cat.field();
    for n in 1..=3 {
        let f = gen.fresh(n, Tightness::Tight)?;
        for w in sample_words(n, true) {
            let fw = m.act(&f, &w)?;
            let t = vec![format!("arity {n}"), w.to_string()];
            if !fw.is_tight() {
                law.fail_with(flag_witness(t.clone(), "action left the tight maps", field));
            }
            same(&mut law, &t, &m.j(&fw)?, &m.act(&m.j(&f)?, &w)?)?;
        }
    }
    for ft in [Tightness::Tight, Tightness::Loose] {
        for g1t in [Tightness::Tight, Tightness::Loose] {
            for k in 1..=2 {
                let g1 = gen.fresh(k, g1t)?;
                let g2 = gen.fresh(1, Tightness::Loose)?;
                let f = gen.over(vec![g1.target.clone(), g2.target.clone()], ft)?;
                let r = m.substitute(&f, &[g1, g2])?;
                let expect = ft == Tightness::Tight && g1t == Tightness::Tight;
                law.check(&[format!("f {ft}"), format!("g1 {g1t}")], r.payload(), r.payload())?;
                if r.is_tight() != expect {
                    law.fail_with(flag_witness(
                        vec![format!("f {ft}"), format!("g1 {g1t}")],
                        "substitution tightness",
                        field,
                    ));
                }
            }
        }
    }
    Ok(law)
}

/// `f·u = f·v` whenever `|u| = |v|` (within `B¹` on tight maps).
fn symmetry_cond(m: &SkewMulticategory, gen: &mut Gen) -> Result<Law, Error> {
    let mut law = Law::new("symmetry-cond");
    let pairs: &[(&[i64], &[i64])] = &[
        (&[1], &[-1]),
        (&[2], &[-2]),
        (&[1, 1], &[]),
        (&[2, 2], &[]),
        (&[1, 2, -1], &[-1, 2, 1]),
    ];
    for tightness in [Tightness::Tight, Tightness::Loose] {
        for n in 2..=3 {
            let f = gen.fresh(n, tightness)?;
            for (l, r) in pairs {
                let (Ok(u), Ok(v)) = (BraidWord::new(n, l), BraidWord::new(n, r)) else {
                    continue;
                };
                if tightness == Tightness::Tight && (u.uses_sigma_one() || v.uses_sigma_one()) {
                    continue;
                }
                debug_assert_eq!(braid_to_perm(&u), braid_to_perm(&v));
                same(
                    &mut law,
                    &[format!("{tightness} arity {n}"), format!("{u} ~ {v}")],
                    &m.act(&f, &u)?,
                    &m.act(&f, &v)?,
                )?;
            }
        }
    }
    Ok(law)
}

/// Action equations, both equivariance laws, tightness closure and the
/// symmetry condition, on seeded multimaps over the probe objects.
pub fn check_braided_multicat(m: &SkewMulticategory, probes: &Probes) -> Result<AxiomReport, Error> {
    let mut gen = Gen::new(m, probes);
    let mut rep = AxiomReport::default();
    rep.push(action_eq(m, &mut gen)?.finish());
    rep.push(equivariance_loose(m, &mut gen)?.finish());
    rep.push(equivariance_tight(m, &mut gen)?.finish());
    rep.push(tight_closure(m, &mut gen)?.finish());
    rep.push(symmetry_cond(m, &mut gen)?.finish());
    Ok(rep)
}

/// Unit and associativity laws of substitution.
pub fn check_multicategory_laws(m: &SkewMulticategory, probes: &Probes) -> Result<AxiomReport, Error> {
    let mut gen = Gen::new(m, probes);
    let mut unit = Law::new("subst-unit");
    let mut assoc = Law::new("subst-assoc");
    for tightness in [Tightness::Tight, Tightness::Loose] {
        for n in 1..=3 {
            let f = gen.fresh(n, tightness)?;
            let ids: Vec<Multimap> = f.sources.iter().map(|a| m.identity(a)).collect();
            let t = vec![format!("{tightness} arity {n}")];
            same(&mut unit, &t, &m.substitute(&f, &ids)?, &f)?;
            same(
                &mut unit,
                &t,
                &m.substitute(&m.identity(&f.target), std::slice::from_ref(&f))?,
                &f,
            )?;
        }
    }
    let kinds = [Tightness::Tight, Tightness::Loose];
    for &ft in &kinds {
        for &g1t in &kinds {
            for &h1t in &kinds {
                // f(g₁, g₂)(h₁, h₂, h₃) against f(g₁(h₁, h₂), g₂(h₃))
                let h = [
                    gen.fresh(if h1t == Tightness::Tight { 2 } else { 1 }, h1t)?,
                    gen.fresh(0, Tightness::Loose)?,
                    gen.fresh(1, Tightness::Loose)?,
                ];
                let g1 = gen.over(vec![h[0].target.clone(), h[1].target.clone()], g1t)?;
                let g2 = gen.over(vec![h[2].target.clone()], Tightness::Loose)?;
                let f = gen.over(vec![g1.target.clone(), g2.target.clone()], ft)?;
                let lhs = m.substitute(&m.substitute(&f, &[g1.clone(), g2.clone()])?, &h)?;
                let inner = [m.substitute(&g1, &h[..2])?, m.substitute(&g2, &h[2..])?];
                let rhs = m.substitute(&f, &inner)?;
                same(
                    &mut assoc,
                    &[format!("f {ft}"), format!("g1 {g1t}"), format!("h1 {h1t}")],
                    &lhs,
                    &rhs,
                )?;
            }
        }
    }
    let mut rep = AxiomReport::default();
    rep.push(unit.finish());
    rep.push(assoc.finish());
    Ok(rep)
}
