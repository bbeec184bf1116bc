//! Suite selection and orchestration over the core checkers.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use skewverify_core::bialg::{Bialgebra, Cobraiding};
use skewverify_core::comod::{
    check_comodule_braiding, check_comodule_symmetry, check_comonad_braiding_consequences, probe_comodules,
};
use skewverify_core::exactla::{LinMap, Space};
use skewverify_core::probes::{Probes, MAX_PROBE_DIM};
use skewverify_core::report::{AxiomReport, Law, LawStatus};
use skewverify_core::skewcheck::{
    check_braiding_axioms, check_derived_properties, check_naturality, check_skew_axioms, classical_braiding_from_s,
    Braiding, SkewMonCat,
};
use skewverify_core::skewclosed::{
    check_closed_braiding_axioms, check_mate_square, mate_s_to_sprime, mate_sprime_to_s, ClosedBraiding,
    ClosedStructure,
};
use skewverify_core::skewmulti::{
    check_braided_multicat, check_multicategory_laws, extract_braiding, SkewMulticategory,
};
use skewverify_core::warpcomonad::{
    braided_vect, check_s_restricts_to_y, check_y_axioms, cobraiding_from_y, skewmon_from_cowarp, tampered_skewmon,
    y_from_cobraiding, y_from_s, BraidingOnComonad, MonoidalComonad,
};
use skewverify_core::Error;

use crate::spec::BialgebraSpec;
use crate::{CliError, EXIT_AXIOM_FAILURE, EXIT_INCONSISTENT, EXIT_INPUT_ERROR, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteId {
    Bialgebra,
    Cobraiding,
    YAxioms,
    Skew,
    Braiding,
    Derived,
    Closed,
    Comodules,
    Multicat,
    Roundtrip,
    All,
}

impl SuiteId {
    /// Every concrete suite, in the order `all` runs and reports them.
    pub const ORDER: [SuiteId; 10] = [
        SuiteId::Bialgebra,
        SuiteId::Cobraiding,
        SuiteId::YAxioms,
        SuiteId::Skew,
        SuiteId::Braiding,
        SuiteId::Derived,
        SuiteId::Closed,
        SuiteId::Comodules,
        SuiteId::Multicat,
        SuiteId::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Bialgebra => "bialgebra",
            SuiteId::Cobraiding => "cobraiding",
            SuiteId::YAxioms => "y-axioms",
            SuiteId::Skew => "skew",
            SuiteId::Braiding => "braiding",
            SuiteId::Derived => "derived",
            SuiteId::Closed => "closed",
            SuiteId::Comodules => "comodules",
            SuiteId::Multicat => "multicat",
            SuiteId::Roundtrip => "roundtrip",
            SuiteId::All => "all",
        }
    }

    fn needs_cobraiding(self) -> bool {
        !matches!(self, SuiteId::Bialgebra | SuiteId::Skew)
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        SuiteId::ORDER
            .into_iter()
            .chain([SuiteId::All])
            .find(|id| id.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    Json,
}

/// Deliberate corruption, used to confirm that failures are detected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Check the braiding premises on the clean `s`, then evaluate the derived
    /// laws on a copy with some components negated.
    CorruptSAfterCheck,
    /// Build the skew structure with `δ` left out of the associator.
    TamperAssociator,
}

impl FromStr for Fault {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "corrupt-s-after-check" => Ok(Fault::CorruptSAfterCheck),
            "tamper-associator" => Ok(Fault::TamperAssociator),
            _ => Err(CliError::Usage(format!("unknown fault {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: SuiteId,
    pub probe_dims: Vec<usize>,
    pub seed: u64,
    pub format: Format,
    pub jobs: usize,
    /// Also require the symmetry laws (S1 and its counterparts).
    pub symmetric: bool,
    /// Report real elapsed time; off gives byte-identical output across runs.
    pub timing: bool,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteId::All,
            probe_dims: vec![1],
            seed: 0,
            format: Format::Human,
            jobs: 1,
            symmetric: false,
            timing: true,
            fault: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.probe_dims.is_empty() {
            return Err(CliError::Usage("no probe dimensions given".into()));
        }
        if let Some(d) = self.probe_dims.iter().find(|d| !(1..=MAX_PROBE_DIM).contains(d)) {
            return Err(CliError::Usage(format!(
                "probe dimension {d} outside 1..={MAX_PROBE_DIM}"
            )));
        }
        if self.jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn probes(&self) -> Probes {
        Probes::from_dims(&self.probe_dims, self.seed)
    }
}

/// One suite's laws and notes. Laws carry their checker's ids.
#[derive(Clone, Debug)]
pub struct Section {
    pub suite: SuiteId,
    pub report: AxiomReport,
    pub notes: Vec<String>,
    pub exit_code: i32,
}

impl Section {
    fn new(suite: SuiteId, report: AxiomReport, notes: Vec<String>) -> Self {
        let exit_code = if report.has_inconsistency() {
            EXIT_INCONSISTENT
        } else if report.all_pass() {
            EXIT_OK
        } else {
            EXIT_AXIOM_FAILURE
        };
        Section {
            suite,
            report,
            notes,
            exit_code,
        }
    }

    fn error(suite: SuiteId, e: &Error) -> Self {
        let exit_code = match e {
            Error::InternalInconsistency(_)
            | Error::ExtractionMismatch(_)
            | Error::Shape(_)
            | Error::DimensionMismatch { .. } => EXIT_INCONSISTENT,
            _ => EXIT_AXIOM_FAILURE,
        };
        Section {
            suite,
            report: AxiomReport::default(),
            notes: vec![format!("error: {e}")],
            exit_code,
        }
    }

    fn skipped(suite: SuiteId, note: &str, exit_code: i32) -> Self {
        Section {
            suite,
            report: AxiomReport::default(),
            notes: vec![note.to_string()],
            exit_code,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub suite: SuiteId,
    pub name: Option<String>,
    pub sections: Vec<Section>,
    pub probes: Vec<String>,
    pub seed: u64,
    pub elapsed_ms: u128,
    pub exit_code: i32,
}

impl SuiteRun {
    /// All laws, in report order, with the suite each belongs to.
    pub fn laws(&self) -> impl Iterator<Item = (SuiteId, &skewverify_core::report::LawResult)> {
        self.sections
            .iter()
            .flat_map(|s| s.report.laws.iter().map(move |l| (s.suite, l)))
    }

    pub fn status(&self, suite: SuiteId, id: &str) -> Option<LawStatus> {
        self.laws()
            .find(|(s, l)| *s == suite && l.id == id)
            .map(|(_, l)| l.status)
    }

    pub fn failing(&self) -> Vec<(SuiteId, &str)> {
        self.laws()
            .filter(|(_, l)| l.status != LawStatus::Pass)
            .map(|(s, l)| (s, l.id.as_str()))
            .collect()
    }

    pub fn section(&self, suite: SuiteId) -> Option<&Section> {
        self.sections.iter().find(|s| s.suite == suite)
    }
}

/// Everything the suites share, built once per run.
struct Context {
    b: Bialgebra,
    c: Option<Cobraiding>,
    g: MonoidalComonad,
    y: Option<BraidingOnComonad>,
    probes: Probes,
    cfg: SuiteConfig,
}

fn count_probe_factors(s: &Space) -> usize {
    s.factors().iter().filter(|f| f.to_string().starts_with('P')).count()
}

/// The braiding recovered from its closed mate, `s ↦ s' ↦ s`.
struct FromMate {
    cs: ClosedStructure,
    sp: Arc<dyn ClosedBraiding>,
}

impl Braiding for FromMate {
    fn component(&self, x: &Space, a: &Space, b: &Space) -> LinMap {
        mate_sprime_to_s(&self.cs, self.sp.as_ref(), x, a, b)
            .expect("mate of a braiding on Vect[B] is defined on all objects")
    }
}

impl Context {
    fn y(&self) -> &BraidingOnComonad {
        self.y.as_ref().expect("cobraiding suites run only with a cobraiding")
    }

    fn c(&self) -> &Cobraiding {
        self.c.as_ref().expect("cobraiding suites run only with a cobraiding")
    }

    fn braided(&self) -> SkewMonCat {
        braided_vect(self.y())
    }

    fn run(&self, suite: SuiteId) -> Section {
        if suite.needs_cobraiding() && self.c.is_none() {
            return Section::skipped(suite, "spec has no cobraiding table r", EXIT_INPUT_ERROR);
        }
        let mut notes = Vec::new();
        match self.laws(suite, &mut notes) {
            Ok(rep) => Section::new(suite, rep, notes),
            Err(e) => Section::error(suite, &e),
        }
    }

    fn laws(&self, suite: SuiteId, notes: &mut Vec<String>) -> Result<AxiomReport, Error> {
        let p = &self.probes;
        let sym = self.cfg.symmetric;
        let mut rep = AxiomReport::default();
        match suite {
            SuiteId::Bialgebra => {
                rep.extend(self.b.check()?);
                rep.extend(self.g.check_laws(p)?);
            }
            SuiteId::Cobraiding => rep.extend(self.b.check_cobraiding(self.c())?),
            SuiteId::YAxioms => rep.extend(check_y_axioms(&self.g, self.y(), p)?),
            SuiteId::Skew => {
                let cat = if self.cfg.fault == Some(Fault::TamperAssociator) {
                    notes.push("fault injected: associator built without δ".into());
                    tampered_skewmon(&self.g)
                } else {
                    skewmon_from_cowarp(&self.g)
                };
                rep.extend(check_skew_axioms(&cat, p)?);
                rep.extend(check_naturality(&cat, p)?);
            }
            SuiteId::Braiding => {
                let cat = self.braided();
                rep.extend(without(check_braiding_axioms(&cat, p)?, "S1", sym));
                rep.extend(check_s_restricts_to_y(&cat, self.y(), p)?);
                let nat = check_naturality(&cat, p)?;
                rep.laws.extend(nat.laws.into_iter().filter(|l| l.id == "nat-s"));
                match classical_braiding_from_s(&cat, p) {
                    Ok(cl) => rep.extend(cl.report),
                    Err(Error::NotLeftNormal(why)) => {
                        notes.push(format!("not left normal ({why}); no classical braiding"))
                    }
                    Err(e) => return Err(e),
                }
            }
            SuiteId::Derived => {
                let cat = self.braided();
                let premises = check_braiding_axioms(&cat, p)?;
                notes.push(format!(
                    "premises: S3a {}, S3b {}",
                    premises.status("S3a").expect("S3a checked"),
                    premises.status("S3b").expect("S3b checked")
                ));
                let target = if self.cfg.fault == Some(Fault::CorruptSAfterCheck) {
                    notes.push(
                        "fault injected: s negated on odd probe components after the premises were checked".into(),
                    );
                    cat.with_negated_components(|_, a, _| count_probe_factors(a) % 2 == 1)?
                } else {
                    cat
                };
                rep.extend(check_derived_properties(&target, p, &premises)?);
            }
            SuiteId::Closed => {
                let cs = ClosedStructure::new(self.braided(), self.g.bspace().clone())?;
                rep.extend(cs.check_structure(p)?);
                let sp = mate_s_to_sprime(&cs)?;
                rep.extend(check_mate_square(&cs, sp.as_ref(), p)?);
                rep.extend(without(
                    check_closed_braiding_axioms(&cs, sp.as_ref(), p)?,
                    "bourkeS1",
                    sym,
                ));
            }
            SuiteId::Comodules => {
                let y = self.y();
                let comods = probe_comodules(&self.b);
                rep.extend(check_comodule_braiding(y, &comods, self.cfg.seed)?);
                let premises = check_y_axioms(&self.g, y, p)?;
                rep.extend(check_comonad_braiding_consequences(&self.g, y, p, &premises)?);
                if sym {
                    rep.extend(check_comodule_symmetry(y, &comods)?);
                }
            }
            SuiteId::Multicat => {
                let m = SkewMulticategory::new(self.braided());
                rep.extend(without(check_braided_multicat(&m, p)?, "symmetry-cond", sym));
                rep.extend(check_multicategory_laws(&m, p)?);
            }
            SuiteId::Roundtrip => rep.extend(self.roundtrip()?),
            SuiteId::All => unreachable!("expanded by run_suite"),
        }
        Ok(rep)
    }

    /// `r → y → s → s' → s → multicategory → extracted s → y → r`.
    fn roundtrip(&self) -> Result<AxiomReport, Error> {
        let p = &self.probes;
        let y = self.y();
        let cs = ClosedStructure::new(self.braided(), self.g.bspace().clone())?;
        let sp = mate_s_to_sprime(&cs)?;
        let back = self.braided().with_braiding(Arc::new(FromMate { cs, sp }));
        let m = SkewMulticategory::new(back);
        let ex = extract_braiding(&m, p)?;
        let y2 = y_from_s(&m.extracted_category(), &self.g)?;

        let mut rep = ex.report;
        let mut ly = Law::new("roundtrip-y");
        ly.check(&["B".into(), "B".into()], y2.core(), y.core())?;
        rep.push(ly.finish());
        let mut lr = Law::new("roundtrip-r");
        lr.check(&["B".into(), "B".into()], &cobraiding_from_y(&y2), &self.c().r)?;
        rep.push(lr.finish());
        Ok(rep)
    }
}

fn without(mut rep: AxiomReport, id: &str, keep: bool) -> AxiomReport {
    if !keep {
        rep.laws.retain(|l| l.id != id);
    }
    rep
}

/// Runs the configured suite on `spec`. Input errors are returned as
/// `CliError`; everything else, including core failures, ends up in the
/// run's sections and exit code.
pub fn run_suite(spec: &BialgebraSpec, cfg: &SuiteConfig) -> Result<SuiteRun, CliError> {
    cfg.validate()?;
    let start = Instant::now();
    let b = spec.bialgebra()?;
    let probes = cfg.probes();
    let suites: Vec<SuiteId> = match cfg.suite {
        SuiteId::All => SuiteId::ORDER.to_vec(),
        s => vec![s],
    };

    let gate = b.check().map_err(|e| CliError::Validation {
        field: "structure maps".into(),
        msg: e.to_string(),
    })?;
    let sections = if !gate.all_pass() && suites != [SuiteId::Bialgebra] {
        let mut s = Section::new(SuiteId::Bialgebra, gate, vec![]);
        s.notes
            .push("structure maps are not a bialgebra; remaining suites skipped".into());
        vec![s]
    } else if !gate.all_pass() {
        vec![Section::new(SuiteId::Bialgebra, gate, vec![])]
    } else {
        let c = match spec.cobraiding(&b) {
            Ok(c) => c,
            Err(e) => {
                return Err(CliError::Validation {
                    field: "r".into(),
                    msg: e.to_string(),
                })
            }
        };
        let g = MonoidalComonad::from_bialgebra(b.clone()).expect("bialgebra laws checked");
        let y = match &c {
            Some(c) => Some(y_from_cobraiding(&g, c).map_err(|e| CliError::Validation {
                field: "r".into(),
                msg: e.to_string(),
            })?),
            None => None,
        };
        let ctx = Context {
            b,
            c,
            g,
            y,
            probes: probes.clone(),
            cfg: cfg.clone(),
        };
        if suites.len() > 1 && cfg.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.jobs)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cfg.jobs)))?;
            pool.install(|| suites.par_iter().map(|&s| ctx.run(s)).collect())
        } else {
            suites.iter().map(|&s| ctx.run(s)).collect()
        }
    };

    let exit_code = sections.iter().map(|s| s.exit_code).max().unwrap_or(EXIT_OK);
    Ok(SuiteRun {
        suite: cfg.suite,
        name: spec.name.clone(),
        sections,
        probes: probes.names(),
        seed: cfg.seed,
        elapsed_ms: if cfg.timing { start.elapsed().as_millis() } else { 0 },
        exit_code,
    })
}
