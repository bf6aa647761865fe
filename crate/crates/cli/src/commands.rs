//! One function per command. Each returns its checks and a JSON results
//! object; enumeration order is fixed by the core library.

use serde_json::{json, Value};
use unital_core::cech::{classify_h0, torsor_classes, unit_cocycles};
use unital_core::complex::{
    alternate_identity_1, alternate_kernel_1, alternate_kernel_2, alternate_sum_2, cone_truncation_comparison,
    is_quasi_isomorphism, unit_complex_1, unit_complex_2,
};
use unital_core::crossed::{
    enumerate_triples, enumerate_units_nonabelian, unit_crossed_module, verify_group_law,
    verify_point_law_matches_composition,
};
use unital_core::picard::{PicardModel1, PicardModel2};
use unital_core::{Complex, CrossedModule, Error, FgAbGroup, GroupElem, Nerve, StrictMorphism, Verification};

use crate::input::{Input, Model, MAX_GROUP_ORDER};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Homology,
    Units,
    Contractible,
    UnitComplex,
    Qiso,
    CechClassify,
    CrossedVerify,
    CrossedUnits,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Homology => "homology",
            Command::Units => "units",
            Command::Contractible => "contractible",
            Command::UnitComplex => "unit-complex",
            Command::Qiso => "qiso",
            Command::CechClassify => "cech-classify",
            Command::CrossedVerify => "crossed-verify",
            Command::CrossedUnits => "crossed-units",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub check_acyclic: bool,
    pub against: Option<String>,
    pub max_states: u128,
}

pub type Outcome = Result<(Verification, Value), CliError>;

pub fn run(command: Command, input: &Input, opts: &Options) -> Outcome {
    match (command, &input.model) {
        (Command::Homology, Model::Complex2(x)) => homology(x.complex()),
        (Command::Homology, Model::Complex3(x)) => homology(x.complex()),
        (Command::Units, Model::Complex2(x)) => units_1(&PicardModel1::new(x.clone())),
        (Command::Units, Model::Complex3(x)) => units_2(&PicardModel2::new(x.clone())),
        (Command::Contractible, Model::Complex2(x)) => {
            require_enumerable(x.complex())?;
            let r = PicardModel1::new(x.clone()).verify_contractible()?;
            Ok((r.verification, json!({"units": r.units.len(), "ordered_pairs": r.morphisms})))
        }
        (Command::Contractible, Model::Complex3(x)) => {
            require_enumerable(x.complex())?;
            let r = PicardModel2::new(x.clone()).verify_contractible()?;
            let results = json!({"units": r.units, "unit_1_morphisms": r.one_morphisms, "parallel_pairs": r.parallel_pairs});
            Ok((r.verification, results))
        }
        (Command::UnitComplex, Model::Complex2(x)) => unit_complex(unit_complex_1(x)?.complex.complex(), opts),
        (Command::UnitComplex, Model::Complex3(x)) => unit_complex(unit_complex_2(x)?.complex.complex(), opts),
        (Command::Qiso, Model::Complex2(_) | Model::Complex3(_)) => qiso(&input.model, opts),
        (Command::CechClassify, Model::Complex2(_) | Model::Complex3(_)) => cech_classify(input, opts),
        (Command::CrossedVerify, Model::Crossed(x)) => crossed_verify(x),
        (Command::CrossedUnits, Model::Crossed(x)) => crossed_units(x, input.nerve.as_ref(), opts),
        (c, _) => Err(CliError::Input(format!("command {} does not apply to kind {}", c.name(), input.doc.kind))),
    }
}

fn elem(x: &GroupElem) -> Value {
    json!(x.coords())
}

fn group(g: &FgAbGroup) -> Value {
    json!({"name": g.to_string(), "invariant_factors": g.invariant_factors(), "free_rank": g.free_rank()})
}

/// Enumeration needs finite groups of order at most [`MAX_GROUP_ORDER`].
fn require_enumerable(c: &Complex) -> Result<(), CliError> {
    for (term, d) in c.terms().iter().zip(c.degrees()) {
        match term.order() {
            None => {
                return Err(CliError::Input(format!("term in degree {d} is infinite ({term}); enumeration needs finite groups")))
            }
            Some(n) if n > MAX_GROUP_ORDER => {
                return Err(CliError::Cap(format!("term in degree {d} has order {n} > {MAX_GROUP_ORDER}")))
            }
            _ => {}
        }
    }
    Ok(())
}

fn homology_table(c: &Complex, v: &mut Verification) -> Result<Vec<Value>, CliError> {
    let mut rows = vec![];
    for d in c.degrees() {
        let h = c.homology(d)?;
        let incoming = if d > c.min_degree() { c.differential(d - 1)? } else { None };
        let boundaries = match incoming {
            Some(f) => f.image().group.order(),
            None => Some(1),
        };
        if let (Some(z), Some(b), Some(n)) = (h.cycles.order(), boundaries, h.group.order()) {
            v.record(format!("|Z^{d}| = |B^{d}|·|H^{d}|"), z == b * n, format!("{z} = {b}·{n}"));
        }
        rows.push(json!({"degree": d, "group": group(&h.group)}));
    }
    Ok(rows)
}

fn homology(c: &Complex) -> Outcome {
    let mut v = Verification::new();
    let table = homology_table(c, &mut v)?;
    Ok((v, json!({"homology": table})))
}

fn units_1(m: &PicardModel1) -> Outcome {
    let x = m.base();
    require_enumerable(x.complex())?;
    let units = m.enumerate_units()?;
    let mut v = Verification::new();
    let order = x.a().order().expect("finite");
    v.record("|units| = |A|", units.len() as u128 == order, format!("{} units, |A| = {order}", units.len()));
    let canonical = m.canonical_unit();
    v.record("(0, 0) is a unit", units.contains(&canonical), format!("({}, {})", canonical.e, canonical.a_phi));
    let mut unique = 0;
    let mut failure = None;
    for s in &units {
        for t in &units {
            let n = m.unit_morphisms(s, t)?.len();
            if n == 1 {
                unique += 1;
            } else if failure.is_none() {
                failure = Some(format!("{n} morphisms ({}, {}) → ({}, {})", s.e, s.a_phi, t.e, t.a_phi));
            }
        }
    }
    let pairs = units.len() * units.len();
    v.record("unique unit morphism", failure.is_none(), failure.unwrap_or(format!("{unique} of {pairs} ordered pairs")));
    let listed: Vec<Value> = units.iter().map(|u| json!({"e": elem(&u.e), "a_phi": elem(&u.a_phi)})).collect();
    Ok((v, json!({"units": listed, "unique_morphisms": unique})))
}

fn units_2(m: &PicardModel2) -> Outcome {
    let x = m.base();
    require_enumerable(x.complex())?;
    let units = m.enumerate_units()?;
    let mut v = Verification::new();
    let order = x.b().order().expect("finite");
    v.record("|units| = |B|", units.len() as u128 == order, format!("{} units, |B| = {order}", units.len()));
    let canonical = m.canonical_unit();
    v.record("(0, 0) is a unit", units.contains(&canonical), format!("({}, {})", canonical.e, canonical.phi));
    let mut failure = None;
    'pairs: for s in &units {
        for t in &units {
            if m.unit_1morphisms(s, t)?.is_empty() {
                failure = Some(format!("no unit 1-morphism ({}, {}) → ({}, {})", s.e, s.phi, t.e, t.phi));
                break 'pairs;
            }
        }
    }
    let pairs = units.len() * units.len();
    v.record("unit 1-morphism exists", failure.is_none(), failure.unwrap_or(format!("{pairs} ordered pairs")));
    let listed: Vec<Value> = units.iter().map(|u| json!({"e": elem(&u.e), "phi": elem(&u.phi)})).collect();
    Ok((v, json!({"units": listed, "connected_pairs": pairs})))
}

fn describe(c: &Complex) -> Value {
    let terms: Vec<Value> = c.degrees().zip(c.terms()).map(|(d, t)| json!({"degree": d, "group": group(t)})).collect();
    let diffs: Vec<Value> = c
        .degrees()
        .zip(c.differentials())
        .map(|(d, f)| json!({"from_degree": d, "matrix": f.matrix().row_vecs()}))
        .collect();
    json!({"terms": terms, "differentials": diffs})
}

fn unit_complex(c: &Complex, opts: &Options) -> Outcome {
    let mut v = Verification::new();
    let table = homology_table(c, &mut v)?;
    if opts.check_acyclic {
        for d in c.degrees() {
            let h = c.homology(d)?.group;
            v.record(format!("H^{d} = 0"), h.is_trivial(), h.to_string());
        }
    }
    Ok((v, json!({"complex": describe(c), "homology": table})))
}

const QISO_2: [&str; 3] = ["idA", "ker", "cone"];
const QISO_3: [&str; 2] = ["sum", "ker"];

fn comparison(model: &Model, name: &str) -> Result<StrictMorphism, CliError> {
    Ok(match (model, name) {
        (Model::Complex2(x), "idA") => alternate_identity_1(x)?.to_unit,
        (Model::Complex2(x), "ker") => alternate_kernel_1(x)?.to_unit,
        (Model::Complex2(x), "cone") => cone_truncation_comparison(x)?,
        (Model::Complex3(x), "sum") => alternate_sum_2(x)?.to_unit,
        (Model::Complex3(x), "ker") => alternate_kernel_2(x)?.to_unit,
        _ => unreachable!("names checked by caller"),
    })
}

fn qiso(model: &Model, opts: &Options) -> Outcome {
    let names: &[&str] = match model {
        Model::Complex2(_) => &QISO_2,
        _ => &QISO_3,
    };
    let chosen: Vec<&str> = match opts.against.as_deref() {
        None | Some("all") => names.to_vec(),
        Some(n) if names.contains(&n) => vec![n],
        Some(n) => {
            return Err(CliError::Input(format!("--against {n}: expected one of {} or all", names.join(", "))));
        }
    };
    let mut v = Verification::new();
    let mut results = vec![];
    for name in chosen {
        let f = comparison(model, name)?;
        let r = is_quasi_isomorphism(&f)?;
        let induced: Vec<String> = r.induced.iter().map(|(d, h)| format!("H^{d}: {h}")).collect();
        let failing = r.failing_degrees();
        let witness = if failing.is_empty() { induced.join("; ") } else { format!("not invertible in degrees {failing:?}") };
        v.record(format!("{name} → unit complex is a quasi-isomorphism"), r.is_quasi_isomorphism, witness);
        if name == "cone" {
            v.record("cone comparison is an isomorphism", f.is_isomorphism(), "degreewise");
        }
        results.push(json!({"against": name, "source": describe(f.source()), "induced": induced}));
    }
    Ok((v, json!({"comparisons": results})))
}

fn cech_classify(input: &Input, opts: &Options) -> Outcome {
    let nerve = input.nerve.as_ref().ok_or_else(|| CliError::Input("cech-classify needs a nerve (--nerve or \"nerve\")".into()))?;
    let mut v = Verification::new();
    let sizes = json!(nerve.sizes());
    match &input.model {
        Model::Complex2(x) => {
            require_enumerable(x.complex())?;
            let units = unit_cocycles(nerve, x, opts.max_states)?;
            v.record("unit cocycle classes = 1", units.count == 1, format!("{} classes of {} cocycles", units.count, units.cocycles));
            let u = unit_complex_1(x)?;
            let h0_unit = classify_h0(nerve, u.complex.complex())?;
            v.record("H^0(Tot unit complex) = 0", h0_unit.is_trivial(), h0_unit.to_string());
            let torsors = torsor_classes(nerve, x, opts.max_states)?;
            let h0 = classify_h0(nerve, x.complex())?;
            let agree = h0.order() == Some(torsors.count as u128);
            v.record("torsor classes = |H^0(Tot X)|", agree, format!("{} classes, H^0 = {h0}", torsors.count));
            Ok((
                v,
                json!({
                    "nerve_sizes": sizes,
                    "unit_classes": units.count,
                    "unit_cocycles": units.cocycles,
                    "torsor_classes": torsors.count,
                    "torsor_cocycles": torsors.cocycles,
                    "h0": group(&h0),
                    "h0_unit_complex": group(&h0_unit),
                }),
            ))
        }
        Model::Complex3(x) => {
            let u = unit_complex_2(x)?;
            let h0_unit = classify_h0(nerve, u.complex.complex())?;
            v.record("H^0(Tot unit complex) = 0", h0_unit.is_trivial(), h0_unit.to_string());
            let h0 = classify_h0(nerve, x.complex())?;
            Ok((v, json!({"nerve_sizes": sizes, "h0": group(&h0), "h0_unit_complex": group(&h0_unit)})))
        }
        Model::Crossed(_) => unreachable!("dispatched on kind"),
    }
}

fn crossed_summary(x: &CrossedModule) -> Value {
    let (pi0, pi1) = x.homotopy_orders();
    json!({"source_order": x.source().order(), "target_order": x.target().order(), "pi0_order": pi0, "pi1_order": pi1})
}

fn crossed_verify(x: &CrossedModule) -> Outcome {
    let v = x.verify();
    let results = if v.passed() { crossed_summary(x) } else { json!({}) };
    Ok((v, results))
}

fn crossed_units(x: &CrossedModule, nerve: Option<&Nerve>, opts: &Options) -> Outcome {
    let axioms = x.verify();
    if !axioms.passed() {
        return Ok((axioms, json!({})));
    }
    let r = enumerate_units_nonabelian(x)?;
    let mut v = r.verification.clone();
    let u = unit_crossed_module(x)?;
    for c in u.module.verify().checks {
        v.record(format!("unit crossed module {}", c.name), c.passed, c.witness);
    }
    let (pi0, pi1) = u.module.homotopy_orders();
    v.record("unit crossed module has π_0 = π_1 = 1", (pi0, pi1) == (1, 1), format!("|π_0| = {pi0}, |π_1| = {pi1}"));
    v.extend(verify_point_law_matches_composition(x)?);
    let units: Vec<Value> = r.units.iter().map(|u| json!({"e": u.e, "g_phi": u.g_phi})).collect();
    let mut results = json!({
        "units": units,
        "kernel_units": r.kernel_units.len(),
        "unit_crossed_module_order": u.module.source().order(),
    });
    if let Some(nerve) = nerve {
        let law = verify_group_law(x, nerve, opts.max_states)?;
        for c in law.checks {
            v.record(format!("triple group law {}", c.name), c.passed, c.witness);
        }
        results["triples"] = json!(enumerate_triples(x, nerve, opts.max_states)?.len());
        results["nerve_sizes"] = json!(nerve.sizes());
    }
    Ok((v, results))
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
