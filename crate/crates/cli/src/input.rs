//! Input files: a versioned JSON document describing a complex or a crossed
//! module, optionally with a nerve.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use unital_core::cech::{cech_nerve, Cover, Intersection};
use unital_core::{Complex2, Complex3, CrossedModule, FgAbGroup, FiniteGroup, GroupHom, Matrix, Nerve};

pub const SCHEMA_VERSION: u32 = 1;
/// Largest group order accepted by the enumerating commands.
pub const MAX_GROUP_ORDER: u128 = 256;
pub const MAX_NERVE_CELLS: usize = 64;

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    #[serde(default = "schema_version")]
    pub schema: u32,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groups: BTreeMap<String, GroupDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossed: Option<CrossedDef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nerve: Option<NerveDef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Complex2,
    Complex3,
    CrossedModule,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Complex2 => "complex2",
            Kind::Complex3 => "complex3",
            Kind::CrossedModule => "crossed_module",
        })
    }
}

/// `⊕ Z/inv_i ⊕ Z^free` with `inv` an invariant-factor chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDef {
    #[serde(default)]
    pub inv: Vec<i64>,
    #[serde(default)]
    pub free: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedDef {
    pub source: FiniteGroupDef,
    pub target: FiniteGroupDef,
    /// `boundary[g]` is the image of element `g`.
    pub boundary: Vec<usize>,
    /// Trivial when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionDef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionDef {
    /// `table[h][g] = g^h`.
    Table(Vec<Vec<usize>>),
    /// `trivial`, or `conjugation`: `λ(g^h) = h^{-1}·λ(g)·h` for injective `λ`.
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiniteGroupDef {
    Cyclic(usize),
    Dihedral(usize),
    /// `trivial`, `S3`, `A4` or `Q8`.
    Named(String),
    /// Multiplication table with the identity at index 0.
    Table(Vec<Vec<usize>>),
    /// Direct product, elements ordered lexicographically.
    Product(Vec<FiniteGroupDef>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NerveDef {
    /// `point` or `circle3`.
    Preset(String),
    Cover(CoverDef),
    Explicit(ExplicitNerve),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDef {
    pub parts: Vec<String>,
    #[serde(default)]
    pub intersections: Vec<IntersectionDef>,
}

fn one() -> usize {
    1
}

fn is_one(n: &usize) -> bool {
    *n == 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionDef {
    pub parts: Vec<usize>,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub components: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parents: BTreeMap<usize, Vec<usize>>,
}

/// `faces[n][x][i] = d_i(x)` for cell `x` of level `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitNerve {
    pub sizes: [usize; 4],
    pub faces: [Vec<Vec<usize>>; 3],
}

/// Invalid input, located by a JSON path or a line/column position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub at: String,
    pub message: String,
}

impl InputError {
    fn new(at: impl Into<String>, message: impl Into<String>) -> Self {
        InputError { at: at.into(), message: message.into() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.at, self.message)
    }
}

/// Parses without building anything; see [`validate`].
pub fn parse_input(text: &str) -> Result<InputFile, InputError> {
    let doc: InputFile = serde_json::from_str(text)
        .map_err(|e| InputError::new(format!("line {}, column {}", e.line(), e.column()), strip_position(&e)))?;
    if doc.schema != SCHEMA_VERSION {
        return Err(InputError::new("schema", format!("unsupported schema {}, expected {SCHEMA_VERSION}", doc.schema)));
    }
    Ok(doc)
}

pub fn parse_nerve(text: &str) -> Result<NerveDef, InputError> {
    serde_json::from_str(text)
        .map_err(|e| InputError::new(format!("nerve file line {}, column {}", e.line(), e.column()), strip_position(&e)))
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

/// Pretty-printed JSON that [`parse_input`] reads back to an equal value.
pub fn print_input(doc: &InputFile) -> String {
    serde_json::to_string_pretty(doc).expect("input files serialize")
}

#[derive(Debug, Clone)]
pub enum Model {
    Complex2(Complex2),
    Complex3(Complex3),
    Crossed(CrossedModule),
}

#[derive(Debug, Clone)]
pub struct Input {
    pub doc: InputFile,
    pub model: Model,
    pub nerve: Option<Nerve>,
}

/// Nerve construction failures are input errors, except too many cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NerveError {
    Invalid(InputError),
    TooLarge(usize),
}

pub fn validate(doc: InputFile) -> Result<Input, InputError> {
    let model = match doc.kind {
        Kind::Complex2 | Kind::Complex3 => {
            if doc.crossed.is_some() {
                return Err(InputError::new("crossed", format!("not allowed for kind {}", doc.kind)));
            }
            build_complex(&doc)?
        }
        Kind::CrossedModule => {
            if let Some(name) = doc.groups.keys().next() {
                return Err(InputError::new(format!("groups.{name}"), "not allowed for kind crossed_module"));
            }
            if let Some(name) = doc.maps.keys().next() {
                return Err(InputError::new(format!("maps.{name}"), "not allowed for kind crossed_module"));
            }
            let c = doc.crossed.as_ref().ok_or_else(|| InputError::new("crossed", "missing for kind crossed_module"))?;
            Model::Crossed(build_crossed(c)?)
        }
    };
    Ok(Input { doc, model, nerve: None })
}

fn build_complex(doc: &InputFile) -> Result<Model, InputError> {
    let (names, map_names): (&[&str], &[&str]) = match doc.kind {
        Kind::Complex2 => (&["A", "B"], &["lambda"]),
        _ => (&["A", "B", "C"], &["delta", "lambda"]),
    };
    for name in doc.groups.keys() {
        if !names.contains(&name.as_str()) {
            return Err(InputError::new(format!("groups.{name}"), format!("unknown group, expected one of {}", names.join(", "))));
        }
    }
    for name in doc.maps.keys() {
        if !map_names.contains(&name.as_str()) {
            return Err(InputError::new(format!("maps.{name}"), format!("unknown map, expected one of {}", map_names.join(", "))));
        }
    }
    let group = |name: &str| -> Result<FgAbGroup, InputError> {
        match doc.groups.get(name) {
            None => Ok(FgAbGroup::trivial()),
            Some(g) => FgAbGroup::new(g.inv.clone(), g.free).map_err(|e| InputError::new(format!("groups.{name}"), e.to_string())),
        }
    };
    let hom = |name: &str, src: &FgAbGroup, tgt: &FgAbGroup| -> Result<GroupHom, InputError> {
        let at = format!("maps.{name}");
        let Some(rows) = doc.maps.get(name) else { return Ok(GroupHom::zero(src, tgt)) };
        if rows.len() != tgt.rank() || rows.iter().any(|r| r.len() != src.rank()) {
            return Err(InputError::new(
                at,
                format!("expected {} rows of length {} (rows follow target generators)", tgt.rank(), src.rank()),
            ));
        }
        let m = Matrix::from_rows(tgt.rank(), src.rank(), rows).expect("shape checked");
        GroupHom::new(src.clone(), tgt.clone(), m).map_err(|e| InputError::new(at, e.to_string()))
    };
    let (a, b) = (group("A")?, group("B")?);
    Ok(match doc.kind {
        Kind::Complex2 => Model::Complex2(Complex2::new(hom("lambda", &a, &b)?)),
        _ => {
            let c = group("C")?;
            let delta = hom("delta", &a, &b)?;
            let lambda = hom("lambda", &b, &c)?;
            Model::Complex3(Complex3::new(delta, lambda).map_err(|e| InputError::new("maps", e.to_string()))?)
        }
    })
}

fn build_finite_group(doc: &FiniteGroupDef, at: &str) -> Result<FiniteGroup, InputError> {
    let err = |m: String| InputError::new(at, m);
    Ok(match doc {
        FiniteGroupDef::Cyclic(0) => return Err(err("cyclic group needs a positive order".into())),
        FiniteGroupDef::Cyclic(n) => FiniteGroup::cyclic(*n),
        FiniteGroupDef::Dihedral(n) if *n < 1 => return Err(err("dihedral group needs n ≥ 1".into())),
        FiniteGroupDef::Dihedral(n) => FiniteGroup::dihedral(*n),
        FiniteGroupDef::Named(name) => match name.as_str() {
            "trivial" => FiniteGroup::trivial(),
            "S3" => FiniteGroup::symmetric3(),
            "A4" => FiniteGroup::alternating4(),
            "Q8" => FiniteGroup::quaternion(),
            _ => return Err(err(format!("unknown group {name:?}, expected trivial, S3, A4 or Q8"))),
        },
        FiniteGroupDef::Table(t) => FiniteGroup::from_table(t.clone()).map_err(|e| err(e.to_string()))?,
        FiniteGroupDef::Product(factors) => {
            let mut g = FiniteGroup::trivial();
            for (i, f) in factors.iter().enumerate() {
                g = g.product(&build_finite_group(f, &format!("{at}.product[{i}]"))?);
            }
            g
        }
    })
}

fn build_crossed(c: &CrossedDef) -> Result<CrossedModule, InputError> {
    let g = build_finite_group(&c.source, "crossed.source")?;
    let h = build_finite_group(&c.target, "crossed.target")?;
    if c.boundary.len() != g.order() || c.boundary.iter().any(|&y| y >= h.order()) {
        return Err(InputError::new("crossed.boundary", format!("expected {} entries below {}", g.order(), h.order())));
    }
    let action = match &c.action {
        None => trivial_action(&g, &h),
        Some(ActionDef::Named(n)) if n == "trivial" => trivial_action(&g, &h),
        Some(ActionDef::Named(n)) if n == "conjugation" => conjugation_action(&g, &h, &c.boundary)?,
        Some(ActionDef::Named(n)) => {
            return Err(InputError::new("crossed.action", format!("unknown action {n:?}, expected trivial, conjugation or a table")))
        }
        Some(ActionDef::Table(t)) => t.clone(),
    };
    CrossedModule::new(g, h, c.boundary.clone(), action).map_err(|e| InputError::new("crossed", e.to_string()))
}

fn trivial_action(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    vec![g.elements().collect(); h.order()]
}

/// `g^h = λ^{-1}(h^{-1}·λ(g)·h)`.
fn conjugation_action(g: &FiniteGroup, h: &FiniteGroup, boundary: &[usize]) -> Result<Vec<Vec<usize>>, InputError> {
    let at = "crossed.action";
    let mut preimage = vec![None; h.order()];
    for x in g.elements() {
        if preimage[boundary[x]].replace(x).is_some() {
            return Err(InputError::new(at, "conjugation needs an injective boundary"));
        }
    }
    h.elements()
        .map(|y| {
            g.elements()
                .map(|x| {
                    preimage[h.conj(boundary[x], y)]
                        .ok_or_else(|| InputError::new(at, "conjugation needs a normal image of the boundary"))
                })
                .collect()
        })
        .collect()
}

pub fn build_nerve(doc: &NerveDef) -> Result<Nerve, NerveError> {
    let invalid = |at: &str, m: String| NerveError::Invalid(InputError::new(at, m));
    let nerve = match doc {
        NerveDef::Preset(p) => match p.as_str() {
            "point" => Nerve::point(),
            "circle3" => Nerve::circle3(),
            _ => return Err(invalid("nerve.preset", format!("unknown preset {p:?}, expected point or circle3"))),
        },
        NerveDef::Cover(c) => {
            let cover = Cover {
                parts: c.parts.clone(),
                intersections: c
                    .intersections
                    .iter()
                    .map(|i| Intersection { parts: i.parts.clone(), components: i.components, parents: i.parents.clone() })
                    .collect(),
            };
            cech_nerve(&cover).map_err(|e| invalid("nerve.cover", e.to_string()))?
        }
        NerveDef::Explicit(e) => {
            Nerve::new(e.sizes, e.faces.clone()).map_err(|err| invalid("nerve.explicit", err.to_string()))?
        }
    };
    if nerve.cells() > MAX_NERVE_CELLS {
        return Err(NerveError::TooLarge(nerve.cells()));
    }
    Ok(nerve)
}
