//! Versioned JSON documents for algebras, polytopes, ideals and families.
//!
//! Every document is an object with `"schema_version": 1` and one payload:
//!
//! * algebra by generators: `{"r": 1, "s": 2, "generators": [{"exp": [0], "deg": [1, 0]}, ...]}`;
//!   a generator may also be the flat array `[v_1, ..., v_r, n_1, ..., n_s]`.
//! * staircase algebra: `{"s": 2, "staircase": {"lower": L, "upper": U}}` where
//!   `L` is `{"linear": F}`, `{"max": [F, ...]}` or `{"ceil_sqrt_quadratic": [[q11, q12], ...]}`,
//!   `U` is `{"linear": F}` or `{"min": [F, ...]}` and a form `F` is `{"coeffs": [...], "den": 1}`.
//! * polytope: `{"dim": 2, "vertices": [["0", "1/2"], ...]}` with rationals as `"p/q"` strings
//!   (plain integers are accepted on input).
//! * ideal: `{"ideal": {"vars": 2, "gens": [[1, 0], [0, 2]]}}`.
//! * family: `{"family": {"powers": IDEAL}}`, `{"family": {"m_adic": 2}}`,
//!   `{"family": {"explicit": {"vars": 2, "pieces": [IDEAL, ...]}}}` or
//!   `{"family": {"from_body": {"dim": 2, "vertices": [...], "h": 3}}}` (`h` optional).

use std::str::FromStr;

use oklab_core::algebra::MonomialAlgebra;
use oklab_core::ideal::{body_to_family, default_height, FamilyRule, GradedIdealFamily, MonomialIdeal};
use oklab_core::semigroup::{
    Generator, GradedSemigroup, LinearForm, LowerBound, Source, StaircaseSpec, UpperBound,
};
use oklab_core::polytope::convex_hull_in;
use oklab_core::{Polytope, Rat, RationalVector};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// A rational as an exact `"p/q"` string.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rat(s: &str) -> Result<Rat, CliError> {
    Rat::from_str(s.trim()).map_err(|e| CliError::invalid(format!("bad rational {s:?}: {e}")))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(skip_serializing_if = "Option::is_none")]
    schema_version: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<GeneratorJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    staircase: Option<StaircaseJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Vec<Coord>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideal: Option<IdealJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<FamilyJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum GeneratorJson {
    Split { exp: Vec<i64>, deg: Vec<u64> },
    Flat(Vec<i64>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormJson {
    coeffs: Vec<i64>,
    #[serde(default = "one")]
    den: u64,
}

fn one() -> u64 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum LowerJson {
    Linear(FormJson),
    Max(Vec<FormJson>),
    CeilSqrtQuadratic(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum UpperJson {
    Linear(FormJson),
    Min(Vec<FormJson>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StaircaseJson {
    lower: LowerJson,
    upper: UpperJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    vars: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitJson {
    vars: usize,
    pieces: Vec<IdealJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BodyJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    vertices: Vec<Vec<Coord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum FamilyJson {
    Powers(IdealJson),
    MAdic(usize),
    Explicit(ExplicitJson),
    FromBody(BodyJson),
}

/// A parsed input document.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Algebra(MonomialAlgebra),
    Polytope(Polytope),
    Ideal(MonomialIdeal),
    Family(GradedIdealFamily),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Algebra(_) => "algebra",
            Input::Polytope(_) => "polytope",
            Input::Ideal(_) => "ideal",
            Input::Family(_) => "family",
        }
    }

    pub fn to_json(&self) -> Result<Value, CliError> {
        match self {
            Input::Algebra(a) => algebra_to_json(a),
            Input::Polytope(p) => Ok(polytope_to_json(p)),
            Input::Ideal(i) => Ok(document(Document {
                ideal: Some(ideal_json(i)),
                ..Document::default()
            })),
            Input::Family(f) => family_to_json(f),
        }
    }
}

fn document(mut d: Document) -> Value {
    d.schema_version = Some(SCHEMA_VERSION);
    serde_json::to_value(d).expect("documents serialize")
}

pub fn parse_document(text: &str) -> Result<Input, CliError> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| CliError::invalid(format!("parse: {e}")))?;
    from_document(doc)
}

pub fn parse_value(v: &Value) -> Result<Input, CliError> {
    let doc: Document = serde_json::from_value(v.clone())
        .map_err(|e| CliError::invalid(format!("parse: {e}")))?;
    from_document(doc)
}

fn from_document(doc: Document) -> Result<Input, CliError> {
    match doc.schema_version {
        None | Some(SCHEMA_VERSION) => {}
        Some(v) => {
            return Err(CliError::invalid(format!(
                "parse: unsupported schema_version {v} (expected {SCHEMA_VERSION})"
            )))
        }
    }
    let kinds = [
        doc.generators.is_some() || doc.staircase.is_some(),
        doc.vertices.is_some(),
        doc.ideal.is_some(),
        doc.family.is_some(),
    ];
    if kinds.iter().filter(|&&k| k).count() != 1 {
        return Err(CliError::invalid(
            "parse: expected exactly one of generators, staircase, vertices, ideal, family",
        ));
    }
    if let Some(v) = doc.vertices {
        return Ok(Input::Polytope(polytope(doc.dim, &v)?));
    }
    if let Some(i) = doc.ideal {
        return Ok(Input::Ideal(ideal(&i)?));
    }
    if let Some(f) = doc.family {
        return Ok(Input::Family(family(&f)?));
    }
    let s = doc.s.ok_or_else(|| CliError::invalid("parse: algebra needs \"s\""))?;
    let semigroup = if let Some(st) = doc.staircase {
        if doc.generators.is_some() {
            return Err(CliError::invalid("parse: give either generators or staircase"));
        }
        if doc.r.is_some_and(|r| r != 1) {
            return Err(CliError::invalid("parse: staircase algebras have r = 1"));
        }
        let spec = StaircaseSpec::new(s, lower(&st.lower)?, upper(&st.upper)?)?;
        GradedSemigroup::staircase(spec)?
    } else {
        let r = doc.r.ok_or_else(|| CliError::invalid("parse: algebra needs \"r\""))?;
        let gens = doc
            .generators
            .unwrap_or_default()
            .into_iter()
            .enumerate()
            .map(|(k, g)| generator(k, g, r, s))
            .collect::<Result<Vec<_>, _>>()?;
        GradedSemigroup::from_generators(r, s, gens)?
    };
    Ok(Input::Algebra(MonomialAlgebra::new(semigroup)?))
}

fn generator(k: usize, g: GeneratorJson, r: usize, s: usize) -> Result<Generator, CliError> {
    let (exp, deg) = match g {
        GeneratorJson::Split { exp, deg } => (exp, deg),
        GeneratorJson::Flat(v) => {
            if v.len() != r + s {
                return Err(CliError::invalid(format!(
                    "parse: generator {k} has {} entries, expected r + s = {}",
                    v.len(),
                    r + s
                )));
            }
            let deg = v[r..]
                .iter()
                .map(|&d| {
                    u64::try_from(d).map_err(|_| {
                        CliError::invalid(format!("parse: generator {k} has negative degree {d}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            (v[..r].to_vec(), deg)
        }
    };
    if exp.len() != r || deg.len() != s {
        return Err(CliError::invalid(format!(
            "parse: generator {k} has shape ({}|{}), expected ({r}|{s})",
            exp.len(),
            deg.len()
        )));
    }
    Ok(Generator::new(exp, deg))
}

fn form(f: &FormJson) -> Result<LinearForm, CliError> {
    Ok(LinearForm::with_denominator(f.coeffs.clone(), f.den)?)
}

fn lower(l: &LowerJson) -> Result<LowerBound, CliError> {
    Ok(match l {
        LowerJson::Linear(f) => LowerBound::Linear(form(f)?),
        LowerJson::Max(fs) => LowerBound::PiecewiseLinearMax(fs.iter().map(form).collect::<Result<_, _>>()?),
        LowerJson::CeilSqrtQuadratic(q) => LowerBound::CeilSqrtQuadratic(q.clone()),
    })
}

fn upper(u: &UpperJson) -> Result<UpperBound, CliError> {
    Ok(match u {
        UpperJson::Linear(f) => UpperBound::Linear(form(f)?),
        UpperJson::Min(fs) => UpperBound::PiecewiseLinearMin(fs.iter().map(form).collect::<Result<_, _>>()?),
    })
}

fn form_json(f: &LinearForm) -> FormJson {
    FormJson {
        coeffs: f.coeffs.clone(),
        den: f.denominator,
    }
}

fn coord(c: &Coord) -> Result<Rat, CliError> {
    match c {
        Coord::Int(i) => Ok(Rat::from_integer((*i).into())),
        Coord::Text(s) => parse_rat(s),
    }
}

fn polytope(dim: Option<usize>, vertices: &[Vec<Coord>]) -> Result<Polytope, CliError> {
    let points = vertices
        .iter()
        .map(|v| Ok(RationalVector::new(v.iter().map(coord).collect::<Result<_, CliError>>()?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let dim = match (dim, points.first()) {
        (Some(d), _) => d,
        (None, Some(p)) => p.ambient_dim(),
        (None, None) => return Err(CliError::invalid("parse: an empty polytope needs \"dim\"")),
    };
    Ok(convex_hull_in(dim, &points)?)
}

fn vertices_json(p: &Polytope) -> Vec<Vec<Coord>> {
    p.vertices()
        .iter()
        .map(|v| v.coords().iter().map(|c| Coord::Text(rat_string(c))).collect())
        .collect()
}

fn ideal(i: &IdealJson) -> Result<MonomialIdeal, CliError> {
    Ok(MonomialIdeal::new(i.vars, i.gens.clone())?)
}

fn ideal_json(i: &MonomialIdeal) -> IdealJson {
    IdealJson {
        vars: i.num_vars(),
        gens: i.gens().to_vec(),
    }
}

fn family(f: &FamilyJson) -> Result<GradedIdealFamily, CliError> {
    Ok(match f {
        FamilyJson::Powers(i) => GradedIdealFamily::powers(ideal(i)?),
        FamilyJson::MAdic(v) => {
            if *v == 0 {
                return Err(CliError::invalid("parse: m_adic needs at least one variable"));
            }
            GradedIdealFamily::m_adic(*v)
        }
        FamilyJson::Explicit(e) => {
            GradedIdealFamily::explicit(e.vars, e.pieces.iter().map(ideal).collect::<Result<_, _>>()?)?
        }
        FamilyJson::FromBody(b) => {
            let body = polytope(b.dim, &b.vertices)?;
            let h = b.h.unwrap_or_else(|| default_height(&body));
            body_to_family(&body, h)?
        }
    })
}

/// The canonical document for an algebra given by generators or a staircase.
pub fn algebra_to_json(a: &MonomialAlgebra) -> Result<Value, CliError> {
    let sg = a.semigroup();
    let doc = match sg.source() {
        Source::Generators(gens) => Document {
            r: Some(sg.r()),
            s: Some(sg.s()),
            generators: Some(
                gens.iter()
                    .map(|g| GeneratorJson::Split {
                        exp: g.valuation.clone(),
                        deg: g.degree.clone(),
                    })
                    .collect(),
            ),
            ..Document::default()
        },
        Source::Staircase(spec) => Document {
            s: Some(spec.s),
            staircase: Some(StaircaseJson {
                lower: match &spec.lower {
                    LowerBound::Linear(f) => LowerJson::Linear(form_json(f)),
                    LowerBound::PiecewiseLinearMax(fs) => LowerJson::Max(fs.iter().map(form_json).collect()),
                    LowerBound::CeilSqrtQuadratic(q) => LowerJson::CeilSqrtQuadratic(q.clone()),
                },
                upper: match &spec.upper {
                    UpperBound::Linear(f) => UpperJson::Linear(form_json(f)),
                    UpperBound::PiecewiseLinearMin(fs) => UpperJson::Min(fs.iter().map(form_json).collect()),
                },
            }),
            ..Document::default()
        },
        Source::Veronese { .. } => {
            return Err(CliError::invalid("serialize: Veronese algebras have no input form"))
        }
    };
    Ok(document(doc))
}

pub fn polytope_to_json(p: &Polytope) -> Value {
    document(Document {
        dim: Some(p.ambient_dim()),
        vertices: Some(vertices_json(p)),
        ..Document::default()
    })
}

pub fn family_to_json(f: &GradedIdealFamily) -> Result<Value, CliError> {
    let fam = match f.rule() {
        FamilyRule::Powers(i) => FamilyJson::Powers(ideal_json(i)),
        FamilyRule::Explicit(pieces) => FamilyJson::Explicit(ExplicitJson {
            vars: f.num_vars(),
            pieces: pieces.iter().map(ideal_json).collect(),
        }),
        FamilyRule::FromBody { body, h } => FamilyJson::FromBody(BodyJson {
            dim: Some(body.ambient_dim()),
            vertices: vertices_json(body),
            h: Some(*h),
        }),
    };
    Ok(document(Document {
        family: Some(fam),
        ..Document::default()
    }))
}
