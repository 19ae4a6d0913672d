use crate::error::{CliError, ErrorCode};
use logfol_core::exactpoly::parse_rational;
use logfol_core::indices::RationalPoint;
use logfol_core::{parse_poly, Arrangement, Error, Foliation, LinearForm, MultiPoly};
use serde::{Deserialize, Serialize};

/// On-disk problem description; polynomials are strings in `z0..zn`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub n: usize,
    pub foliation: Vec<String>,
    #[serde(default)]
    pub hyperplanes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<String>>,
}

/// A validated instance: foliation, arrangement it is tangent to, and
/// optional points for per-point reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub foliation: Foliation,
    pub arrangement: Arrangement,
    pub points: Vec<RationalPoint>,
}

pub fn variable_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("z{i}")).collect()
}

fn at(field: &str, i: usize) -> Option<String> {
    Some(format!("{field}[{i}]"))
}

fn parse_in(src: &str, names: &[&str], locus: Option<String>) -> Result<MultiPoly, CliError> {
    parse_poly(src, names).map_err(|e| CliError::from_core(e, locus))
}

/// Parses a comma-separated homogeneous point such as `1,0,-1/2`.
pub fn parse_point(src: &str, n: usize) -> Result<RationalPoint, CliError> {
    let parts: Vec<&str> = src.split(',').map(str::trim).collect();
    parse_point_parts(&parts, n, None)
}

fn parse_point_parts(parts: &[&str], n: usize, locus: Option<String>) -> Result<RationalPoint, CliError> {
    if parts.len() != n + 1 {
        let msg = format!("point needs {} coordinates, found {}", n + 1, parts.len());
        return Err(CliError::new(ErrorCode::Syntax, locus, msg));
    }
    let coords = parts
        .iter()
        .map(|s| parse_rational(s).map_err(|e| CliError::from_core(e, locus.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    RationalPoint::new(coords).map_err(|e| CliError::from_core(e, locus))
}

/// Parses and validates a JSON problem description.
pub fn parse_spec(text: &str) -> Result<ProblemSpec, CliError> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| {
        CliError::new(ErrorCode::Syntax, Some(format!("line {}, column {}", e.line(), e.column())), e.to_string())
    })?;
    from_document(&doc)
}

pub fn from_document(doc: &SpecDocument) -> Result<ProblemSpec, CliError> {
    let n = doc.n;
    if n == 0 {
        return Err(CliError::new(ErrorCode::Syntax, Some("n".into()), "projective dimension must be positive"));
    }
    if doc.foliation.len() != n + 1 {
        let msg = format!("expected {} components on P^{n}, found {}", n + 1, doc.foliation.len());
        return Err(CliError::new(ErrorCode::Syntax, Some("foliation".into()), msg));
    }
    let owned = variable_names(n);
    let names: Vec<&str> = owned.iter().map(String::as_str).collect();

    let comps = doc
        .foliation
        .iter()
        .enumerate()
        .map(|(i, s)| parse_in(s, &names, at("foliation", i)))
        .collect::<Result<Vec<_>, _>>()?;
    let foliation = Foliation::new(comps).map_err(|e| {
        let locus = match &e {
            Error::DegreeMismatch { index, .. } => at("foliation", *index),
            _ => Some("foliation".into()),
        };
        CliError::from_core(e, locus)
    })?;

    let forms = doc
        .hyperplanes
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let p = parse_in(s, &names, at("hyperplanes", i))?;
            LinearForm::from_poly(&p).map_err(|_| CliError::new(ErrorCode::Syntax, at("hyperplanes", i), format!("{s} is not a nonzero linear form")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let arrangement = Arrangement::new(n, forms).map_err(|e| CliError::from_core(e, Some("hyperplanes".into())))?;
    foliation.check_logarithmic(&arrangement).map_err(|e| {
        let locus = match &e {
            Error::NotLogarithmic { index } => at("hyperplanes", *index),
            _ => None,
        };
        CliError::from_core(e, locus)
    })?;

    let points = doc
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let parts: Vec<&str> = p.iter().map(String::as_str).collect();
            parse_point_parts(&parts, n, at("points", i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProblemSpec { foliation, arrangement, points })
}

impl ProblemSpec {
    pub fn dim(&self) -> usize {
        self.foliation.dim()
    }

    /// Canonical document; parsing it gives back an equal spec.
    pub fn to_document(&self) -> SpecDocument {
        let names = variable_names(self.dim());
        SpecDocument {
            n: self.dim(),
            foliation: self.foliation.components().iter().map(|p| p.display_with(&names).to_string()).collect(),
            hyperplanes: self
                .arrangement
                .hyperplanes()
                .iter()
                .map(|l| l.to_poly().display_with(&names).to_string())
                .collect(),
            points: self.points.iter().map(|p| p.coords().iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("plain data")
    }
}
