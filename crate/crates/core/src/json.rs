//! JSON formats for every value the command line reads or writes.
//!
//! Each type converts to and from a plain serde "wire" struct; element sets
//! are written as ascending element lists and rationals as `"a"` or `"a/b"`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::ModularCut;
use crate::linalg::{format_rational, parse_rational, Field, Matrix, Scalar};
use crate::matroid::{ElementSet, Matroid};
use crate::quotient::{Factorization, Major};
use crate::realization::{ObstructionCertificate, QuotientRealization, Realization};
use crate::tropical::{
    HomogeneousIdeal, InclusionReport, NonRealizableReport, Polynomial, RelativeRealizability, SampleVerdict,
    TropicalPoint,
};

/// A value with a JSON representation.
pub trait JsonFormat: Sized {
    type Wire: Serialize + DeserializeOwned;

    fn to_wire(&self) -> Self::Wire;
    fn from_wire(w: Self::Wire) -> Result<Self>;

    fn to_json(&self) -> String {
        let v = serde_json::to_value(self.to_wire()).expect("wire types always serialize");
        to_pretty(&v)
    }

    fn from_json(s: &str) -> Result<Self> {
        let w = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_wire(w)
    }
}

/// Indented JSON in which arrays of scalars stay on one line.
pub fn to_pretty(v: &serde_json::Value) -> String {
    let mut out = String::new();
    write_pretty(v, 0, &mut out);
    out
}

fn write_pretty(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_pretty(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_pretty(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}

fn set_to_vec(s: ElementSet) -> Vec<usize> {
    s.to_vec()
}

fn vec_to_set(v: &[usize]) -> Result<ElementSet> {
    if let Some(&x) = v.iter().find(|&&x| x >= crate::matroid::MAX_ELEMENTS) {
        return Err(Error::ElementOutOfRange {
            element: x,
            n: crate::matroid::MAX_ELEMENTS,
        });
    }
    Ok(ElementSet::from_elements(v.iter().copied()))
}

fn sets_from(v: &[Vec<usize>]) -> Result<Vec<ElementSet>> {
    v.iter().map(|s| vec_to_set(s)).collect()
}

#[derive(Serialize, Deserialize)]
pub struct MatroidWire {
    pub n: usize,
    pub rank: usize,
    pub bases: Vec<Vec<usize>>,
    /// Keyed by element index written as a string, as JSON object keys are.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
}

impl JsonFormat for Matroid {
    type Wire = MatroidWire;

    fn to_wire(&self) -> MatroidWire {
        MatroidWire {
            n: self.n(),
            rank: self.rank(),
            bases: self.bases().iter().map(|&b| set_to_vec(b)).collect(),
            labels: (!self.labels().is_empty())
                .then(|| self.labels().iter().map(|(k, v)| (k.to_string(), v.clone())).collect()),
        }
    }

    fn from_wire(w: MatroidWire) -> Result<Self> {
        let bases = sets_from(&w.bases)?;
        let m = Matroid::from_bases(w.n, bases)?;
        if m.rank() != w.rank {
            return Err(Error::Parse(format!("stated rank {} but bases have size {}", w.rank, m.rank())));
        }
        let Some(labels) = w.labels else {
            return Ok(m);
        };
        let labels = labels
            .into_iter()
            .map(|(k, v)| {
                let i = k
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("label key {k:?} is not an element index")))?;
                Ok((i, v))
            })
            .collect::<Result<BTreeMap<usize, String>>>()?;
        m.with_labels(labels)
    }
}

#[derive(Serialize, Deserialize)]
pub struct ModularCutWire {
    pub matroid: MatroidWire,
    pub flats: Vec<Vec<usize>>,
}

impl JsonFormat for ModularCut {
    type Wire = ModularCutWire;

    fn to_wire(&self) -> ModularCutWire {
        ModularCutWire {
            matroid: self.matroid().to_wire(),
            flats: self.members().iter().map(|&f| set_to_vec(f)).collect(),
        }
    }

    fn from_wire(w: ModularCutWire) -> Result<Self> {
        let m = Matroid::from_wire(w.matroid)?;
        ModularCut::new(&m, sets_from(&w.flats)?)
    }
}

#[derive(Serialize, Deserialize)]
pub struct FactorizationWire {
    pub steps: Vec<MatroidWire>,
}

impl JsonFormat for Factorization {
    type Wire = FactorizationWire;

    fn to_wire(&self) -> FactorizationWire {
        FactorizationWire {
            steps: self.steps().iter().map(Matroid::to_wire).collect(),
        }
    }

    fn from_wire(w: FactorizationWire) -> Result<Self> {
        let steps = w.steps.into_iter().map(Matroid::from_wire).collect::<Result<_>>()?;
        Factorization::new(steps)
    }
}

#[derive(Serialize, Deserialize)]
pub struct MajorWire {
    pub matroid: MatroidWire,
    pub new_elements: Vec<usize>,
}

impl JsonFormat for Major {
    type Wire = MajorWire;

    fn to_wire(&self) -> MajorWire {
        MajorWire {
            matroid: self.matroid().to_wire(),
            new_elements: self.new_elements().to_vec(),
        }
    }

    fn from_wire(w: MajorWire) -> Result<Self> {
        Major::new(Matroid::from_wire(w.matroid)?, w.new_elements)
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum FieldWire {
    Named(String),
    Prime { p: u64 },
}

impl JsonFormat for Field {
    type Wire = FieldWire;

    fn to_wire(&self) -> FieldWire {
        match *self {
            Field::Rational => FieldWire::Named("Q".into()),
            Field::Prime(p) => FieldWire::Prime { p },
        }
    }

    fn from_wire(w: FieldWire) -> Result<Self> {
        match w {
            FieldWire::Named(s) if s == "Q" => Ok(Field::Rational),
            FieldWire::Named(s) => Err(Error::Parse(format!("unknown field {s:?}"))),
            FieldWire::Prime { p } => Field::prime(p),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct MatrixWire {
    pub field: FieldWire,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl JsonFormat for Matrix {
    type Wire = MatrixWire;

    fn to_wire(&self) -> MatrixWire {
        MatrixWire {
            field: self.field().to_wire(),
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows())
                .map(|i| self.row(i).iter().map(Scalar::to_string).collect())
                .collect(),
        }
    }

    fn from_wire(w: MatrixWire) -> Result<Self> {
        let field = Field::from_wire(w.field)?;
        if w.entries.len() != w.rows || w.entries.iter().any(|r| r.len() != w.cols) {
            return Err(Error::DimensionMismatch(format!(
                "entries do not form a {}x{} array",
                w.rows, w.cols
            )));
        }
        let rows = w
            .entries
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, w.cols, rows)
    }
}

#[derive(Serialize, Deserialize)]
pub struct RealizationWire {
    pub matroid: MatroidWire,
    pub matrix: MatrixWire,
}

impl JsonFormat for Realization {
    type Wire = RealizationWire;

    fn to_wire(&self) -> RealizationWire {
        RealizationWire {
            matroid: self.matroid().to_wire(),
            matrix: self.matrix().to_wire(),
        }
    }

    fn from_wire(w: RealizationWire) -> Result<Self> {
        Realization::new(Matroid::from_wire(w.matroid)?, Matrix::from_wire(w.matrix)?)
    }
}

#[derive(Serialize, Deserialize)]
pub struct QuotientRealizationWire {
    pub top: MatrixWire,
    pub bottom: MatrixWire,
}

impl JsonFormat for QuotientRealization {
    type Wire = QuotientRealizationWire;

    fn to_wire(&self) -> QuotientRealizationWire {
        QuotientRealizationWire {
            top: self.top.to_wire(),
            bottom: self.bottom.to_wire(),
        }
    }

    fn from_wire(w: QuotientRealizationWire) -> Result<Self> {
        Ok(QuotientRealization {
            top: Matrix::from_wire(w.top)?,
            bottom: Matrix::from_wire(w.bottom)?,
        })
    }
}

#[derive(Serialize, Deserialize)]
pub struct ObstructionWire {
    pub matrix: MatrixWire,
    pub cut_minimal: Vec<Vec<usize>>,
    pub system: MatrixWire,
    pub candidate_space: MatrixWire,
    pub candidate_dimension: usize,
    pub blocking_flat: Vec<usize>,
}

impl JsonFormat for ObstructionCertificate {
    type Wire = ObstructionWire;

    fn to_wire(&self) -> ObstructionWire {
        ObstructionWire {
            matrix: self.matrix.to_wire(),
            cut_minimal: self.cut_minimal.iter().map(|&f| set_to_vec(f)).collect(),
            system: self.system.to_wire(),
            candidate_space: self.candidate_space.to_wire(),
            candidate_dimension: self.dimension(),
            blocking_flat: set_to_vec(self.blocking_flat),
        }
    }

    fn from_wire(w: ObstructionWire) -> Result<Self> {
        let c = ObstructionCertificate {
            matrix: Matrix::from_wire(w.matrix)?,
            cut_minimal: sets_from(&w.cut_minimal)?,
            system: Matrix::from_wire(w.system)?,
            candidate_space: Matrix::from_wire(w.candidate_space)?,
            blocking_flat: vec_to_set(&w.blocking_flat)?,
        };
        if c.dimension() != w.candidate_dimension {
            return Err(Error::Parse("candidate_dimension disagrees with candidate_space".into()));
        }
        Ok(c)
    }
}

fn rational_to_string(q: &BigRational) -> String {
    format_rational(q)
}

#[derive(Serialize, Deserialize)]
pub struct TropicalPointWire {
    pub coords: Vec<String>,
}

impl JsonFormat for TropicalPoint {
    type Wire = TropicalPointWire;

    fn to_wire(&self) -> TropicalPointWire {
        TropicalPointWire {
            coords: self.coords().iter().map(rational_to_string).collect(),
        }
    }

    fn from_wire(w: TropicalPointWire) -> Result<Self> {
        let coords = w.coords.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
        Ok(TropicalPoint::new(coords))
    }
}

#[derive(Serialize, Deserialize)]
pub struct TermWire {
    pub exps: Vec<u32>,
    pub coef: String,
}

#[derive(Serialize, Deserialize)]
pub struct PolynomialWire {
    pub terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
pub struct IdealWire {
    pub n: usize,
    pub generators: Vec<PolynomialWire>,
}

impl JsonFormat for HomogeneousIdeal {
    type Wire = IdealWire;

    fn to_wire(&self) -> IdealWire {
        IdealWire {
            n: self.n(),
            generators: self
                .generators()
                .iter()
                .map(|g| PolynomialWire {
                    terms: g
                        .terms()
                        .iter()
                        .map(|(e, c)| TermWire {
                            exps: e.clone(),
                            coef: format_rational(c),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    fn from_wire(w: IdealWire) -> Result<Self> {
        let generators = w
            .generators
            .into_iter()
            .map(|g| {
                let terms = g
                    .terms
                    .into_iter()
                    .map(|t| Ok((t.exps, parse_rational(&t.coef)?)))
                    .collect::<Result<Vec<_>>>()?;
                Polynomial::new(terms)
            })
            .collect::<Result<_>>()?;
        HomogeneousIdeal::new(w.n, generators)
    }
}

#[derive(Serialize, Deserialize)]
pub struct SampleVerdictWire {
    pub point: TropicalPointWire,
    pub transported: TropicalPointWire,
    pub in_source: bool,
    pub in_target: bool,
}

#[derive(Serialize, Deserialize)]
pub struct InclusionReportWire {
    pub source: MatroidWire,
    pub target: MatroidWire,
    pub quotient: bool,
    pub consistent: bool,
    pub samples: Vec<SampleVerdictWire>,
}

impl JsonFormat for InclusionReport {
    type Wire = InclusionReportWire;

    fn to_wire(&self) -> InclusionReportWire {
        InclusionReportWire {
            source: self.source.to_wire(),
            target: self.target.to_wire(),
            quotient: self.quotient,
            consistent: self.consistent(),
            samples: self
                .samples
                .iter()
                .map(|s| SampleVerdictWire {
                    point: s.point.to_wire(),
                    transported: s.transported.to_wire(),
                    in_source: s.in_source,
                    in_target: s.in_target,
                })
                .collect(),
        }
    }

    fn from_wire(w: InclusionReportWire) -> Result<Self> {
        let samples = w
            .samples
            .into_iter()
            .map(|s| {
                Ok(SampleVerdict {
                    point: TropicalPoint::from_wire(s.point)?,
                    transported: TropicalPoint::from_wire(s.transported)?,
                    in_source: s.in_source,
                    in_target: s.in_target,
                })
            })
            .collect::<Result<_>>()?;
        Ok(InclusionReport {
            source: Matroid::from_wire(w.source)?,
            target: Matroid::from_wire(w.target)?,
            quotient: w.quotient,
            samples,
        })
    }
}

#[derive(Serialize, Deserialize)]
pub struct NonRealizableWire {
    pub fixture: String,
    pub isomorphism: Vec<usize>,
}

impl JsonFormat for NonRealizableReport {
    type Wire = NonRealizableWire;

    fn to_wire(&self) -> NonRealizableWire {
        NonRealizableWire {
            fixture: self.fixture.clone(),
            isomorphism: self.isomorphism.clone(),
        }
    }

    fn from_wire(w: NonRealizableWire) -> Result<Self> {
        Ok(NonRealizableReport {
            fixture: w.fixture,
            isomorphism: w.isomorphism,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RelativeWire {
    NotIncluded,
    Realized {
        major: MajorWire,
        realization: QuotientRealizationWire,
    },
    NonRealizable {
        major: MajorWire,
        report: NonRealizableWire,
    },
    Obstructed {
        major: MajorWire,
        step: usize,
        certificate: ObstructionWire,
    },
    Inconclusive {
        major: MajorWire,
        attempts: usize,
    },
}

impl JsonFormat for RelativeRealizability {
    type Wire = RelativeWire;

    fn to_wire(&self) -> RelativeWire {
        use RelativeRealizability as R;
        match self {
            R::NotIncluded => RelativeWire::NotIncluded,
            R::Realized { major, realization } => RelativeWire::Realized {
                major: major.to_wire(),
                realization: realization.to_wire(),
            },
            R::NonRealizable { major, report } => RelativeWire::NonRealizable {
                major: major.to_wire(),
                report: report.to_wire(),
            },
            R::Obstructed {
                major,
                step,
                certificate,
            } => RelativeWire::Obstructed {
                major: major.to_wire(),
                step: *step,
                certificate: certificate.to_wire(),
            },
            R::Inconclusive { major, attempts } => RelativeWire::Inconclusive {
                major: major.to_wire(),
                attempts: *attempts,
            },
        }
    }

    fn from_wire(w: RelativeWire) -> Result<Self> {
        use RelativeRealizability as R;
        Ok(match w {
            RelativeWire::NotIncluded => R::NotIncluded,
            RelativeWire::Realized { major, realization } => R::Realized {
                major: Major::from_wire(major)?,
                realization: QuotientRealization::from_wire(realization)?,
            },
            RelativeWire::NonRealizable { major, report } => R::NonRealizable {
                major: Major::from_wire(major)?,
                report: NonRealizableReport::from_wire(report)?,
            },
            RelativeWire::Obstructed {
                major,
                step,
                certificate,
            } => R::Obstructed {
                major: Major::from_wire(major)?,
                step,
                certificate: ObstructionCertificate::from_wire(certificate)?,
            },
            RelativeWire::Inconclusive { major, attempts } => R::Inconclusive {
                major: Major::from_wire(major)?,
                attempts,
            },
        })
    }
}
