//! The `mq` command line tool.
//!
//! Every subcommand reads the JSON formats of [`crate::json`] and prints one
//! JSON document. Matroid arguments also accept `uniform:r,n` and the named
//! fixtures `fixture:non-pappus`, `fixture:pairs:m` and
//! `fixture:pairs-extension:m`. Other arguments are inline JSON or a path to
//! a JSON file.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 obstruction or
//! certificate, 3 usage or input error, 4 inconclusive.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::demo;
use crate::error::{Error, Result};
use crate::extension::{all_modular_cuts, check_modular_cut, extend, ModularCut};
use crate::json::JsonFormat;
use crate::linalg::{parse_rational, plucker, Matrix, Pluckers};
use crate::matroid::{fixtures, ElementSet, Matroid};
use crate::quotient::{
    factorization_from_major, flag_higgs, is_quotient, major_from_factorization, Factorization, FlagMatroid, Major,
    Quotient,
};
use crate::realization::{
    check_realizes, check_realizes_strict, extend_along_cut, project_flag_pluckers, realize_factorization,
    realize_major_from_quotient, realize_quotient_from_major, CutExtension, QuotientRealization, Realization,
};
use crate::tropical::{
    bergman_inclusion, check_quotient_implies_inclusion, flag_cone_point, linear_relative_realizability,
    linear_relative_realizability_from, matroid_of_degree_part, trop_matroid_membership, trop_veronese_apply,
    HomogeneousIdeal, RelativeRealizability, TropicalPoint,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_CERTIFICATE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "mq", version, about = "Matroid quotients, realizations and tropical linear spaces")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for parallel loops.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Compare every subset when verifying realizations.
    #[arg(long, global = true)]
    strict: bool,
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Construct and inspect matroids.
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// Modular cuts and single-element extensions.
    #[command(subcommand)]
    Cut(CutCmd),
    /// Quotients, Higgs lifts, factorizations and majors.
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// Realizations over the rationals or prime fields.
    #[command(subcommand)]
    Realize(RealizeCmd),
    /// Tropical linear spaces and degree parts of ideals.
    #[command(subcommand)]
    Trop(TropCmd),
    /// Worked examples.
    #[command(subcommand)]
    Demo(DemoCmd),
}

#[derive(Subcommand, Debug)]
enum MatroidCmd {
    Uniform { r: usize, n: usize },
    FromBases {
        #[arg(long)]
        n: usize,
        /// JSON list of element lists.
        #[arg(long)]
        bases: String,
    },
    FromFlats {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        flats: String,
    },
    Dual { matroid: String },
    Minor {
        matroid: String,
        #[arg(long, default_value = "[]")]
        contract: String,
        #[arg(long, default_value = "[]")]
        delete: String,
    },
    Sum { left: String, right: String },
    Flats { matroid: String },
    Circuits { matroid: String },
    Iso { left: String, right: String },
}

#[derive(Subcommand, Debug)]
enum CutCmd {
    Check {
        matroid: String,
        #[arg(long)]
        flats: String,
    },
    Extend {
        /// ModularCut JSON.
        cut: String,
        #[arg(long, default_value = "e")]
        label: String,
    },
    Enumerate { matroid: String },
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long)]
    top: String,
    #[arg(long)]
    bottom: String,
}

#[derive(Subcommand, Debug)]
enum QuotientCmd {
    Check(Pair),
    Nullity(Pair),
    HiggsLift {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        i: usize,
    },
    HiggsFactorization(Pair),
    HiggsMajor(Pair),
    MajorFromFactorization { factorization: String },
    FactorizationFromMajor { major: String },
    FlagHiggs {
        /// Matroids of the flag, top first.
        #[arg(required = true)]
        chain: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum RealizeCmd {
    Check {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        matrix: String,
    },
    Extend {
        /// Realization JSON.
        #[arg(long)]
        realization: String,
        /// JSON list of the cut's flats.
        #[arg(long)]
        cut: String,
        #[arg(long, default_value = "e")]
        label: String,
    },
    QuotientFromMajor {
        #[arg(long)]
        major: String,
        #[arg(long)]
        matrix: String,
    },
    MajorFromQuotient {
        #[command(flatten)]
        pair: Pair,
        /// QuotientRealization JSON.
        #[arg(long)]
        realization: String,
    },
    Factorization {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        realization: String,
    },
    Pluckers {
        #[arg(long)]
        matrix: String,
        /// Major JSON; with it the matrix is read as a major realization and
        /// the two projected coordinate vectors are printed.
        #[arg(long)]
        major: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum TropCmd {
    Member {
        #[arg(long)]
        matroid: String,
        /// TropicalPoint JSON.
        #[arg(long)]
        point: String,
    },
    /// Whether trop(SMALL) ⊆ trop(LARGE).
    Inclusion { small: String, large: String },
    ConePoint {
        #[arg(long)]
        matroid: String,
        /// JSON list of flats forming a chain.
        #[arg(long)]
        chain: String,
        /// JSON list of rational strings; defaults to all ones.
        #[arg(long)]
        weights: Option<String>,
    },
    IdealMatroid {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        degree: usize,
    },
    Veronese {
        #[arg(long)]
        point: String,
        #[arg(long)]
        degree: usize,
    },
    /// Transports points of trop(V(I)) and compares M(I_d) with M(J_d).
    QuotientInclusion {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        degree: usize,
        /// JSON list of TropicalPoint objects.
        #[arg(long, default_value = "[]")]
        points: String,
    },
    /// Relative realizability of trop(SMALL) ⊆ trop(LARGE).
    Relative {
        small: String,
        large: String,
        /// Realization JSON of LARGE to be extended.
        #[arg(long)]
        realization: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum DemoCmd {
    /// P/e inside P\e for the non-Pappus matroid P.
    NonPappus,
    /// Higgs major of U_{r,n} ↠ U_{r-k,n}.
    UniformMajor { r: usize, k: usize, n: usize },
    /// A realization of U_{3,6} that the paired cut cannot extend.
    ObstructedExtension,
    /// A realization of U_{3,6} extended by (1,0,0) and its line.
    NestedExtension,
    /// Degree-p matroids of (x0+x1+x2) and (x0^p+x1^p+x2^p).
    StandardLine {
        p: u32,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    seed: Option<u64>,
    strict: bool,
}

impl Ctx {
    fn seed(&self) -> Result<u64> {
        self.seed
            .ok_or_else(|| Error::InvalidInputs("this command is randomized and needs --seed".into()))
    }
}

/// Runs `mq` on the given arguments (program name first).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            if code == EXIT_OK {
                return Output {
                    code,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            return Output {
                code,
                stdout: String::new(),
                stderr: diagnostic("Usage", &e.to_string()),
            };
        }
    };
    let ctx = Ctx {
        seed: cli.seed,
        strict: cli.strict,
    };
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &ctx)),
            Err(e) => Err(Error::InvalidInputs(format!("cannot start {j} workers: {e}"))),
        },
        None => dispatch(&cli.command, &ctx),
    };
    let (code, value) = match result {
        Ok(v) => v,
        Err(e) => {
            return Output {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: diagnostic(&error_kind(&e), &e.to_string()),
            }
        }
    };
    let mut text = crate::json::to_pretty(&value);
    text.push('\n');
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            return Output {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: diagnostic("Io", &format!("{}: {e}", path.display())),
            };
        }
        text.clear();
    }
    Output {
        code,
        stdout: text,
        stderr: String::new(),
    }
}

fn diagnostic(kind: &str, message: &str) -> String {
    let v = json!({ "error": kind, "message": message.trim_end() });
    format!("{v}\n")
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn read_arg(s: &str) -> Result<String> {
    let t = s.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(s.to_string());
    }
    std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("cannot read {s}: {e}")))
}

fn load<T: JsonFormat>(s: &str) -> Result<T> {
    T::from_json(&read_arg(s)?)
}

fn parse_usizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("not a number: {x:?}"))))
        .collect()
}

fn load_matroid(s: &str) -> Result<Matroid> {
    if let Some(rest) = s.strip_prefix("uniform:") {
        let v = parse_usizes(rest)?;
        let [r, n] = v[..] else {
            return Err(Error::Parse(format!("expected uniform:r,n, got {s:?}")));
        };
        return Matroid::uniform(r, n);
    }
    if let Some(rest) = s.strip_prefix("fixture:") {
        let (name, arg) = rest.split_once(':').unwrap_or((rest, ""));
        let size = || parse_usizes(arg).ok().and_then(|v| v.first().copied());
        return match (name, size()) {
            ("non-pappus", _) => Ok(fixtures::non_pappus()),
            ("pairs", Some(m)) => Ok(fixtures::paired_rank_two(m)),
            ("pairs-extension", Some(m)) => Ok(fixtures::paired_rank_three_extension(m)),
            _ => Err(Error::Parse(format!("unknown fixture {s:?}"))),
        };
    }
    load(s)
}

fn load_sets(s: &str) -> Result<Vec<ElementSet>> {
    let v: Vec<Vec<usize>> = serde_json::from_str(&read_arg(s)?).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(v.iter().map(|x| ElementSet::from_elements(x.iter().copied())).collect())
}

fn load_set(s: &str) -> Result<ElementSet> {
    let v: Vec<usize> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(ElementSet::from_elements(v))
}

fn load_pair(p: &Pair) -> Result<Quotient> {
    Quotient::new(load_matroid(&p.top)?, load_matroid(&p.bottom)?)
}

fn to_value<T: JsonFormat>(x: &T) -> Value {
    serde_json::to_value(x.to_wire()).expect("wire types serialize")
}

fn sets_value(sets: impl IntoIterator<Item = ElementSet>) -> Value {
    Value::from(sets.into_iter().map(|s| s.to_vec()).collect::<Vec<_>>())
}

fn pluckers_value(p: &Pluckers) -> Value {
    Value::from(
        p.iter()
            .map(|(k, v)| json!({ "subset": k, "value": v.to_string() }))
            .collect::<Vec<_>>(),
    )
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

type Reply = Result<(i32, Value)>;

fn dispatch(g: &Group, ctx: &Ctx) -> Reply {
    match g {
        Group::Matroid(c) => matroid_cmd(c),
        Group::Cut(c) => cut_cmd(c),
        Group::Quotient(c) => quotient_cmd(c),
        Group::Realize(c) => realize_cmd(c, ctx),
        Group::Trop(c) => trop_cmd(c, ctx),
        Group::Demo(c) => demo_cmd(c, ctx),
    }
}

fn matroid_cmd(c: &MatroidCmd) -> Reply {
    let m = match c {
        MatroidCmd::Uniform { r, n } => Matroid::uniform(*r, *n)?,
        MatroidCmd::FromBases { n, bases } => Matroid::from_bases(*n, load_sets(bases)?)?,
        MatroidCmd::FromFlats { n, flats } => Matroid::from_flats(*n, load_sets(flats)?)?,
        MatroidCmd::Dual { matroid } => load_matroid(matroid)?.dual(),
        MatroidCmd::Minor {
            matroid,
            contract,
            delete,
        } => {
            let m = load_matroid(matroid)?;
            let (c, d) = (load_set(contract)?, load_set(delete)?);
            if !c.union(d).is_subset(m.ground_set()) || !c.intersection(d).is_empty() {
                return Err(Error::InvalidInputs(
                    "contract and delete must be disjoint subsets of the ground set".into(),
                ));
            }
            m.minor(c, d)
        }
        MatroidCmd::Sum { left, right } => load_matroid(left)?.direct_sum(&load_matroid(right)?)?,
        MatroidCmd::Flats { matroid } => {
            let m = load_matroid(matroid)?;
            return Ok((EXIT_OK, json!({ "flats": sets_value(m.flats().iter()) })));
        }
        MatroidCmd::Circuits { matroid } => {
            let m = load_matroid(matroid)?;
            return Ok((EXIT_OK, json!({ "circuits": sets_value(m.circuits()) })));
        }
        MatroidCmd::Iso { left, right } => {
            let iso = load_matroid(left)?.is_isomorphic(&load_matroid(right)?);
            return Ok((
                verdict(iso.is_some()),
                json!({ "isomorphic": iso.is_some(), "map": iso }),
            ));
        }
    };
    Ok((EXIT_OK, to_value(&m)))
}

fn cut_cmd(c: &CutCmd) -> Reply {
    match c {
        CutCmd::Check { matroid, flats } => {
            let m = load_matroid(matroid)?;
            match check_modular_cut(&m, &load_sets(flats)?) {
                Ok(()) => Ok((EXIT_OK, json!({ "modular_cut": true }))),
                Err(v) => Ok((
                    EXIT_NEGATIVE,
                    json!({ "modular_cut": false, "reason": v.reason, "witness": sets_value(v.witness) }),
                )),
            }
        }
        CutCmd::Extend { cut, label } => {
            let cut: ModularCut = load(cut)?;
            Ok((EXIT_OK, to_value(&extend(cut.matroid(), &cut, label)?)))
        }
        CutCmd::Enumerate { matroid } => {
            let m = load_matroid(matroid)?;
            let cuts: Vec<Value> = all_modular_cuts(&m)
                .iter()
                .map(|c| sets_value(c.members().iter().copied()))
                .collect();
            Ok((EXIT_OK, json!({ "matroid": to_value(&m), "cuts": cuts })))
        }
    }
}

fn quotient_cmd(c: &QuotientCmd) -> Reply {
    match c {
        QuotientCmd::Check(p) => {
            let q = is_quotient(&load_matroid(&p.top)?, &load_matroid(&p.bottom)?)?;
            Ok((verdict(q), json!({ "quotient": q })))
        }
        QuotientCmd::Nullity(p) => Ok((EXIT_OK, json!({ "nullity": load_pair(p)?.nullity() }))),
        QuotientCmd::HiggsLift { pair, i } => Ok((EXIT_OK, to_value(&load_pair(pair)?.higgs_lift(*i)?))),
        QuotientCmd::HiggsFactorization(p) => Ok((EXIT_OK, to_value(&load_pair(p)?.higgs_factorization()?))),
        QuotientCmd::HiggsMajor(p) => Ok((EXIT_OK, to_value(&load_pair(p)?.higgs_major()?))),
        QuotientCmd::MajorFromFactorization { factorization } => {
            let f: Factorization = load(factorization)?;
            Ok((EXIT_OK, to_value(&major_from_factorization(&f)?)))
        }
        QuotientCmd::FactorizationFromMajor { major } => {
            let h: Major = load(major)?;
            Ok((EXIT_OK, to_value(&factorization_from_major(&h)?)))
        }
        QuotientCmd::FlagHiggs { chain } => {
            let ms = chain.iter().map(|s| load_matroid(s)).collect::<Result<Vec<_>>>()?;
            let (f, h) = flag_higgs(&FlagMatroid::new(ms)?)?;
            Ok((EXIT_OK, json!({ "factorization": to_value(&f), "major": to_value(&h) })))
        }
    }
}

fn realize_cmd(c: &RealizeCmd, ctx: &Ctx) -> Reply {
    match c {
        RealizeCmd::Check { matroid, matrix } => {
            let m = load_matroid(matroid)?;
            let a: Matrix = load(matrix)?;
            let ok = if ctx.strict {
                check_realizes_strict(&a, &m)?
            } else {
                check_realizes(&a, &m)?
            };
            Ok((verdict(ok), json!({ "realizes": ok })))
        }
        RealizeCmd::Extend {
            realization,
            cut,
            label,
        } => {
            let r: Realization = load(realization)?;
            let cut = ModularCut::new(r.matroid(), load_sets(cut)?)?;
            match extend_along_cut(&r, &cut, label, ctx.seed()?)? {
                CutExtension::Extended { column, realization } => Ok((
                    EXIT_OK,
                    json!({
                        "column": column.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "realization": to_value(&realization),
                    }),
                )),
                CutExtension::Obstructed(cert) => Ok((EXIT_CERTIFICATE, json!({ "obstruction": to_value(&cert) }))),
            }
        }
        RealizeCmd::QuotientFromMajor { major, matrix } => {
            let h: Major = load(major)?;
            let r = Realization::new(h.matroid().clone(), load(matrix)?)?;
            Ok((EXIT_OK, to_value(&realize_quotient_from_major(&r, &h)?)))
        }
        RealizeCmd::MajorFromQuotient { pair, realization } => {
            let q = load_pair(pair)?;
            let qr: QuotientRealization = load(realization)?;
            Ok((EXIT_OK, to_value(&realize_major_from_quotient(&qr, &q, ctx.seed()?)?)))
        }
        RealizeCmd::Factorization { pair, realization } => {
            let q = load_pair(pair)?;
            let qr: QuotientRealization = load(realization)?;
            let spaces = realize_factorization(&qr, &q, ctx.seed()?)?;
            Ok((
                EXIT_OK,
                json!({ "spaces": spaces.iter().map(to_value).collect::<Vec<_>>() }),
            ))
        }
        RealizeCmd::Pluckers { matrix, major } => {
            let a: Matrix = load(matrix)?;
            match major {
                None => Ok((EXIT_OK, json!({ "pluckers": pluckers_value(&plucker(&a)?) }))),
                Some(h) => {
                    let h: Major = load(h)?;
                    let r = Realization::new(h.matroid().clone(), a)?;
                    let (top, bottom) = project_flag_pluckers(&r, &h)?;
                    Ok((
                        EXIT_OK,
                        json!({ "top": pluckers_value(&top), "bottom": pluckers_value(&bottom) }),
                    ))
                }
            }
        }
    }
}

fn relative_reply(out: &RelativeRealizability) -> (i32, Value) {
    let code = match out {
        RelativeRealizability::NotIncluded => EXIT_NEGATIVE,
        RelativeRealizability::Realized { .. } => EXIT_OK,
        RelativeRealizability::NonRealizable { .. } | RelativeRealizability::Obstructed { .. } => EXIT_CERTIFICATE,
        RelativeRealizability::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    };
    (code, to_value(out))
}

fn trop_cmd(c: &TropCmd, ctx: &Ctx) -> Reply {
    match c {
        TropCmd::Member { matroid, point } => {
            let ok = trop_matroid_membership(&load_matroid(matroid)?, &load(point)?)?;
            Ok((verdict(ok), json!({ "member": ok })))
        }
        TropCmd::Inclusion { small, large } => {
            let ok = bergman_inclusion(&load_matroid(small)?, &load_matroid(large)?)?;
            Ok((verdict(ok), json!({ "included": ok })))
        }
        TropCmd::ConePoint {
            matroid,
            chain,
            weights,
        } => {
            let m = load_matroid(matroid)?;
            let chain = load_sets(chain)?;
            let weights = match weights {
                Some(w) => {
                    let v: Vec<String> = serde_json::from_str(w).map_err(|e| Error::Parse(e.to_string()))?;
                    v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?
                }
                None => vec![num_rational::BigRational::from_integer(1.into()); chain.len()],
            };
            Ok((EXIT_OK, to_value(&flag_cone_point(&m, &chain, &weights)?)))
        }
        TropCmd::IdealMatroid { ideal, degree } => {
            let i: HomogeneousIdeal = load(ideal)?;
            Ok((EXIT_OK, to_value(&matroid_of_degree_part(&i, *degree)?)))
        }
        TropCmd::Veronese { point, degree } => {
            let v: TropicalPoint = load(point)?;
            Ok((EXIT_OK, to_value(&trop_veronese_apply(&v, *degree)?)))
        }
        TropCmd::QuotientInclusion {
            source,
            target,
            degree,
            points,
        } => {
            let i: HomogeneousIdeal = load(source)?;
            let j: HomogeneousIdeal = load(target)?;
            let raw: Vec<Value> = serde_json::from_str(&read_arg(points)?).map_err(|e| Error::Parse(e.to_string()))?;
            let samples = raw
                .into_iter()
                .map(|v| {
                    let w = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
                    TropicalPoint::from_wire(w)
                })
                .collect::<Result<Vec<_>>>()?;
            let report = check_quotient_implies_inclusion(&i, &j, *degree, &samples)?;
            Ok((verdict(report.quotient), to_value(&report)))
        }
        TropCmd::Relative {
            small,
            large,
            realization,
        } => {
            let m1 = load_matroid(small)?;
            let out = match realization {
                Some(r) => {
                    let r: Realization = load(r)?;
                    if r.matroid() != &load_matroid(large)? {
                        return Err(Error::InvalidRealization(
                            "the realization is not of the larger matroid".into(),
                        ));
                    }
                    linear_relative_realizability_from(&m1, &r, ctx.seed()?)?
                }
                None => linear_relative_realizability(&m1, &load_matroid(large)?, ctx.seed()?)?,
            };
            Ok(relative_reply(&out))
        }
    }
}

fn demo_cmd(c: &DemoCmd, ctx: &Ctx) -> Reply {
    match c {
        // The fixture path decides this case before any sampling happens.
        DemoCmd::NonPappus => Ok(relative_reply(&demo::non_pappus_relative(ctx.seed.unwrap_or(0))?)),
        DemoCmd::UniformMajor { r, k, n } => Ok((EXIT_OK, to_value(&demo::uniform_major(*r, *k, *n)?))),
        DemoCmd::ObstructedExtension => match demo::obstructed_extension(0)? {
            CutExtension::Obstructed(cert) => Ok((EXIT_CERTIFICATE, json!({ "obstruction": to_value(&cert) }))),
            CutExtension::Extended { .. } => Err(Error::Internal("fixture plane unexpectedly extends".into())),
        },
        DemoCmd::NestedExtension => {
            let out = demo::nested_extension(ctx.seed()?)?;
            let sampled = match &out.sampled {
                CutExtension::Extended { column, .. } => {
                    Value::from(column.iter().map(ToString::to_string).collect::<Vec<_>>())
                }
                CutExtension::Obstructed(_) => Value::Null,
            };
            let code = verdict(out.column_accepted && out.matches_line);
            Ok((
                code,
                json!({
                    "column_accepted": out.column_accepted,
                    "sampled_column": sampled,
                    "pair": to_value(&out.pair),
                    "bottom_matches_line": out.matches_line,
                }),
            ))
        }
        DemoCmd::StandardLine { p, samples } => {
            let report = demo::standard_line(*p, *samples, ctx.seed()?)?;
            Ok((verdict(report.quotient), to_value(&report)))
        }
    }
}

