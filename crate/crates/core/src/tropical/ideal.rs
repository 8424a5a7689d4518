//! Homogeneous ideals, the matroids of their graded pieces and the
//! tropicalized Veronese map.
//!
//! Degree-`d` monomials in `x_0, …, x_n` are ordered graded
//! lexicographically with `x_0 > … > x_n`: exponent vectors in descending
//! lexicographic order, so for `n = 2, d = 2` the order is
//! `x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::matroid::{binomial, Matroid, MAX_ELEMENTS};
use crate::quotient::is_quotient;
use crate::realization::column_matroid;

use super::point::{trop_matroid_membership, TropicalPoint};

/// A nonzero homogeneous polynomial: exponent vector to coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Vec<u32>, BigRational>,
    degree: u32,
}

impl Polynomial {
    /// Drops zero coefficients; fails if nothing is left, if exponent
    /// vectors have different lengths or if the degrees differ.
    pub fn new(terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut keys = map.keys();
        let first = keys
            .next()
            .ok_or_else(|| Error::InvalidPolynomial("zero polynomial".into()))?;
        let degree: u32 = first.iter().sum();
        for e in keys {
            if e.len() != first.len() {
                return Err(Error::InvalidPolynomial("exponent vectors of different lengths".into()));
            }
            if e.iter().sum::<u32>() != degree {
                return Err(Error::InvalidPolynomial("not homogeneous".into()));
            }
        }
        Ok(Polynomial { terms: map, degree })
    }

    /// Integer coefficients, for fixtures and tests.
    pub fn from_i64(terms: &[(&[u32], i64)]) -> Result<Self> {
        Self::new(
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), BigRational::from_integer((*c).into()))),
        )
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().next().map_or(0, Vec::len)
    }
}

/// A homogeneous ideal of `K[x_0, …, x_n]` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousIdeal {
    n: usize,
    generators: Vec<Polynomial>,
}

impl HomogeneousIdeal {
    /// `n` is the number of variables minus one.
    pub fn new(n: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.num_vars() != n + 1) {
            return Err(Error::InvalidPolynomial(format!(
                "generator in {} variables, expected {}",
                g.num_vars(),
                n + 1
            )));
        }
        Ok(HomogeneousIdeal { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree as usize).max().unwrap_or(0)
    }
}

/// Number of monomials of degree `d` in `vars` variables.
pub fn monomial_count(vars: usize, d: usize) -> u128 {
    if vars == 0 {
        return u128::from(d == 0);
    }
    binomial(vars - 1 + d, d)
}

/// Exponent vectors of degree `d` in `vars` variables, in the order
/// described in the module documentation.
pub fn monomials(vars: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=left).rev() {
            prefix.push(a);
            rec(prefix, left - a, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::new(), d as u32, vars, &mut out);
    out
}

/// `x0^2*x1`-style name of a monomial; `1` for the constant.
pub fn monomial_label(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("x{i}") } else { format!("x{i}^{a}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn checked_monomials(vars: usize, d: usize) -> Result<Vec<Vec<u32>>> {
    let count = monomial_count(vars, d);
    if count > MAX_ELEMENTS as u128 {
        return Err(Error::TooManyMonomials(usize::try_from(count).unwrap_or(usize::MAX)));
    }
    Ok(monomials(vars, d))
}

/// Coefficient matrix of all products `x^a · g` of degree `d`, one row per
/// product, columns indexed by the degree-`d` monomials.
pub fn macaulay_matrix(ideal: &HomogeneousIdeal, d: usize, field: Field) -> Result<Matrix> {
    let needed = ideal.max_degree();
    if d < needed {
        return Err(Error::DegreeTooSmall { d, needed });
    }
    let vars = ideal.n + 1;
    let mons = checked_monomials(vars, d)?;
    let index: HashMap<&[u32], usize> = mons.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut rows = Vec::new();
    for g in &ideal.generators {
        for a in monomials(vars, d - g.degree as usize) {
            let mut row = vec![field.zero(); mons.len()];
            for (e, c) in &g.terms {
                let prod: Vec<u32> = e.iter().zip(&a).map(|(x, y)| x + y).collect();
                row[index[prod.as_slice()]] = field.from_rational(c)?;
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(field, mons.len(), rows)
}

/// The matroid `M(I_d)` on the degree-`d` monomials whose cycles are the
/// supports of the polynomials in `I_d`, over the rationals.
pub fn matroid_of_degree_part(ideal: &HomogeneousIdeal, d: usize) -> Result<Matroid> {
    matroid_of_degree_part_over(ideal, d, Field::Rational)
}

/// [`matroid_of_degree_part`] with coefficients mapped into `field`.
pub fn matroid_of_degree_part_over(ideal: &HomogeneousIdeal, d: usize, field: Field) -> Result<Matroid> {
    let b = macaulay_matrix(ideal, d, field)?;
    let labels = monomials(ideal.n + 1, d)
        .iter()
        .enumerate()
        .map(|(i, e)| (i, monomial_label(e)))
        .collect();
    column_matroid(&b)?.dual().with_labels(labels)
}

/// The tropicalized Veronese map: the coordinate at monomial `x^u` is
/// `⟨u, v⟩`.
pub fn trop_veronese_apply(v: &TropicalPoint, d: usize) -> Result<TropicalPoint> {
    let mons = checked_monomials(v.len(), d)?;
    let coords = mons
        .iter()
        .map(|u| {
            u.iter()
                .zip(v.coords())
                .fold(BigRational::zero(), |acc, (&a, x)| acc + x * BigRational::from_integer(a.into()))
        })
        .collect();
    Ok(TropicalPoint::new(coords))
}

/// Per-sample outcome of [`check_quotient_implies_inclusion`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleVerdict {
    pub point: TropicalPoint,
    pub transported: TropicalPoint,
    /// Transported point lies in `trop(M(I_d))`.
    pub in_source: bool,
    /// Transported point lies in `trop(M(J_d))`.
    pub in_target: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    pub source: Matroid,
    pub target: Matroid,
    /// Whether `M(I_d)` is a quotient of `M(J_d)`.
    pub quotient: bool,
    pub samples: Vec<SampleVerdict>,
}

impl InclusionReport {
    /// When the quotient holds, every sample landed in the target; without
    /// the quotient nothing is asserted.
    pub fn consistent(&self) -> bool {
        !self.quotient || self.samples.iter().all(|s| s.in_target)
    }
}

/// Compares `M(I_d)` and `M(J_d)` and transports sample points of
/// `trop(V(I))` through the tropicalized Veronese map. `d` is supplied by
/// the caller; no bound beyond which the quotient must hold is computed.
pub fn check_quotient_implies_inclusion(
    i: &HomogeneousIdeal,
    j: &HomogeneousIdeal,
    d: usize,
    samples: &[TropicalPoint],
) -> Result<InclusionReport> {
    if i.n != j.n {
        return Err(Error::InvalidInputs("ideals live in different polynomial rings".into()));
    }
    let source = matroid_of_degree_part(i, d)?;
    let target = matroid_of_degree_part(j, d)?;
    let quotient = is_quotient(&target, &source)?;
    let verdicts = samples
        .par_iter()
        .map(|p| {
            if p.len() != i.n + 1 {
                return Err(Error::LengthMismatch {
                    expected: i.n + 1,
                    found: p.len(),
                });
            }
            let transported = trop_veronese_apply(p, d)?;
            Ok(SampleVerdict {
                point: p.clone(),
                in_source: trop_matroid_membership(&source, &transported)?,
                in_target: trop_matroid_membership(&target, &transported)?,
                transported,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InclusionReport {
        source,
        target,
        quotient,
        samples: verdicts,
    })
}

/// `(I, J)` with `I = (x0 + x1 + x2)` and `J = (x0^p + x1^p + x2^p)`. Both
/// define the standard tropical line in characteristic zero.
pub fn standard_line_ideals(p: u32) -> Result<(HomogeneousIdeal, HomogeneousIdeal)> {
    if p == 0 {
        return Err(Error::InvalidInputs("exponent must be positive".into()));
    }
    let linear = Polynomial::from_i64(&[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)])?;
    let power = Polynomial::from_i64(&[(&[p, 0, 0], 1), (&[0, p, 0], 1), (&[0, 0, p], 1)])?;
    Ok((
        HomogeneousIdeal::new(2, vec![linear])?,
        HomogeneousIdeal::new(2, vec![power])?,
    ))
}

/// Seeded points of the standard tropical line in `R^3 / R·1`: two
/// coordinates equal to the minimum `0`, the third a nonnegative rational.
pub fn sample_standard_line(count: usize, seed: u64) -> Vec<TropicalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let high = rng.gen_range(0..3);
            let t = BigRational::new(rng.gen_range(0..=40i64).into(), rng.gen_range(1..=4i64).into());
            let mut coords = vec![BigRational::zero(); 3];
            coords[high] = t;
            TropicalPoint::new(coords)
        })
        .collect()
}
