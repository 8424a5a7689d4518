//! Realizations of matroids, quotients, factorizations and majors.
//!
//! A realization of a rank-`r` matroid on `n` elements is an `r × n` matrix
//! whose column matroid is the matroid. The same matrix read by rows spans
//! an `r`-dimensional subspace of `K^n`; a quotient `M1 ↠ M2` is realized by
//! nested row spaces `U2 ⊆ U1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extension::{cut_of_element, extend, ModularCut};
use crate::linalg::{plucker, Field, Matrix, Pluckers, Scalar};
use crate::matroid::{lex_subsets, subsets_of_size, ElementSet, Matroid};
use crate::quotient::{Major, Quotient};

/// Exhaustive subset verification is used up to this many elements.
pub const FULL_CHECK_MAX: usize = 12;

fn check_dims(a: &Matrix, m: &Matroid) -> Result<()> {
    if a.rows() != m.rank() || a.cols() != m.n() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for a matroid of rank {} on {} elements",
            a.rows(),
            a.cols(),
            m.rank(),
            m.n()
        )));
    }
    Ok(())
}

fn columns_of(s: ElementSet) -> Vec<usize> {
    s.to_vec()
}

/// Whether the column matroid of `a` is `m`.
///
/// Up to [`FULL_CHECK_MAX`] elements every subset of size at most the rank
/// is compared for independence. Beyond that, the nonvanishing pattern of
/// the maximal minors is compared with the bases, which decides the same
/// question for a matrix with `rank(m)` rows.
pub fn check_realizes(a: &Matrix, m: &Matroid) -> Result<bool> {
    check_dims(a, m)?;
    if m.n() <= FULL_CHECK_MAX {
        for k in 0..=m.rank() {
            for s in subsets_of_size(m.n(), k) {
                let independent = a.select_columns(&columns_of(s)).rank() == k;
                if independent != m.is_independent(s) {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    for b in subsets_of_size(m.n(), m.rank()) {
        let nonzero = !a.select_columns(&columns_of(b)).det()?.is_zero();
        if nonzero != m.is_basis(b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict variant: insists on the exhaustive subset comparison.
pub fn check_realizes_strict(a: &Matrix, m: &Matroid) -> Result<bool> {
    if m.n() > FULL_CHECK_MAX {
        return Err(Error::TooLarge(format!(
            "strict verification is limited to {FULL_CHECK_MAX} elements"
        )));
    }
    check_realizes(a, m)
}

/// A matrix together with the matroid its columns realize.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    matroid: Matroid,
    matrix: Matrix,
}

impl Realization {
    pub fn new(matroid: Matroid, matrix: Matrix) -> Result<Self> {
        if !check_realizes(&matrix, &matroid)? {
            return Err(Error::InvalidRealization(
                "column matroid differs from the matroid".into(),
            ));
        }
        Ok(Realization { matroid, matrix })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `L_F`: the span of the columns in `f`, as a matrix whose rows span it.
    pub fn span_of(&self, f: ElementSet) -> Matrix {
        self.matrix.select_columns(&columns_of(f)).transpose()
    }

    /// Canonical basis of the row space, the point of the Grassmannian.
    pub fn row_space(&self) -> Matrix {
        self.matrix.row_space_basis()
    }
}

/// Whether column vector `v` (length `r`) lies in the span of the columns
/// of `a` indexed by `f`.
fn column_in_span(a: &Matrix, f: ElementSet, v: &[Scalar]) -> Result<bool> {
    let cols = a.select_columns(&columns_of(f));
    Ok(cols.append_column(v)?.rank() == cols.rank())
}

/// `W ⊆ L_F`, for `W` given by basis columns.
fn space_in_span(a: &Matrix, f: ElementSet, w: &Matrix) -> Result<bool> {
    let cols = a.select_columns(&columns_of(f));
    Ok(cols.hstack(w)?.rank() == cols.rank())
}

/// Proof that a realization does not extend along a cut: every vector of
/// the candidate space `W = ∩ L_F` (over the minimal cut members) already
/// lies in the span of a flat outside the cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCertificate {
    /// Realization matrix the certificate refers to.
    pub matrix: Matrix,
    pub cut_minimal: Vec<ElementSet>,
    /// Rows: the linear conditions `y · x = 0` a new column must satisfy,
    /// one annihilator of `L_F` per row, grouped by minimal cut member.
    pub system: Matrix,
    /// Columns: a basis of `W`, the solutions of `system`.
    pub candidate_space: Matrix,
    pub blocking_flat: ElementSet,
}

impl ObstructionCertificate {
    pub fn dimension(&self) -> usize {
        self.candidate_space.cols()
    }

    /// Re-checks the certificate with exact arithmetic.
    pub fn verify(&self) -> Result<bool> {
        let solves = self.system.rows() == 0 || self.system.mul(&self.candidate_space)?.is_zero();
        let complete = self.candidate_space.cols() + self.system.rank() == self.matrix.rows();
        let each_member = self
            .cut_minimal
            .iter()
            .map(|&f| space_in_span(&self.matrix, f, &self.candidate_space))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|x| x);
        let blocked = space_in_span(&self.matrix, self.blocking_flat, &self.candidate_space)?;
        Ok(solves && complete && each_member && blocked)
    }
}

/// Flats outside the cut, lowest rank first so that `W = 0` is blocked by
/// the closure of the empty set.
fn outside_flats(cut: &ModularCut) -> Vec<ElementSet> {
    cut.matroid()
        .flats()
        .by_rank()
        .iter()
        .flatten()
        .copied()
        .filter(|&f| !cut.contains(f))
        .collect()
}

/// Outcome of [`extend_along_cut`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutExtension {
    /// The new column and the extended realization. For the empty cut the
    /// realization gains a zero row and the column is a unit vector.
    Extended {
        column: Vec<Scalar>,
        realization: Realization,
    },
    Obstructed(ObstructionCertificate),
}

/// Linear conditions cutting out `∩ L_F` over the given flats: the
/// annihilators of each `L_F`, stacked.
pub fn annihilator_system(a: &Matrix, flats: &[ElementSet]) -> Result<Matrix> {
    let mut system = Matrix::zeros(a.field(), 0, a.rows());
    for &f in flats {
        let ann = a.select_columns(&columns_of(f)).left_kernel();
        system = system.vstack(&ann)?;
    }
    Ok(system)
}

/// Whether `v` extends `r` along `cut`: it lies in `L_F` exactly for the
/// members of the cut.
pub fn verify_extension_column(r: &Realization, cut: &ModularCut, v: &[Scalar]) -> Result<bool> {
    if v.len() != r.matrix.rows() {
        return Err(Error::DimensionMismatch(format!(
            "column of length {} for {} rows",
            v.len(),
            r.matrix.rows()
        )));
    }
    for f in r.matroid.flats().iter() {
        if column_in_span(&r.matrix, f, v)? != cut.contains(f) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Seeded sampler of integer combinations with a doubling coefficient bound.
pub(crate) struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
    tries: usize,
}

impl Sampler {
    pub(crate) fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: 2,
            tries: 0,
        }
    }

    /// A random combination of the columns of `basis`.
    pub(crate) fn combination(&mut self, basis: &Matrix) -> Vec<Scalar> {
        self.tries += 1;
        if self.tries % 8 == 0 && self.bound < 1 << 40 {
            self.bound *= 2;
        }
        let f = basis.field();
        let coeffs: Vec<Scalar> = (0..basis.cols())
            .map(|_| f.from_i64(self.rng.gen_range(-self.bound..=self.bound)))
            .collect();
        basis.apply(&coeffs).expect("matching dimensions")
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }
}

/// Picks a vector of the column space of `w` outside every `L_F`, `F` in
/// `avoid`. The caller guarantees `W ⊄ L_F` for each of them, so over the
/// rationals a generic combination succeeds.
fn sample_avoiding(
    a: &Matrix,
    w: &Matrix,
    avoid: &[ElementSet],
    sampler: &mut Sampler,
) -> Result<Vec<Scalar>> {
    for _ in 0..10_000 {
        let v = sampler.combination(w);
        let mut ok = true;
        for &f in avoid {
            if column_in_span(a, f, &v)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(v);
        }
    }
    Err(Error::Internal("generic sampling did not terminate".into()))
}

/// Extends a rational realization of `M` to one of `M +_cut e`, or proves
/// that no such extension of this realization exists.
///
/// The new column must lie in `W = ∩ L_F` over the minimal members and
/// outside `L_F` for every flat not in the cut. If `W` is contained in some
/// such `L_F` the certificate is returned; otherwise seeded sampling in `W`
/// finds a valid column.
pub fn extend_along_cut(r: &Realization, cut: &ModularCut, label: &str, seed: u64) -> Result<CutExtension> {
    let a = &r.matrix;
    if !a.field().is_infinite() {
        return Err(Error::FiniteFieldUnsupported);
    }
    if cut.matroid() != &r.matroid {
        return Err(Error::InvalidInputs("cut belongs to a different matroid".into()));
    }
    let extended = extend(&r.matroid, cut, label)?;
    if cut.is_empty() {
        let f = a.field();
        let mut rows: Vec<Vec<Scalar>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
        for row in &mut rows {
            row.push(f.zero());
        }
        let mut last = vec![f.zero(); a.cols()];
        last.push(f.one());
        rows.push(last);
        let matrix = Matrix::from_rows(f, a.cols() + 1, rows)?;
        let mut column = vec![f.zero(); a.rows()];
        column.push(f.one());
        return Ok(CutExtension::Extended {
            column,
            realization: Realization::new(extended, matrix)?,
        });
    }
    let system = annihilator_system(a, cut.minimal())?;
    let w = system.kernel();
    let outside = outside_flats(cut);
    for &f in &outside {
        if space_in_span(a, f, &w)? {
            return Ok(CutExtension::Obstructed(ObstructionCertificate {
                matrix: a.clone(),
                cut_minimal: cut.minimal().to_vec(),
                system,
                candidate_space: w,
                blocking_flat: f,
            }));
        }
    }
    let mut sampler = Sampler::new(seed);
    let column = sample_avoiding(a, &w, &outside, &mut sampler)?;
    let matrix = a.append_column(&column)?;
    let realization = Realization::new(extended, matrix)
        .map_err(|e| Error::Internal(format!("sampled column failed verification: {e}")))?;
    Ok(CutExtension::Extended { column, realization })
}

/// Nested row spaces `bottom ⊆ top` realizing a quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRealization {
    pub top: Matrix,
    pub bottom: Matrix,
}

impl QuotientRealization {
    /// Row space containment plus both column matroids.
    pub fn realizes(&self, q: &Quotient) -> Result<bool> {
        Ok(self.top.row_space_contains(&self.bottom)?
            && check_realizes(&self.top, q.top())?
            && check_realizes(&self.bottom, q.bottom())?)
    }
}

fn k_columns(h: &Major) -> Vec<usize> {
    h.new_elements().to_vec()
}

fn e_columns(h: &Major) -> Vec<usize> {
    h.matroid().ground_set().difference(h.new_set()).to_vec()
}

/// Quotient realization induced by a realization of a major: the top is the
/// restriction to `E`, the bottom its image modulo the span of the
/// `K`-columns.
pub fn realize_quotient_from_major(rh: &Realization, h: &Major) -> Result<QuotientRealization> {
    if rh.matroid != *h.matroid() {
        return Err(Error::InvalidRealization("realization of a different matroid".into()));
    }
    let a = &rh.matrix;
    let top = a.select_columns(&e_columns(h));
    let projection = a.select_columns(&k_columns(h)).left_kernel();
    let bottom = projection.mul(&top)?;
    let qr = QuotientRealization { top, bottom };
    if !qr.realizes(&h.quotient())? {
        return Err(Error::Internal("induced quotient realization failed verification".into()));
    }
    Ok(qr)
}

/// The new columns realizing the Higgs major of `q` on top of `qr.top`.
fn higgs_major_columns(qr: &QuotientRealization, q: &Quotient, seed: u64) -> Result<(Major, Matrix)> {
    let t = &qr.top;
    if !t.field().is_infinite() {
        return Err(Error::FiniteFieldUnsupported);
    }
    if !qr.realizes(q)? {
        return Err(Error::NotARealizationOfQ(
            "nested row spaces do not realize the given matroids".into(),
        ));
    }
    let h = q.higgs_major()?;
    let n = q.n();
    let k = q.nullity();
    // bottom = C · top; the new columns span ker C.
    let coeffs = solve_left(t, &qr.bottom)?;
    let u = coeffs.kernel();
    let mut sampler = Sampler::new(seed);
    let mut a = t.clone();
    for i in 0..k {
        let x = n + i;
        let next = h.matroid().restrict(ElementSet::full(x + 1));
        let cut = cut_of_element(&next, x)?;
        let outside = outside_flats(&cut);
        let mut spaces = vec![u.transpose()];
        for &f in cut.minimal() {
            spaces.push(a.select_columns(&columns_of(f)).transpose());
        }
        let w = crate::linalg::subspace_intersection(&spaces)?.transpose();
        for &f in &outside {
            if space_in_span(&a, f, &w)? {
                return Err(Error::Internal(format!(
                    "no admissible column for new element {}",
                    i + 1
                )));
            }
        }
        let v = sample_avoiding(&a, &w, &outside, &mut sampler)?;
        a = a.append_column(&v)?;
    }
    Ok((h, a))
}

/// `C` with `C · t = b`, for `t` of full row rank.
fn solve_left(t: &Matrix, b: &Matrix) -> Result<Matrix> {
    // C t = b  <=>  t^T C^T = b^T, solved column by column.
    let tt = t.transpose();
    let mut rows = Vec::with_capacity(b.rows());
    for i in 0..b.rows() {
        let (x, _) = tt
            .solve(b.row(i))?
            .ok_or_else(|| Error::NotARealizationOfQ("bottom row space not inside top".into()))?;
        rows.push(x);
    }
    Matrix::from_rows(t.field(), t.rows(), rows)
}

/// A realization of the Higgs major of `q` extending the top matrix of
/// `qr`, with one new column per element of `K` chosen in the kernel of the
/// quotient map.
pub fn realize_major_from_quotient(qr: &QuotientRealization, q: &Quotient, seed: u64) -> Result<Realization> {
    let (h, a) = higgs_major_columns(qr, q, seed)?;
    Realization::new(h.matroid().clone(), a)
        .map_err(|e| Error::Internal(format!("major realization failed verification: {e}")))
}

/// Row spaces `U_0 ⊇ U_1 ⊇ .. ⊇ U_k` realizing the Higgs factorization
/// `L^k ↠ .. ↠ L^0`; `U_0` and `U_k` are the given spaces.
pub fn realize_factorization(qr: &QuotientRealization, q: &Quotient, seed: u64) -> Result<Vec<Matrix>> {
    let (_, a) = higgs_major_columns(qr, q, seed)?;
    let n = q.n();
    let k = q.nullity();
    let mut out = vec![qr.top.clone()];
    for i in 1..k {
        let v = a.select_columns(&(n..n + i).collect::<Vec<_>>());
        let u = v.left_kernel().mul(&qr.top)?;
        if !check_realizes(&u, &q.higgs_lift(k - i)?)? {
            return Err(Error::Internal(format!("intermediate space {i} failed verification")));
        }
        out.push(u);
    }
    if k > 0 {
        out.push(qr.bottom.clone());
    }
    Ok(out)
}

/// Plücker coordinates of the flag induced by a major realization:
/// `p_{B'}` for `B' ⊆ E` of size `r` and `p_{B'' ∪ K}` for `B'' ⊆ E` of size
/// `r - k`, both normalized; keys are positions in `E`.
pub fn project_flag_pluckers(rh: &Realization, h: &Major) -> Result<(Pluckers, Pluckers)> {
    if rh.matroid != *h.matroid() {
        return Err(Error::InvalidRealization("realization of a different matroid".into()));
    }
    let a = &rh.matrix;
    let e = e_columns(h);
    let k = k_columns(h);
    let top = plucker(&a.select_columns(&e))?;
    let s = a.rows() - k.len();
    let mut bottom = Pluckers::new();
    for b in lex_subsets(e.len(), s) {
        let mut cols: Vec<usize> = b.iter().map(|&i| e[i]).collect();
        cols.extend(&k);
        bottom.insert(b, a.select_columns(&cols).det()?);
    }
    Ok((top, crate::linalg::normalize(bottom)?))
}

/// The column matroid of `a`, labelled `0..cols`. The matrix need not have
/// full row rank.
pub fn column_matroid(a: &Matrix) -> Result<Matroid> {
    let basis = a.row_space_basis();
    let r = basis.rows();
    let mut bases = Vec::new();
    for b in subsets_of_size(a.cols(), r) {
        if !basis.select_columns(&columns_of(b)).det()?.is_zero() {
            bases.push(b);
        }
    }
    Matroid::from_bases(a.cols(), bases)
}

/// Greedy search for a rational realization of `m`.
///
/// Each attempt puts a basis on the identity and adds the remaining
/// elements one at a time along the cut they induce, in a seeded random
/// order. `None` means every attempt hit an obstruction; this does not
/// prove that `m` is non-realizable.
pub fn search_realization(m: &Matroid, seed: u64, attempts: usize) -> Result<Option<Realization>> {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = m.n();
    let r = m.rank();
    for _ in 0..attempts {
        let basis = m.bases()[rng.gen_range(0..m.bases().len())];
        let mut rest: Vec<usize> = m.ground_set().difference(basis).to_vec();
        rest.shuffle(&mut rng);
        let order: Vec<usize> = basis.iter().chain(rest).collect();
        let mut image = vec![0; n];
        for (pos, &x) in order.iter().enumerate() {
            image[x] = pos;
        }
        let p = m.permute(&image)?;
        let mut current = Realization::new(
            p.restrict(ElementSet::full(r)),
            Matrix::identity(Field::Rational, r),
        )?;
        let mut failed = false;
        for x in r..n {
            let next = p.restrict(ElementSet::full(x + 1));
            let cut = cut_of_element(&next, x)?;
            let cut = ModularCut::new(current.matroid(), cut.members().iter().copied())?;
            match extend_along_cut(&current, &cut, &x.to_string(), rng.gen())? {
                CutExtension::Extended { realization, .. } => current = realization,
                CutExtension::Obstructed(_) => {
                    failed = true;
                    break;
                }
            }
        }
        if failed {
            continue;
        }
        let matrix = current.matrix().select_columns(&image);
        return Realization::new(m.clone(), matrix).map(Some);
    }
    Ok(None)
}

/// A random integer matrix realizing `U_{r,n}`, from a seed.
pub fn random_uniform_realization(r: usize, n: usize, seed: u64) -> Result<Realization> {
    let u = Matroid::uniform(r, n)?;
    let mut sampler = Sampler::new(seed);
    loop {
        let mut m = Matrix::zeros(Field::Rational, r, n);
        for i in 0..r {
            for j in 0..n {
                let v = (sampler.next_u64() % 41) as i64 - 20;
                m.set(i, j, Field::Rational.from_i64(v));
            }
        }
        if check_realizes(&m, &u)? {
            return Realization::new(u, m);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_column_breaks_loopless_realization() {
        let a = Matrix::rational(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(!check_realizes(&a, &Matroid::uniform(2, 3).unwrap()).unwrap());
        let b = Matrix::rational(&[&[1, 0, 1], &[0, 1, 1]]);
        assert!(check_realizes(&b, &Matroid::uniform(2, 3).unwrap()).unwrap());
    }

    #[test]
    fn top_cut_extension_is_generic() {
        let r = random_uniform_realization(2, 4, 7).unwrap();
        let cut = ModularCut::new(r.matroid(), [r.matroid().ground_set()]).unwrap();
        match extend_along_cut(&r, &cut, "f", 1).unwrap() {
            CutExtension::Extended { realization, column } => {
                assert_eq!(*realization.matroid(), Matroid::uniform(2, 5).unwrap());
                assert!(verify_extension_column(&r, &cut, &column).unwrap());
            }
            CutExtension::Obstructed(_) => panic!("top cut always extends"),
        }
    }

    #[test]
    fn column_matroid_of_rank_deficient_matrix() {
        let a = Matrix::rational(&[&[1, 0, 1], &[2, 0, 2]]);
        let m = column_matroid(&a).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.loops(), ElementSet::singleton(1));
    }

    #[test]
    fn search_realizes_small_paired_extension() {
        let m = crate::matroid::fixtures::paired_rank_three_extension(6);
        let r = search_realization(&m, 5, 8).unwrap().expect("realizable");
        assert!(check_realizes(r.matrix(), &m).unwrap());
    }

    #[test]
    fn coloop_extension_adds_a_row() {
        let r = random_uniform_realization(1, 2, 3).unwrap();
        let cut = ModularCut::empty(r.matroid());
        let CutExtension::Extended { realization, .. } = extend_along_cut(&r, &cut, "c", 0).unwrap() else {
            panic!("empty cut extends");
        };
        assert_eq!(realization.matrix().rows(), 2);
    }

    #[test]
    fn finite_fields_are_refused() {
        let f = Field::prime(5).unwrap();
        let a = Matrix::from_i64(f, &[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        let r = Realization::new(Matroid::uniform(2, 3).unwrap(), a).unwrap();
        let cut = ModularCut::new(r.matroid(), [r.matroid().ground_set()]).unwrap();
        assert_eq!(extend_along_cut(&r, &cut, "f", 0), Err(Error::FiniteFieldUnsupported));
    }
}
