//! Quotients, Higgs lifts, factorizations and majors.
//!
//! `M1 ↠ M2` is a quotient when every flat of `M2` is a flat of `M1`. Its
//! nullity is `rk(M1) - rk(M2)`. A factorization is a chain of nullity-one
//! quotients between the two; a major is a matroid `H` on `E ∪ K` with
//! `H \ K = M1` and `H / K = M2`.

use crate::error::{Error, Result};
use crate::extension::{all_modular_cuts, extend, lift_cut, ModularCut};
use crate::matroid::{ElementSet, Matroid};

/// Flat criterion: every flat of `m2` is a flat of `m1`.
pub fn is_quotient_by_flats(m1: &Matroid, m2: &Matroid) -> Result<bool> {
    m1.same_ground(m2)?;
    Ok(m2.flats().iter().all(|f| m1.is_flat(f)))
}

/// Circuit criterion: every circuit of `m1` is a union of circuits of `m2`.
pub fn is_quotient_by_circuits(m1: &Matroid, m2: &Matroid) -> Result<bool> {
    m1.same_ground(m2)?;
    Ok(m1.circuits().iter().all(|&c| m2.is_cycle(c)))
}

/// Whether `m2` is a quotient of `m1`. Both criteria are evaluated; if they
/// ever disagree an error is returned instead of a verdict.
pub fn is_quotient(m1: &Matroid, m2: &Matroid) -> Result<bool> {
    let by_flats = is_quotient_by_flats(m1, m2)?;
    if by_flats != is_quotient_by_circuits(m1, m2)? {
        return Err(Error::QuotientCriteriaDisagree);
    }
    Ok(by_flats)
}

fn describe(m: &Matroid) -> String {
    format!("matroid of rank {} on {} elements", m.rank(), m.n())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    top: Matroid,
    bottom: Matroid,
}

impl Quotient {
    pub fn new(top: Matroid, bottom: Matroid) -> Result<Self> {
        if !is_quotient(&top, &bottom)? {
            return Err(Error::NotAQuotient(describe(&bottom), describe(&top)));
        }
        Ok(Quotient { top, bottom })
    }

    pub fn top(&self) -> &Matroid {
        &self.top
    }

    pub fn bottom(&self) -> &Matroid {
        &self.bottom
    }

    pub fn n(&self) -> usize {
        self.top.n()
    }

    pub fn nullity(&self) -> usize {
        self.top.rank() - self.bottom.rank()
    }

    /// `rk_top(A) - rk_bottom(A)`.
    pub fn subset_nullity(&self, a: ElementSet) -> usize {
        self.top.rank_of(a) - self.bottom.rank_of(a)
    }

    /// `L^i`: the matroid whose flats are the flats of the bottom together
    /// with the flats of the top of nullity less than `i`.
    pub fn higgs_lift(&self, i: usize) -> Result<Matroid> {
        let k = self.nullity();
        if i > k {
            return Err(Error::IndexOutOfRange { index: i, max: k });
        }
        if i == 0 {
            return Ok(self.bottom.clone());
        }
        if i == k {
            return Ok(self.top.clone());
        }
        let mut family: Vec<ElementSet> = self.bottom.flats().iter().collect();
        family.extend(self.top.flats().iter().filter(|&f| self.subset_nullity(f) < i));
        let mut lift = Matroid::from_flats(self.n(), family)?;
        lift = lift.with_labels(self.top.labels().clone())?;
        Ok(lift)
    }

    /// `(L^k, L^{k-1}, .., L^0)`.
    pub fn higgs_factorization(&self) -> Result<Factorization> {
        let steps = (0..=self.nullity())
            .rev()
            .map(|i| self.higgs_lift(i))
            .collect::<Result<Vec<_>>>()?;
        Factorization::new(steps)
    }

    /// For a nullity-one quotient, the modular cut of the top whose
    /// extension followed by contraction gives the bottom: the flats of
    /// nullity one.
    pub fn elementary_cut(&self) -> Result<ModularCut> {
        if self.nullity() != 1 {
            return Err(Error::NotElementary(self.nullity()));
        }
        self.top_nullity_cut()
    }

    /// Flats of the top whose nullity equals the nullity of the quotient.
    pub fn top_nullity_cut(&self) -> Result<ModularCut> {
        let k = self.nullity();
        let flats = self.top.flats();
        let family = flats.iter().filter(|&f| self.subset_nullity(f) == k);
        ModularCut::new(&self.top, family)
            .map_err(|e| Error::Internal(format!("top nullity flats are not a cut: {e}")))
    }

    /// The Higgs major: the `k`-th Higgs lift of
    /// `top ⊕ U_{k,k} ↠ bottom ⊕ U_{0,k}`. The new elements are appended
    /// after the ground set with labels `ē1, .., ēk`.
    pub fn higgs_major(&self) -> Result<Major> {
        let k = self.nullity();
        let n = self.n();
        let top = self.top.direct_sum(&Matroid::uniform(k, k)?)?;
        let bottom = self.bottom.direct_sum(&Matroid::uniform(0, k)?)?;
        let big = Quotient::new(top, bottom)?;
        let mut h = big.higgs_lift(k)?;
        let mut labels = self.top.labels().clone();
        for j in 0..k {
            labels.insert(n + j, new_label(j));
        }
        h = h.with_labels(labels)?;
        Major::new(h, (n..n + k).collect())
    }
}

fn new_label(j: usize) -> String {
    format!("ē{}", j + 1)
}

/// A chain `N_0 ↠ N_1 ↠ .. ↠ N_k` of nullity-one quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    steps: Vec<Matroid>,
}

impl Factorization {
    pub fn new(steps: Vec<Matroid>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidFactorization("no steps".into()));
        }
        for (i, w) in steps.windows(2).enumerate() {
            if w[0].n() != w[1].n() {
                return Err(Error::InvalidFactorization(format!(
                    "steps {i} and {} have different ground sets",
                    i + 1
                )));
            }
            if w[0].rank() != w[1].rank() + 1 || !is_quotient(&w[0], &w[1])? {
                return Err(Error::InvalidFactorization(format!(
                    "step {} is not an elementary quotient of step {i}",
                    i + 1
                )));
            }
        }
        Ok(Factorization { steps })
    }

    pub fn steps(&self) -> &[Matroid] {
        &self.steps
    }

    pub fn top(&self) -> &Matroid {
        &self.steps[0]
    }

    pub fn bottom(&self) -> &Matroid {
        self.steps.last().expect("nonempty")
    }

    /// Number of elementary steps.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn quotient(&self) -> Quotient {
        Quotient {
            top: self.top().clone(),
            bottom: self.bottom().clone(),
        }
    }
}

/// A matroid `H` on `E ∪ K` together with the ordered list `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Major {
    matroid: Matroid,
    new_elements: Vec<usize>,
}

impl Major {
    /// Requires `K` independent and spanned by `E`, so that `H \ K ↠ H / K`
    /// has nullity `|K|`.
    pub fn new(matroid: Matroid, new_elements: Vec<usize>) -> Result<Self> {
        let k: ElementSet = new_elements.iter().copied().collect();
        if k.len() != new_elements.len() {
            return Err(Error::InvalidMajor("repeated new element".into()));
        }
        if !k.is_subset(matroid.ground_set()) {
            return Err(Error::InvalidMajor("new element outside the ground set".into()));
        }
        if !matroid.is_independent(k) {
            return Err(Error::InvalidMajor("new elements are dependent".into()));
        }
        let e = matroid.ground_set().difference(k);
        if matroid.rank_of(e) != matroid.rank() {
            return Err(Error::InvalidMajor("new elements are not spanned by the old ones".into()));
        }
        Ok(Major {
            matroid,
            new_elements,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn new_elements(&self) -> &[usize] {
        &self.new_elements
    }

    pub fn new_set(&self) -> ElementSet {
        self.new_elements.iter().copied().collect()
    }

    pub fn k(&self) -> usize {
        self.new_elements.len()
    }

    /// `H \ K`.
    pub fn top(&self) -> Matroid {
        self.matroid.delete(self.new_set())
    }

    /// `H / K`.
    pub fn bottom(&self) -> Matroid {
        self.matroid.contract(self.new_set())
    }

    pub fn quotient(&self) -> Quotient {
        Quotient {
            top: self.top(),
            bottom: self.bottom(),
        }
    }
}

/// The major obtained by extending the top of `f` by one element per step,
/// each time along the step's cut lifted through the elements added before.
pub fn major_from_factorization(f: &Factorization) -> Result<Major> {
    let n = f.top().n();
    let k = f.len();
    let mut h = f.top().clone();
    for i in 1..=k {
        let step = Quotient::new(f.steps[i - 1].clone(), f.steps[i].clone())?;
        // G_j = H / {e_1..e_j}; after contracting e_1..e_{j-1} the element
        // e_j sits at index n.
        let mut contractions = vec![h.clone()];
        for _ in 1..i {
            let g = contractions.last().unwrap().contract(ElementSet::singleton(n));
            contractions.push(g);
        }
        if *contractions.last().unwrap() != *step.top() {
            return Err(Error::Internal(format!(
                "contraction of the partial major differs from step {}",
                i - 1
            )));
        }
        let mut cut = step.elementary_cut()?;
        for j in (0..i - 1).rev() {
            cut = lift_cut(&contractions[j], n, &cut)?;
        }
        h = extend(&h, &cut, &new_label(i - 1))?;
    }
    Major::new(h, (n..n + k).collect())
}

/// `F(H)_i = (H / {e_1..e_i}) \ {e_{i+1}..e_k}` for `i = 0..k`.
pub fn factorization_from_major(h: &Major) -> Result<Factorization> {
    let k = h.k();
    let steps = (0..=k)
        .map(|i| {
            let contract: ElementSet = h.new_elements[..i].iter().copied().collect();
            let delete: ElementSet = h.new_elements[i..].iter().copied().collect();
            h.matroid.minor(contract, delete)
        })
        .collect();
    Factorization::new(steps).map_err(|e| Error::InvalidMajor(e.to_string()))
}

/// Ground sets accepted by [`enumerate_elementary_quotients`].
pub const ELEMENTARY_ENUMERATION_MAX: usize = 6;

/// All nullity-one quotients of `m`, one per modular cut that is neither
/// empty nor the whole lattice, deduplicated and sorted.
pub fn enumerate_elementary_quotients(m: &Matroid) -> Result<Vec<Matroid>> {
    if m.n() > ELEMENTARY_ENUMERATION_MAX {
        return Err(Error::TooLarge(format!(
            "elementary quotients of a matroid on {} > {ELEMENTARY_ENUMERATION_MAX} elements",
            m.n()
        )));
    }
    let loops = m.loops();
    let mut out = Vec::new();
    for cut in all_modular_cuts(m) {
        if cut.is_empty() || cut.contains(loops) {
            continue;
        }
        let ext = extend(m, &cut, "e")?;
        out.push(ext.contract(ElementSet::singleton(m.n())));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every factorization of `q`, by repeatedly choosing elementary quotients
/// that still map onto the bottom.
pub fn all_factorizations(q: &Quotient) -> Result<Vec<Factorization>> {
    fn rec(cur: &Matroid, bottom: &Matroid, path: &mut Vec<Matroid>, out: &mut Vec<Vec<Matroid>>) -> Result<()> {
        if cur.rank() == bottom.rank() {
            if cur == bottom {
                out.push(path.clone());
            }
            return Ok(());
        }
        for next in enumerate_elementary_quotients(cur)? {
            if is_quotient(&next, bottom)? {
                path.push(next.clone());
                rec(&next, bottom, path, out)?;
                path.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut path = vec![q.top.clone()];
    rec(&q.top, &q.bottom, &mut path, &mut out)?;
    out.into_iter().map(Factorization::new).collect()
}

/// A chain `M_1 ↠ M_2 ↠ .. ↠ M_{l+1}` of quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagMatroid {
    chain: Vec<Matroid>,
}

impl FlagMatroid {
    pub fn new(chain: Vec<Matroid>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidFlag("empty chain".into()));
        }
        for (i, w) in chain.windows(2).enumerate() {
            w[0].same_ground(&w[1]).map_err(|e| Error::InvalidFlag(e.to_string()))?;
            if !is_quotient(&w[0], &w[1])? {
                return Err(Error::InvalidFlag(format!(
                    "member {} is not a quotient of member {i}",
                    i + 1
                )));
            }
        }
        Ok(FlagMatroid { chain })
    }

    pub fn chain(&self) -> &[Matroid] {
        &self.chain
    }
}

/// Concatenated Higgs factorizations of the steps of a flag, and the major
/// that the factorization determines.
pub fn flag_higgs(flag: &FlagMatroid) -> Result<(Factorization, Major)> {
    let mut steps = vec![flag.chain[0].clone()];
    for w in flag.chain.windows(2) {
        let q = Quotient::new(w[0].clone(), w[1].clone())?;
        steps.extend(q.higgs_factorization()?.steps.into_iter().skip(1));
    }
    let f = Factorization::new(steps)?;
    let h = major_from_factorization(&f)?;
    Ok((f, h))
}
