//! Bitset matroids given by their bases.
//!
//! A [`Matroid`] is an immutable value: the canonically sorted list of its
//! bases, optional element labels, and (for ground sets of at most
//! [`RANK_TABLE_MAX`] elements) a precomputed rank table over all subsets.

mod element_set;
pub mod enumerate;
pub mod fixtures;
mod flats;
mod iso;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

pub use element_set::{
    binomial, lex_subsets, subsets_of, subsets_of_size, ElementSet, Elements, MAX_ELEMENTS,
};
pub use flats::FlatFamily;

use crate::error::{Error, Result};

/// Ground sets up to this size carry a full rank table.
pub const RANK_TABLE_MAX: usize = 16;

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Arc<[ElementSet]>,
    labels: BTreeMap<usize, String>,
    rank_table: Option<Arc<[u8]>>,
}

/// Equality is structural on `(n, bases)`; labels are presentation only.
impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl PartialOrd for Matroid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matroid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.rank, &self.bases[..]).cmp(&(other.n, other.rank, &other.bases[..]))
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, rank={}, bases=[", self.n, self.rank)?;
        for (i, b) in self.bases.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if i == 12 {
                write!(f, "... {} total", self.bases.len())?;
                break;
            }
            write!(f, "{b}")?;
        }
        write!(f, "])")
    }
}

impl Matroid {
    /// Builds a matroid from its bases, checking the basis exchange axiom.
    pub fn from_bases(n: usize, bases: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bases: Vec<ElementSet> = bases.into_iter().collect();
        let Some(first) = bases.first() else {
            return Err(Error::EmptyBases);
        };
        let rank = first.len();
        let full = ElementSet::full(n);
        for b in &bases {
            if !b.is_subset(full) {
                let element = b.difference(full).first().unwrap_or(n);
                return Err(Error::ElementOutOfRange { element, n });
            }
            if b.len() != rank {
                return Err(Error::UnequalBasisSizes {
                    expected: rank,
                    found: b.len(),
                });
            }
        }
        bases.sort_unstable();
        bases.dedup();
        let m = Self::assemble(n, rank, bases);
        m.check_exchange()?;
        Ok(m)
    }

    /// Builds a matroid from bases known to satisfy the exchange axiom
    /// (minors, duals and sums of valid matroids).
    pub(crate) fn from_bases_unchecked(n: usize, mut bases: Vec<ElementSet>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let rank = bases.first().map_or(0, |b| b.len());
        debug_assert!(bases.iter().all(|b| b.len() == rank));
        Self::assemble(n, rank, bases)
    }

    fn assemble(n: usize, rank: usize, bases: Vec<ElementSet>) -> Self {
        let rank_table = (n <= RANK_TABLE_MAX).then(|| build_rank_table(n, &bases));
        Matroid {
            n,
            rank,
            bases: bases.into(),
            labels: BTreeMap::new(),
            rank_table,
        }
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        if r > n {
            return Err(Error::RankTooLarge { rank: r, n });
        }
        Ok(Self::from_bases_unchecked(n, subsets_of_size(n, r).collect()))
    }

    /// Attaches element names. Indices outside the ground set are rejected.
    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        if let Some((&i, _)) = labels.iter().find(|(&i, _)| i >= self.n) {
            return Err(Error::ElementOutOfRange {
                element: i,
                n: self.n,
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub(crate) fn set_label(&mut self, i: usize, name: impl Into<String>) {
        self.labels.insert(i, name.into());
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Name of element `i`: its label if any, otherwise the index.
    pub fn label(&self, i: usize) -> String {
        self.labels.get(&i).cloned().unwrap_or_else(|| i.to_string())
    }

    /// Index of the element carrying `name`.
    pub fn element(&self, name: &str) -> Option<usize> {
        self.labels
            .iter()
            .find_map(|(&i, l)| (l == name).then_some(i))
    }

    /// Set of the elements carrying the given labels.
    pub fn elements<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Option<ElementSet> {
        names
            .into_iter()
            .map(|name| self.element(name))
            .collect::<Option<ElementSet>>()
    }

    pub fn is_basis(&self, a: ElementSet) -> bool {
        self.bases.binary_search(&a).is_ok()
    }

    pub fn rank_of(&self, a: ElementSet) -> usize {
        match &self.rank_table {
            Some(t) => t[a.bits() as usize] as usize,
            None => self
                .bases
                .iter()
                .map(|b| b.intersection(a).len())
                .max()
                .unwrap_or(0),
        }
    }

    pub fn is_independent(&self, a: ElementSet) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn closure(&self, a: ElementSet) -> ElementSet {
        let r = self.rank_of(a);
        self.ground_set()
            .difference(a)
            .iter()
            .filter(|&x| self.rank_of(a.with(x)) == r)
            .fold(a, |s, x| s.with(x))
    }

    pub fn is_flat(&self, a: ElementSet) -> bool {
        let r = self.rank_of(a);
        self.ground_set()
            .difference(a)
            .iter()
            .all(|x| self.rank_of(a.with(x)) > r)
    }

    pub fn loops(&self) -> ElementSet {
        self.closure(ElementSet::EMPTY)
    }

    pub fn coloops(&self) -> ElementSet {
        self.bases
            .iter()
            .fold(self.ground_set(), |acc, &b| acc.intersection(b))
    }

    /// All minimal dependent sets, in increasing mask order.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for k in 1..=(self.rank + 1).min(self.n) {
            for c in subsets_of_size(self.n, k) {
                if self.rank_of(c) == k - 1 && c.iter().all(|x| self.rank_of(c.without(x)) == k - 1)
                {
                    out.push(c);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff `a` is a union of circuits, i.e. `M|a` has no coloops.
    pub fn is_cycle(&self, a: ElementSet) -> bool {
        let r = self.rank_of(a);
        a.iter().all(|x| self.rank_of(a.without(x)) == r)
    }

    /// All cycles (unions of circuits), in increasing mask order.
    pub fn cycles(&self) -> Vec<ElementSet> {
        subsets_of(self.ground_set())
            .filter(|&a| self.is_cycle(a))
            .collect()
    }

    pub fn dual(&self) -> Matroid {
        let bases = self.bases.iter().map(|b| b.complement(self.n)).collect();
        let mut m = Self::from_bases_unchecked(self.n, bases);
        m.labels = self.labels.clone();
        m
    }

    /// Contracts `contract`, deletes `delete`, and renumbers the remaining
    /// elements consecutively in increasing order (labels follow them).
    pub fn minor(&self, contract: ElementSet, delete: ElementSet) -> Matroid {
        let contract = contract.intersection(self.ground_set());
        let delete = delete.intersection(self.ground_set()).difference(contract);
        let kept = self.ground_set().difference(contract).difference(delete);
        let rc = self.rank_of(contract);
        // Bases of M/C are B \ C for bases B meeting C in a basis of C;
        // deleting D then keeps the largest traces on the rest.
        let contracted: Vec<ElementSet> = self
            .bases
            .iter()
            .filter(|b| b.intersection(contract).len() == rc)
            .map(|b| b.difference(contract))
            .collect();
        let target = contracted
            .iter()
            .map(|b| b.intersection(kept).len())
            .max()
            .unwrap_or(0);
        let bases = contracted
            .iter()
            .map(|b| b.intersection(kept))
            .filter(|b| b.len() == target)
            .map(|b| b.compress(kept))
            .collect();
        let mut m = Self::from_bases_unchecked(kept.len(), bases);
        for (i, x) in kept.iter().enumerate() {
            if let Some(l) = self.labels.get(&x) {
                m.labels.insert(i, l.clone());
            }
        }
        m
    }

    pub fn delete(&self, s: ElementSet) -> Matroid {
        self.minor(ElementSet::EMPTY, s)
    }

    pub fn contract(&self, s: ElementSet) -> Matroid {
        self.minor(s, ElementSet::EMPTY)
    }

    pub fn restrict(&self, s: ElementSet) -> Matroid {
        self.delete(self.ground_set().difference(s))
    }

    /// `self ⊕ other`; elements of `other` are shifted by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for a in self.bases.iter() {
            for b in other.bases.iter() {
                bases.push(ElementSet::from_bits(a.bits() | b.bits() << self.n));
            }
        }
        let mut m = Self::from_bases_unchecked(n, bases);
        m.labels = self.labels.clone();
        for (i, l) in &other.labels {
            m.labels.insert(i + self.n, l.clone());
        }
        Ok(m)
    }

    /// Weak order `self ≤ other`: every independent set of `other` is
    /// independent in `self`.
    pub fn weak_leq(&self, other: &Matroid) -> Result<bool> {
        self.same_ground(other)?;
        Ok(other.bases.iter().all(|&b| self.is_independent(b)))
    }

    pub(crate) fn same_ground(&self, other: &Matroid) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// A permutation `p` of the ground set with `p(B)` a basis of `other`
    /// for every basis `B` of `self`, if one exists.
    pub fn is_isomorphic(&self, other: &Matroid) -> Option<Vec<usize>> {
        iso::find_isomorphism(self, other)
    }

    /// Renumbers elements: element `i` becomes `image[i]`.
    pub fn permute(&self, image: &[usize]) -> Result<Matroid> {
        let mut seen = vec![false; self.n];
        if image.len() != self.n
            || image
                .iter()
                .any(|&j| j >= self.n || std::mem::replace(&mut seen[j], true))
        {
            return Err(Error::InvalidInputs("not a permutation".into()));
        }
        let bases = self.bases.iter().map(|b| b.map(image)).collect();
        let mut m = Self::from_bases_unchecked(self.n, bases);
        m.labels = self.labels.iter().map(|(&i, l)| (image[i], l.clone())).collect();
        Ok(m)
    }

    fn check_exchange(&self) -> Result<()> {
        let ok = match &self.rank_table {
            Some(t) => locally_submodular(self.n, t),
            None => self.exchange_witness().is_none(),
        };
        if ok {
            return Ok(());
        }
        let (b1, b2, x) = self
            .exchange_witness()
            .expect("rank function not submodular but no exchange witness");
        Err(Error::ExchangeAxiomViolation { b1, b2, x })
    }

    fn exchange_witness(&self) -> Option<(ElementSet, ElementSet, usize)> {
        let set: HashSet<ElementSet> = self.bases.iter().copied().collect();
        for &b1 in self.bases.iter() {
            for &b2 in self.bases.iter() {
                for x in b1.difference(b2).iter() {
                    let found = b2
                        .difference(b1)
                        .iter()
                        .any(|y| set.contains(&b1.without(x).with(y)));
                    if !found {
                        return Some((b1, b2, x));
                    }
                }
            }
        }
        None
    }
}

/// Rank of every subset: the largest size of a subset contained in a basis.
fn build_rank_table(n: usize, bases: &[ElementSet]) -> Arc<[u8]> {
    let size = 1usize << n;
    let mut indep = vec![false; size];
    for b in bases {
        indep[b.bits() as usize] = true;
    }
    for a in (0..size).rev() {
        if !indep[a] {
            indep[a] = (0..n).any(|x| a >> x & 1 == 0 && indep[a | 1 << x]);
        }
    }
    let mut table = vec![0u8; size];
    for a in 1..size {
        table[a] = if indep[a] {
            a.count_ones() as u8
        } else {
            let mut best = 0;
            let mut rest = a;
            while rest != 0 {
                let x = rest & rest.wrapping_neg();
                best = best.max(table[a ^ x]);
                rest ^= x;
            }
            best
        };
    }
    table.into()
}

/// `r(A+x) + r(A+y) >= r(A) + r(A+x+y)` for all `A` and `x, y ∉ A`.
///
/// Together with unit increase (automatic for the table above) this is
/// equivalent to submodularity, hence to the exchange axiom for the bases.
fn locally_submodular(n: usize, t: &[u8]) -> bool {
    let size = 1usize << n;
    for a in 0..size {
        let ra = t[a];
        for x in 0..n {
            if a >> x & 1 == 1 {
                continue;
            }
            let ax = a | 1 << x;
            for y in x + 1..n {
                if a >> y & 1 == 1 {
                    continue;
                }
                let ay = a | 1 << y;
                if u16::from(t[ax]) + u16::from(t[ay]) < u16::from(ra) + u16::from(t[ax | 1 << y]) {
                    return false;
                }
            }
        }
    }
    true
}
