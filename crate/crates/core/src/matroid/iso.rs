use std::collections::HashSet;

use super::{ElementSet, Matroid};

/// Per-element invariant: how many bases contain it, and how many circuits
/// of each size contain it.
fn signatures(m: &Matroid, circuits: &[ElementSet]) -> Vec<(usize, Vec<usize>)> {
    (0..m.n())
        .map(|x| {
            let in_bases = m.bases().iter().filter(|b| b.contains(x)).count();
            let mut sizes = vec![0usize; m.n() + 1];
            for c in circuits.iter().filter(|c| c.contains(x)) {
                sizes[c.len()] += 1;
            }
            (in_bases, sizes)
        })
        .collect()
}

pub(super) fn find_isomorphism(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.rank() != b.rank() || a.bases().len() != b.bases().len() {
        return None;
    }
    if a == b {
        return Some((0..a.n()).collect());
    }
    let ca = a.circuits();
    let cb = b.circuits();
    if ca.len() != cb.len() {
        return None;
    }
    let sa = signatures(a, &ca);
    let sb = signatures(b, &cb);
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    // Circuits of `a` are checked as soon as their largest element is mapped.
    let mut closing: Vec<Vec<ElementSet>> = vec![Vec::new(); a.n()];
    for &c in &ca {
        if let Some(top) = c.iter().last() {
            closing[top].push(c);
        }
    }
    let targets: HashSet<ElementSet> = cb.iter().copied().collect();
    let mut search = Search {
        n: a.n(),
        sa: &sa,
        sb: &sb,
        closing: &closing,
        targets: &targets,
        image: vec![usize::MAX; a.n()],
        used: vec![false; a.n()],
    };
    // Mapping circuits injectively into the equally many circuits of `b` is a
    // bijection of circuit sets, hence an isomorphism.
    search.extend(0).then_some(search.image)
}

struct Search<'a> {
    n: usize,
    sa: &'a [(usize, Vec<usize>)],
    sb: &'a [(usize, Vec<usize>)],
    closing: &'a [Vec<ElementSet>],
    targets: &'a HashSet<ElementSet>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, i: usize) -> bool {
        if i == self.n {
            return true;
        }
        for j in 0..self.n {
            if self.used[j] || self.sa[i] != self.sb[j] {
                continue;
            }
            self.image[i] = j;
            let ok = self.closing[i]
                .iter()
                .all(|c| self.targets.contains(&c.map(&self.image)));
            if ok {
                self.used[j] = true;
                if self.extend(i + 1) {
                    return true;
                }
                self.used[j] = false;
            }
        }
        self.image[i] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_uniform_is_isomorphic() {
        let u = Matroid::uniform(2, 3).unwrap();
        let p = u.permute(&[2, 0, 1]).unwrap();
        assert!(find_isomorphism(&u, &p).is_some());
        assert!(find_isomorphism(&Matroid::uniform(2, 4).unwrap(), &Matroid::uniform(3, 4).unwrap()).is_none());
    }

    #[test]
    fn found_permutation_maps_bases_onto_bases() {
        let m = Matroid::from_bases(
            4,
            [0b0011, 0b0101, 0b0110, 0b1001, 0b1010].map(ElementSet::from_bits),
        )
        .unwrap();
        let p = m.permute(&[3, 1, 0, 2]).unwrap();
        let image = find_isomorphism(&m, &p).unwrap();
        assert_eq!(m.permute(&image).unwrap(), p);
    }
}
