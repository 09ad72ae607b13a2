use std::collections::{HashMap, VecDeque};

use super::{Group, Permutation};
use crate::error::{Error, Result};
use crate::numtheory;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Lexicographically smallest element of the class.
    pub representative: Permutation,
    pub size: usize,
    pub element_order: u64,
}

/// The conjugacy classes of a group, ordered by (element order, size,
/// representative), together with an element-to-class lookup.
#[derive(Debug, Clone)]
pub struct ConjugacyClassSet {
    group_order: usize,
    classes: Vec<ConjugacyClass>,
    members: Vec<Vec<Permutation>>,
    lookup: HashMap<Permutation, usize>,
}

/// Orbit sweep under conjugation by the generators, seeded from the element list.
pub fn conjugacy_classes(group: &Group) -> Result<ConjugacyClassSet> {
    let elements = group.elements()?;
    let gens = group.generators();
    let mut assigned = vec![false; elements.len()];
    let mut orbits: Vec<Vec<Permutation>> = Vec::new();
    for (i, seed) in elements.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        assigned[i] = true;
        let mut orbit = vec![seed.clone()];
        let mut queue = VecDeque::from([seed.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.conjugate_by(g);
                let j = elements.position(&y).expect("group is closed under conjugation");
                if !assigned[j] {
                    assigned[j] = true;
                    orbit.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits.sort_by(|a, b| {
        (a[0].order(), a.len(), &a[0]).cmp(&(b[0].order(), b.len(), &b[0]))
    });
    Ok(ConjugacyClassSet::from_orbits(elements.len(), orbits))
}

impl ConjugacyClassSet {
    fn from_orbits(group_order: usize, members: Vec<Vec<Permutation>>) -> Self {
        let classes = members
            .iter()
            .map(|orbit| ConjugacyClass {
                representative: orbit[0].clone(),
                size: orbit.len(),
                element_order: orbit[0].order(),
            })
            .collect();
        let lookup = members
            .iter()
            .enumerate()
            .flat_map(|(c, orbit)| orbit.iter().map(move |x| (x.clone(), c)))
            .collect();
        ConjugacyClassSet {
            group_order,
            classes,
            members,
            lookup,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    pub fn representative(&self, i: usize) -> &Permutation {
        &self.classes[i].representative
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].size
    }

    pub fn members(&self, i: usize) -> &[Permutation] {
        &self.members[i]
    }

    pub fn class_of(&self, x: &Permutation) -> Option<usize> {
        self.lookup.get(x).copied()
    }

    pub fn class_position(&self, x: &Permutation) -> Result<usize> {
        self.class_of(x)
            .ok_or_else(|| Error::NotInGroup(x.to_string()))
    }

    /// Order of the centralizer of a representative of class `i`.
    pub fn centralizer_order(&self, i: usize) -> usize {
        self.group_order / self.classes[i].size
    }

    /// Class index of `rep(c)^m` for every class `c`.
    pub fn power_map(&self, m: i64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| {
                self.class_of(&c.representative.pow(m))
                    .expect("powers stay in the group")
            })
            .collect()
    }

    pub fn inverse_classes(&self) -> Vec<usize> {
        self.power_map(-1)
    }

    /// Least common multiple of the representatives' orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .fold(1, |acc, c| numtheory::lcm(acc, c.element_order))
    }

    /// Partition of the class indices into rational classes: `a` and `b` share a
    /// cell when `rep(b)` is conjugate to `rep(a)^r` for some `r` prime to `o(rep(a))`.
    pub fn rational_classes(&self) -> Vec<Vec<usize>> {
        let mut cell_of: Vec<Option<usize>> = vec![None; self.len()];
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for c in 0..self.len() {
            if cell_of[c].is_some() {
                continue;
            }
            let o = self.classes[c].element_order;
            let mut cell: Vec<usize> = (1..o.max(2))
                .filter(|&r| numtheory::gcd_i64(r as i64, o as i64) == 1)
                .map(|r| {
                    self.class_of(&self.classes[c].representative.pow(r as i64))
                        .expect("powers stay in the group")
                })
                .collect();
            cell.push(c);
            cell.sort_unstable();
            cell.dedup();
            for &x in &cell {
                cell_of[x] = Some(cells.len());
            }
            cells.push(cell);
        }
        cells
    }
}

/// `exp(G)` from the class representatives.
pub fn group_exponent(classes: &ConjugacyClassSet) -> u64 {
    classes.exponent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::construct_group;

    fn sizes(spec: &str) -> Vec<usize> {
        let g = construct_group(spec).unwrap();
        conjugacy_classes(&g)
            .unwrap()
            .classes()
            .iter()
            .map(|c| c.size)
            .collect()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(sizes("S3"), vec![1, 3, 2]);
        assert_eq!(sizes("C4"), vec![1, 1, 1, 1]);
        // orders 1,2,2,3,4 with sizes 1,3,6,8,6
        assert_eq!(sizes("S4"), vec![1, 3, 6, 8, 6]);
        assert_eq!(sizes("A5"), vec![1, 15, 20, 12, 12]);
    }

    #[test]
    fn class_structure() {
        let g = construct_group("S4").unwrap();
        let cl = conjugacy_classes(&g).unwrap();
        assert_eq!(cl.size(0), 1);
        assert!(cl.representative(0).is_identity());
        assert_eq!(cl.exponent(), 12);
        assert_eq!(group_exponent(&cl), g.exponent().unwrap());
        for c in 0..cl.len() {
            assert_eq!(
                cl.size(c) * g.centralizer(cl.representative(c)).unwrap().order() as usize,
                24
            );
        }
        assert_eq!(cl.power_map(1), (0..cl.len()).collect::<Vec<_>>());
        let pm2 = cl.power_map(2);
        let pm3 = cl.power_map(3);
        let pm6 = cl.power_map(6);
        for c in 0..cl.len() {
            assert_eq!(pm3[pm2[c]], pm6[c]);
        }
    }

    #[test]
    fn rational_class_examples() {
        let c5 = conjugacy_classes(&construct_group("C5").unwrap()).unwrap();
        assert_eq!(c5.rational_classes(), vec![vec![0], vec![1, 2, 3, 4]]);
        let s3 = conjugacy_classes(&construct_group("S3").unwrap()).unwrap();
        assert_eq!(s3.rational_classes().len(), 3);
        let s4 = conjugacy_classes(&construct_group("S4").unwrap()).unwrap();
        assert_eq!(s4.rational_classes().len(), 5);
        let a5 = conjugacy_classes(&construct_group("A5").unwrap()).unwrap();
        assert_eq!(a5.rational_classes().len(), 4);
    }
}
