use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use super::chain::StabChain;
use super::Permutation;
use crate::error::{Error, Result};
use crate::numtheory;

/// Size limits for group construction and element enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    /// Largest order for which element lists are built.
    pub max_enumeration: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 64,
            max_enumeration: 10_000_000,
        }
    }
}

/// All elements of a group with a reverse index.
#[derive(Debug)]
pub struct ElementList {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl ElementList {
    fn new(elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        ElementList { elements, index }
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }
}

/// A permutation group given by generators, with a stabilizer chain for order
/// and membership. The element list is built on first request.
#[derive(Debug, Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u128,
    limits: Limits,
    elements: OnceLock<Arc<ElementList>>,
}

impl Group {
    pub fn new(degree: usize, generators: Vec<Permutation>, limits: Limits) -> Result<Self> {
        if degree > limits.max_degree {
            return Err(Error::DegreeOverflow {
                degree,
                max: limits.max_degree,
            });
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidArgument(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order().ok_or(Error::ResourceLimit {
            limit: "group order",
            value: u128::MAX,
            max: u128::MAX,
        })?;
        Ok(Group {
            degree,
            generators,
            chain,
            order,
            limits,
            elements: OnceLock::new(),
        })
    }

    /// Subgroup spanned by an explicit element list (which must be closed).
    /// Generators are picked greedily in list order.
    pub(crate) fn subgroup_from_elements(&self, elements: Vec<Permutation>) -> Group {
        let mut generators = Vec::new();
        let mut chain = StabChain::new(self.degree, &generators);
        for e in &elements {
            if chain.order() == Some(elements.len() as u128) {
                break;
            }
            if !chain.contains(e) {
                generators.push(e.clone());
                chain = StabChain::new(self.degree, &generators);
            }
        }
        let order = chain.order().expect("subgroup of an enumerable group");
        assert_eq!(order, elements.len() as u128, "element list is not a subgroup");
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(ElementList::new(elements)));
        Group {
            degree: self.degree,
            generators,
            chain,
            order,
            limits: self.limits,
            elements: cell,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.chain.contains(x)
    }

    pub fn check_member(&self, x: &Permutation) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInGroup(x.to_string()))
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// The element list, in breadth-first order from the identity over the generators.
    pub fn elements(&self) -> Result<&ElementList> {
        if self.order > self.limits.max_enumeration {
            return Err(Error::ResourceLimit {
                limit: "enumeration order",
                value: self.order,
                max: self.limits.max_enumeration,
            });
        }
        Ok(self.elements.get_or_init(|| {
            let id = self.identity();
            let mut elements = vec![id.clone()];
            let mut index = HashMap::from([(id, 0usize)]);
            let mut i = 0;
            while i < elements.len() {
                for g in &self.generators {
                    let x = g * &elements[i];
                    if !index.contains_key(&x) {
                        index.insert(x.clone(), elements.len());
                        elements.push(x);
                    }
                }
                i += 1;
            }
            debug_assert_eq!(elements.len() as u128, self.order);
            Arc::new(ElementList { elements, index })
        }))
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> Result<u64> {
        Ok(self
            .elements()?
            .iter()
            .fold(1, |acc, x| numtheory::lcm(acc, x.order())))
    }

    /// `C_G(z)`.
    pub fn centralizer(&self, z: &Permutation) -> Result<Group> {
        self.check_member(z)?;
        let elements = self
            .elements()?
            .iter()
            .filter(|t| t.commutes_with(z))
            .cloned()
            .collect();
        Ok(self.subgroup_from_elements(elements))
    }

    /// Some `t` in the group with `t·a·t⁻¹ = b`, or `None` when `a` and `b` are
    /// not conjugate. Breadth-first search over conjugation by the generators,
    /// recording the conjugating element of each orbit point.
    pub fn conjugator(&self, a: &Permutation, b: &Permutation) -> Result<Option<Permutation>> {
        self.check_member(a)?;
        self.check_member(b)?;
        if a == b {
            return Ok(Some(self.identity()));
        }
        if a.cycle_type() != b.cycle_type() {
            return Ok(None);
        }
        let mut seen: HashMap<Permutation, Permutation> = HashMap::new();
        seen.insert(a.clone(), self.identity());
        let mut queue = VecDeque::from([a.clone()]);
        while let Some(x) = queue.pop_front() {
            let tx = seen[&x].clone();
            for g in &self.generators {
                let y = x.conjugate_by(g);
                if seen.contains_key(&y) {
                    continue;
                }
                let ty = g * &tx;
                if &y == b {
                    return Ok(Some(ty));
                }
                seen.insert(y.clone(), ty);
                queue.push_back(y);
            }
        }
        Ok(None)
    }

    /// `N_G^d(g) = {t : t▷g = g^r, (r, exp G) = 1, r ≡ 1 mod d}`.
    pub fn restricted_normalizer(&self, g: &Permutation, d: u64) -> Result<Group> {
        self.check_member(g)?;
        let exponent = self.exponent()?;
        if d == 0 || exponent % d != 0 {
            return Err(Error::NotDivisor { d, exponent });
        }
        let o = g.order();
        let powers: HashMap<Permutation, u64> = (0..o).map(|r| (g.pow(r as i64), r)).collect();
        let elements = self
            .elements()?
            .iter()
            .filter(|t| {
                powers
                    .get(&g.conjugate_by(t))
                    .is_some_and(|&r| admissible_lift(r, o, exponent, d).is_some())
            })
            .cloned()
            .collect();
        Ok(self.subgroup_from_elements(elements))
    }
}

/// A lift `r' ≡ r mod o` with `(r', exponent) = 1` and `r' ≡ 1 mod d`, scanning
/// `r' = r + k·o` for `k < exponent/o`.
pub(crate) fn admissible_lift(r: u64, o: u64, exponent: u64, d: u64) -> Option<u64> {
    (0..(exponent / o).max(1))
        .map(|k| r + k * o)
        .find(|&r2| numtheory::gcd_i64(r2 as i64, exponent as i64) == 1 && r2 % d == 1 % d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::construct_group;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn enumeration_matches_order() {
        for spec in ["S4", "A5", "D6", "Q8", "C2xC4"] {
            let g = construct_group(spec).unwrap();
            assert_eq!(g.elements().unwrap().len() as u128, g.order(), "{spec}");
        }
    }

    #[test]
    fn centralizer_examples() {
        let s4 = construct_group("S4").unwrap();
        assert_eq!(s4.centralizer(&s4.identity()).unwrap().order(), 24);
        assert_eq!(s4.centralizer(&p("(1,2)(3,4)", 4)).unwrap().order(), 8);
        let c12 = construct_group("C12").unwrap();
        let z = c12.generators()[0].pow(5);
        assert_eq!(c12.centralizer(&z).unwrap().order(), 12);
        assert!(matches!(
            s4.centralizer(&p("(1,2)", 5)),
            Err(Error::NotInGroup(_))
        ));
    }

    #[test]
    fn conjugator_examples() {
        let s3 = construct_group("S3").unwrap();
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        let t = s3.conjugator(&a, &b).unwrap().unwrap();
        assert_eq!(a.conjugate_by(&t), b);
        assert_eq!(s3.conjugator(&a, &p("(1,2,3)", 3)).unwrap(), None);
        assert_eq!(s3.conjugator(&a, &a).unwrap(), Some(s3.identity()));
        // same cycle type but not conjugate in A4
        let a4 = construct_group("A4").unwrap();
        let x = p("(1,2,3)", 4);
        assert_eq!(a4.conjugator(&x, &x.inverse()).unwrap(), None);
    }

    #[test]
    fn restricted_normalizer_examples() {
        let s3 = construct_group("S3").unwrap();
        let g = p("(1,2,3)", 3);
        assert_eq!(s3.restricted_normalizer(&g, 1).unwrap().order(), 6);
        assert_eq!(s3.restricted_normalizer(&g, 2).unwrap().order(), 6);
        assert_eq!(s3.restricted_normalizer(&g, 3).unwrap().order(), 3);
        assert!(matches!(
            s3.restricted_normalizer(&g, 4),
            Err(Error::NotDivisor { .. })
        ));
    }

    #[test]
    fn limits_are_enforced() {
        let limits = Limits {
            max_degree: 64,
            max_enumeration: 100,
        };
        let s5 = crate::permcore::construct_group_with("S5", limits).unwrap();
        assert_eq!(s5.order(), 120);
        assert!(s5.contains(&p("(1,5)", 5)));
        assert!(matches!(s5.elements(), Err(Error::ResourceLimit { .. })));
    }
}
