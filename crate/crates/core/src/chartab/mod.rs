//! Ordinary character tables with exact cyclotomic values, computed by the
//! Dixon–Schneider method, plus class functions indexed by a class set.

mod dixon;
mod modp;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory;
use crate::permcore::{conjugacy_classes, ConjugacyClassSet, Group, Permutation};

/// Largest class count accepted; the class multiplication tensor has `k³` entries.
pub const MAX_CLASSES: usize = 400;

/// Exact values indexed by the classes of a fixed [`ConjugacyClassSet`].
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ConjugacyClassSet>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_classes(other) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(classes: Arc<ConjugacyClassSet>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::InvalidArgument(format!(
                "{} values for {} classes",
                values.len(),
                classes.len()
            )));
        }
        Ok(ClassFunction { classes, values })
    }

    pub fn zero(classes: Arc<ConjugacyClassSet>) -> Self {
        let values = vec![Cyclotomic::zero(); classes.len()];
        ClassFunction { classes, values }
    }

    /// Indicator function of the identity class, scaled by `value`.
    pub fn delta(classes: Arc<ConjugacyClassSet>, value: Cyclotomic) -> Self {
        let mut f = Self::zero(classes);
        f.values[0] = value;
        f
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn same_classes(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes)
    }

    /// Value at an arbitrary element of the underlying group.
    pub fn eval(&self, x: &Permutation) -> Result<&Cyclotomic> {
        Ok(&self.values[self.classes.class_position(x)?])
    }

    /// `(1/|G|) Σ_c |c| f(c) conj(g(c))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        if !self.same_classes(other) {
            return Err(Error::MismatchedTable);
        }
        let sum: Cyclotomic = (0..self.len())
            .map(|c| {
                (&self.values[c] * &other.values[c].conj())
                    .scale_int(&BigInt::from(self.classes.size(c)))
            })
            .sum();
        Ok(sum.scale(&BigRational::new(1.into(), self.classes.group_order().into())))
    }

    /// `ψ^r f : c ↦ f(rep(c)^r)`.
    pub fn adams(&self, r: i64) -> Self {
        let pm = self.classes.power_map(r);
        ClassFunction {
            classes: self.classes.clone(),
            values: pm.iter().map(|&c| self.values[c].clone()).collect(),
        }
    }

    /// `σ_r` applied value by value.
    pub fn galois(&self, r: i64) -> Result<Self> {
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.galois(r)).collect::<Result<_>>()?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.same_classes(other) {
            return Err(Error::MismatchedTable);
        }
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, k: &Cyclotomic) -> Self {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }
}

/// Classes of a group with their multiplication coefficients and inverse map.
#[derive(Debug, Clone)]
pub struct ClassAlgebra {
    classes: Arc<ConjugacyClassSet>,
    cmc: Vec<u64>,
    inverse: Vec<usize>,
}

impl ClassAlgebra {
    pub fn new(classes: Arc<ConjugacyClassSet>) -> Result<Self> {
        let k = classes.len();
        if k > MAX_CLASSES {
            return Err(Error::ResourceLimit {
                limit: "class count",
                value: k as u128,
                max: MAX_CLASSES as u128,
            });
        }
        let cmc = class_multiplication_tensor(&classes);
        let inverse = classes.inverse_classes();
        Ok(ClassAlgebra {
            classes,
            cmc,
            inverse,
        })
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn inverse_classes(&self) -> &[usize] {
        &self.inverse
    }

    /// Number of `(x, y)` in class `a` × class `b` with `xy = rep(c)`.
    pub fn class_mult_coeff(&self, a: usize, b: usize, c: usize) -> Result<u64> {
        let k = self.len();
        Error::check_index("class", a, k)?;
        Error::check_index("class", b, k)?;
        Error::check_index("class", c, k)?;
        Ok(self.cmc(a, b, c))
    }

    pub(crate) fn cmc(&self, a: usize, b: usize, c: usize) -> u64 {
        let k = self.len();
        self.cmc[(a * k + b) * k + c]
    }
}

/// The ordinary character table of a permutation group.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Group,
    algebra: Arc<ClassAlgebra>,
    classes: Arc<ConjugacyClassSet>,
    irreducibles: Vec<ClassFunction>,
    degrees: Vec<u64>,
    exponent: u64,
    prime: u64,
}

pub fn character_table(group: &Group) -> Result<CharacterTable> {
    let classes = Arc::new(conjugacy_classes(group)?);
    CharacterTable::with_classes(group.clone(), classes)
}

impl CharacterTable {
    /// Table over an already computed class set of `group`.
    pub fn with_classes(group: Group, classes: Arc<ConjugacyClassSet>) -> Result<Self> {
        Self::with_algebra(group, Arc::new(ClassAlgebra::new(classes)?))
    }

    /// Table over a prepared class algebra of `group`.
    pub fn with_algebra(group: Group, algebra: Arc<ClassAlgebra>) -> Result<Self> {
        let classes = algebra.classes.clone();
        let k = classes.len();
        let exponent = classes.exponent();
        let order = classes.group_order() as u64;
        let prime = dixon::choose_prime(exponent, order);

        let mut rows = if k == 1 {
            vec![(1, vec![Cyclotomic::one()])]
        } else {
            dixon::irreducibles(&classes, &algebra.cmc, prime)?
        };
        rows.sort_by(|(da, va), (db, vb)| da.cmp(db).then_with(|| cmp_rows(va, vb)));
        let degree_square_sum: u64 = rows.iter().map(|(d, _)| d * d).sum();
        if rows.len() != k || degree_square_sum != order {
            return Err(Error::Internal(format!(
                "{} characters with Σd² = {degree_square_sum} for a group of order {order}",
                rows.len()
            )));
        }
        let degrees = rows.iter().map(|(d, _)| *d).collect();
        let irreducibles = rows
            .into_iter()
            .map(|(_, values)| ClassFunction {
                classes: classes.clone(),
                values,
            })
            .collect();
        Ok(CharacterTable {
            group,
            algebra,
            classes,
            irreducibles,
            degrees,
            exponent,
            prime,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn order(&self) -> usize {
        self.classes.group_order()
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> Result<&ClassFunction> {
        Error::check_index("irreducible character", i, self.irreducibles.len())?;
        Ok(&self.irreducibles[i])
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `exp` of the group; every value lies in `ℚ(ζ_conductor)`.
    pub fn conductor(&self) -> u64 {
        self.exponent
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn algebra(&self) -> &Arc<ClassAlgebra> {
        &self.algebra
    }

    pub fn inverse_classes(&self) -> &[usize] {
        &self.algebra.inverse
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes.size(c)
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.classes.centralizer_order(c)
    }

    pub fn class_mult_coeff(&self, a: usize, b: usize, c: usize) -> Result<u64> {
        self.algebra.class_mult_coeff(a, b, c)
    }

    pub fn class_position(&self, x: &Permutation) -> Result<usize> {
        self.classes.class_position(x)
    }

    pub fn power_map(&self, m: i64) -> Vec<usize> {
        self.classes.power_map(m)
    }

    pub fn trivial_character(&self) -> &ClassFunction {
        &self.irreducibles[0]
    }

    /// `|G|` at the identity, 0 elsewhere.
    pub fn regular_character(&self) -> ClassFunction {
        ClassFunction::delta(
            self.classes.clone(),
            Cyclotomic::from_integer(self.order() as i64),
        )
    }

    pub fn export(&self) -> TableExport {
        let classes = self
            .classes
            .classes()
            .iter()
            .enumerate()
            .map(|(index, c)| ClassExport {
                index,
                rep: c.representative.to_string(),
                size: c.size,
                order: c.element_order,
            })
            .collect();
        let power_maps = numtheory::divisors(self.exponent)
            .into_iter()
            .map(|m| (m, self.power_map(m as i64)))
            .collect();
        TableExport {
            order: self.order(),
            exponent: self.exponent,
            classes,
            power_maps,
            degrees: self.degrees.clone(),
            irreducibles: self.irreducibles.iter().map(|f| f.values.clone()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.export()).expect("table export serializes")
    }
}

/// Serializable form of a [`CharacterTable`].
#[derive(Debug, Clone, Serialize)]
pub struct TableExport {
    pub order: usize,
    pub exponent: u64,
    pub classes: Vec<ClassExport>,
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub degrees: Vec<u64>,
    pub irreducibles: Vec<Vec<Cyclotomic>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassExport {
    pub index: usize,
    pub rep: String,
    pub size: usize,
    pub order: u64,
}

fn cmp_rows(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.table_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn class_multiplication_tensor(classes: &ConjugacyClassSet) -> Vec<u64> {
    let k = classes.len();
    let mut cmc = vec![0u64; k * k * k];
    for c in 0..k {
        let target = classes.representative(c);
        for a in 0..k {
            for x in classes.members(a) {
                let y = &x.inverse() * target;
                let b = classes.class_of(&y).expect("products stay in the group");
                cmc[(a * k + b) * k + c] += 1;
            }
        }
    }
    cmc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::construct_group;

    fn table(spec: &str) -> CharacterTable {
        character_table(&construct_group(spec).unwrap()).unwrap()
    }

    fn sorted_degrees(t: &CharacterTable) -> Vec<u64> {
        let mut d = t.degrees().to_vec();
        d.sort_unstable();
        d
    }

    #[test]
    fn degree_multisets() {
        assert_eq!(sorted_degrees(&table("S3")), vec![1, 1, 2]);
        assert_eq!(sorted_degrees(&table("S4")), vec![1, 1, 2, 3, 3]);
        assert_eq!(sorted_degrees(&table("A5")), vec![1, 3, 3, 4, 5]);
        assert_eq!(sorted_degrees(&table("Q8")), vec![1, 1, 1, 1, 2]);
        assert_eq!(sorted_degrees(&table("C1")), vec![1]);
    }

    #[test]
    fn trivial_first_and_s3_values() {
        let t = table("S3");
        let vals = |i: usize| -> Vec<i64> {
            t.irreducibles()[i]
                .values()
                .iter()
                .map(|v| i64::try_from(v.to_integer().unwrap()).unwrap())
                .collect()
        };
        assert_eq!(vals(0), vec![1, 1, 1]);
        assert_eq!(vals(1), vec![1, -1, 1]);
        assert_eq!(vals(2), vec![2, 0, -1]);
    }

    #[test]
    fn cyclic_characters() {
        let g = construct_group("C6").unwrap();
        let t = character_table(&g).unwrap();
        let gen = &g.generators()[0];
        let mut found = [false; 6];
        for chi in t.irreducibles() {
            let v = chi.eval(gen).unwrap();
            let j = (0..6)
                .find(|&j| *v == Cyclotomic::root_of_unity(j, 6))
                .expect("linear character value is a root of unity");
            for k in 0..6i64 {
                assert_eq!(
                    chi.eval(&gen.pow(k)).unwrap(),
                    &Cyclotomic::root_of_unity(j * k, 6)
                );
            }
            found[j as usize] = true;
        }
        assert!(found.iter().all(|&f| f));
    }

    #[test]
    fn class_mult_examples() {
        let t = table("S3");
        // transposition class squared onto the identity
        assert_eq!(t.class_mult_coeff(1, 1, 0).unwrap(), 3);
        for b in 0..3 {
            for c in 0..3 {
                assert_eq!(t.class_mult_coeff(0, b, c).unwrap(), u64::from(b == c));
            }
        }
        assert!(matches!(
            t.class_mult_coeff(0, 0, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn inner_products() {
        let t = table("A5");
        let irr = t.irreducibles();
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate() {
                let expected = Cyclotomic::from_integer(i64::from(i == j));
                assert_eq!(a.inner_product(b).unwrap(), expected);
            }
            let d = Cyclotomic::from_integer(t.degrees()[i] as i64);
            assert_eq!(t.regular_character().inner_product(a).unwrap(), d);
        }
        let other = table("A5");
        assert_eq!(
            irr[0].inner_product(&other.irreducibles()[0]),
            Err(Error::MismatchedTable)
        );
    }

    #[test]
    fn class_position_and_power_map() {
        let g = construct_group("S3").unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.class_position(&g.identity()).unwrap(), 0);
        let x = Permutation::parse_cycles("(1,3)", 3).unwrap();
        assert_eq!(t.class_position(&x).unwrap(), 1);
        assert_eq!(t.power_map(2), vec![0, 0, 2]);
        assert_eq!(t.power_map(1), vec![0, 1, 2]);
    }

    #[test]
    fn json_export_shape() {
        let t = table("S3");
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["classes"].as_array().unwrap().len(), 3);
        assert_eq!(v["power_maps"]["2"], serde_json::json!([0, 0, 2]));
        assert_eq!(v["irreducibles"][2][2]["coeffs"], serde_json::json!(["-1"]));
    }
}
