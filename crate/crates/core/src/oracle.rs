//! Element-level reference implementations: direct counts over the whole
//! group, used to cross-check the class-level formulas and as a benchmark
//! baseline.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::chartab::{character_table, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::indicators::{Backend, DoubleCharacter, Session, SessionOptions};
use crate::permcore::{construct_group_with, Group, Limits, Permutation};

/// Default largest group order the oracle will enumerate (|S_7|).
pub const DEFAULT_ORDER_BOUND: u128 = 5040;

/// `SL(2,3)` acting on the eight nonzero vectors of `F_3²`.
pub const SL23_SPEC: &str = "perm:(1,4,7)(2,8,5);(1,6,2,3)(4,7,8,5)";

/// Groups used by the self-test and the cross-validation suites.
pub const TEST_GROUPS: [(&str, &str); 11] = [
    ("S3", "S3"),
    ("S4", "S4"),
    ("S5", "S5"),
    ("A4", "A4"),
    ("A5", "A5"),
    ("D4", "D4"),
    ("D6", "D6"),
    ("Q8", "Q8"),
    ("C12", "C12"),
    ("C2xC4", "C2xC4"),
    ("SL(2,3)", SL23_SPEC),
];

fn check_bound(group: &Group, bound: u128) -> Result<()> {
    if group.order() > bound {
        Err(Error::ResourceLimit {
            limit: "oracle order",
            value: group.order(),
            max: bound,
        })
    } else {
        Ok(())
    }
}

/// `x^m` by repeated squaring.
pub fn power(x: &Permutation, mut m: u64) -> Permutation {
    let mut result = Permutation::identity(x.degree());
    let mut base = x.clone();
    while m > 0 {
        if m & 1 == 1 {
            result = &result * &base;
        }
        base = &base * &base;
        m >>= 1;
    }
    result
}

/// `|{x ∈ G : x^m = (gx)^m = z}|`.
pub fn gmz_count_naive(group: &Group, g: &Permutation, z: &Permutation, m: u64) -> Result<u64> {
    gmz_count_naive_with(group, g, z, m, DEFAULT_ORDER_BOUND)
}

pub fn gmz_count_naive_with(
    group: &Group,
    g: &Permutation,
    z: &Permutation,
    m: u64,
    bound: u128,
) -> Result<u64> {
    check_bound(group, bound)?;
    group.check_member(g)?;
    group.check_member(z)?;
    Ok(group
        .elements()?
        .iter()
        .filter(|x| power(x, m) == *z && power(&(g * *x), m) == *z)
        .count() as u64)
}

/// `ν_m(g, η) = (1/|C_G(g)|) Σ_{x^m = (gx)^m} η(x^m)`, with `η` a class
/// function on `C_G(g)`.
pub fn nu_naive(group: &Group, g: &Permutation, eta: &ClassFunction, m: u64) -> Result<Cyclotomic> {
    nu_naive_with(group, g, eta, m, DEFAULT_ORDER_BOUND)
}

pub fn nu_naive_with(
    group: &Group,
    g: &Permutation,
    eta: &ClassFunction,
    m: u64,
    bound: u128,
) -> Result<Cyclotomic> {
    check_bound(group, bound)?;
    group.check_member(g)?;
    let mut sum = Cyclotomic::zero();
    for x in group.elements()?.iter() {
        let xm = power(x, m);
        if xm == power(&(g * x), m) {
            sum = &sum + eta.eval(&xm)?;
        }
    }
    let centralizer_order = eta.classes().group_order();
    Ok(sum.scale(&BigRational::new(
        BigInt::from(1),
        BigInt::from(centralizer_order),
    )))
}

/// Orbit representatives of commuting pairs under simultaneous conjugation.
#[derive(Debug)]
pub struct CommutingPairTable {
    group: Group,
    /// `(x, y, |C_G(x, y)|)`.
    orbits: Vec<(Permutation, Permutation, u64)>,
    gamma_counts: Mutex<HashMap<u64, Arc<Vec<u64>>>>,
}

impl CommutingPairTable {
    pub fn new(group: &Group) -> Result<Self> {
        Self::with_bound(group, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(group: &Group, bound: u128) -> Result<Self> {
        check_bound(group, bound)?;
        let elements = group.elements()?;
        let mut seen: HashSet<(Permutation, Permutation)> = HashSet::new();
        let mut orbits = Vec::new();
        for x in elements.iter() {
            for y in elements.iter().filter(|y| x.commutes_with(y)) {
                if seen.contains(&(x.clone(), y.clone())) {
                    continue;
                }
                let start = (x.clone(), y.clone());
                seen.insert(start.clone());
                let mut queue = VecDeque::from([start]);
                let mut size = 1u64;
                while let Some((a, b)) = queue.pop_front() {
                    for s in group.generators() {
                        let next = (a.conjugate_by(s), b.conjugate_by(s));
                        if seen.insert(next.clone()) {
                            size += 1;
                            queue.push_back(next);
                        }
                    }
                }
                let stabilizer = (group.order() / u128::from(size)) as u64;
                orbits.push((x.clone(), y.clone(), stabilizer));
            }
        }
        Ok(CommutingPairTable {
            group: group.clone(),
            orbits,
            gamma_counts: Mutex::default(),
        })
    }

    pub fn orbits(&self) -> &[(Permutation, Permutation, u64)] {
        &self.orbits
    }

    /// Total number of commuting pairs, summed over orbits.
    pub fn pair_count(&self) -> u128 {
        self.orbits
            .iter()
            .map(|(_, _, s)| self.group.order() / u128::from(*s))
            .sum()
    }

    /// Naive `γ_m^y(x)` for each orbit representative `(x, y)`.
    pub fn gamma_counts(&self, m: u64) -> Result<Arc<Vec<u64>>> {
        if let Some(c) = self.gamma_counts.lock().expect("gamma cache").get(&m) {
            return Ok(c.clone());
        }
        let counts = self
            .orbits
            .iter()
            .map(|(x, y, _)| gmz_count_naive_with(&self.group, x, y, m, u128::MAX))
            .collect::<Result<Vec<_>>>()?;
        let counts = Arc::new(counts);
        self.gamma_counts
            .lock()
            .expect("gamma cache")
            .insert(m, counts.clone());
        Ok(counts)
    }
}

/// `ν_m(Ξ) = Σ_{(h,z)} γ_m^z(h) Ξ(h, z) / |C_G(h, z)|` over commuting-pair orbits.
pub fn nu_pairs(table: &CommutingPairTable, xi: &DoubleCharacter, m: u64) -> Result<Cyclotomic> {
    let counts = table.gamma_counts(m)?;
    let mut sum = Cyclotomic::zero();
    for ((h, z, stab), &count) in table.orbits.iter().zip(counts.iter()) {
        if count == 0 {
            continue;
        }
        let value = xi.eval(h, z)?;
        if value.is_zero() {
            continue;
        }
        sum = &sum + &value.scale(&BigRational::new(BigInt::from(count), BigInt::from(*stab)));
    }
    Ok(sum)
}

/// Timings of a full indicator sweep by both routes.
#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub group: String,
    pub order: u64,
    pub simples: usize,
    pub ms: Vec<u64>,
    pub workers: usize,
    pub class_level: Duration,
    pub naive: Duration,
    /// `naive / class_level`.
    pub ratio: f64,
    pub mismatches: usize,
}

/// Runs the class-level sweep and the `nu_naive` sweep over every simple and
/// every `m | exp(G)`, each starting from scratch (including centralizer
/// character tables), and compares the values.
pub fn bench(label: &str, group: &Group, workers: usize, bound: u128) -> Result<BenchReport> {
    check_bound(group, bound)?;
    let opts = SessionOptions {
        backend: Backend::Characters,
        reduce: true,
        workers,
    };

    let start = Instant::now();
    let report = Session::with_options(group.clone(), opts)?.all_indicators(None)?;
    let class_level = start.elapsed();

    let start = Instant::now();
    let mut naive_values = Vec::new();
    for class in &report.classes {
        let g = group
            .elements()?
            .iter()
            .find(|x| x.to_string() == class.rep)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("class representative {} not found", class.rep)))?;
        let cg = character_table(&group.centralizer(&g)?)?;
        for eta in cg.irreducibles() {
            for &m in report.simples[0].indicators.iter().map(|e| &e.m) {
                naive_values.push(nu_naive_with(group, &g, eta, m, bound)?);
            }
        }
    }
    let naive = start.elapsed();

    let class_values: Vec<&Cyclotomic> = report.values().map(|(_, e)| &e.value).collect();
    let mismatches = if class_values.len() == naive_values.len() {
        class_values
            .iter()
            .zip(&naive_values)
            .filter(|(a, b)| **a != *b)
            .count()
    } else {
        class_values.len().max(naive_values.len())
    };
    Ok(BenchReport {
        group: label.to_string(),
        order: group.order() as u64,
        simples: report.simples.len(),
        ms: report.simples[0].indicators.iter().map(|e| e.m).collect(),
        workers,
        ratio: naive.as_secs_f64() / class_level.as_secs_f64().max(1e-9),
        class_level,
        naive,
        mismatches,
    })
}

/// Cross-check results for one group.
#[derive(Debug, Clone, Serialize)]
pub struct SelftestEntry {
    pub group: String,
    pub order: u64,
    pub checks: usize,
    pub mismatches: usize,
}

/// Compares `nu` with `nu_naive` and `nu_pairs` on every simple and every
/// `m | exp(G)`, and both γ backends with naive counts, for each test group
/// of order at most `max_order`.
pub fn selftest(max_order: u128, limits: Limits) -> Result<Vec<SelftestEntry>> {
    let mut out = Vec::new();
    for (name, spec) in TEST_GROUPS {
        let group = construct_group_with(spec, limits)?;
        if group.order() > max_order {
            continue;
        }
        let (checks, mismatches) = cross_check(&group, max_order)?;
        out.push(SelftestEntry {
            group: name.to_string(),
            order: group.order() as u64,
            checks,
            mismatches,
        });
    }
    Ok(out)
}

/// `(checks, mismatches)` over all indicator and γ comparisons for one group.
pub fn cross_check(group: &Group, bound: u128) -> Result<(usize, usize)> {
    let session = Session::new(group.clone())?;
    let pairs = CommutingPairTable::with_bound(group, bound)?;
    let mut checks = 0;
    let mut mismatches = 0;
    let mut record = |ok: bool| {
        checks += 1;
        if !ok {
            mismatches += 1;
        }
    };
    for g_class in 0..session.classes().len() {
        let cg = session.centralizer(g_class)?;
        let table = cg.table()?;
        for (eta_index, eta) in table.irreducibles().iter().enumerate() {
            let xi = session.double_character(g_class, eta_index)?;
            for &m in session.divisors() {
                let nu = session.nu(g_class, eta_index, m)?;
                let naive = nu_naive_with(group, cg.z(), eta, m, bound)?;
                let via_pairs = nu_pairs(&pairs, &xi, m)?;
                record(nu == naive && naive == via_pairs);
            }
        }
    }
    for z_class in 0..session.classes().len() {
        let cd = session.centralizer(z_class)?;
        for &m in session.divisors() {
            let a = session.gamma_with(z_class, m, Backend::Characters)?;
            let b = session.gamma_with(z_class, m, Backend::Cmc)?;
            let mut ok = a == b;
            for h in 0..cd.classes().len() {
                let count = gmz_count_naive_with(group, cd.classes().representative(h), cd.z(), m, bound)?;
                ok &= a.value(h) == &Cyclotomic::from_integer(count as i64);
            }
            record(ok);
        }
    }
    Ok((checks, mismatches))
}
