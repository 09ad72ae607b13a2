//! Higher Frobenius–Schur indicators of the simple modules of the Drinfeld
//! double `D(G)`, computed at the level of conjugacy classes.
//!
//! A [`Session`] owns one group and memoizes everything derived from it:
//! centralizer tables per class, γ class functions, mates and μ elements.

mod fsz;
mod report;

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::chartab::{CharacterTable, ClassAlgebra, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory;
use crate::permcore::{conjugacy_classes, ConjugacyClassSet, Group, Permutation};

pub use fsz::{fsz_test, FszOutcome, FszWitness};
pub use report::{ClassEntry, IndicatorEntry, IndicatorReport, SimpleEntry};

/// How γ class functions are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    /// Expansion `Σ_χ β_m(z,χ) χ` over the centralizer's irreducibles.
    #[default]
    Characters,
    /// Sums of class multiplication coefficients; needs no character table.
    Cmc,
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "characters" => Ok(Backend::Characters),
            "cmc" => Ok(Backend::Cmc),
            _ => Err(Error::parse("backend", format!("{s:?} (expected characters or cmc)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SessionOptions {
    pub backend: Backend,
    /// Route γ through [`Session::reduce_gamma_params`].
    pub reduce: bool,
    /// Threads used by [`Session::provision`] and [`Session::all_indicators`].
    pub workers: usize,
}

impl Default for SessionOptions {
    fn default() -> Self {
        SessionOptions {
            backend: Backend::Characters,
            reduce: true,
            workers: 1,
        }
    }
}

/// Outcome of reducing `(z, m)` for γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaReduction {
    /// `γ_m^z = δ_1`.
    Delta,
    /// `γ_m^z = 0`.
    Zero,
    /// `γ_m^z = ψ^a γ_{m'}^z` with `m' | e(z)` and `a` a unit mod `e(z)`.
    Reduced { m: u64, a: u64 },
}

/// The centralizer `C_G(z)` of a master representative with its class data.
#[derive(Debug)]
pub struct CentralizerData {
    z_class: usize,
    z: Permutation,
    group: Group,
    algebra: Arc<ClassAlgebra>,
    table: OnceLock<Arc<CharacterTable>>,
    z_local: usize,
    fusion: Vec<usize>,
    exponent: u64,
}

impl CentralizerData {
    pub fn z_class(&self) -> usize {
        self.z_class
    }

    pub fn z(&self) -> &Permutation {
        &self.z
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        self.algebra.classes()
    }

    pub fn algebra(&self) -> &Arc<ClassAlgebra> {
        &self.algebra
    }

    pub fn order(&self) -> usize {
        self.classes().group_order()
    }

    /// `e(z) = exp(C_G(z))`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Class of `z` inside `C_G(z)` (a singleton class).
    pub fn z_local_class(&self) -> usize {
        self.z_local
    }

    /// Class of `G` containing each class of `C_G(z)`.
    pub fn fusion(&self) -> &[usize] {
        &self.fusion
    }

    pub fn table(&self) -> Result<&Arc<CharacterTable>> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let t = CharacterTable::with_algebra(self.group.clone(), self.algebra.clone())?;
        let _ = self.table.set(Arc::new(t));
        Ok(self.table.get().expect("just set"))
    }

    /// Classes `a` of `C_G(z)` with `rep(a)^m = z`.
    fn root_classes(&self, m: u64) -> Vec<usize> {
        let classes = self.classes();
        (0..classes.len())
            .filter(|&a| classes.representative(a).pow(m as i64) == self.z)
            .collect()
    }
}

/// Conjugation data for a commuting pair `(z, h)`: `t▷h` is the master
/// representative `g` of the class of `h`, and `t▷z` lies in `C_G(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mate {
    pub z_class: usize,
    pub h_class_in_cz: usize,
    pub g_class: usize,
    pub t: Permutation,
    /// Class of `t▷z` in `C_G(g)`.
    pub mate_class: usize,
}

/// `μ_m(g)` collapsed onto the classes of `C_G(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuElement {
    pub g_class: usize,
    pub m: u64,
    pub coefficients: Vec<BigRational>,
}

/// The character `Ξ` of the simple module `(g, η)` on commuting pairs.
#[derive(Debug, Clone)]
pub struct DoubleCharacter {
    group: Group,
    g: Permutation,
    eta: ClassFunction,
}

impl DoubleCharacter {
    /// `η(t▷y)` where `t▷x = g`; zero when `x` is not conjugate to `g`.
    pub fn eval(&self, x: &Permutation, y: &Permutation) -> Result<Cyclotomic> {
        self.group.check_member(x)?;
        self.group.check_member(y)?;
        if !x.commutes_with(y) {
            return Err(Error::NonCommuting(x.to_string(), y.to_string()));
        }
        match self.group.conjugator(x, &self.g)? {
            None => Ok(Cyclotomic::zero()),
            Some(t) => Ok(self.eta.eval(&y.conjugate_by(&t))?.clone()),
        }
    }

    pub fn base_point(&self) -> &Permutation {
        &self.g
    }
}

type GammaKey = (usize, u64, Backend, bool);

#[derive(Debug)]
pub struct Session {
    group: Group,
    label: String,
    classes: Arc<ConjugacyClassSet>,
    exponent: u64,
    divisors: Vec<u64>,
    options: SessionOptions,
    centralizers: Vec<OnceLock<Arc<CentralizerData>>>,
    gammas: RwLock<HashMap<GammaKey, Arc<ClassFunction>>>,
    mates: RwLock<HashMap<(usize, usize), Arc<Mate>>>,
    mus: RwLock<HashMap<(usize, u64), Arc<MuElement>>>,
}

impl Session {
    pub fn new(group: Group) -> Result<Self> {
        Self::with_options(group, SessionOptions::default())
    }

    pub fn with_options(group: Group, options: SessionOptions) -> Result<Self> {
        let classes = Arc::new(conjugacy_classes(&group)?);
        let exponent = classes.exponent();
        let label = format!(
            "perm:{}",
            group
                .generators()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(";")
        );
        Ok(Session {
            centralizers: (0..classes.len()).map(|_| OnceLock::new()).collect(),
            divisors: numtheory::divisors(exponent),
            group,
            label,
            classes,
            exponent,
            options,
            gammas: RwLock::default(),
            mates: RwLock::default(),
            mus: RwLock::default(),
        })
    }

    /// Name used in reports.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassSet> {
        &self.classes
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Divisors of `exp(G)`, ascending.
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn options(&self) -> SessionOptions {
        self.options
    }

    /// Character table of `G` itself.
    pub fn table(&self) -> Result<Arc<CharacterTable>> {
        Ok(self.centralizer(0)?.table()?.clone())
    }

    /// Centralizer data for the master representative of a `G`-class.
    pub fn centralizer(&self, z_class: usize) -> Result<Arc<CentralizerData>> {
        Error::check_index("class", z_class, self.classes.len())?;
        let cell = &self.centralizers[z_class];
        if let Some(c) = cell.get() {
            return Ok(c.clone());
        }
        let data = self.build_centralizer(z_class)?;
        let _ = cell.set(Arc::new(data));
        Ok(cell.get().expect("just set").clone())
    }

    fn build_centralizer(&self, z_class: usize) -> Result<CentralizerData> {
        let z = self.classes.representative(z_class).clone();
        let (group, classes) = if z.is_identity() {
            (self.group.clone(), self.classes.clone())
        } else {
            let c = self.group.centralizer(&z)?;
            let classes = Arc::new(conjugacy_classes(&c)?);
            (c, classes)
        };
        let fusion = (0..classes.len())
            .map(|a| self.classes.class_position(classes.representative(a)))
            .collect::<Result<Vec<_>>>()?;
        let z_local = classes.class_position(&z)?;
        let exponent = classes.exponent();
        Ok(CentralizerData {
            z_class,
            z,
            group,
            algebra: Arc::new(ClassAlgebra::new(classes)?),
            table: OnceLock::new(),
            z_local,
            fusion,
            exponent,
        })
    }

    /// Build all centralizer data and character tables, using up to
    /// `options.workers` threads.
    pub fn provision(&self) -> Result<()> {
        let needs_tables = self.options.backend == Backend::Characters;
        par_map(self.options.workers, self.classes.len(), |c| {
            let data = self.centralizer(c)?;
            if needs_tables || c == 0 {
                data.table()?;
            }
            Ok(())
        })
        .into_iter()
        .collect()
    }

    /// `w^z_m`: 1 on classes of `C_G(z)` whose representative has `m`-th power `z`.
    pub fn w_class_function(&self, z_class: usize, m: u64) -> Result<ClassFunction> {
        check_m(m)?;
        let cd = self.centralizer(z_class)?;
        let roots = cd.root_classes(m);
        let values = (0..cd.classes().len())
            .map(|a| Cyclotomic::from_integer(i64::from(roots.contains(&a))))
            .collect();
        ClassFunction::new(cd.classes().clone(), values)
    }

    /// `φ_m(χ, z) = Σ_{x ∈ C_G(z), x^m = z} χ(x)` for an irreducible of `C_G(z)`.
    pub fn phi(&self, z_class: usize, m: u64, chi: usize) -> Result<Cyclotomic> {
        check_m(m)?;
        let cd = self.centralizer(z_class)?;
        let chi = cd.table()?.irreducible(chi)?;
        Ok(phi_value(&cd, &cd.root_classes(m), chi))
    }

    /// `β_m(z, χ) = |φ_m(χ, z)|² / (|C_G(z)| χ(1))`.
    pub fn beta(&self, z_class: usize, m: u64, chi: usize) -> Result<Cyclotomic> {
        check_m(m)?;
        let cd = self.centralizer(z_class)?;
        let table = cd.table()?;
        table.irreducible(chi)?;
        Ok(beta_value(&cd, table, &cd.root_classes(m), chi))
    }

    pub fn reduce_gamma_params(&self, z_class: usize, m: u64) -> Result<GammaReduction> {
        check_m(m)?;
        let cd = self.centralizer(z_class)?;
        Ok(reduce(m, cd.exponent(), cd.z().order()))
    }

    /// `γ_m^z` as a class function on `C_G(z)`, using the session backend.
    pub fn gamma(&self, z_class: usize, m: u64) -> Result<ClassFunction> {
        self.gamma_with(z_class, m, self.options.backend)
    }

    /// `γ_m^z(h) = |{x : x^m = (hx)^m = z}|` for `h` in `C_G(z)`.
    pub fn gamma_with(&self, z_class: usize, m: u64, backend: Backend) -> Result<ClassFunction> {
        check_m(m)?;
        let cd = self.centralizer(z_class)?;
        if !self.options.reduce {
            return Ok((*self.gamma_memo(&cd, m, backend, false)?).clone());
        }
        match reduce(m, cd.exponent(), cd.z().order()) {
            GammaReduction::Delta => Ok(ClassFunction::delta(
                cd.classes().clone(),
                Cyclotomic::one(),
            )),
            GammaReduction::Zero => Ok(ClassFunction::zero(cd.classes().clone())),
            GammaReduction::Reduced { m, a } => {
                let base = self.gamma_memo(&cd, m, backend, true)?;
                Ok(if a == 1 { (*base).clone() } else { base.adams(a as i64) })
            }
        }
    }

    fn gamma_memo(
        &self,
        cd: &CentralizerData,
        m: u64,
        backend: Backend,
        reduced: bool,
    ) -> Result<Arc<ClassFunction>> {
        let key = (cd.z_class, m, backend, reduced);
        if let Some(f) = self.gammas.read().expect("gamma memo").get(&key) {
            return Ok(f.clone());
        }
        let f = Arc::new(gamma_direct(cd, m, backend)?);
        Ok(self
            .gammas
            .write()
            .expect("gamma memo")
            .entry(key)
            .or_insert(f)
            .clone())
    }

    /// Mate of `(z, h)` for the class `h_class` of `C_G(z)`.
    pub fn mate(&self, z_class: usize, h_class: usize) -> Result<Arc<Mate>> {
        let cd = self.centralizer(z_class)?;
        Error::check_index("centralizer class", h_class, cd.classes().len())?;
        let key = (z_class, h_class);
        if let Some(m) = self.mates.read().expect("mate memo").get(&key) {
            return Ok(m.clone());
        }
        let h = cd.classes().representative(h_class);
        let g_class = cd.fusion[h_class];
        let g = self.classes.representative(g_class);
        let t = self.group.conjugator(h, g)?.ok_or_else(|| {
            Error::Internal(format!("no conjugator from {h} to its class representative {g}"))
        })?;
        let zt = cd.z().conjugate_by(&t);
        let cg = self.centralizer(g_class)?;
        let mate_class = cg.classes().class_position(&zt)?;
        debug_assert!(cg.group().generators().iter().all(|s| {
            cg.classes().class_of(&zt.conjugate_by(s)) == Some(mate_class)
        }));
        let mate = Arc::new(Mate {
            z_class,
            h_class_in_cz: h_class,
            g_class,
            t,
            mate_class,
        });
        Ok(self
            .mates
            .write()
            .expect("mate memo")
            .entry(key)
            .or_insert(mate)
            .clone())
    }

    /// `μ_m(g)`: for each commuting-pair orbit `(h, z)` with `h ~ g`, adds
    /// `|z^{C_G(h)}| γ_m^z(h)` at the class of the mate in `C_G(g)`.
    pub fn mu(&self, g_class: usize, m: u64) -> Result<Arc<MuElement>> {
        check_m(m)?;
        let cg = self.centralizer(g_class)?;
        let key = (g_class, m);
        if let Some(mu) = self.mus.read().expect("mu memo").get(&key) {
            return Ok(mu.clone());
        }
        let mut coefficients = vec![BigRational::zero(); cg.classes().len()];
        for z_class in 0..self.classes.len() {
            let cd = self.centralizer(z_class)?;
            let hits: Vec<usize> = (0..cd.classes().len())
                .filter(|&h| cd.fusion[h] == g_class)
                .collect();
            if hits.is_empty() {
                continue;
            }
            let gamma = self.gamma(z_class, m)?;
            for h in hits {
                let value = gamma.value(h);
                if value.is_zero() {
                    continue;
                }
                let count = value
                    .to_rational()
                    .ok_or_else(|| Error::Internal(format!("γ value {value} is not rational")))?;
                let mate = self.mate(z_class, h)?;
                // |z^{C_G(h)}| = |C_G(g)| · |h^{C_G(z)}| / |C_G(z)|
                let orbit = BigRational::new(
                    BigInt::from(cg.order() * cd.classes().size(h)),
                    BigInt::from(cd.order()),
                );
                coefficients[mate.mate_class] += orbit * count;
            }
        }
        debug_assert!(coefficients.iter().all(|c| !c.is_negative()));
        let mu = Arc::new(MuElement {
            g_class,
            m,
            coefficients,
        });
        Ok(self
            .mus
            .write()
            .expect("mu memo")
            .entry(key)
            .or_insert(mu)
            .clone())
    }

    /// `ν_m(g, η) = η(μ_m(g)) / |C_G(g)|`.
    pub fn nu(&self, g_class: usize, eta: usize, m: u64) -> Result<Cyclotomic> {
        let mu = self.mu(g_class, m)?;
        let cg = self.centralizer(g_class)?;
        let eta = cg.table()?.irreducible(eta)?;
        Ok(apply_mu(&mu, eta, cg.order()))
    }

    pub fn double_character(&self, g_class: usize, eta: usize) -> Result<DoubleCharacter> {
        let cg = self.centralizer(g_class)?;
        let eta = cg.table()?.irreducible(eta)?.clone();
        Ok(DoubleCharacter {
            group: self.group.clone(),
            g: cg.z().clone(),
            eta,
        })
    }

    /// Indicators of every simple module for the given `m` values (all
    /// divisors of `exp(G)` when `None`).
    pub fn all_indicators(&self, ms: Option<&[u64]>) -> Result<IndicatorReport> {
        let ms: Vec<u64> = ms.map_or_else(|| self.divisors.clone(), <[u64]>::to_vec);
        ms.iter().try_for_each(|&m| check_m(m))?;
        self.provision()?;
        let rows = par_map(self.options.workers, self.classes.len(), |g_class| {
            self.simples_for_class(g_class, &ms)
        });
        let mut simples = Vec::new();
        for r in rows {
            simples.extend(r?);
        }
        Ok(IndicatorReport::new(self, simples))
    }

    fn simples_for_class(&self, g_class: usize, ms: &[u64]) -> Result<Vec<SimpleEntry>> {
        let cg = self.centralizer(g_class)?;
        let table = cg.table()?;
        let mus = ms
            .iter()
            .map(|&m| self.mu(g_class, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(table
            .irreducibles()
            .iter()
            .enumerate()
            .map(|(eta_index, eta)| SimpleEntry {
                g_class,
                eta_index,
                eta_degree: table.degrees()[eta_index],
                indicators: mus
                    .iter()
                    .map(|mu| IndicatorEntry::new(mu.m, apply_mu(mu, eta, cg.order())))
                    .collect(),
            })
            .collect())
    }
}

fn check_m(m: u64) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidArgument("m must be positive".into()))
    } else {
        Ok(())
    }
}

/// Reduction of `m` against `e = e(z)` for an element `z` of order `o`.
pub fn reduce(m: u64, e: u64, o: u64) -> GammaReduction {
    let m_red = numtheory::gcd_i64((m % e) as i64, e as i64);
    if m_red == 1 {
        return GammaReduction::Delta;
    }
    if !e.is_multiple_of(m_red * o) {
        return GammaReduction::Zero;
    }
    // a·m ≡ m' (mod e) with a a unit; then γ_m = ψ^{a⁻¹} γ_{m'}
    let step = e / m_red;
    let unit = (m % e) / m_red;
    let a0 = numtheory::inv_mod_general(unit as i64, step).unwrap_or(0);
    let a = (0..m_red)
        .map(|k| a0 + k * step)
        .find(|&a| numtheory::gcd_i64(a as i64, e as i64) == 1)
        .expect("a unit lift exists");
    let a_inv = numtheory::inv_mod_general(a as i64, e).expect("a is a unit");
    GammaReduction::Reduced {
        m: m_red,
        a: a_inv % e.max(1),
    }
}

fn phi_value(cd: &CentralizerData, roots: &[usize], chi: &ClassFunction) -> Cyclotomic {
    roots
        .iter()
        .map(|&a| chi.value(a).scale_int(&BigInt::from(cd.classes().size(a))))
        .sum()
}

fn beta_value(
    cd: &CentralizerData,
    table: &CharacterTable,
    roots: &[usize],
    chi: usize,
) -> Cyclotomic {
    let phi = phi_value(cd, roots, &table.irreducibles()[chi]);
    let denom = BigInt::from(cd.order()) * BigInt::from(table.degrees()[chi]);
    phi.abs_squared()
        .scale(&BigRational::new(BigInt::from(1), denom))
}

/// Unreduced γ from either backend.
fn gamma_direct(cd: &CentralizerData, m: u64, backend: Backend) -> Result<ClassFunction> {
    let classes = cd.classes().clone();
    let roots = cd.root_classes(m);
    let f = match backend {
        Backend::Characters => {
            let table = cd.table()?;
            let mut acc = ClassFunction::zero(classes.clone());
            for chi in 0..table.irreducibles().len() {
                let beta = beta_value(cd, table, &roots, chi);
                if !beta.is_zero() {
                    acc = acc.add(&table.irreducibles()[chi].scale(&beta))?;
                }
            }
            acc
        }
        Backend::Cmc => {
            let algebra = cd.algebra();
            let inverse = algebra.inverse_classes();
            let values = (0..classes.len())
                .map(|g| {
                    let total: u64 = roots
                        .iter()
                        .flat_map(|&a| roots.iter().map(move |&b| (a, b)))
                        .map(|(a, b)| algebra.cmc(a, inverse[b], g))
                        .sum();
                    Cyclotomic::from_integer(total as i64)
                })
                .collect();
            ClassFunction::new(classes.clone(), values)?
        }
    };
    debug_assert!(f.values().iter().all(|v| v
        .to_integer()
        .is_some_and(|n| !n.is_negative())));
    debug_assert_eq!(
        f.value(0).to_integer(),
        Some(BigInt::from(
            roots.iter().map(|&a| classes.size(a)).sum::<usize>()
        ))
    );
    Ok(f)
}

fn apply_mu(mu: &MuElement, eta: &ClassFunction, centralizer_order: usize) -> Cyclotomic {
    let sum: Cyclotomic = mu
        .coefficients
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| eta.value(i).scale(c))
        .sum();
    sum.scale(&BigRational::new(
        BigInt::from(1),
        BigInt::from(centralizer_order),
    ))
}

/// `f(0..n)` on up to `workers` scoped threads, results in index order.
pub(crate) fn par_map<T, F>(workers: usize, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if workers <= 1 || n <= 1 {
        return (0..n).map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..n).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers.min(n) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let v = f(i);
                slots.lock().expect("result slots")[i] = Some(v);
            });
        }
    });
    slots
        .into_inner()
        .expect("result slots")
        .into_iter()
        .map(|v| v.expect("every index computed"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::construct_group;

    fn session(spec: &str) -> Session {
        Session::new(construct_group(spec).unwrap()).unwrap()
    }

    fn ints(f: &ClassFunction) -> Vec<i64> {
        f.values()
            .iter()
            .map(|v| i64::try_from(v.to_integer().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn reductions() {
        assert_eq!(reduce(5, 6, 1), GammaReduction::Delta);
        assert_eq!(reduce(2, 4, 4), GammaReduction::Zero);
        assert_eq!(reduce(10, 6, 1), GammaReduction::Reduced { m: 2, a: 5 });
        assert_eq!(reduce(6, 6, 1), GammaReduction::Reduced { m: 6, a: 1 });
        assert_eq!(reduce(7, 1, 1), GammaReduction::Delta);
        // 9·m ≡ 3 (mod 12) needs a = 3·k+… ; reduced m is 3
        match reduce(9, 12, 1) {
            GammaReduction::Reduced { m, a } => {
                assert_eq!(m, 3);
                assert_eq!((9 * numtheory::inv_mod_general(a as i64, 12).unwrap()) % 12, 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn s3_gamma_and_beta() {
        let s = session("S3");
        for backend in [Backend::Characters, Backend::Cmc] {
            assert_eq!(ints(&s.gamma_with(0, 2, backend).unwrap()), vec![4, 2, 3]);
        }
        assert_eq!(ints(&s.w_class_function(0, 2).unwrap()), vec![1, 1, 0]);
        // irreducibles sorted: trivial, sign, degree 2
        assert_eq!(s.phi(0, 2, 1).unwrap(), Cyclotomic::from_integer(-2));
        assert_eq!(s.phi(0, 2, 2).unwrap(), Cyclotomic::from_integer(2));
        let q = |n: i64, d: i64| Cyclotomic::from_rational(BigRational::new(n.into(), d.into()));
        assert_eq!(s.beta(0, 2, 1).unwrap(), q(2, 3));
        assert_eq!(s.beta(0, 2, 2).unwrap(), q(1, 3));
        // z = (1,2): C ≅ C2 and no square equals z
        assert_eq!(ints(&s.w_class_function(1, 2).unwrap()), vec![0, 0]);
        assert_eq!(ints(&s.gamma(0, 1).unwrap()), vec![1, 0, 0]);
    }

    #[test]
    fn s3_mates_and_nu() {
        let s = session("S3");
        // z = (1,2,3), h = (1,3,2) in C = <(1,2,3)>
        let cd = s.centralizer(2).unwrap();
        let h = (0..3)
            .find(|&a| cd.classes().representative(a).to_string() == "(1,3,2)")
            .unwrap();
        let mate = s.mate(2, h).unwrap();
        assert_eq!(mate.g_class, 2);
        let g = s.classes().representative(2);
        let hh = cd.classes().representative(h);
        assert_eq!(&hh.conjugate_by(&mate.t), g);
        let zt = cd.z().conjugate_by(&mate.t);
        assert!(zt.commutes_with(g));
        // identity h
        let m0 = s.mate(2, 0).unwrap();
        assert_eq!(m0.g_class, 0);
        assert_eq!(
            s.centralizer(0).unwrap().classes().representative(m0.mate_class),
            cd.z()
        );

        for eta in 0..2 {
            assert_eq!(s.nu(1, eta, 2).unwrap(), Cyclotomic::one());
        }
        for eta in 0..3 {
            assert_eq!(s.nu(2, eta, 3).unwrap(), Cyclotomic::one());
        }
        for m in [1, 2, 3, 6] {
            assert_eq!(s.nu(0, 0, m).unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn double_character_evaluation() {
        let s = session("S3");
        let xi = s.double_character(2, 1).unwrap();
        let p = |c: &str| Permutation::parse_cycles(c, 3).unwrap();
        assert!(xi.eval(&p("(1,2)"), &p("()")).unwrap().is_zero());
        assert!(matches!(
            xi.eval(&p("(1,2)"), &p("(1,2,3)")),
            Err(Error::NonCommuting(..))
        ));
        let g = xi.base_point().clone();
        let eta = s.centralizer(2).unwrap().table().unwrap().irreducibles()[1].clone();
        assert_eq!(&xi.eval(&g, &g).unwrap(), eta.eval(&g).unwrap());
    }

    #[test]
    fn parallel_matches_serial() {
        let g = construct_group("S4").unwrap();
        let serial = Session::new(g.clone()).unwrap().all_indicators(None).unwrap();
        let opts = SessionOptions {
            workers: 4,
            ..SessionOptions::default()
        };
        let parallel = Session::with_options(g, opts).unwrap().all_indicators(None).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn zero_m_rejected() {
        let s = session("S3");
        assert!(matches!(s.gamma(0, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(s.mu(0, 0), Err(Error::InvalidArgument(_))));
    }
}
