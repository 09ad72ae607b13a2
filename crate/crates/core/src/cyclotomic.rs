//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is stored as the residue of a polynomial in `ζ_N` modulo the
//! `N`-th cyclotomic polynomial, with rational coefficients kept as integer
//! numerators over one positive common denominator. Every value is kept in its
//! minimal conductor (never `≡ 2 mod 4`; rationals have conductor 1), so derived
//! equality and hashing are field equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory;

const MINUS: char = '\u{2212}';

struct Field {
    phi: usize,
    /// Monic `Φ_n`, low degree first.
    poly: Vec<i64>,
    /// Nonzero non-leading terms of `Φ_n`.
    tail: Vec<(usize, i64)>,
}

static FIELDS: LazyLock<RwLock<HashMap<u32, Arc<Field>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

static PROJECTIONS: LazyLock<RwLock<HashMap<(u32, u32), Arc<Projection>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn field(n: u32) -> Arc<Field> {
    if let Some(f) = FIELDS.read().unwrap().get(&n) {
        return f.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in numtheory::divisors(n as u64) {
        if d as u32 == n {
            continue;
        }
        let divisor = field(d as u32);
        poly = exact_div_monic(&poly, &divisor.poly);
    }
    let phi = poly.len() - 1;
    let tail = poly[..phi]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    let f = Arc::new(Field { phi, poly, tail });
    FIELDS.write().unwrap().entry(n).or_insert(f).clone()
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    let qlen = num.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        if c == 0 {
            continue;
        }
        quot[i] = i64::try_from(c).expect("cyclotomic polynomial coefficient overflow");
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc as i128;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Reduce an exponent-indexed polynomial (length ≤ any) modulo `Φ_n` in place and
/// truncate it to `φ(n)` coefficients. The input must already have exponents `< n`
/// folded, or be at most of length `2n`; any length works for the division.
fn reduce_mod_phi(f: &Field, poly: &mut Vec<BigInt>) {
    let phi = f.phi;
    if poly.len() > phi {
        for d in (phi..poly.len()).rev() {
            if poly[d].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[d]);
            let shift = d - phi;
            for &(e, t) in &f.tail {
                poly[shift + e] -= &c * t;
            }
        }
    }
    poly.resize(phi, BigInt::zero());
}

/// Data for testing membership of a value of conductor `n` in `Q(ζ_t)`, `t | n`,
/// and recovering its coordinates there.
struct Projection {
    /// Rows of the embedding matrix forming an invertible square block.
    rows: Vec<usize>,
    /// Inverse of that block: integer numerators over `den`.
    inv: Vec<Vec<BigInt>>,
    den: BigInt,
}

fn projection(n: u32, t: u32) -> Arc<Projection> {
    if let Some(p) = PROJECTIONS.read().unwrap().get(&(n, t)) {
        return p.clone();
    }
    let fn_ = field(n);
    let ft = field(t);
    let step = (n / t) as usize;
    // Column j: ζ_t^j = ζ_n^{j·step} reduced in Q(ζ_n).
    let cols: Vec<Vec<BigInt>> = (0..ft.phi)
        .map(|j| {
            let mut poly = vec![BigInt::zero(); n as usize];
            poly[j * step] = BigInt::one();
            reduce_mod_phi(&fn_, &mut poly);
            poly
        })
        .collect();
    let row_of = |i: usize| -> Vec<BigRational> {
        cols.iter()
            .map(|c| BigRational::from_integer(c[i].clone()))
            .collect()
    };

    // Greedy choice of independent rows.
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut rows = Vec::new();
    for i in 0..fn_.phi {
        if rows.len() == ft.phi {
            break;
        }
        let mut v = row_of(i);
        for (pivot, e) in &echelon {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(e) {
                    *x -= &factor * y;
                }
            }
        }
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            let lead = v[pivot].clone();
            for x in v.iter_mut() {
                *x /= &lead;
            }
            echelon.push((pivot, v));
            rows.push(i);
        }
    }
    assert_eq!(rows.len(), ft.phi, "subfield embedding must have full rank");

    // Invert the square block by Gauss-Jordan.
    let k = ft.phi;
    let mut a: Vec<Vec<BigRational>> = rows.iter().map(|&i| row_of(i)).collect();
    let mut inv: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..k {
        let piv = (col..k)
            .find(|&r| !a[r][col].is_zero())
            .expect("invertible block");
        a.swap(col, piv);
        inv.swap(col, piv);
        let lead = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &lead;
        }
        for x in inv[col].iter_mut() {
            *x /= &lead;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let (arow, irow) = (a[col].clone(), inv[col].clone());
                for (x, y) in a[r].iter_mut().zip(&arow) {
                    *x -= &f * y;
                }
                for (x, y) in inv[r].iter_mut().zip(&irow) {
                    *x -= &f * y;
                }
            }
        }
    }
    let den = inv
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let inv = inv
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| x.numer() * (&den / x.denom()))
                .collect()
        })
        .collect();
    let p = Arc::new(Projection { rows, inv, den });
    PROJECTIONS
        .write()
        .unwrap()
        .entry((n, t))
        .or_insert(p)
        .clone()
}

/// An exact element of a cyclotomic field `Q(ζ_N)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    den: BigInt,
    num: Vec<BigInt>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            den: BigInt::one(),
            num: vec![BigInt::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Cyclotomic {
            conductor: 1,
            den: BigInt::one(),
            num: vec![n],
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        let (n, d) = q.into_raw();
        // Ratio keeps the denominator positive and reduced.
        Cyclotomic {
            conductor: 1,
            den: d,
            num: vec![n],
        }
    }

    /// `ζ_n^k`.
    ///
    /// Panics if `n == 0`.
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        Self::from_exponent_sum(n, [(k, BigInt::one())])
    }

    /// `Σ c·ζ_n^e` over the given (exponent, coefficient) terms.
    pub fn from_exponent_sum<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        assert!(n >= 1, "conductor must be positive");
        let mut poly = vec![BigInt::zero(); n as usize];
        for (e, c) in terms {
            poly[e.rem_euclid(n as i64) as usize] += c;
        }
        Self::build(n, BigInt::one(), poly)
    }

    /// Build a value from a conductor and its power-basis coefficients
    /// (`φ(conductor)` of them); the result is canonicalized.
    pub fn from_parts(conductor: u32, coeffs: &[BigRational]) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::parse("cyclotomic", "conductor must be positive"));
        }
        let phi = field(conductor).phi;
        if coeffs.len() != phi {
            return Err(Error::parse(
                "cyclotomic",
                format!(
                    "conductor {conductor} needs {phi} coefficients, got {}",
                    coeffs.len()
                ),
            ));
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::normalize(conductor, den, num))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients, degree 0 upward.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.num[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// Residue of an arbitrary exponent-indexed polynomial in `ζ_n`, canonicalized.
    fn build(n: u32, den: BigInt, mut poly: Vec<BigInt>) -> Self {
        let f = field(n);
        reduce_mod_phi(&f, &mut poly);
        Self::normalize(n, den, poly)
    }

    fn normalize(mut n: u32, mut den: BigInt, mut num: Vec<BigInt>) -> Self {
        loop {
            let g = num.iter().fold(den.clone(), |acc, c| acc.gcd(c));
            if !g.is_one() && !g.is_zero() {
                den /= &g;
                for c in num.iter_mut() {
                    *c /= &g;
                }
            }
            if den.is_negative() {
                den = -den;
                for c in num.iter_mut() {
                    *c = -std::mem::take(c);
                }
            }
            if num[1..].iter().all(Zero::is_zero) {
                let c = std::mem::take(&mut num[0]);
                if c.is_zero() {
                    return Self::zero();
                }
                return Cyclotomic {
                    conductor: 1,
                    den,
                    num: vec![c],
                };
            }
            let mut descended = false;
            for q in numtheory::prime_divisors(n as u64) {
                let mut t = n / q as u32;
                if t % 4 == 2 {
                    t /= 2;
                }
                if t <= 1 {
                    continue;
                }
                if let Some((d, v)) = Self::project(n, &den, &num, t) {
                    n = t;
                    den = d;
                    num = v;
                    descended = true;
                    break;
                }
            }
            if !descended {
                return Cyclotomic {
                    conductor: n,
                    den,
                    num,
                };
            }
        }
    }

    /// Coordinates in `Q(ζ_t)` of `num/den ∈ Q(ζ_n)`, if the value lies there.
    fn project(n: u32, den: &BigInt, num: &[BigInt], t: u32) -> Option<(BigInt, Vec<BigInt>)> {
        let p = projection(n, t);
        let cand: Vec<BigInt> = p
            .inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&p.rows)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, &r)| c * &num[r])
                    .sum()
            })
            .collect();
        let embedded = embed_poly(t, &cand, n);
        let ok = embedded
            .iter()
            .zip(num)
            .all(|(e, v)| *e == v * &p.den);
        ok.then(|| (den * &p.den, cand))
    }

    /// Numerators of `self` in the power basis of `Q(ζ_n)`, `conductor | n`.
    fn lifted(&self, n: u32) -> Vec<BigInt> {
        if self.conductor == n {
            self.num.clone()
        } else {
            embed_poly(self.conductor, &self.num, n)
        }
    }

    /// Image under `σ_r : ζ ↦ ζ^r`.
    pub fn galois(&self, r: i64) -> Result<Self> {
        let n = self.conductor;
        if n == 1 {
            return Ok(self.clone());
        }
        if numtheory::gcd_i64(r, n as i64) != 1 {
            return Err(Error::NotCoprime { r, conductor: n });
        }
        let mut poly = vec![BigInt::zero(); n as usize];
        let r = r.rem_euclid(n as i64) as usize;
        for (i, c) in self.num.iter().enumerate() {
            poly[(i * r) % n as usize] += c;
        }
        reduce_mod_phi(&field(n), &mut poly);
        Ok(Cyclotomic {
            conductor: n,
            den: self.den.clone(),
            num: poly,
        })
    }

    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit modulo every conductor")
    }

    /// `v · σ_{-1}(v)`.
    pub fn abs_squared(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::normalize(self.conductor, &self.den * q.denom(), num)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    /// Floating-point evaluation with `ζ_N = e^{2πi/N}`, as (re, im).
    pub fn approx(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    /// A fixed total order used to sort value sequences deterministically:
    /// conductor first, then coefficients with the larger rational first.
    /// It is not an ordering of the real numbers.
    pub fn table_cmp(&self, other: &Self) -> Ordering {
        self.conductor.cmp(&other.conductor).then_with(|| {
            for (a, b) in self.num.iter().zip(&other.num) {
                let lhs = a * &other.den;
                let rhs = b * &self.den;
                match rhs.cmp(&lhs) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    pub fn rationality(&self) -> Rationality {
        Rationality {
            is_rational: self.is_rational(),
            value: self.to_rational(),
            pretty: self.pretty(),
            approx: self.approx().0,
        }
    }

    /// Human-readable form: a rational, `a+b√d` in a real quadratic field, or
    /// the power-basis polynomial in `ζN`.
    pub fn pretty(&self) -> String {
        if let Some(q) = self.to_rational() {
            return format_rational(&q);
        }
        if let Some((a, b, d)) = self.as_real_quadratic() {
            return format_quadratic(&a, &b, d);
        }
        let mut out = String::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(c.clone(), self.den.clone());
            let neg = q.is_negative();
            let mag = q.abs();
            if neg {
                out.push(MINUS);
            } else if !out.is_empty() {
                out.push('+');
            }
            let zeta = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.conductor),
                _ => format!("ζ{}^{}", self.conductor, k),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&zeta);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}{zeta}"));
            } else {
                out.push_str(&format!("({mag}){zeta}"));
            }
        }
        out
    }

    /// Writes the value as `a + b√d` when it lies in the real quadratic field of
    /// its conductor.
    pub fn as_real_quadratic(&self) -> Option<(BigRational, BigRational, u64)> {
        let d = real_quadratic_radicand(self.conductor as u64)?;
        let s = sqrt_cyclotomic(d);
        debug_assert_eq!(s.conductor, self.conductor);
        let i = (1..s.num.len()).find(|&i| !s.num[i].is_zero())?;
        let sc = s.coeffs();
        let vc = self.coeffs();
        let b = &vc[i] / &sc[i];
        let a = &vc[0] - &b * &sc[0];
        let candidate = &Cyclotomic::from_rational(a.clone()) + &s.scale(&b);
        (candidate == *self).then_some((a, b, d))
    }
}

/// The radicand `d` of the real quadratic field `Q(√d)` whose conductor is `n`.
fn real_quadratic_radicand(n: u64) -> Option<u64> {
    if n % 2 == 1 {
        (n > 1 && n % 4 == 1 && numtheory::is_squarefree(n)).then_some(n)
    } else if n.is_multiple_of(4) {
        let m = n / 4;
        if m % 2 == 1 {
            (m > 1 && m % 4 == 3 && numtheory::is_squarefree(m)).then_some(m)
        } else {
            let h = m / 2;
            (h % 2 == 1 && numtheory::is_squarefree(h)).then_some(m)
        }
    } else {
        None
    }
}

/// The positive square root of a squarefree `d > 1` as a cyclotomic number,
/// built from quadratic Gauss sums.
pub fn sqrt_cyclotomic(d: u64) -> Cyclotomic {
    let mut acc = Cyclotomic::one();
    for p in numtheory::prime_divisors(d) {
        let root = if p == 2 {
            &Cyclotomic::root_of_unity(1, 8) + &Cyclotomic::root_of_unity(7, 8)
        } else {
            let gauss = Cyclotomic::from_exponent_sum(
                p as u32,
                (1..p as i64).map(|a| (a, BigInt::from(numtheory::legendre(a, p)))),
            );
            if p % 4 == 1 {
                gauss
            } else {
                -&(&Cyclotomic::root_of_unity(1, 4) * &gauss)
            }
        };
        acc = &acc * &root;
    }
    acc
}

fn embed_poly(from: u32, num: &[BigInt], to: u32) -> Vec<BigInt> {
    let step = (to / from) as usize;
    let mut poly = vec![BigInt::zero(); to as usize];
    for (j, c) in num.iter().enumerate() {
        poly[j * step] = c.clone();
    }
    reduce_mod_phi(&field(to), &mut poly);
    poly
}

pub fn format_rational(q: &BigRational) -> String {
    let s = q.abs().to_string();
    if q.is_negative() {
        format!("{MINUS}{s}")
    } else {
        s
    }
}

fn format_quadratic(a: &BigRational, b: &BigRational, d: u64) -> String {
    let den = a.denom().lcm(b.denom());
    let an = a.numer() * (&den / a.denom());
    let bn = b.numer() * (&den / b.denom());
    let mut out = String::new();
    if !an.is_zero() {
        if an.is_negative() {
            out.push(MINUS);
        }
        out.push_str(&an.abs().to_string());
    }
    if bn.is_negative() {
        out.push(MINUS);
    } else if !out.is_empty() {
        out.push('+');
    }
    if !bn.abs().is_one() {
        out.push_str(&bn.abs().to_string());
    }
    out.push_str(&format!("√{d}"));
    if den.is_one() {
        out
    } else {
        format!("({out})/{den}")
    }
}

/// Result of [`Cyclotomic::rationality`].
#[derive(Debug, Clone, PartialEq)]
pub struct Rationality {
    pub is_rational: bool,
    pub value: Option<BigRational>,
    pub pretty: String,
    pub approx: f64,
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}: {})", self.conductor, self.pretty())
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let n = numtheory::lcm(self.conductor as u64, rhs.conductor as u64) as u32;
        let a = self.lifted(n);
        let b = rhs.lifted(n);
        let num = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x * &rhs.den + y * &self.den)
            .collect();
        Cyclotomic::normalize(n, &self.den * &rhs.den, num)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if rhs.is_rational() {
            return self.scale(&BigRational::new(rhs.num[0].clone(), rhs.den.clone()));
        }
        if self.is_rational() {
            return rhs.scale(&BigRational::new(self.num[0].clone(), self.den.clone()));
        }
        let n = numtheory::lcm(self.conductor as u64, rhs.conductor as u64) as u32;
        let a = self.lifted(n);
        let b = rhs.lifted(n);
        let mut poly = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Cyclotomic::build(n, &self.den * &rhs.den, poly)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            den: self.den.clone(),
            num: self.num.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            conductor: self.conductor,
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| BigRational::from_str(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Cyclotomic::from_parts(wire.conductor, &coeffs).map_err(serde::de::Error::custom)
    }
}
