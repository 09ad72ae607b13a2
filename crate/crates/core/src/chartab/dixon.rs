//! Dixon–Schneider: simultaneous eigenvectors of the class matrices over GF(p),
//! then lifting of the modular character values to cyclotomic integers.

use num_bigint::BigInt;

use super::modp::{Field, Matrix};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, isqrt, pow_mod, primitive_root};
use crate::permcore::ConjugacyClassSet;

/// Smallest prime `p ≡ 1 mod exponent` with `p > 2√order`.
pub(crate) fn choose_prime(exponent: u64, order: u64) -> u64 {
    let bound = 2 * isqrt(order as u128) as u64;
    (1..)
        .map(|k| 1 + k * exponent)
        .find(|&p| p > bound && (p as u128) * (p as u128) > 4 * order as u128 && is_prime(p))
        .expect("primes in arithmetic progression")
}

/// Irreducible characters as exact value rows in class order (unsorted), with
/// their degrees. `cmc[(a*k + b)*k + c]` holds the class multiplication
/// coefficient of (a, b, c).
pub(crate) fn irreducibles(
    classes: &ConjugacyClassSet,
    cmc: &[u64],
    prime: u64,
) -> Result<Vec<(u64, Vec<Cyclotomic>)>> {
    let k = classes.len();
    let f = Field { p: prime };
    let order = classes.group_order() as u64;

    let mut spaces: Vec<Matrix> = vec![identity(k)];
    for a in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let ma: Matrix = (0..k)
            .map(|b| (0..k).map(|c| cmc[(a * k + b) * k + c] % prime).collect())
            .collect();
        let mut next = Vec::with_capacity(k);
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split(f, &ma, space, a)?);
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() > 1) {
        return Err(Error::Internal(format!(
            "eigenspace of dimension {} survived all class matrices",
            s.len()
        )));
    }

    let inverse = classes.inverse_classes();
    let generator = primitive_root(prime);
    spaces
        .into_iter()
        .map(|mut s| {
            let mut omega = s.pop().unwrap();
            if omega[0] == 0 {
                return Err(Error::Internal("eigenvector vanishes at the identity class".into()));
            }
            let inv0 = f.inv(omega[0]);
            omega.iter_mut().for_each(|x| *x = f.mul(*x, inv0));
            let degree = degree_from_omega(f, classes, &inverse, &omega, order)?;
            let modular: Vec<u64> = (0..k)
                .map(|c| {
                    let size_inv = f.inv(classes.size(c) as u64 % prime);
                    f.mul(f.mul(omega[c], degree % prime), size_inv)
                })
                .collect();
            let values = (0..k)
                .map(|c| lift_value(f, generator, classes, &modular, c, degree))
                .collect::<Result<Vec<_>>>()?;
            Ok((degree, values))
        })
        .collect()
}

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect()
}

/// Split an invariant subspace (rows in RREF) into eigenspaces of `ma`.
fn split(f: Field, ma: &Matrix, mut space: Matrix, a: usize) -> Result<Vec<Matrix>> {
    let pivots = f.rref(&mut space);
    let d = space.len();
    let k = ma.len();
    let images: Vec<Vec<u64>> = space
        .iter()
        .map(|w| {
            (0..k)
                .map(|b| (0..k).fold(0, |acc, c| f.add(acc, f.mul(ma[b][c], w[c]))))
                .collect()
        })
        .collect();
    // restricted[j][i] = coordinate j of M·w_i
    let restricted: Matrix = (0..d)
        .map(|j| (0..d).map(|i| images[i][pivots[j]]).collect())
        .collect();
    let roots = f.roots(&f.charpoly(&restricted));
    let mut pieces = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let shifted: Matrix = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let coords = f.nullspace(&shifted);
        total += coords.len();
        let mut piece: Matrix = coords
            .iter()
            .map(|cv| {
                (0..k)
                    .map(|col| {
                        cv.iter()
                            .zip(&space)
                            .fold(0, |acc, (&x, w)| f.add(acc, f.mul(x, w[col])))
                    })
                    .collect()
            })
            .collect();
        f.rref(&mut piece);
        pieces.push(piece);
    }
    if total != d {
        return Err(Error::Internal(format!(
            "class matrix {a} is not diagonalizable on a subspace of dimension {d} mod {}",
            f.p
        )));
    }
    Ok(pieces)
}

/// `χ(1)` from `Σ_c ω(c)ω(c⁻¹)/|c| = |G|/χ(1)²`, taking the root below `√|G|`.
fn degree_from_omega(
    f: Field,
    classes: &ConjugacyClassSet,
    inverse: &[usize],
    omega: &[u64],
    order: u64,
) -> Result<u64> {
    let s = (0..omega.len()).fold(0, |acc, c| {
        let term = f.mul(omega[c], omega[inverse[c]]);
        f.add(acc, f.mul(term, f.inv(classes.size(c) as u64 % f.p)))
    });
    if s == 0 {
        return Err(Error::Internal("vanishing norm for an eigenvector".into()));
    }
    let target = f.mul(order % f.p, f.inv(s));
    let bound = isqrt(order as u128) as u64;
    (1..=bound)
        .find(|&d| f.mul(d, d) == target && order.is_multiple_of(d))
        .ok_or_else(|| Error::Internal("no admissible degree for an eigenvector".into()))
}

/// Exact value at class `c` from eigenvalue multiplicities of a representing matrix.
fn lift_value(
    f: Field,
    generator: u64,
    classes: &ConjugacyClassSet,
    modular: &[u64],
    c: usize,
    degree: u64,
) -> Result<Cyclotomic> {
    let rep = classes.representative(c);
    let n = classes.class(c).element_order;
    if n == 1 {
        return Ok(Cyclotomic::from_integer(degree as i64));
    }
    let power_values: Vec<u64> = (0..n)
        .map(|l| modular[classes.class_of(&rep.pow(l as i64)).expect("powers stay in the group")])
        .collect();
    let zeta = pow_mod(generator, (f.p - 1) / n, f.p);
    let zeta_inv = f.inv(zeta);
    let n_inv = f.inv(n % f.p);
    let mut terms = Vec::new();
    let mut total = 0;
    for kk in 0..n {
        let step = pow_mod(zeta_inv, kk, f.p);
        let mut acc = 0;
        let mut w = 1;
        for &v in &power_values {
            acc = f.add(acc, f.mul(v, w));
            w = f.mul(w, step);
        }
        let mult = f.mul(acc, n_inv);
        if mult > degree {
            return Err(Error::Internal(format!(
                "eigenvalue multiplicity {mult} exceeds degree {degree}"
            )));
        }
        total += mult;
        if mult != 0 {
            terms.push((kk as i64, BigInt::from(mult)));
        }
    }
    if total != degree {
        return Err(Error::Internal("eigenvalue multiplicities do not sum to the degree".into()));
    }
    Ok(Cyclotomic::from_exponent_sum(n as u32, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        // S3: exp 6, 2√6 ≈ 4.9 → 7
        assert_eq!(choose_prime(6, 6), 7);
        // S5: exp 60, 2√120 ≈ 21.9 → 61
        assert_eq!(choose_prime(60, 120), 61);
        // trivial group: exp 1 → 3 (p > 2)
        assert_eq!(choose_prime(1, 1), 3);
        // C2: exp 2, bound 2√2 ≈ 2.83 → 3
        assert_eq!(choose_prime(2, 2), 3);
    }
}
