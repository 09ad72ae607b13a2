use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory;

/// A permutation of the points `1..=n`, stored 0-based as its image sequence.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`, so `t ▷ x = t·x·t⁻¹`.
/// The derived ordering is the lexicographic order of image sequences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// From 0-based images; fails unless the images form a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::DegreeOverflow {
                degree: n,
                max: u16::MAX as usize,
            });
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::parse("permutation", format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// From cycles over 1-based points. Cycles are applied left to right, so
    /// `(1,2)(2,3)` first applies `(1,2)`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::parse(
                        "cycle",
                        format!("point {p} outside 1..={degree}"),
                    ));
                }
                if !seen.insert(p) {
                    return Err(Error::parse("cycle", format!("point {p} repeated")));
                }
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
            let c = Permutation::from_images(images)?;
            acc = &c * &acc;
        }
        Ok(acc)
    }

    /// Parse cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        Self::from_cycles(degree, &parse_cycle_list(s)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv.into() }
    }

    /// `t·self·t⁻¹`.
    pub fn conjugate_by(&self, t: &Permutation) -> Self {
        // (t x t⁻¹)(t(i)) = t(x(i))
        let mut out = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[t.images[i] as usize] = t.images[x as usize];
        }
        Permutation { images: out.into() }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| self.images[b as usize] == other.images[a as usize])
    }

    /// Disjoint cycles of length > 1, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.image(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths (fixed points excluded).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| numtheory::lcm(acc, c.len() as u64))
    }

    /// `self^k` for any integer `k`, computed cycle by cycle.
    pub fn pow(&self, k: i64) -> Self {
        let mut out: Vec<u16> = self.images.to_vec();
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (pos, &p) in cycle.iter().enumerate() {
                out[p] = cycle[(pos + shift) % cycle.len()] as u16;
            }
        }
        Permutation { images: out.into() }
    }

    /// Extend to a larger degree, fixing the new points.
    pub fn extended(&self, degree: usize) -> Self {
        let mut images = self.images.to_vec();
        images.extend(self.images.len() as u16..degree as u16);
        Permutation {
            images: images.into(),
        }
    }

    /// Relabel points by adding `offset`, embedding into `degree` points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u16;
        }
        Permutation {
            images: images.into(),
        }
    }
}

/// `p^k` together with the order of `p`.
pub fn element_power_order(p: &Permutation, k: i64) -> (Permutation, u64) {
    (p.pow(k), p.order())
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.images.len(), rhs.images.len());
        Permutation {
            images: rhs.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }
}

impl std::ops::Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse `(a,b,c)(d,e)` into 1-based cycles. Whitespace is ignored.
pub fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = s.as_str();
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::parse("cycle", format!("expected '(' in {s:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::parse("cycle", format!("unclosed cycle in {s:?}")))?;
        let inner = &body[..close];
        if !inner.is_empty() {
            let pts = inner
                .split(',')
                .map(|t| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&p| p > 0)
                        .ok_or_else(|| Error::parse("cycle", format!("bad point {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(pts);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn composition_and_inverse() {
        let a = p("(1,2,3)", 3);
        let b = p("(1,2)", 3);
        // b first, then a: 1 -> 2 -> 3
        assert_eq!((&a * &b).image(0), 2);
        assert!((&a * &a.inverse()).is_identity());
        assert_eq!(p("(1,2)(2,3)", 3), p("(1,3,2)", 3));
    }

    #[test]
    fn powers_and_orders() {
        let id = Permutation::identity(4);
        assert_eq!(element_power_order(&id, 17), (id.clone(), 1));
        assert_eq!(element_power_order(&p("(1,2,3)", 3), 2), (p("(1,3,2)", 3), 3));
        let x = p("(1,2)(3,4,5)", 5);
        assert_eq!(element_power_order(&x, 6), (Permutation::identity(5), 6));
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(0), Permutation::identity(5));
    }

    #[test]
    fn conjugation() {
        let t = p("(1,2)", 3);
        let x = p("(1,2,3)", 3);
        assert_eq!(x.conjugate_by(&t), &(&t * &x) * &t.inverse());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p("(3,1)(2,4)", 4).to_string(), "(1,3)(2,4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(1,1)", 3).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
    }
}
