//! Permutation groups: construction from a short spec string, orders and
//! membership via a stabilizer chain, element enumeration, conjugacy classes,
//! centralizers, conjugators and restricted normalizers.

mod chain;
mod classes;
mod group;
mod permutation;

pub use chain::StabChain;
pub use classes::{conjugacy_classes, group_exponent, ConjugacyClass, ConjugacyClassSet};
pub use group::{ElementList, Group, Limits};
pub use permutation::{element_power_order, parse_cycle_list, Permutation};

use crate::error::{Error, Result};

/// Build a group from a spec string with default [`Limits`].
///
/// Grammar: `S<n>`, `A<n>`, `C<n>`, `D<n>` (dihedral of order `2n`), `Q8`,
/// direct products of these joined by `x` (`C2xC4`), or `perm:` followed by
/// `;`-separated generators in cycle notation (`perm:(1,2,3);(1,2)`).
pub fn construct_group(spec: &str) -> Result<Group> {
    construct_group_with(spec, Limits::default())
}

pub fn construct_group_with(spec: &str, limits: Limits) -> Result<Group> {
    let spec = spec.trim();
    if let Some(body) = spec.strip_prefix("perm:") {
        let cycle_lists = body
            .split(';')
            .map(|g| parse_cycle_list(g.trim()))
            .collect::<Result<Vec<_>>>()?;
        let degree = cycle_lists
            .iter()
            .flatten()
            .flatten()
            .copied()
            .max()
            .unwrap_or(1);
        if degree > limits.max_degree {
            return Err(Error::DegreeOverflow {
                degree,
                max: limits.max_degree,
            });
        }
        let gens = cycle_lists
            .iter()
            .map(|c| Permutation::from_cycles(degree, c))
            .collect::<Result<Vec<_>>>()?;
        return Group::new(degree, gens, limits);
    }
    if spec.is_empty() {
        return Err(Error::parse("group spec", "empty spec"));
    }
    let factors = spec
        .split('x')
        .map(parse_factor)
        .collect::<Result<Vec<_>>>()?;
    let degree: usize = factors.iter().map(|(n, _)| *n).sum();
    if degree > limits.max_degree {
        return Err(Error::DegreeOverflow {
            degree,
            max: limits.max_degree,
        });
    }
    let mut gens = Vec::new();
    let mut offset = 0;
    for (n, fgens) in factors {
        for cycles in fgens {
            let local = Permutation::from_cycles(n, &cycles)?;
            gens.push(local.shifted(offset, degree));
        }
        offset += n;
    }
    Group::new(degree, gens, limits)
}

type FactorGens = (usize, Vec<Vec<Vec<usize>>>);

/// A named factor as (degree, generators in 1-based cycle form).
fn parse_factor(s: &str) -> Result<FactorGens> {
    if s == "Q8" {
        return Ok((
            8,
            vec![
                vec![vec![1, 2, 4, 7], vec![3, 6, 8, 5]],
                vec![vec![1, 3, 4, 8], vec![2, 5, 7, 6]],
            ],
        ));
    }
    let bad = || Error::parse("group spec", format!("unknown factor {s:?}"));
    let mut chars = s.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    let full_cycle = || vec![(1..=n).collect::<Vec<_>>()];
    Ok(match kind {
        'S' => {
            if n == 1 {
                (1, vec![])
            } else {
                (n, vec![full_cycle(), vec![vec![1, 2]]])
            }
        }
        'A' => (n, (3..=n).map(|i| vec![vec![1, 2, i]]).collect()),
        'C' => (n, if n == 1 { vec![] } else { vec![full_cycle()] }),
        'D' => match n {
            1 => (2, vec![vec![vec![1, 2]]]),
            2 => (4, vec![vec![vec![1, 2]], vec![vec![3, 4]]]),
            _ => {
                let reflection = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
                (n, vec![full_cycle(), reflection])
            }
        },
        _ => return Err(bad()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups() {
        let cases = [
            ("S3", 6),
            ("S1", 1),
            ("A4", 12),
            ("A5", 60),
            ("A1", 1),
            ("C12", 12),
            ("C1", 1),
            ("D4", 8),
            ("D6", 12),
            ("D1", 2),
            ("D2", 4),
            ("Q8", 8),
            ("C2xC2", 4),
            ("C2xC4", 8),
            ("S3xC2", 12),
            ("perm:(1,2,3,4,5);(1,2)", 120),
        ];
        for (spec, order) in cases {
            assert_eq!(construct_group(spec).unwrap().order(), order, "{spec}");
        }
    }

    #[test]
    fn cyclic_is_abelian_with_full_exponent() {
        let g = construct_group("C12").unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.exponent().unwrap(), 12);
        assert!(!construct_group("Q8").unwrap().is_abelian());
        assert_eq!(construct_group("Q8").unwrap().exponent().unwrap(), 4);
    }

    #[test]
    fn malformed_specs() {
        for spec in ["", "X3", "S", "S0", "Sx", "C2x", "perm:(1,2", "perm:(1,a)", "Q9"] {
            assert!(
                matches!(construct_group(spec), Err(Error::Parse { .. })),
                "{spec}"
            );
        }
        assert!(matches!(
            construct_group("S65"),
            Err(Error::DegreeOverflow { .. })
        ));
        assert!(matches!(
            construct_group("perm:(1,70)"),
            Err(Error::DegreeOverflow { .. })
        ));
    }
}
