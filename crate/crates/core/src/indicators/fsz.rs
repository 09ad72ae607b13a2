use serde::Serialize;

use super::Session;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory;
use crate::permcore::Group;

/// Orders (and gcds) for which every β is known to be rational.
const RATIONAL_ORDERS: [u64; 5] = [1, 2, 3, 4, 6];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FszWitness {
    pub z_class: usize,
    pub m: u64,
    pub chi: usize,
    pub beta: Cyclotomic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FszOutcome {
    pub verdict: bool,
    pub witness: Option<FszWitness>,
    pub beta_evaluations: u64,
}

/// Whether every indicator of `D(G)` lies in `ℚ(ζ_d)`, decided from the β
/// values alone.
pub fn fsz_test(group: &Group, d: u64) -> Result<FszOutcome> {
    Session::new(group.clone())?.fsz_test(d)
}

impl Session {
    /// Checks `β_m(z, χ) ∈ ℚ(ζ_d)` for one `z` per rational class, every
    /// `m | e(z)/o(z)` and every `χ ∈ Irr(C_G(z))`. For `d = 1` the cases
    /// with `o(z)` or `gcd(m, o(z))` in {1, 2, 3, 4, 6} are skipped.
    pub fn fsz_test(&self, d: u64) -> Result<FszOutcome> {
        if d == 0 || !self.exponent().is_multiple_of(d) {
            return Err(Error::NotDivisor {
                d,
                exponent: self.exponent(),
            });
        }
        let skip = |n: u64| d == 1 && RATIONAL_ORDERS.contains(&n);
        let mut evaluations = 0;
        for cell in self.classes().rational_classes() {
            let z_class = cell[0];
            let o = self.classes().class(z_class).element_order;
            if skip(o) {
                continue;
            }
            let cd = self.centralizer(z_class)?;
            for m in numtheory::divisors(cd.exponent() / o) {
                if skip(m) || skip(numtheory::gcd_i64(m as i64, o as i64)) {
                    continue;
                }
                let nchars = cd.table()?.len();
                for chi in 0..nchars {
                    let beta = self.beta(z_class, m, chi)?;
                    evaluations += 1;
                    let ok = if d == 1 {
                        beta.is_rational()
                    } else {
                        d.is_multiple_of(u64::from(beta.conductor()))
                    };
                    if !ok {
                        return Ok(FszOutcome {
                            verdict: false,
                            witness: Some(FszWitness {
                                z_class,
                                m,
                                chi,
                                beta,
                            }),
                            beta_evaluations: evaluations,
                        });
                    }
                }
            }
        }
        Ok(FszOutcome {
            verdict: true,
            witness: None,
            beta_evaluations: evaluations,
        })
    }
}
