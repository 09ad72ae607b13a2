//! Stabilizer chain built by the deterministic Schreier–Sims algorithm.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators fixing all earlier base points.
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`, for `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            let ub = self.transversal[b].clone().expect("orbit point has a transversal");
            for s in &self.generators {
                let c = s.image(b);
                if self.transversal[c].is_none() {
                    self.transversal[c] = Some(s * &ub);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// A base and strong generating set with transversals, giving the group order
/// and a membership test without listing elements.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            chain.ensure_base_moves(g);
        }
        chain.levels[0].generators = gens;
        chain.distribute_generators();

        // Work from the bottom level up; whenever a Schreier generator fails to
        // sift, add its residue as a new strong generator and resume below.
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match chain.find_nonsifting(level) {
                None => i -= 1,
                Some((residue, depth)) => {
                    chain.ensure_base_moves(&residue);
                    for l in (level + 1)..=depth.min(chain.levels.len() - 1) {
                        chain.levels[l].generators.push(residue.clone());
                    }
                    for l in (level + 1)..=depth.min(chain.levels.len() - 1) {
                        chain.levels[l].rebuild_orbit(degree);
                    }
                    i = depth.min(chain.levels.len() - 1) as isize;
                }
            }
        }
        chain
    }

    /// Append base points until `g` moves some base point.
    fn ensure_base_moves(&mut self, g: &Permutation) {
        if self.levels.iter().any(|l| g.image(l.base_point) != l.base_point) {
            return;
        }
        let moved = (0..self.degree)
            .find(|&p| g.image(p) != p)
            .expect("non-identity permutation moves a point");
        self.levels.push(Level::new(moved, self.degree));
    }

    fn distribute_generators(&mut self) {
        let all = self.levels[0].generators.clone();
        for l in 0..self.levels.len() {
            let fixed: Vec<usize> = self.levels[..l].iter().map(|x| x.base_point).collect();
            self.levels[l].generators = all
                .iter()
                .filter(|g| fixed.iter().all(|&b| g.image(b) == b))
                .cloned()
                .collect();
            self.levels[l].rebuild_orbit(self.degree);
        }
    }

    /// First Schreier generator of `level` that does not sift through the
    /// levels below, with its residue and the level where sifting stopped.
    fn find_nonsifting(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &b in &lv.orbit {
            let ub = lv.transversal[b].as_ref().unwrap();
            for s in &lv.generators {
                let sb = s.image(b);
                let usb = lv.transversal[sb].as_ref().unwrap();
                let h = &(&usb.inverse() * s) * ub;
                let (residue, depth) = self.sift_from(h, level + 1);
                if !residue.is_identity() {
                    return Some((residue, depth));
                }
            }
        }
        None
    }

    fn sift_from(&self, mut h: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let b = h.image(level.base_point);
            match &level.transversal[b] {
                Some(u) => h = &u.inverse() * &h,
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g.clone(), 0).0.is_identity()
    }

    /// Group order; `None` on `u128` overflow.
    pub fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=9usize {
            let cycle: Vec<usize> = (1..=n).collect();
            let gens = vec![
                Permutation::from_cycles(n, &[cycle]).unwrap(),
                p("(1,2)", n),
            ];
            let chain = StabChain::new(n, &gens);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), Some(fact), "S{n}");
        }
    }

    #[test]
    fn membership() {
        // A4 inside S4
        let chain = StabChain::new(4, &[p("(1,2,3)", 4), p("(2,3,4)", 4)]);
        assert_eq!(chain.order(), Some(12));
        assert!(chain.contains(&p("(1,2)(3,4)", 4)));
        assert!(!chain.contains(&p("(1,2)", 4)));
        assert!(!chain.contains(&p("(1,2,3,4)", 4)));
    }

    #[test]
    fn trivial_and_large() {
        assert_eq!(StabChain::new(5, &[]).order(), Some(1));
        // M11 on 11 points, order 7920
        let chain = StabChain::new(
            11,
            &[p("(1,2,3,4,5,6,7,8,9,10,11)", 11), p("(3,7,11,8)(4,10,5,6)", 11)],
        );
        assert_eq!(chain.order(), Some(7920));
    }
}
