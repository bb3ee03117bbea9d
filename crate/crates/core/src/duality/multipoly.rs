use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::qscalar::Rational;

use super::partition::Partition;

/// A polynomial in a fixed number of commuting variables with rational
/// coefficients; exponent vectors map to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, coeff: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    /// The variable with the given zero-based index.
    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: Rational) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector has the wrong length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => c.to_string(),
                    (false, true) => mono.join(" "),
                    (false, false) => format!("{c} {}", mono.join(" ")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Schur polynomial of `mu` in `p` variables, placed at indices
/// `offset..offset + p` of an `nvars`-variable ring: the sum over
/// semistandard tableaux of shape `mu` with entries in `1..=p` of their
/// content monomials.
pub fn schur_poly_in(mu: &Partition, p: usize, offset: usize, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    if mu.len() > p {
        return out;
    }
    let shape = mu.parts().to_vec();
    let mut tableau: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        t: &mut Vec<Vec<usize>>,
        p: usize,
        offset: usize,
        out: &mut MultiPoly,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; out.nvars()];
            for row in t.iter() {
                for &x in row {
                    e[offset + x - 1] += 1;
                }
            }
            out.add_term(e, Rational::one());
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { t[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 1 };
        for x in lo_row.max(lo_col)..=p {
            t[r][c] = x;
            fill(k + 1, cells, t, p, offset, out);
        }
        t[r][c] = 0;
    }

    fill(0, &cells, &mut tableau, p, offset, &mut out);
    out
}

/// Schur polynomial of `mu` in `p` variables.
pub fn schur_poly(mu: &Partition, p: usize) -> MultiPoly {
    schur_poly_in(mu, p, 0, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn mono(e: &[u32]) -> MultiPoly {
        MultiPoly::monomial(e.to_vec(), Rational::one())
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur_poly(&part("1"), 2), mono(&[1, 0]).add(&mono(&[0, 1])));
        assert_eq!(schur_poly(&part("1,1"), 2), mono(&[1, 1]));
        assert_eq!(schur_poly(&part("2,1"), 2), mono(&[2, 1]).add(&mono(&[1, 2])));
        assert!(schur_poly(&part("1,1,1"), 2).is_zero());
        assert_eq!(schur_poly(&Partition::empty(), 3), MultiPoly::one(3));
    }

    #[test]
    fn ring_operations() {
        let x = MultiPoly::var(0, 2);
        let y = MultiPoly::var(1, 2);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 3);
        assert!(sq.sub(&sq).is_zero());
        assert_eq!(sq.to_string(), "x1^2 + 2 x1 x2 + x2^2");
    }
}
