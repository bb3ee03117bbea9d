use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fockspace::{BasisState, GridShape};

/// A weakly decreasing tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and trims trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses `"2,1"`; the empty string, `"∅"` and `"()"` give the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `mu_i`, one-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    pub fn fits_in_box(&self, n: usize, m: usize) -> bool {
        self.len() <= n && self.part(1) <= m
    }

    /// The parts padded with zeros to length `p`.
    pub fn padded(&self, p: usize) -> Vec<usize> {
        (1..=p).map(|i| self.part(i)).collect()
    }

    fn check_box(&self, shape: GridShape) -> Result<()> {
        if !self.fits_in_box(shape.n, shape.m) {
            return Err(Error::BoxViolation { partition: self.to_string(), n: shape.n, m: shape.m });
        }
        Ok(())
    }

    /// The grid state whose occupied cells form the Young diagram: row `i`
    /// occupies columns `1..=mu_i`.
    pub fn diagram_state(&self, shape: GridShape) -> Result<BasisState> {
        self.check_box(shape)?;
        let positions: Vec<usize> = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| shape.cell(r + 1, c)))
            .collect();
        BasisState::from_positions(&positions, shape.size())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Every partition in the `n x m` box, by size and then in decreasing
/// lexicographic order within a size.
pub fn partitions_in_box(n: usize, m: usize) -> Vec<Partition> {
    fn extend(prefix: &mut Vec<usize>, rows_left: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            extend(prefix, rows_left - 1, p, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    extend(&mut Vec::new(), n, m, &mut raw);
    let mut out: Vec<Partition> = raw.into_iter().map(|parts| Partition { parts }).collect();
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    out
}

/// `prod_{i<j} (mu_i - mu_j + j - i) / (j - i)`.
pub fn weyl_dim(mu: &Partition, p: usize) -> Result<u64> {
    if mu.len() > p {
        return Err(Error::InvalidPartition(format!("{mu} has more than {p} parts")));
    }
    let parts = mu.padded(p);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..p {
        for j in i + 1..p {
            num *= (parts[i] - parts[j] + j - i) as u128;
            den *= (j - i) as u128;
            let g = num_integer::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    u64::try_from(num / den).map_err(|_| Error::OutOfRange("dimension overflows u64".into()))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
