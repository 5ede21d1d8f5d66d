//! Lattice path matroids via their interval presentation.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// Two monotone lattice paths with the same endpoints, `upper` weakly above
/// `lower`. Step `i` (0-based) is element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePathBounds {
    upper: Vec<bool>,
    lower: Vec<bool>,
    /// `(l_j, u_j)` per north step: position of the `j`-th N in `upper` and
    /// in `lower`.
    intervals: Vec<(usize, usize)>,
}

fn parse_steps(s: &str, which: &str) -> Result<Vec<bool>> {
    s.trim()
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            'N' | 'n' => Ok(true),
            'E' | 'e' => Ok(false),
            _ => Err(Error::parse(
                format!("{which} bound, step {}", i + 1),
                format!("`{c}` is not N or E"),
            )),
        })
        .collect()
}

fn north_positions(steps: &[bool]) -> Vec<usize> {
    steps.iter().enumerate().filter(|(_, &n)| n).map(|(i, _)| i).collect()
}

impl LatticePathBounds {
    pub fn new(upper: &str, lower: &str) -> Result<Self> {
        let up = parse_steps(upper, "upper")?;
        let lo = parse_steps(lower, "lower")?;
        Self::from_steps(up, lo)
    }

    /// `true` stands for a north step.
    pub fn from_steps(upper: Vec<bool>, lower: Vec<bool>) -> Result<Self> {
        if upper.len() != lower.len() {
            return Err(Error::invalid(format!(
                "bounds have different lengths {} and {}",
                upper.len(),
                lower.len()
            )));
        }
        if upper.len() > 64 {
            return Err(Error::ResourceCap {
                what: "lattice path length",
                limit: 64,
                actual: upper.len(),
            });
        }
        let nu = north_positions(&upper);
        let nl = north_positions(&lower);
        if nu.len() != nl.len() {
            return Err(Error::invalid("bounds do not end at the same point"));
        }
        let (mut hu, mut hl) = (0usize, 0usize);
        for i in 0..upper.len() {
            hu += upper[i] as usize;
            hl += lower[i] as usize;
            if hl > hu {
                return Err(Error::invalid(format!(
                    "lower bound rises above upper bound after step {}",
                    i + 1
                )));
            }
        }
        Ok(LatticePathBounds {
            intervals: nu.into_iter().zip(nl).collect(),
            upper,
            lower,
        })
    }

    pub fn len(&self) -> usize {
        self.upper.len()
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty()
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn upper(&self) -> String {
        steps_to_string(&self.upper)
    }

    pub fn lower(&self) -> String {
        steps_to_string(&self.lower)
    }

    /// Size of a largest matching of `s` into the intervals. Elements are
    /// scanned in ascending order and each takes the open interval that
    /// closes earliest; both interval ends increase with `j`, so this is
    /// optimal.
    pub fn rank(&self, s: u64) -> usize {
        let mut next_free = 0usize;
        let mut matched = 0;
        let mut taken = 0u64;
        for x in bits::elements(s) {
            while next_free < self.intervals.len() && self.intervals[next_free].1 < x {
                next_free += 1;
            }
            let slot = (next_free..self.intervals.len())
                .take_while(|&j| self.intervals[j].0 <= x)
                .find(|&j| !bits::contains(taken, j));
            if let Some(j) = slot {
                taken |= bits::bit(j);
                matched += 1;
            }
        }
        matched
    }
}

fn steps_to_string(steps: &[bool]) -> String {
    steps.iter().map(|&n| if n { 'N' } else { 'E' }).collect()
}

impl fmt::Display for LatticePathBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.upper(), self.lower())
    }
}

impl std::str::FromStr for LatticePathBounds {
    type Err = Error;

    /// `UPPER,LOWER`, e.g. `NNEE,EENN`.
    fn from_str(s: &str) -> Result<Self> {
        let (u, l) = s
            .split_once(',')
            .ok_or_else(|| Error::parse("lattice path bounds", "expected UPPER,LOWER"))?;
        LatticePathBounds::new(u, l)
    }
}

/// Bases as north-step sets of all monotone paths between the bounds,
/// enumerated path by path. Independent of the interval presentation.
pub fn lattice_path_bases_by_paths(b: &LatticePathBounds) -> Vec<u64> {
    let n = b.len();
    let mut hu = vec![0usize; n + 1];
    let mut hl = vec![0usize; n + 1];
    for i in 0..n {
        hu[i + 1] = hu[i] + b.upper[i] as usize;
        hl[i + 1] = hl[i] + b.lower[i] as usize;
    }
    let mut out = Vec::new();
    fn go(i: usize, h: usize, mask: u64, hu: &[usize], hl: &[usize], out: &mut Vec<u64>) {
        if i + 1 == hu.len() {
            if h == hu[i] {
                out.push(mask);
            }
            return;
        }
        for (north, nh) in [(false, h), (true, h + 1)] {
            if nh <= hu[i + 1] && nh >= hl[i + 1] {
                go(i + 1, nh, if north { mask | bits::bit(i) } else { mask }, hu, hl, out);
            }
        }
    }
    go(0, 0, 0, &hu, &hl, &mut out);
    out.sort_unstable();
    out
}
