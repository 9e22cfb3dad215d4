//! Finite-range translation-invariant ferromagnetic coupling sets.

use std::collections::{HashMap, HashSet, VecDeque};
use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::{coord_from_slice, lex_positive, neg, sup_norm, Coord, MAX_D};

/// A coupling table J indexed by lattice offsets, with J_k = J_{-k} ≥ 0 and
/// J_k = 0 beyond the sup-norm range R.
#[derive(Clone, Debug)]
pub struct CouplingSet {
    d: usize,
    range: i32,
    table: HashMap<Coord, f64>,
    /// One offset per ± pair (lexicographically positive), sorted; J > 0.
    positive_offsets: Vec<(Coord, f64)>,
    /// Both signs, sorted; J > 0.
    all_offsets: Vec<(Coord, f64)>,
}

impl CouplingSet {
    /// Build from a list of (offset, value) entries. Entries may list one or
    /// both members of a ± pair; listing both with different values is an
    /// error, listing one implies its mirror.
    pub fn new(d: usize, entries: &[(Vec<i32>, f64)]) -> Result<Self> {
        if !(2..=MAX_D).contains(&d) {
            return Err(Error::invalid(format!(
                "dimension must be in 2..={MAX_D}, got {d}"
            )));
        }
        let mut table: HashMap<Coord, f64> = HashMap::new();
        for (off, value) in entries {
            if off.len() != d {
                return Err(Error::invalid(format!(
                    "offset {off:?} has {} components, expected {d}",
                    off.len()
                )));
            }
            if !value.is_finite() || *value < 0.0 {
                return Err(Error::invalid(format!(
                    "coupling value for offset {off:?} must be finite and >= 0, got {value}"
                )));
            }
            let k = coord_from_slice(off);
            if sup_norm(&k) == 0 {
                return Err(Error::invalid("zero offset is not a valid coupling"));
            }
            for key in [k, neg(&k)] {
                match table.get(&key) {
                    Some(&v) if (v - value).abs() > 1e-15 => {
                        return Err(Error::invalid(format!(
                            "non-symmetric coupling: J at {off:?} listed as both {v} and {value}"
                        )));
                    }
                    _ => {
                        table.insert(key, *value);
                    }
                }
            }
        }
        let range = table
            .iter()
            .filter(|(_, &v)| v > 0.0)
            .map(|(k, _)| sup_norm(k))
            .max()
            .unwrap_or(0);
        if range == 0 {
            return Err(Error::invalid("coupling set has no positive entry"));
        }
        let mut positive_offsets: Vec<(Coord, f64)> = table
            .iter()
            .filter(|(k, &v)| v > 0.0 && lex_positive(k))
            .map(|(k, &v)| (*k, v))
            .collect();
        positive_offsets.sort_by_key(|(k, _)| *k);
        let mut all_offsets: Vec<(Coord, f64)> = table
            .iter()
            .filter(|(_, &v)| v > 0.0)
            .map(|(k, &v)| (*k, v))
            .collect();
        all_offsets.sort_by_key(|(k, _)| *k);
        Ok(CouplingSet {
            d,
            range,
            table,
            positive_offsets,
            all_offsets,
        })
    }

    /// Nearest-neighbor couplings of strength `j`.
    pub fn nearest_neighbor(d: usize, j: f64) -> Result<Self> {
        let mut entries = Vec::new();
        for k in 0..d {
            let mut off = vec![0i32; d];
            off[k] = 1;
            entries.push((off, j));
        }
        Self::new(d, &entries)
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    /// Smallest R with J_k = 0 whenever the sup-norm of k exceeds R.
    pub fn range(&self) -> i32 {
        self.range
    }

    /// J value at an offset (0 for missing entries).
    pub fn value(&self, offset: &Coord) -> f64 {
        self.table.get(offset).copied().unwrap_or(0.0)
    }

    /// Offsets with J > 0, one per ± pair, sorted.
    pub fn positive_offsets(&self) -> &[(Coord, f64)] {
        &self.positive_offsets
    }

    /// Offsets with J > 0, both signs, sorted.
    pub fn all_offsets(&self) -> &[(Coord, f64)] {
        &self.all_offsets
    }

    /// True iff the offsets with J_k > 0 generate Z^d. Finite certificate:
    /// BFS from the origin restricted to the sup-norm patch of radius d·R,
    /// requiring every unit step ±e_i and all 2^d parity classes reached.
    pub fn is_connected(&self) -> bool {
        let radius = (self.d as i32) * self.range;
        let mut seen: HashSet<Coord> = HashSet::new();
        let origin = [0i32; MAX_D];
        seen.insert(origin);
        let mut queue = VecDeque::from([origin]);
        while let Some(x) = queue.pop_front() {
            for (off, _) in &self.all_offsets {
                let y = super::add(&x, off);
                if sup_norm(&y) <= radius && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        for k in 0..self.d {
            for s in [1i32, -1] {
                let mut e = [0i32; MAX_D];
                e[k] = s;
                if !seen.contains(&e) {
                    return false;
                }
            }
        }
        let mut parities = HashSet::new();
        for x in &seen {
            let mut p = 0usize;
            for (k, xk) in x.iter().enumerate().take(self.d) {
                p |= ((xk.rem_euclid(2)) as usize) << k;
            }
            parities.insert(p);
        }
        parities.len() == 1 << self.d
    }

    /// Parse a coupling table from text: one `k_1 … k_d value` line per
    /// offset, `#` comments allowed, missing offsets zero.
    pub fn parse(d: usize, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != d + 1 {
                return Err(Error::Parse(format!(
                    "coupling line {}: expected {} tokens, got {}",
                    lineno + 1,
                    d + 1,
                    tokens.len()
                )));
            }
            let mut off = Vec::with_capacity(d);
            for t in &tokens[..d] {
                off.push(t.parse::<i32>().map_err(|e| {
                    Error::Parse(format!("coupling line {}: {e}", lineno + 1))
                })?);
            }
            let value: f64 = tokens[d]
                .parse()
                .map_err(|e| Error::Parse(format!("coupling line {}: {e}", lineno + 1)))?;
            entries.push((off, value));
        }
        Self::new(d, &entries)
    }

    pub fn from_file(d: usize, path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        let mut text = String::new();
        for line in std::io::BufReader::new(file).lines() {
            text.push_str(&line?);
            text.push('\n');
        }
        Self::parse(d, &text)
    }

    /// Write in the same line format `parse` reads (positive half only).
    pub fn write(&self, w: &mut impl Write) -> Result<()> {
        for (off, v) in &self.positive_offsets {
            for k in 0..self.d {
                write!(w, "{} ", off[k])?;
            }
            writeln!(w, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_neighbor_is_connected() {
        let j = CouplingSet::nearest_neighbor(2, 1.0).unwrap();
        assert_eq!(j.range(), 1);
        assert!(j.is_connected());
        assert_eq!(j.positive_offsets().len(), 2);
    }

    #[test]
    fn even_sublattice_is_disconnected() {
        let j = CouplingSet::new(3, &[(vec![2, 0, 0], 1.0)]).unwrap();
        assert!(!j.is_connected());
    }

    #[test]
    fn step_one_zero_and_zero_two_is_disconnected() {
        // (1,0) and (0,2) only reach points with even second coordinate.
        let j = CouplingSet::new(2, &[(vec![1, 0], 1.0), (vec![0, 2], 0.5)]).unwrap();
        assert!(!j.is_connected());
    }

    #[test]
    fn knight_moves_are_connected() {
        let j = CouplingSet::new(2, &[(vec![1, 2], 1.0), (vec![2, 1], 1.0), (vec![1, -2], 1.0)])
            .unwrap();
        assert!(j.is_connected());
    }

    #[test]
    fn rejects_negative_and_asymmetric() {
        assert!(CouplingSet::new(2, &[(vec![1, 0], -1.0)]).is_err());
        assert!(
            CouplingSet::new(2, &[(vec![1, 0], 1.0), (vec![-1, 0], 2.0)]).is_err()
        );
        assert!(CouplingSet::new(2, &[(vec![0, 0], 1.0)]).is_err());
    }

    #[test]
    fn symmetry_is_implied() {
        let j = CouplingSet::new(2, &[(vec![1, 0], 1.5), (vec![0, 1], 0.5)]).unwrap();
        assert_eq!(j.value(&coord_from_slice(&[-1, 0])), 1.5);
        assert_eq!(j.value(&coord_from_slice(&[0, -1])), 0.5);
        assert_eq!(j.value(&coord_from_slice(&[1, 1])), 0.0);
    }

    #[test]
    fn parse_round_trip() {
        let j = CouplingSet::new(2, &[(vec![1, 0], 1.0), (vec![0, 1], 1.0), (vec![1, 1], 0.25)])
            .unwrap();
        let mut buf = Vec::new();
        j.write(&mut buf).unwrap();
        let k = CouplingSet::parse(2, std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(j.positive_offsets(), k.positive_offsets());
    }

    #[test]
    fn parse_rejects_bad_lines() {
        assert!(CouplingSet::parse(2, "1 0\n").is_err());
        assert!(CouplingSet::parse(2, "1 x 1.0\n").is_err());
    }
}
