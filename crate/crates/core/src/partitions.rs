//! Integer partitions with an explicit ambient length.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::DominantWeight;

/// A weakly decreasing sequence of nonnegative integers.
///
/// The stored length is the ambient length: `(2,1)` and `(2,1,0)` are
/// different values. Use [`Partition::profile`] to compare shapes
/// regardless of padding.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&x| x.into()).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The zero partition of the given ambient length.
    pub fn empty(len: usize) -> Self {
        Partition {
            parts: vec![0; len],
        }
    }

    /// `(b^a)` padded with zeros to `len`; the `a x b` rectangle.
    pub fn rectangle(a: usize, b: u32, len: usize) -> Result<Self> {
        if a > len {
            return Err(Error::range(
                "rectangle",
                format!("{a} rows in ambient length {len}"),
            ));
        }
        let mut parts = vec![b; a];
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Ambient length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&x| x == 0)
    }

    /// Nonzero parts only.
    pub fn profile(&self) -> &[u32] {
        let nonzero = self.parts.iter().take_while(|&&x| x > 0).count();
        &self.parts[..nonzero]
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| u64::from(x)).sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b))
    }

    /// `(z1, z1, z2, z2, ...)`; doubles every column of the Young diagram.
    pub fn double_columns(&self) -> Partition {
        Partition {
            parts: self.parts.iter().flat_map(|&x| [x, x]).collect(),
        }
    }

    /// Transpose of the Young diagram. The result has ambient length equal
    /// to the largest part.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|col| self.parts.iter().filter(|&&x| x >= col).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn to_weight(&self) -> DominantWeight {
        DominantWeight::new(self.parts.iter().map(|&x| i64::from(x)).collect())
            .expect("partitions are dominant")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Partitions with at most `rows` parts, each at most `cols`, in
/// lexicographically descending order starting from the full rectangle.
/// Every yielded partition has ambient length `rows`.
pub fn enumerate_box(rows: usize, cols: u32) -> BoxPartitions {
    BoxPartitions {
        next: Some(vec![cols; rows]),
    }
}

#[derive(Debug, Clone)]
pub struct BoxPartitions {
    next: Option<Vec<u32>>,
}

impl Iterator for BoxPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Lexicographic predecessor: lower the last nonzero part by one and
        // raise everything after it to the new value.
        if let Some(i) = current.iter().rposition(|&x| x > 0) {
            let mut succ = current.clone();
            let v = succ[i] - 1;
            for x in &mut succ[i..] {
                *x = v;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Ordinary binomial coefficient, used to size box enumerations.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    (0..k).try_fold(1u64, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}
