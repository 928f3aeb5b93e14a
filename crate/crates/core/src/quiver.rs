//! Type-A quivers, dimension vectors and sections of the translation quiver `ZQ`.
//!
//! Vertices are numbered `1..=n`. Sections are stored as one integer offset
//! per vertex: the section contains the chart vertex `(m_v, v)`, i.e. the
//! object `τ^{-m_v} P_v` of the derived category. The initial section
//! (all offsets zero) is the projective slice.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Direction of the edge between vertices `k` and `k+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// `k -> k+1`
    #[serde(rename = "F")]
    Forward,
    /// `k+1 -> k`
    #[serde(rename = "B")]
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverRecord", into = "QuiverRecord")]
pub struct QuiverA {
    n: usize,
    orientation: Vec<Orientation>,
}

#[derive(Serialize, Deserialize)]
struct QuiverRecord {
    n: usize,
    orientation: Vec<Orientation>,
}

impl TryFrom<QuiverRecord> for QuiverA {
    type Error = Error;
    fn try_from(r: QuiverRecord) -> Result<Self> {
        QuiverA::new(r.n, r.orientation)
    }
}

impl From<QuiverA> for QuiverRecord {
    fn from(q: QuiverA) -> Self {
        QuiverRecord {
            n: q.n,
            orientation: q.orientation,
        }
    }
}

impl QuiverA {
    pub fn new(n: usize, orientation: Vec<Orientation>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidQuiver(
                format!("n={n}"),
                "need at least one vertex".into(),
            ));
        }
        if orientation.len() != n - 1 {
            return Err(Error::InvalidQuiver(
                format!("n={n}"),
                format!("expected {} orientation letters, got {}", n - 1, orientation.len()),
            ));
        }
        Ok(QuiverA { n, orientation })
    }

    /// Linear orientation `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Result<Self> {
        Self::new(n, vec![Orientation::Forward; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> &[Orientation] {
        &self.orientation
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// The `n-1` arrows as `(source, target)` pairs, ordered by edge.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.orientation
            .iter()
            .enumerate()
            .map(|(k, o)| match o {
                Orientation::Forward => (k + 1, k + 2),
                Orientation::Backward => (k + 2, k + 1),
            })
            .collect()
    }

    pub fn opposite(&self) -> QuiverA {
        let orientation = self
            .orientation
            .iter()
            .map(|o| match o {
                Orientation::Forward => Orientation::Backward,
                Orientation::Backward => Orientation::Forward,
            })
            .collect();
        QuiverA {
            n: self.n,
            orientation,
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }

    /// All quivers of type `A_n`, one per orientation.
    pub fn all_orientations(n: usize) -> Vec<QuiverA> {
        let edges = n.saturating_sub(1);
        (0..1usize << edges)
            .map(|mask| {
                let orientation = (0..edges)
                    .map(|k| {
                        if mask >> k & 1 == 0 {
                            Orientation::Forward
                        } else {
                            Orientation::Backward
                        }
                    })
                    .collect();
                QuiverA { n, orientation }
            })
            .collect()
    }
}

impl fmt::Display for QuiverA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.n)?;
        if self.orientation.contains(&Orientation::Backward) {
            f.write_str(":")?;
            for o in &self.orientation {
                f.write_str(match o {
                    Orientation::Forward => "F",
                    Orientation::Backward => "B",
                })?;
            }
        }
        Ok(())
    }
}

/// Parses `"a3"` (linear orientation) or `"a3:FB"` (one letter per edge).
impl FromStr for QuiverA {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidQuiver(s.to_string(), why.to_string());
        let lower = s.trim().to_ascii_lowercase();
        let rest = lower
            .strip_prefix('a')
            .ok_or_else(|| bad("expected a type-A spec such as a3 or a3:FB"))?;
        let (num, letters) = match rest.split_once(':') {
            Some((num, letters)) => (num, Some(letters)),
            None => (rest, None),
        };
        let n: usize = num.parse().map_err(|_| bad("vertex count is not a number"))?;
        if n == 0 {
            return Err(bad("need at least one vertex"));
        }
        let orientation = match letters {
            None => vec![Orientation::Forward; n - 1],
            Some(letters) => letters
                .chars()
                .map(|c| match c {
                    'f' => Ok(Orientation::Forward),
                    'b' => Ok(Orientation::Backward),
                    _ => Err(bad("orientation letters must be F or B")),
                })
                .collect::<Result<Vec<_>>>()?,
        };
        if orientation.len() != n - 1 {
            return Err(bad(&format!(
                "expected {} orientation letters, got {}",
                n - 1,
                orientation.len()
            )));
        }
        Ok(QuiverA { n, orientation })
    }
}

/// Dimension vector, i.e. a class in `K_0 = Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    /// Indicator vector of the interval `[lo, hi]` (1-based).
    pub fn interval(n: usize, lo: usize, hi: usize) -> Self {
        DimVector((1..=n).map(|v| i64::from(lo <= v && v <= hi)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at vertex `v` (1-based).
    pub fn at(&self, v: usize) -> i64 {
        self.0[v - 1]
    }

    /// If the vector is the indicator of a nonempty interval, returns it.
    pub fn as_interval(&self) -> Option<(usize, usize)> {
        let support: Vec<usize> = (1..=self.len()).filter(|&v| self.at(v) != 0).collect();
        let (&lo, &hi) = (support.first()?, support.last()?);
        let ok = (1..=self.len()).all(|v| self.at(v) == i64::from(lo <= v && v <= hi));
        ok.then_some((lo, hi))
    }
}

/// `<d, e> = Σ_v d_v e_v − Σ_{a: v→w} d_v e_w`.
pub fn euler_form(q: &QuiverA, d: &DimVector, e: &DimVector) -> Result<i64> {
    for x in [d, e] {
        if x.len() != q.n() {
            return Err(Error::DimensionMismatch {
                expected: q.n(),
                got: x.len(),
            });
        }
    }
    let diag: i64 = q.vertices().map(|v| d.at(v) * e.at(v)).sum();
    let arrows: i64 = q.arrows().iter().map(|&(v, w)| d.at(v) * e.at(w)).sum();
    Ok(diag - arrows)
}

/// `+1` for a sink reflection, `-1` for a source reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reflection {
    Sink,
    Source,
}

impl Reflection {
    pub fn sign(self) -> i8 {
        match self {
            Reflection::Sink => 1,
            Reflection::Source => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Section {
    offsets: Vec<i64>,
}

impl Section {
    pub fn initial(q: &QuiverA) -> Section {
        Section {
            offsets: vec![0; q.n()],
        }
    }

    pub fn new(q: &QuiverA, offsets: Vec<i64>) -> Result<Section> {
        if offsets.len() != q.n() {
            return Err(Error::DimensionMismatch {
                expected: q.n(),
                got: offsets.len(),
            });
        }
        let s = Section { offsets };
        if !s.is_slice(q) {
            return Err(Error::InvalidSection(s.offsets));
        }
        Ok(s)
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn offset(&self, v: usize) -> i64 {
        self.offsets[v - 1]
    }

    /// For every arrow `v -> w` of `Q` the chart contains `P_w -> P_v`, so two
    /// section vertices on that edge are adjacent iff `m_w - m_v ∈ {0, 1}`.
    pub fn is_slice(&self, q: &QuiverA) -> bool {
        self.offsets.len() == q.n()
            && q.arrows().iter().all(|&(v, w)| {
                let diff = self.offset(w) - self.offset(v);
                diff == 0 || diff == 1
            })
    }

    /// Arrows of the section as a quiver on `Q_0`.
    pub fn arrows(&self, q: &QuiverA) -> Vec<(usize, usize)> {
        q.arrows()
            .into_iter()
            .map(|(v, w)| {
                if self.offset(v) == self.offset(w) {
                    (w, v)
                } else {
                    (v, w)
                }
            })
            .collect()
    }

    pub fn is_sink(&self, q: &QuiverA, v: usize) -> bool {
        self.arrows(q).iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, q: &QuiverA, v: usize) -> bool {
        self.arrows(q).iter().all(|&(_, t)| t != v)
    }

    /// Replaces `(m_v, v)` by its translate: `τ` for a sink, `τ^{-1}` for a source.
    pub fn reflect_as(&self, q: &QuiverA, v: usize, kind: Reflection) -> Result<Section> {
        q.check_vertex(v)?;
        let allowed = match kind {
            Reflection::Sink => self.is_sink(q, v),
            Reflection::Source => self.is_source(q, v),
        };
        if !allowed {
            return Err(Error::NotSinkOrSource(v));
        }
        let mut offsets = self.offsets.clone();
        offsets[v - 1] += match kind {
            Reflection::Sink => -1,
            Reflection::Source => 1,
        };
        let out = Section { offsets };
        debug_assert!(out.is_slice(q));
        Ok(out)
    }

    /// Reflects at `v`, preferring the sink reflection when `v` is isolated.
    pub fn reflect(&self, q: &QuiverA, v: usize) -> Result<(Section, Reflection)> {
        q.check_vertex(v)?;
        let kind = if self.is_sink(q, v) {
            Reflection::Sink
        } else if self.is_source(q, v) {
            Reflection::Source
        } else {
            return Err(Error::NotSinkOrSource(v));
        };
        Ok((self.reflect_as(q, v, kind)?, kind))
    }

    /// All `(vertex, kind)` pairs at which this section can be reflected.
    pub fn reflections(&self, q: &QuiverA) -> Vec<(usize, Reflection)> {
        let mut out = Vec::new();
        for v in q.vertices() {
            if self.is_sink(q, v) {
                out.push((v, Reflection::Sink));
            }
            if self.is_source(q, v) {
                out.push((v, Reflection::Source));
            }
        }
        out
    }

    /// Adds `k` to every offset.
    pub fn translate(&self, k: i64) -> Section {
        Section {
            offsets: self.offsets.iter().map(|m| m + k).collect(),
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.offsets)
    }
}
