//! Combinatorial model of `D^b(mod kQ)` for a type-A quiver `Q`.
//!
//! Indecomposables are pairs `(M, s)` standing for `M[s]`. Because `kQ` is
//! hereditary, `Hom(M[s], N[t])` is `Hom(M, N)` when `t = s`, `Ext¹(M, N)`
//! when `t = s + 1` and zero otherwise.
//!
//! The chart identifies indecomposables with `Z × Q_0`: `(m, v)` is the
//! object `τ^{-m} P_v`. For `A_2` the chart collapses further to a single
//! integer label along the zigzag, anchored so that the projective slice is
//! `{1, 2}` and `label(X[1]) = label(X) + 3`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module_cat::{ext_dim, hom_dim, injective, knit_ar_quiver, projective, ArQuiver, IntervalModule};
use crate::quiver::{Orientation, QuiverA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DerivedObject {
    #[serde(flatten)]
    pub module: IntervalModule,
    pub shift: i64,
}

impl DerivedObject {
    pub fn new(module: IntervalModule, shift: i64) -> Self {
        DerivedObject { module, shift }
    }

    pub fn shifted(self, k: i64) -> Self {
        DerivedObject {
            module: self.module,
            shift: self.shift + k,
        }
    }
}

/// Canonical order: by `(shift, lo, hi)`.
impl Ord for DerivedObject {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.shift, self.module.lo, self.module.hi).cmp(&(
            other.shift,
            other.module.lo,
            other.module.hi,
        ))
    }
}

impl PartialOrd for DerivedObject {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DerivedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.module)
        } else {
            write!(f, "{}[{}]", self.module, self.shift)
        }
    }
}

/// JSON record of a derived object, with its `A_2` label when one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectRecord {
    pub lo: usize,
    pub hi: usize,
    pub shift: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<i64>,
}

/// The formal composite `τ^p ∘ [q]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AutoSpec {
    pub tau_power: i64,
    pub shift: i64,
}

impl AutoSpec {
    pub const IDENTITY: AutoSpec = AutoSpec { tau_power: 0, shift: 0 };

    pub fn tau() -> Self {
        AutoSpec { tau_power: 1, shift: 0 }
    }

    pub fn shift(q: i64) -> Self {
        AutoSpec { tau_power: 0, shift: q }
    }

    /// Serre functor `ν = τ ∘ [1]`.
    pub fn serre() -> Self {
        AutoSpec { tau_power: 1, shift: 1 }
    }

    /// `ν_d = ν ∘ [-d] = τ ∘ [1-d]`.
    pub fn nu_d(d: i64) -> Self {
        AutoSpec { tau_power: 1, shift: 1 - d }
    }

    pub fn inverse(self) -> Self {
        AutoSpec {
            tau_power: -self.tau_power,
            shift: -self.shift,
        }
    }

    pub fn then(self, other: AutoSpec) -> Self {
        AutoSpec {
            tau_power: self.tau_power + other.tau_power,
            shift: self.shift + other.shift,
        }
    }
}

/// Chart coordinates: `(m, v)` is `τ^{-m} P_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChartCoord {
    pub m: i64,
    pub vertex: usize,
}

/// Tables for one quiver, built once and shared read-only.
#[derive(Debug, Clone)]
pub struct DerivedCat {
    quiver: QuiverA,
    ar: ArQuiver,
    modules: Vec<IntervalModule>,
    index: HashMap<IntervalModule, usize>,
    hom: Vec<u32>,
    ext: Vec<u32>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    proj_vertex: Vec<Option<usize>>,
    inj_vertex: Vec<Option<usize>>,
    projectives: Vec<usize>,
    injectives: Vec<usize>,
    /// module index -> (k, v) with `M = τ^{-k} P_v`
    position: Vec<(i64, usize)>,
    /// `(k, v)` -> module index, for `0 <= k <= orbit_len[v] - 1`
    orbit: Vec<Vec<usize>>,
    /// `[1] (m, v) = (m + shift_jump[v], shift_target[v])`
    shift_jump: Vec<i64>,
    shift_target: Vec<usize>,
    a2_first: Option<usize>,
}

impl DerivedCat {
    pub fn new(quiver: &QuiverA) -> Result<Self> {
        let q = quiver.clone();
        let ar = knit_ar_quiver(&q)?;
        let modules = IntervalModule::all(q.n());
        let index: HashMap<IntervalModule, usize> =
            modules.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let k = modules.len();
        let mut hom = vec![0u32; k * k];
        let mut ext = vec![0u32; k * k];
        for (i, &a) in modules.iter().enumerate() {
            for (j, &b) in modules.iter().enumerate() {
                hom[i * k + j] = hom_dim(&q, a, b) as u32;
                ext[i * k + j] = ext_dim(&q, a, b)? as u32;
            }
        }
        let mut tau = vec![None; k];
        let mut tau_inv = vec![None; k];
        for (i, m) in ar.vertices.iter().enumerate() {
            if let Some(t) = ar.translate[i] {
                let (a, b) = (index[m], index[&ar.vertices[t]]);
                tau[a] = Some(b);
                tau_inv[b] = Some(a);
            }
        }
        let projectives: Vec<usize> = q
            .vertices()
            .map(|v| Ok(index[&projective(&q, v)?]))
            .collect::<Result<_>>()?;
        let injectives: Vec<usize> = q
            .vertices()
            .map(|v| Ok(index[&injective(&q, v)?]))
            .collect::<Result<_>>()?;
        let mut proj_vertex = vec![None; k];
        let mut inj_vertex = vec![None; k];
        for v in q.vertices() {
            proj_vertex[projectives[v - 1]] = Some(v);
            inj_vertex[injectives[v - 1]] = Some(v);
        }

        let mut position = vec![(0i64, 0usize); k];
        let mut orbit = vec![Vec::new(); q.n()];
        for v in q.vertices() {
            let mut cur = Some(projectives[v - 1]);
            let mut step = 0i64;
            while let Some(i) = cur {
                position[i] = (step, v);
                orbit[v - 1].push(i);
                cur = tau_inv[i];
                step += 1;
            }
        }
        if orbit.iter().map(Vec::len).sum::<usize>() != k {
            return Err(Error::Internal("τ-orbits do not cover mod kQ".into()));
        }
        // P_v[1] = τ^{-1} ν P_v = τ^{-1} I_v
        let mut shift_jump = vec![0i64; q.n()];
        let mut shift_target = vec![0usize; q.n()];
        for v in q.vertices() {
            let (kk, u) = position[injectives[v - 1]];
            shift_jump[v - 1] = kk + 1;
            shift_target[v - 1] = u;
        }

        let a2_first = (q.n() == 2).then(|| match q.orientation()[0] {
            // the projective of the sink maps into the other projective
            Orientation::Forward => 2,
            Orientation::Backward => 1,
        });

        let cat = DerivedCat {
            quiver: q,
            ar,
            modules,
            index,
            hom,
            ext,
            tau,
            tau_inv,
            proj_vertex,
            inj_vertex,
            projectives,
            injectives,
            position,
            orbit,
            shift_jump,
            shift_target,
            a2_first,
        };
        if cat.a2_first.is_some() {
            cat.check_a2_anchor()?;
        }
        Ok(cat)
    }

    pub fn quiver(&self) -> &QuiverA {
        &self.quiver
    }

    pub fn n(&self) -> usize {
        self.quiver.n()
    }

    pub fn ar_quiver(&self) -> &ArQuiver {
        &self.ar
    }

    pub fn modules(&self) -> &[IntervalModule] {
        &self.modules
    }

    fn idx(&self, m: IntervalModule) -> usize {
        self.index[&m]
    }

    pub fn projective(&self, v: usize) -> DerivedObject {
        DerivedObject::new(self.modules[self.projectives[v - 1]], 0)
    }

    pub fn injective(&self, v: usize) -> DerivedObject {
        DerivedObject::new(self.modules[self.injectives[v - 1]], 0)
    }

    /// The silting object `A = kQ`, as its indecomposable summands.
    pub fn projective_slice(&self) -> Vec<DerivedObject> {
        let mut out: Vec<_> = self.quiver.vertices().map(|v| self.projective(v)).collect();
        out.sort();
        out
    }

    pub fn is_projective(&self, m: IntervalModule) -> bool {
        self.proj_vertex[self.idx(m)].is_some()
    }

    /// `dim Hom(X, Y)` by the hereditary splitting rule.
    pub fn hom(&self, x: DerivedObject, y: DerivedObject) -> u32 {
        let k = self.modules.len();
        let (i, j) = (self.idx(x.module), self.idx(y.module));
        match y.shift - x.shift {
            0 => self.hom[i * k + j],
            1 => self.ext[i * k + j],
            _ => 0,
        }
    }

    pub fn tau(&self, x: DerivedObject) -> DerivedObject {
        let i = self.idx(x.module);
        match self.tau[i] {
            Some(j) => DerivedObject::new(self.modules[j], x.shift),
            None => {
                let v = self.proj_vertex[i].expect("module without τ is projective");
                DerivedObject::new(self.modules[self.injectives[v - 1]], x.shift - 1)
            }
        }
    }

    pub fn tau_inverse(&self, x: DerivedObject) -> DerivedObject {
        let i = self.idx(x.module);
        match self.tau_inv[i] {
            Some(j) => DerivedObject::new(self.modules[j], x.shift),
            None => {
                let v = self.inj_vertex[i].expect("module without τ⁻¹ is injective");
                DerivedObject::new(self.modules[self.projectives[v - 1]], x.shift + 1)
            }
        }
    }

    pub fn apply(&self, x: DerivedObject, f: AutoSpec) -> DerivedObject {
        let mut y = x.shifted(f.shift);
        for _ in 0..f.tau_power.max(0) {
            y = self.tau(y);
        }
        for _ in 0..(-f.tau_power).max(0) {
            y = self.tau_inverse(y);
        }
        y
    }

    pub fn serre(&self, x: DerivedObject) -> DerivedObject {
        self.tau(x).shifted(1)
    }

    pub fn serre_inverse(&self, x: DerivedObject) -> DerivedObject {
        self.tau_inverse(x.shifted(-1))
    }

    pub fn nu_d(&self, x: DerivedObject, d: i64) -> DerivedObject {
        self.tau(x).shifted(1 - d)
    }

    pub fn nu_d_inverse(&self, x: DerivedObject, d: i64) -> DerivedObject {
        self.tau_inverse(x.shifted(d - 1))
    }

    /// All indecomposables with shift in `lo..=hi`, canonically ordered.
    pub fn objects_in_window(&self, lo: i64, hi: i64) -> Vec<DerivedObject> {
        (lo..=hi)
            .flat_map(|s| self.modules.iter().map(move |&m| DerivedObject::new(m, s)))
            .collect()
    }

    /// Class in `K_0`: `(-1)^s dim M`.
    pub fn k0_class(&self, x: DerivedObject) -> Vec<i64> {
        let sign = if x.shift.rem_euclid(2) == 0 { 1 } else { -1 };
        (1..=self.n())
            .map(|v| sign * i64::from(x.module.contains(v)))
            .collect()
    }

    pub fn chart_coord(&self, x: DerivedObject) -> ChartCoord {
        let (mut m, mut v) = self.position[self.idx(x.module)];
        if x.shift >= 0 {
            for _ in 0..x.shift {
                m += self.shift_jump[v - 1];
                v = self.shift_target[v - 1];
            }
        } else {
            for _ in 0..-x.shift {
                let u = self
                    .shift_target
                    .iter()
                    .position(|&t| t == v)
                    .map(|i| i + 1)
                    .expect("[1] permutes the τ-orbits");
                m -= self.shift_jump[u - 1];
                v = u;
            }
        }
        ChartCoord { m, vertex: v }
    }

    pub fn object_at(&self, c: ChartCoord) -> Result<DerivedObject> {
        self.quiver.check_vertex(c.vertex)?;
        let (mut m, mut v, mut s) = (c.m, c.vertex, 0i64);
        loop {
            let len = self.orbit[v - 1].len() as i64;
            if (0..len).contains(&m) {
                let module = self.modules[self.orbit[v - 1][m as usize]];
                return Ok(DerivedObject::new(module, s));
            }
            if m < 0 {
                m += self.shift_jump[v - 1];
                v = self.shift_target[v - 1];
                s -= 1;
            } else {
                let u = self
                    .shift_target
                    .iter()
                    .position(|&t| t == v)
                    .map(|i| i + 1)
                    .expect("[1] permutes the τ-orbits");
                m -= self.shift_jump[u - 1];
                v = u;
                s += 1;
            }
        }
    }

    pub fn is_a2(&self) -> bool {
        self.a2_first.is_some()
    }

    /// Integer label on the `A_2` zigzag: `τ^{-m} P_a ↦ 2m+1`, `τ^{-m} P_b ↦ 2m+2`
    /// where `P_a → P_b` is the projective slice.
    pub fn a2_label(&self, x: DerivedObject) -> Result<i64> {
        let first = self.a2_first.ok_or(Error::NotA2(self.n()))?;
        let c = self.chart_coord(x);
        Ok(2 * c.m + if c.vertex == first { 1 } else { 2 })
    }

    pub fn a2_object(&self, label: i64) -> Result<DerivedObject> {
        let first = self.a2_first.ok_or(Error::NotA2(self.n()))?;
        let second = 3 - first;
        let m = (label - 1).div_euclid(2);
        let vertex = if (label - 1).rem_euclid(2) == 0 { first } else { second };
        self.object_at(ChartCoord { m, vertex })
    }

    fn check_a2_anchor(&self) -> Result<()> {
        let one = self.a2_object(1)?;
        let two = self.a2_object(2)?;
        let mut slice = vec![one, two];
        slice.sort();
        let ok = slice == self.projective_slice()
            && self.hom(one, two) == 1
            && self.a2_label(one.shifted(1))? == 4;
        if ok {
            Ok(())
        } else {
            Err(Error::Internal("A2 label anchor is inconsistent".into()))
        }
    }

    pub fn record(&self, x: DerivedObject) -> ObjectRecord {
        ObjectRecord {
            lo: x.module.lo,
            hi: x.module.hi,
            shift: x.shift,
            label: self.a2_label(x).ok(),
        }
    }

    pub fn from_record(&self, r: &ObjectRecord) -> Result<DerivedObject> {
        if let Some(label) = r.label {
            if !self.is_a2() {
                return Err(Error::NotA2(self.n()));
            }
            return self.a2_object(label);
        }
        Ok(DerivedObject::new(
            IntervalModule::new(&self.quiver, r.lo, r.hi)?,
            r.shift,
        ))
    }

    /// Human-readable name: the label for `A_2`, otherwise `M[lo,hi][s]`.
    pub fn name(&self, x: DerivedObject) -> String {
        match self.a2_label(x) {
            Ok(l) => l.to_string(),
            Err(_) => x.to_string(),
        }
    }

    /// DOT rendering of the chart restricted to shifts `lo..=hi`.
    pub fn chart_dot(&self, lo: i64, hi: i64) -> String {
        let objs = self.objects_in_window(lo, hi);
        let mut out = String::from("digraph chart {\n  rankdir=LR;\n");
        for (i, &o) in objs.iter().enumerate() {
            let c = self.chart_coord(o);
            out.push_str(&format!(
                "  o{i} [label=\"{}\\n({},{})\"];\n",
                self.name(o),
                c.m,
                c.vertex
            ));
        }
        let coords: Vec<ChartCoord> = objs.iter().map(|&o| self.chart_coord(o)).collect();
        for (i, &a) in coords.iter().enumerate() {
            for (j, &b) in coords.iter().enumerate() {
                if self.chart_adjacent(a, b) {
                    out.push_str(&format!("  o{i} -> o{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl DerivedCat {
    /// Whether the chart contains an arrow `a -> b`: for each `Q`-arrow `v -> w`
    /// the chart has `(m, w) -> (m, v)` and `(m, v) -> (m+1, w)`.
    pub fn chart_adjacent(&self, a: ChartCoord, b: ChartCoord) -> bool {
        self.quiver.arrows().iter().any(|&(v, w)| {
            (a.vertex == w && b.vertex == v && b.m == a.m)
                || (a.vertex == v && b.vertex == w && b.m == a.m + 1)
        })
    }
}
