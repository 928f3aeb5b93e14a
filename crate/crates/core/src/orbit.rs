//! Finite orbit categories `D^b(mod kQ) / G` and their cluster-tilting sets.
//!
//! `G` is one of `ν_d`, a composite `τ^p[q]`, or the square root of
//! `τ^{-1}[2d]` on the `A_2` zigzag. Some power `G^N` acts on objects as a
//! shift `[t]` with `t != 0`; then every orbit meets the shift window
//! `[0, |t|)` and Hom spaces are finite sums.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cliques::Graph;
use crate::derived::{AutoSpec, DerivedCat, DerivedObject, ObjectRecord};
use crate::error::{Error, Result};
use crate::quiver::QuiverA;
use crate::silting::SiltingCandidate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitFunctor {
    /// `ν_d = ν ∘ [-d]`, `d >= 2`.
    NuD(u32),
    /// `τ^p ∘ [q]`.
    Composite { tau_power: i64, shift: i64 },
    /// `τ^{-1/2} ∘ [d]` on `A_2`: label `i ↦ i + 3d + 1`.
    A2Root(u32),
}

impl fmt::Display for OrbitFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitFunctor::NuD(d) => write!(f, "nu{d}"),
            OrbitFunctor::Composite { tau_power, shift } => write!(f, "tau^{tau_power}[{shift}]"),
            OrbitFunctor::A2Root(d) => write!(f, "a2root{d}"),
        }
    }
}

impl OrbitFunctor {
    /// Parses `nu2`, `nuD:3`, `a2root:3`, `a2root3`, or `tau:<p>:<q>`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown orbit functor {s:?}"));
        let lower = s.trim().to_ascii_lowercase();
        let number = |t: &str| t.trim_start_matches(':').parse::<u32>().map_err(|_| bad());
        if let Some(rest) = lower.strip_prefix("a2root") {
            return Ok(OrbitFunctor::A2Root(number(rest)?));
        }
        if let Some(rest) = lower.strip_prefix("tau:") {
            let (p, q) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(OrbitFunctor::Composite {
                tau_power: p.parse().map_err(|_| bad())?,
                shift: q.parse().map_err(|_| bad())?,
            });
        }
        if let Some(rest) = lower.strip_prefix("nu") {
            let rest = rest.strip_prefix('d').unwrap_or(rest);
            return Ok(OrbitFunctor::NuD(number(rest)?));
        }
        Err(bad())
    }

    fn apply(&self, cat: &DerivedCat, x: DerivedObject) -> Result<DerivedObject> {
        match *self {
            OrbitFunctor::NuD(d) => Ok(cat.nu_d(x, i64::from(d))),
            OrbitFunctor::Composite { tau_power, shift } => {
                Ok(cat.apply(x, AutoSpec { tau_power, shift }))
            }
            OrbitFunctor::A2Root(d) => cat.a2_object(cat.a2_label(x)? + 3 * i64::from(d) + 1),
        }
    }
}

/// `D^b(mod kQ) / G` with a dense Hom table over orbit representatives.
#[derive(Debug, Clone)]
pub struct OrbitCategory {
    cat: DerivedCat,
    functor: OrbitFunctor,
    /// `G^period = [translation]` on objects.
    period: usize,
    translation: i64,
    reps: Vec<DerivedObject>,
    rep_index: HashMap<DerivedObject, usize>,
    /// `hom[(i * r + j) * |t| + k] = Hom_C(reps[i], reps[j][k])`
    hom: Vec<u32>,
    cy_dim: Option<i64>,
    notes: Vec<String>,
}

/// Smallest `N >= 1` with `G^N = [t]` on every indecomposable module.
fn find_period(cat: &DerivedCat, f: OrbitFunctor) -> Result<(usize, i64)> {
    let starts: Vec<DerivedObject> = cat.modules().iter().map(|&m| DerivedObject::new(m, 0)).collect();
    let mut cur = starts.clone();
    let limit = 4 * (cat.n() + 1) + 8;
    for period in 1..=limit {
        for x in &mut cur {
            *x = f.apply(cat, *x)?;
        }
        let t = cur[0].shift;
        if cur.iter().zip(&starts).all(|(y, x)| *y == x.shifted(t)) {
            if t == 0 {
                return Err(Error::ZeroTranslation);
            }
            return Ok((period, t));
        }
    }
    Err(Error::InvalidArgument(format!(
        "{f} has no power acting as a shift within {limit} steps"
    )))
}

pub fn build_orbit(q: &QuiverA, f: OrbitFunctor) -> Result<OrbitCategory> {
    let cat = DerivedCat::new(q)?;
    match f {
        OrbitFunctor::NuD(d) if d < 2 => {
            return Err(Error::InvalidArgument(format!(
                "nu_{d} orbit categories need d >= 2; use tau:<p>:<q> for other composites"
            )))
        }
        OrbitFunctor::A2Root(0) => return Err(Error::ZeroTranslation),
        OrbitFunctor::A2Root(_) if !cat.is_a2() => return Err(Error::NotA2(cat.n())),
        _ => {}
    }
    let (period, translation) = find_period(&cat, f)?;

    // G commutes with [1] and preserves Hom on a generating window
    let window = cat.objects_in_window(0, 1);
    for &x in &window {
        let gx = f.apply(&cat, x)?;
        if f.apply(&cat, x.shifted(1))? != gx.shifted(1) {
            return Err(Error::Internal(format!("{f} does not commute with [1] at {x}")));
        }
        for &y in &window {
            if cat.hom(x, y) != cat.hom(gx, f.apply(&cat, y)?) {
                return Err(Error::Internal(format!("{f} does not preserve Hom({x}, {y})")));
            }
        }
    }

    let mut c = OrbitCategory {
        cat,
        functor: f,
        period,
        translation,
        reps: Vec::new(),
        rep_index: HashMap::new(),
        hom: Vec::new(),
        cy_dim: None,
        notes: Vec::new(),
    };
    let t = c.width();
    let reps: BTreeSet<DerivedObject> = c
        .cat
        .objects_in_window(0, t - 1)
        .into_iter()
        .map(|x| c.canonical(x))
        .collect::<Result<_>>()?;
    c.reps = reps.into_iter().collect();
    c.rep_index = c.reps.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let r = c.reps.len();
    let mut hom = vec![0u32; r * r * t as usize];
    for i in 0..r {
        for j in 0..r {
            for k in 0..t {
                hom[(i * r + j) * t as usize + k as usize] =
                    c.hom_sum(c.reps[i], c.reps[j].shifted(k))?;
            }
        }
    }
    c.hom = hom;

    c.cy_dim = match f {
        OrbitFunctor::NuD(d) => Some(i64::from(d)),
        OrbitFunctor::A2Root(d) => Some(2 * i64::from(d) + 1),
        OrbitFunctor::Composite { .. } => c.serre_as_shift()?,
    };
    if let Some(cy) = c.cy_dim {
        for &x in &c.reps {
            if c.rep_of(c.cat.serre(x))? != c.rep_of(x.shifted(cy))? {
                return Err(Error::Internal(format!("ν{x} is not {x}[{cy}] in {}", c.name())));
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..t {
                    let (x, y) = (c.reps[i], c.reps[j]);
                    if c.hom_orbit(x, y, k)? != c.hom_orbit(y, x, cy - k)? {
                        return Err(Error::Internal(format!(
                            "{cy}-CY symmetry fails for ({x}, {y}, {k}) in {}",
                            c.name()
                        )));
                    }
                }
            }
        }
    }
    if let OrbitFunctor::A2Root(d) = f {
        if d % 2 == 0 {
            c.notes.push(format!(
                "d = {d} is even: the folded category is computed combinatorially, outside the odd-d Calabi-Yau hypothesis"
            ));
        }
    }
    Ok(c)
}

impl OrbitCategory {
    pub fn derived(&self) -> &DerivedCat {
        &self.cat
    }

    pub fn functor(&self) -> OrbitFunctor {
        self.functor
    }

    /// `(N, t)` with `G^N = [t]` on objects.
    pub fn period(&self) -> (usize, i64) {
        (self.period, self.translation)
    }

    pub fn reps(&self) -> &[DerivedObject] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// `c` with `ν ≅ [c]` on objects, when it exists.
    pub fn cy_dim(&self) -> Option<i64> {
        self.cy_dim
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn name(&self) -> String {
        let q = self.cat.quiver();
        match self.functor {
            OrbitFunctor::NuD(d) => format!("C_{d}({q})"),
            OrbitFunctor::A2Root(d) => format!("C_{}^(1/2)({q})", 2 * d + 1),
            OrbitFunctor::Composite { tau_power, shift } => {
                format!("D({q})/tau^{tau_power}[{shift}]")
            }
        }
    }

    fn width(&self) -> i64 {
        self.translation.abs()
    }

    fn to_window(&self, x: DerivedObject) -> DerivedObject {
        let t = self.width();
        x.shifted(-x.shift.div_euclid(t) * t)
    }

    /// The minimal `(shift, lo, hi)` element of the orbit of `x`.
    fn canonical(&self, x: DerivedObject) -> Result<DerivedObject> {
        let mut best = self.to_window(x);
        let mut y = x;
        for _ in 1..self.period {
            y = self.functor.apply(&self.cat, y)?;
            best = best.min(self.to_window(y));
        }
        Ok(best)
    }

    pub fn rep_of(&self, x: DerivedObject) -> Result<DerivedObject> {
        self.canonical(x)
    }

    pub fn rep_index(&self, x: DerivedObject) -> Result<usize> {
        let r = self.canonical(x)?;
        self.rep_index
            .get(&r)
            .copied()
            .ok_or_else(|| Error::Internal(format!("{r} missing from representatives")))
    }

    /// `Σ_i dim Hom(x, G^i y)`. Writing `i = r + N q`, only the two shifts
    /// `s_x, s_x + 1` carry Hom, so each `r` contributes at most two terms.
    fn hom_sum(&self, x: DerivedObject, y: DerivedObject) -> Result<u32> {
        let t = self.width();
        let mut total = 0;
        let mut z = y;
        for r in 0..self.period {
            if r > 0 {
                z = self.functor.apply(&self.cat, z)?;
            }
            for target in [x.shift, x.shift + 1] {
                if (target - z.shift).rem_euclid(t) == 0 {
                    total += self.cat.hom(x, z.shifted(target - z.shift));
                }
            }
        }
        Ok(total)
    }

    /// `dim Hom_C(x, y[k])` for arbitrary objects `x`, `y`.
    pub fn hom_orbit(&self, x: DerivedObject, y: DerivedObject, k: i64) -> Result<u32> {
        self.hom_sum(x, y.shifted(k))
    }

    fn serre_as_shift(&self) -> Result<Option<i64>> {
        for c in 1..=self.width() {
            let mut ok = true;
            for &x in &self.reps {
                if self.rep_of(self.cat.serre(x))? != self.rep_of(x.shifted(c))? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    fn rigid_graph(&self, d: u32) -> Graph {
        let r = self.reps.len();
        let t = self.width() as usize;
        let vanish = |i: usize, j: usize| {
            (1..d as usize).all(|k| self.hom[(i * r + j) * t + k % t] == 0)
        };
        Graph::new(r, |i, j| vanish(i, j) && vanish(j, i))
    }

    /// `{x : Hom(U, x[i]) = 0, 0 < i < d}` and `{x : Hom(x, U[i]) = 0, 0 < i < d}`.
    fn perpendiculars(&self, u: &[usize], d: u32) -> (Vec<usize>, Vec<usize>) {
        let r = self.reps.len();
        let t = self.width() as usize;
        let h = |i: usize, j: usize, k: usize| self.hom[(i * r + j) * t + k % t];
        let right = (0..r)
            .filter(|&x| u.iter().all(|&a| (1..d as usize).all(|k| h(a, x, k) == 0)))
            .collect();
        let left = (0..r)
            .filter(|&x| u.iter().all(|&a| (1..d as usize).all(|k| h(x, a, k) == 0)))
            .collect();
        (right, left)
    }

    /// All `d`-cluster-tilting subsets of the representatives, as sorted
    /// index lists. Candidates are the maximal `d`-rigid sets.
    pub fn enumerate_ctilt(&self, d: u32) -> Result<Vec<Vec<usize>>> {
        if d == 0 {
            return Err(Error::InvalidArgument("cluster tilting needs d >= 1".into()));
        }
        let mut out = Vec::new();
        for u in self.rigid_graph(d).maximal_cliques() {
            let (right, left) = self.perpendiculars(&u, d);
            if (right == u) != (left == u) {
                return Err(Error::Internal(format!(
                    "the two perpendicular characterizations disagree on {:?} in {}",
                    self.names(&u),
                    self.name()
                )));
            }
            if right == u {
                out.push(u);
            }
        }
        Ok(out)
    }

    /// Size of the largest `d`-rigid set.
    pub fn max_rigid_size(&self, d: u32) -> usize {
        self.rigid_graph(d)
            .maximal_cliques()
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    pub fn names(&self, u: &[usize]) -> Vec<String> {
        u.iter().map(|&i| self.cat.name(self.reps[i])).collect()
    }

    pub fn records(&self, u: &[usize]) -> Vec<ObjectRecord> {
        u.iter().map(|&i| self.cat.record(self.reps[i])).collect()
    }

    /// DOT of the exchange graph: cluster-tilting sets joined when they
    /// differ in exactly one summand.
    pub fn exchange_dot(&self, sets: &[Vec<usize>]) -> String {
        let mut out = String::from("graph exchange {\n  node [shape=box];\n");
        for (i, u) in sets.iter().enumerate() {
            out.push_str(&format!("  c{i} [label=\"{}\"];\n", self.names(u).join("⊕")));
        }
        for (i, u) in sets.iter().enumerate() {
            for (j, w) in sets.iter().enumerate().skip(i + 1) {
                if u.len() == w.len() && u.iter().filter(|x| w.contains(x)).count() + 1 == u.len() {
                    out.push_str(&format!("  c{i} -- c{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Modules in shifts `0..=d-2` and projectives in shift `d-1`.
pub fn fundamental_domain(cat: &DerivedCat, d: u32) -> Result<Vec<DerivedObject>> {
    if d < 2 {
        return Err(Error::InvalidArgument("fundamental domain needs d >= 2".into()));
    }
    let top = i64::from(d) - 1;
    let mut out = cat.objects_in_window(0, top - 1);
    out.extend(cat.projective_slice().into_iter().map(|p| p.shifted(top)));
    out.sort();
    Ok(out)
}

/// Outcome of projecting silting objects in the fundamental domain to `C_d(kQ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmiotReport {
    pub category: String,
    pub ind_count: usize,
    pub ctilt: Vec<Vec<ObjectRecord>>,
    pub silt_in_f: Vec<Vec<ObjectRecord>>,
    pub bijection: bool,
    pub domain_bijective: bool,
    pub counterexamples: Vec<String>,
}

impl AmiotReport {
    /// The `{"category", "ind_count", "ctilt", "silt_in_F", "bijection"}` shape.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "category": self.category,
            "ind_count": self.ind_count,
            "ctilt": self.ctilt,
            "silt_in_F": self.silt_in_f,
            "bijection": self.bijection,
        })
    }
}

/// Silting objects with every summand in the fundamental domain.
pub fn silting_in_domain(cat: &DerivedCat, d: u32) -> Result<Vec<SiltingCandidate>> {
    Ok(cat.silting_subsets(&fundamental_domain(cat, d)?))
}

fn project(c: &OrbitCategory, p: &SiltingCandidate) -> Result<Vec<usize>> {
    let mut u: Vec<usize> = p
        .summands()
        .iter()
        .map(|&x| c.rep_index(x))
        .collect::<Result<_>>()?;
    u.sort();
    Ok(u)
}

pub fn amiot_map_check(q: &QuiverA, d: u32) -> Result<AmiotReport> {
    let c = build_orbit(q, OrbitFunctor::NuD(d))?;
    let cat = c.derived();
    let domain = fundamental_domain(cat, d)?;
    let mut counterexamples = Vec::new();

    let mut images: Vec<usize> = domain.iter().map(|&x| c.rep_index(x)).collect::<Result<_>>()?;
    images.sort();
    images.dedup();
    let domain_bijective = images.len() == domain.len() && images.len() == c.len();
    if !domain_bijective {
        counterexamples.push(format!(
            "fundamental domain has {} objects hitting {} of {} orbits",
            domain.len(),
            images.len(),
            c.len()
        ));
    }

    let silt = cat.silting_subsets(&domain);
    let ctilt = c.enumerate_ctilt(d)?;
    let mut projected: BTreeMap<Vec<usize>, &SiltingCandidate> = BTreeMap::new();
    for p in &silt {
        let u = project(&c, p)?;
        if let Some(prev) = projected.insert(u.clone(), p) {
            counterexamples.push(format!("{prev} and {p} both project to {:?}", c.names(&u)));
        }
        if !ctilt.contains(&u) {
            counterexamples.push(format!("{p} projects to non-cluster-tilting {:?}", c.names(&u)));
        }
    }
    for u in &ctilt {
        if !projected.contains_key(u) {
            counterexamples.push(format!("{:?} is not the image of a silting object in F", c.names(u)));
        }
    }
    Ok(AmiotReport {
        category: c.name(),
        ind_count: c.len(),
        ctilt: ctilt.iter().map(|u| c.records(u)).collect(),
        silt_in_f: silt.iter().map(|p| cat.silting_records(p)).collect(),
        bijection: counterexamples.is_empty(),
        domain_bijective,
        counterexamples,
    })
}

/// One Hasse cover `T > T'` among silting objects in `F`, and its projection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverProjection {
    pub upper: String,
    pub lower: String,
    pub upper_image: Vec<String>,
    pub lower_image: Vec<String>,
    pub single_exchange: bool,
    pub both_ctilt: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationProjectionReport {
    pub category: String,
    pub covers: Vec<CoverProjection>,
    /// Every cluster-tilting set is a singleton, so exchanges are vacuous.
    pub degenerate: bool,
    pub pass: bool,
}

/// Checks that each Hasse cover among silting objects in `F` projects to a
/// single-summand exchange of cluster-tilting sets.
pub fn mutation_projection_check(q: &QuiverA, d: u32) -> Result<MutationProjectionReport> {
    let c = build_orbit(q, OrbitFunctor::NuD(d))?;
    let cat = c.derived();
    let silt = silting_in_domain(cat, d)?;
    let ctilt = c.enumerate_ctilt(d)?;
    let h = cat.hasse(&silt);
    let mut covers = Vec::new();
    for &(i, j) in &h.arrows {
        let (u, w) = (project(&c, &h.nodes[i])?, project(&c, &h.nodes[j])?);
        let shared = u.iter().filter(|x| w.contains(x)).count();
        covers.push(CoverProjection {
            upper: cat.silting_name(&h.nodes[i]),
            lower: cat.silting_name(&h.nodes[j]),
            upper_image: c.names(&u),
            lower_image: c.names(&w),
            single_exchange: u.len() == w.len() && shared + 1 == u.len(),
            both_ctilt: ctilt.contains(&u) && ctilt.contains(&w),
        });
    }
    let pass = covers.iter().all(|c| c.single_exchange && c.both_ctilt);
    Ok(MutationProjectionReport {
        category: c.name(),
        covers,
        degenerate: ctilt.iter().all(|u| u.len() == 1),
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> QuiverA {
        "a2".parse().unwrap()
    }

    /// Brute-force `d`-cluster-tilting subsets over all `2^r` subsets.
    fn brute_ctilt(c: &OrbitCategory, d: u32) -> Vec<Vec<usize>> {
        let r = c.len();
        let reps = c.reps();
        let mut out = Vec::new();
        for mask in 1u32..1 << r {
            let u: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            let perp: Vec<usize> = (0..r)
                .filter(|&x| {
                    u.iter().all(|&a| {
                        (1..i64::from(d)).all(|k| c.hom_orbit(reps[a], reps[x], k).unwrap() == 0)
                    })
                })
                .collect();
            if perp == u {
                out.push(u);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn parse_functors() {
        assert_eq!(OrbitFunctor::parse("nu2").unwrap(), OrbitFunctor::NuD(2));
        assert_eq!(OrbitFunctor::parse("nuD:3").unwrap(), OrbitFunctor::NuD(3));
        assert_eq!(OrbitFunctor::parse("a2root:3").unwrap(), OrbitFunctor::A2Root(3));
        assert_eq!(
            OrbitFunctor::parse("tau:0:1").unwrap(),
            OrbitFunctor::Composite { tau_power: 0, shift: 1 }
        );
        assert!(OrbitFunctor::parse("mu2").is_err());
    }

    #[test]
    fn zero_translation_is_rejected() {
        let f = OrbitFunctor::Composite { tau_power: 0, shift: 0 };
        assert_eq!(build_orbit(&a2(), f).unwrap_err(), Error::ZeroTranslation);
        // τ^{-3} = [2] on A_2, so τ^3[2] fixes every object
        let f = OrbitFunctor::Composite { tau_power: 3, shift: 2 };
        assert_eq!(build_orbit(&a2(), f).unwrap_err(), Error::ZeroTranslation);
        assert!(build_orbit(&a2(), OrbitFunctor::NuD(1)).is_err());
        let a3: QuiverA = "a3".parse().unwrap();
        assert_eq!(build_orbit(&a3, OrbitFunctor::A2Root(1)).unwrap_err(), Error::NotA2(3));
    }

    #[test]
    fn a2_nu2_hom_pattern() {
        let c = build_orbit(&a2(), OrbitFunctor::NuD(2)).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.cy_dim(), Some(2));
        let cat = c.derived();
        for i in 1..=5 {
            for j in 1..=5 {
                let (x, y) = (cat.a2_object(i).unwrap(), cat.a2_object(j).unwrap());
                let h = c.hom_orbit(x, y, 1).unwrap();
                let diff = (j - i).rem_euclid(5);
                assert_eq!(h != 0, diff == 2 || diff == 3, "{i} {j}");
                assert!(c.hom_orbit(x, x, 0).unwrap() >= 1);
            }
        }
    }

    #[test]
    fn a2_nu2_ctilt_matches_brute_force() {
        let c = build_orbit(&a2(), OrbitFunctor::NuD(2)).unwrap();
        let ct = c.enumerate_ctilt(2).unwrap();
        assert_eq!(ct, brute_ctilt(&c, 2));
        assert_eq!(ct.len(), 5);
        let cat = c.derived();
        for u in &ct {
            let mut labels: Vec<i64> =
                u.iter().map(|&i| cat.a2_label(c.reps()[i]).unwrap().rem_euclid(5)).collect();
            labels.sort();
            assert!(matches!((labels[1] - labels[0]).rem_euclid(5), 1 | 4));
        }
        assert!(c.exchange_dot(&ct).matches(" -- ").count() == 5);
    }

    #[test]
    fn point_categories() {
        let q = QuiverA::linear(1).unwrap();
        for d in 2..=6 {
            let c = build_orbit(&q, OrbitFunctor::NuD(d)).unwrap();
            assert_eq!(c.len(), d as usize);
            let ct = c.enumerate_ctilt(d).unwrap();
            assert_eq!(ct, (0..d as usize).map(|i| vec![i]).collect::<Vec<_>>());
            assert_eq!(ct, brute_ctilt(&c, d));
        }
        let c1 = build_orbit(&q, OrbitFunctor::Composite { tau_power: 0, shift: 1 }).unwrap();
        assert_eq!(c1.len(), 1);
        assert_eq!(c1.cy_dim(), Some(1));
        assert_eq!(c1.enumerate_ctilt(1).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn folded_a2() {
        for d in 1..=5u32 {
            let c = build_orbit(&a2(), OrbitFunctor::A2Root(d)).unwrap();
            assert_eq!(c.len(), 3 * d as usize + 1);
            let cy = 2 * d + 1;
            assert_eq!(c.cy_dim(), Some(i64::from(cy)));
            let ct = c.enumerate_ctilt(cy).unwrap();
            assert_eq!(ct.len(), c.len());
            assert!(ct.iter().all(|u| u.len() == 1));
            assert_eq!(c.max_rigid_size(cy), 1);
            for &x in c.reps() {
                for j in 1..=2 * i64::from(d) {
                    assert_eq!(c.hom_orbit(x, x, j).unwrap(), 0);
                }
            }
            assert_eq!(c.notes().is_empty(), d % 2 == 1);
        }
    }

    #[test]
    fn hom_orbit_on_non_representatives() {
        let c = build_orbit(&a2(), OrbitFunctor::NuD(2)).unwrap();
        let cat = c.derived();
        for i in -6..=6 {
            for j in -6..=6 {
                for k in 0..3 {
                    let (x, y) = (cat.a2_object(i).unwrap(), cat.a2_object(j).unwrap());
                    let direct = c.hom_sum(x, y.shifted(k)).unwrap();
                    assert_eq!(c.hom_orbit(x, y, k).unwrap(), direct, "{i} {j} {k}");
                }
            }
        }
    }

    #[test]
    fn fundamental_domains() {
        let q1 = QuiverA::linear(1).unwrap();
        let cat = DerivedCat::new(&q1).unwrap();
        assert_eq!(fundamental_domain(&cat, 4).unwrap().len(), 4);
        let cat = DerivedCat::new(&a2()).unwrap();
        assert_eq!(fundamental_domain(&cat, 2).unwrap().len(), 5);
        let cat = DerivedCat::new(&QuiverA::linear(3).unwrap()).unwrap();
        assert_eq!(fundamental_domain(&cat, 2).unwrap().len(), 9);
        assert!(fundamental_domain(&cat, 1).is_err());
    }

    #[test]
    fn amiot_small_cases() {
        let r = amiot_map_check(&a2(), 2).unwrap();
        assert!(r.bijection && r.domain_bijective, "{:?}", r.counterexamples);
        assert_eq!((r.ctilt.len(), r.silt_in_f.len(), r.ind_count), (5, 5, 5));
        let js = r.to_json();
        assert!(js.get("silt_in_F").is_some());
        let r = amiot_map_check(&a2(), 3).unwrap();
        assert!(r.bijection && r.ctilt.len() == 12);
        for q in QuiverA::all_orientations(3) {
            let r = amiot_map_check(&q, 2).unwrap();
            assert!(r.bijection && r.domain_bijective, "{q}: {:?}", r.counterexamples);
            assert_eq!((r.ctilt.len(), r.ind_count), (14, 9));
        }
        for d in 2..=4 {
            let r = amiot_map_check(&QuiverA::linear(1).unwrap(), d).unwrap();
            assert!(r.bijection);
            assert_eq!(r.ctilt.len(), d as usize);
        }
    }

    #[test]
    fn pentagon_projects_to_exchanges() {
        let r = mutation_projection_check(&a2(), 2).unwrap();
        assert_eq!(r.covers.len(), 5);
        assert!(r.pass && !r.degenerate);
        let point = mutation_projection_check(&QuiverA::linear(1).unwrap(), 3).unwrap();
        assert!(point.degenerate && point.covers.len() == 2 && point.pass);
    }
}
