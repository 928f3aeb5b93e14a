//! Sections of `ZQ` as braids and as silting objects.
//!
//! Reflecting a section at vertex `v` with sign `ε` (`+1` at a sink) sends
//! `F(S)` to `b_v^{-ε} F(S)`, starting from `F(initial) = 1`. The map is
//! computed by breadth-first search, and every revisit of a section is checked
//! against the value already stored.

use std::collections::{BTreeMap, VecDeque};

use super::BraidElement;
use crate::derived::{ChartCoord, DerivedCat};
use crate::error::{Error, Result};
use crate::quiver::{QuiverA, Section};
use crate::silting::SiltingCandidate;

/// Sections within a reflection ball, with their braids and BFS depths.
#[derive(Debug, Clone)]
pub struct SectionBall {
    pub depth: usize,
    pub braids: BTreeMap<Section, (BraidElement, usize)>,
    /// Number of edges that led back to an already labelled section.
    pub revisits: usize,
}

impl SectionBall {
    /// Whether distinct sections received distinct braids.
    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<&BraidElement> = self.braids.values().map(|(b, _)| b).collect();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn get(&self, s: &Section) -> Option<&BraidElement> {
        self.braids.get(s).map(|(b, _)| b)
    }
}

/// Explores every section within `depth` reflections of the initial one.
/// Fails if two admissible sequences reach a section with different braids.
pub fn explore_sections(q: &QuiverA, depth: usize) -> Result<SectionBall> {
    let rank = q.n();
    let start = Section::initial(q);
    let mut braids = BTreeMap::new();
    braids.insert(start.clone(), (BraidElement::identity(rank), 0));
    let mut queue = VecDeque::from([start]);
    let mut revisits = 0;
    while let Some(s) = queue.pop_front() {
        let (fs, dist) = braids[&s].clone();
        if dist == depth {
            continue;
        }
        for (v, kind) in s.reflections(q) {
            let t = s.reflect_as(q, v, kind)?;
            let ft = BraidElement::generator(rank, v, -kind.sign()).mul(&fs)?;
            match braids.get(&t) {
                Some((known, _)) => {
                    revisits += 1;
                    if *known != ft {
                        return Err(Error::Internal(format!(
                            "section {t} reached with braids {known} and {ft}"
                        )));
                    }
                }
                None => {
                    braids.insert(t.clone(), (ft, dist + 1));
                    queue.push_back(t);
                }
            }
        }
    }
    Ok(SectionBall {
        depth,
        braids,
        revisits,
    })
}

/// `F(S)`, provided `S` lies within `depth` reflections of the initial section.
pub fn section_to_braid(q: &QuiverA, s: &Section, depth: usize) -> Result<BraidElement> {
    if !s.is_slice(q) {
        return Err(Error::InvalidSection(s.offsets().to_vec()));
    }
    let ball = explore_sections(q, depth)?;
    ball.get(s)
        .cloned()
        .ok_or_else(|| Error::Unreachable(s.offsets().to_vec(), depth))
}

/// The silting object whose summands sit at the section's chart vertices.
pub fn section_to_silting(cat: &DerivedCat, s: &Section) -> Result<SiltingCandidate> {
    let q = cat.quiver();
    if !s.is_slice(q) {
        return Err(Error::InvalidSection(s.offsets().to_vec()));
    }
    let summands = q
        .vertices()
        .map(|v| {
            cat.object_at(ChartCoord {
                m: s.offset(v),
                vertex: v,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let p = SiltingCandidate::new(summands);
    if !cat.is_silting(&p) || !cat.is_d_silting(&p, 1)? {
        return Err(Error::Internal(format!("section {s} gives non-1-silting {p}")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{normal_form, BraidWord};
    use crate::quiver::Reflection;

    fn word(s: &str) -> BraidElement {
        normal_form(&BraidWord::parse(2, s).unwrap())
    }

    #[test]
    fn initial_section_is_identity() {
        for q in QuiverA::all_orientations(3) {
            let b = section_to_braid(&q, &Section::initial(&q), 0).unwrap();
            assert!(b.is_identity());
            let cat = DerivedCat::new(&q).unwrap();
            let a = section_to_silting(&cat, &Section::initial(&q)).unwrap();
            assert_eq!(a.summands(), cat.projective_slice().as_slice());
        }
    }

    #[test]
    fn unreachable_is_reported() {
        let q: QuiverA = "a2".parse().unwrap();
        let far = Section::initial(&q).translate(-5);
        assert_eq!(
            section_to_braid(&q, &far, 3),
            Err(Error::Unreachable(vec![-5, -5], 3))
        );
        assert!(section_to_braid(&q, &far, 10).is_ok());
    }

    #[test]
    fn a2_image_is_the_zigzag() {
        // with 2 -> 1 the initial section has vertex 2 as its sink
        let q: QuiverA = "a2:B".parse().unwrap();
        let k = 3;
        let ball = explore_sections(&q, 2 * k + 1).unwrap();
        let c = word("b2 b1");
        let b1 = word("b1");
        let mut expected: Vec<BraidElement> = Vec::new();
        for i in -(k as i64)..=(k as i64) {
            expected.push(c.pow(i));
            expected.push(b1.mul(&c.pow(i)).unwrap());
        }
        expected.push(b1.mul(&c.pow(-(k as i64) - 1)).unwrap());
        expected.sort();
        let mut got: Vec<BraidElement> = ball.braids.values().map(|(b, _)| b.clone()).collect();
        got.sort();
        assert_eq!(got, expected);
        assert!(ball.is_injective());
    }

    #[test]
    fn a2_sections_are_consecutive_pairs() {
        let q: QuiverA = "a2".parse().unwrap();
        let cat = DerivedCat::new(&q).unwrap();
        let ball = explore_sections(&q, 8).unwrap();
        let mut firsts = Vec::new();
        for s in ball.braids.keys() {
            let p = section_to_silting(&cat, s).unwrap();
            let mut labels: Vec<i64> =
                p.summands().iter().map(|&x| cat.a2_label(x).unwrap()).collect();
            labels.sort();
            assert_eq!(labels[1], labels[0] + 1);
            firsts.push(labels[0]);
        }
        firsts.sort();
        assert_eq!(firsts, (-7..=9).collect::<Vec<_>>());
    }

    #[test]
    fn reflections_are_covers_and_f_reverses_order() {
        for q in QuiverA::all_orientations(3) {
            let cat = DerivedCat::new(&q).unwrap();
            let ball = explore_sections(&q, 4).unwrap();
            assert!(ball.is_injective());
            for (s, (fs, _)) in &ball.braids {
                let p = section_to_silting(&cat, s).unwrap();
                for v in q.vertices().filter(|&v| s.is_sink(&q, v)) {
                    let t = s.reflect_as(&q, v, Reflection::Sink).unwrap();
                    let r = section_to_silting(&cat, &t).unwrap();
                    // the sink summand moves to its τ-translate, which lies above
                    let x = *p.summands().iter().find(|x| !r.contains(x)).unwrap();
                    assert_eq!(cat.mutate(&p, x, crate::silting::MutationDirection::Right).unwrap(), r);
                    if let Some(ft) = ball.get(&t) {
                        assert!(fs.geq(ft).unwrap() && !ft.geq(fs).unwrap());
                    }
                }
            }
        }
    }
}
