use siltlab::braid::encode::explore_sections;
use siltlab::orbit::{build_orbit, OrbitFunctor};
use siltlab::{DerivedCat, QuiverA, SiltingCandidate};

#[test]
fn a3_two_term_interval_has_fourteen_objects_for_every_orientation() {
    for q in QuiverA::all_orientations(3) {
        let cat = DerivedCat::new(&q).unwrap();
        let a = SiltingCandidate::new(cat.projective_slice());
        assert_eq!(cat.enumerate_interval(&a, 1).unwrap().len(), 14, "{q}");
    }
}

#[test]
fn cluster_category_of_a3_matches_two_term_count() {
    for q in QuiverA::all_orientations(3) {
        let c = build_orbit(&q, OrbitFunctor::NuD(2)).unwrap();
        assert_eq!(c.len(), 9);
        assert_eq!(c.enumerate_ctilt(2).unwrap().len(), 14);
    }
}

#[test]
fn a3_section_braids_are_distinct() {
    for q in QuiverA::all_orientations(3) {
        let ball = explore_sections(&q, 5).unwrap();
        assert!(ball.is_injective());
        assert!(ball.revisits > 0);
    }
}
